//! Sylvester resultants, discriminants and reduction of polynomials
//! symmetric in a pair of variables.
//!
//! Sign convention: the Sylvester matrix of `p` (degree `m`) and `q`
//! (degree `n`) in `x` has the `n` shifted coefficient rows of `p` first,
//! then the `m` rows of `q`, coefficients listed from the leading one down.
//! With this convention `Res(p, q) = lc(p)^n lc(q)^m prod (r_i - s_j)` over
//! the roots `r_i` of `p` and `s_j` of `q`.

use std::collections::BTreeMap;

use crate::error::PolyError;
use crate::matrix::PolyMatrix;
use crate::poly::MultiPoly;
use crate::scalar::Field;

pub fn sylvester_matrix<K: Field>(
    p: &MultiPoly<K>,
    q: &MultiPoly<K>,
    var: &str,
) -> Result<PolyMatrix<K>, PolyError> {
    if p.vars() != q.vars() {
        return Err(PolyError::IncompatibleVars);
    }
    let vars = p.vars();
    let idx = vars.require(var)?;
    let m = positive_degree(p, idx, var)?;
    let n = positive_degree(q, idx, var)?;
    // coefficients, leading first
    let pc: Vec<_> = p.coefficients_in(idx).into_iter().rev().collect();
    let qc: Vec<_> = q.coefficients_in(idx).into_iter().rev().collect();
    let size = m + n;
    Ok(PolyMatrix::from_fn(vars, size, size, |i, j| {
        let (coeffs, shift) = if i < n { (&pc, i) } else { (&qc, i - n) };
        match j.checked_sub(shift) {
            Some(k) if k < coeffs.len() => coeffs[k].clone(),
            _ => MultiPoly::zero(vars),
        }
    }))
}

fn positive_degree<K: Field>(p: &MultiPoly<K>, idx: usize, var: &str) -> Result<usize, PolyError> {
    match p.degree_in(idx) {
        Some(d) if d > 0 => Ok(d as usize),
        _ => Err(PolyError::ConstantInVariable(var.to_string())),
    }
}

/// Resultant of `p` and `q` with respect to `var`.
pub fn resultant<K: Field>(
    p: &MultiPoly<K>,
    q: &MultiPoly<K>,
    var: &str,
) -> Result<MultiPoly<K>, PolyError> {
    sylvester_matrix(p, q, var)?.determinant()
}

/// `(-1)^(n(n-1)/2) Res(p, p') / lc(p)`; for `a x^2 + b x + c` this is
/// `b^2 - 4ac`.
pub fn discriminant<K: Field>(p: &MultiPoly<K>, var: &str) -> Result<MultiPoly<K>, PolyError> {
    let idx = p.vars().require(var)?;
    let n = positive_degree(p, idx, var)?;
    let lc = p.coefficients_in(idx).pop().expect("positive degree");
    if n == 1 {
        return Ok(MultiPoly::one(p.vars()));
    }
    let res = resultant(p, &p.derivative(idx), var)?;
    let d = res.div_exact(&lc)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Rewrites a polynomial symmetric in `s` and `t` through the elementary
/// symmetric functions `e1 = s + t`, `e2 = s t`, then substitutes the
/// supplied values for `e1` and `e2`. The result no longer involves `s` or
/// `t`. Fails if the input is not symmetric.
pub fn reduce_symmetric<K: Field>(
    p: &MultiPoly<K>,
    s: &str,
    t: &str,
    e1: &MultiPoly<K>,
    e2: &MultiPoly<K>,
) -> Result<MultiPoly<K>, PolyError> {
    let vars = p.vars();
    if e1.vars() != vars || e2.vars() != vars {
        return Err(PolyError::IncompatibleVars);
    }
    let si = vars.require(s)?;
    let ti = vars.require(t)?;
    let not_symmetric = || PolyError::NotSymmetric(s.to_string(), t.to_string());

    // (i, j) -> coefficient of s^i t^j, free of s and t
    let mut grid: BTreeMap<(u32, u32), MultiPoly<K>> = BTreeMap::new();
    for (i, ci) in p.coefficients_in(si).into_iter().enumerate() {
        for (j, cij) in ci.coefficients_in(ti).into_iter().enumerate() {
            if !cij.is_zero() {
                grid.insert((i as u32, j as u32), cij);
            }
        }
    }

    let mut out = MultiPoly::zero(vars);
    while let Some((&(a, b), _)) = grid.iter().next_back() {
        let c = grid.remove(&(a, b)).expect("present");
        if a < b {
            return Err(not_symmetric());
        }
        // s^a t^b is the lex-leading term of e1^(a-b) e2^b
        out = &out + &(&c * &(&e1.pow(a - b) * &e2.pow(b)));
        for (k, binom) in binomials(a - b).into_iter().enumerate() {
            let key = (b + (a - b) - k as u32, b + k as u32);
            let delta = c.scale(&binom);
            let entry = grid.remove(&key).unwrap_or_else(|| MultiPoly::zero(vars));
            let updated = if key == (a, b) { MultiPoly::zero(vars) } else { &entry - &delta };
            if !updated.is_zero() {
                grid.insert(key, updated);
            }
        }
    }
    Ok(out)
}

fn binomials<K: Field>(n: u32) -> Vec<K> {
    let mut row = vec![K::one()];
    for k in 0..n {
        let next = row[k as usize].clone() * K::from_int((n - k) as i64) / K::from_int((k + 1) as i64);
        row.push(next);
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarTable;
    use crate::scalar::int;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    fn vars() -> VarTable {
        VarTable::new(["alpha", "u", "v", "a0", "a1", "a2", "b0", "b1", "b2", "s", "t"]).unwrap()
    }

    fn p(v: &VarTable, s: &str) -> P {
        P::parse(v, s).unwrap()
    }

    #[test]
    fn linear_resultant_convention() {
        let v = vars();
        let r = resultant(&p(&v, "alpha - u"), &p(&v, "alpha - v"), "alpha").unwrap();
        // lc^1 lc^1 (u - v)
        assert_eq!(r, p(&v, "u - v"));
    }

    #[test]
    fn shared_root_gives_zero() {
        let v = vars();
        let r = resultant(&p(&v, "alpha^2 - 1"), &p(&v, "alpha - 1"), "alpha").unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn constant_input_is_error() {
        let v = vars();
        assert_eq!(
            resultant(&p(&v, "u"), &p(&v, "alpha"), "alpha"),
            Err(PolyError::ConstantInVariable("alpha".into()))
        );
    }

    #[test]
    fn generic_quadratics_resultant_is_quartic() {
        let v = vars();
        let f = p(&v, "a2*alpha^2 + a1*alpha + a0");
        let g = p(&v, "b2*alpha^2 + b1*alpha + b0");
        let r = resultant(&f, &g, "alpha").unwrap();
        assert!(r.is_homogeneous());
        assert_eq!(r.total_degree(), Some(4));
        // classical closed form (a2 b0 - a0 b2)^2 - (a2 b1 - a1 b2)(a1 b0 - a0 b1)
        let closed = p(
            &v,
            "a2^2*b0^2 - 2*a0*a2*b0*b2 + a0^2*b2^2 - a2*a1*b1*b0 + a2*a0*b1^2 + a1^2*b2*b0 - a1*a0*b2*b1",
        );
        assert_eq!(r, closed);
    }

    #[test]
    fn quadratic_discriminant() {
        let v = vars();
        let d = discriminant(&p(&v, "a2*alpha^2 + a1*alpha + a0"), "alpha").unwrap();
        assert_eq!(d, p(&v, "a1^2 - 4*a0*a2"));
    }

    #[test]
    fn cubic_discriminant_of_known_roots() {
        let v = vars();
        // (x-1)(x-2)(x-4): disc = prod (ri - rj)^2 = (1*3*2)^2 = 36
        let f = p(&v, "alpha^3 - 7*alpha^2 + 14*alpha - 8");
        assert_eq!(discriminant(&f, "alpha").unwrap().constant_value(), Some(int(36)));
    }

    #[test]
    fn symmetric_reduction() {
        let v = vars();
        // s^2 + t^2 = e1^2 - 2 e2 ; s^2 t + s t^2 = e1 e2
        let e1 = p(&v, "u");
        let e2 = p(&v, "v");
        let q = p(&v, "s^2 + t^2 + 3*a0*s^2*t + 3*a0*s*t^2");
        let r = reduce_symmetric(&q, "s", "t", &e1, &e2).unwrap();
        assert_eq!(r, p(&v, "u^2 - 2*v + 3*a0*u*v"));
    }

    #[test]
    fn asymmetric_input_rejected() {
        let v = vars();
        let q = p(&v, "s^2 + t");
        assert!(matches!(
            reduce_symmetric(&q, "s", "t", &p(&v, "u"), &p(&v, "v")),
            Err(PolyError::NotSymmetric(_, _))
        ));
    }
}
