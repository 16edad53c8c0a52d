//! The cubic condition on the pentahedral coefficients for the Hessian to
//! be a blown-up Kummer surface, obtained from the conic pencil
//! `mu0 X1 X2 + mu1 X0 X2 + mu2 X0 X1 + alpha X0^2`.

use std::sync::LazyLock;

use itertools::Itertools;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hessian::{
    branch_parameter_symmetric_functions, kint, mu_var, symbolic_mu, var, vars, PentahedralData,
    ALPHA_VAR, S_VAR, T_VAR,
};
use crate::resultant::{reduce_symmetric, resultant};
use crate::scalar::int;
use crate::{Poly, Rational};

/// `T(s, alpha) = a2 alpha^2 + a1 alpha + a0`, coefficients in `mu` and `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct TQuadratic {
    pub a2: Poly,
    pub a1: Poly,
    pub a0: Poly,
}

impl TQuadratic {
    pub fn new(mu: &[Poly; 5], s: &Poly) -> Self {
        let a2 = mu[0].scale(&int(4));
        let a1 = &(&(s - &mu[0]).pow(2) + &(&mu[2] - &mu[1]).pow(2))
            - &(&(s + &mu[0]) * &(&mu[2] + &mu[1])).scale(&int(2));
        let a0 = (s * &(&mu[1] * &mu[2])).scale(&int(4));
        TQuadratic { a2, a1, a0 }
    }

    pub fn as_poly(&self) -> Poly {
        let a = var(ALPHA_VAR);
        &(&(&self.a2 * &a.pow(2)) + &(&self.a1 * &a)) + &self.a0
    }

    /// Evaluates the quadratic at a value of `alpha`.
    pub fn at(&self, alpha: &Poly) -> Poly {
        &(&(&self.a2 * &alpha.pow(2)) + &(&self.a1 * alpha)) + &self.a0
    }
}

/// `T(s, alpha)` with the coefficients of `mu` substituted; `s` stays free.
pub fn t_quadratic(d: &PentahedralData) -> TQuadratic {
    TQuadratic::new(&d.as_polys(), &var(S_VAR))
}

fn mu_product(mu: &[Poly; 5]) -> Poly {
    mu.iter().fold(kint(1), |acc, m| &acc * m)
}

/// `Res_alpha(T(s, alpha), T(t, alpha))` with `s + t` and `s t` replaced
/// by their values in `mu`.
pub fn symmetrized_resultant(mu: &[Poly; 5]) -> Result<Poly> {
    let ts = TQuadratic::new(mu, &var(S_VAR)).as_poly();
    let tt = TQuadratic::new(mu, &var(T_VAR)).as_poly();
    let res = resultant(&ts, &tt, "alpha")?;
    let (e1, e2) = branch_parameter_symmetric_functions(mu);
    Ok(reduce_symmetric(&res, "s", "t", &e1, &e2)?)
}

/// The homogeneous cubic `F` in `mu0..mu4`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicCondition {
    pub f: Poly,
}

impl CubicCondition {
    pub fn eval(&self, d: &PentahedralData) -> Rational {
        let mut point = vec![Rational::zero(); vars().len()];
        for i in 0..5 {
            point[mu_var(i)] = d.mu()[i].clone();
        }
        self.f.eval(&point)
    }
}

fn compute_condition() -> Result<CubicCondition> {
    let mu = symbolic_mu();
    let reduced = symmetrized_resultant(&mu)?;
    let divisor = mu_product(&mu).scale(&int(512));
    let f = reduced.div_exact(&divisor).map_err(|_| {
        Error::IdentityFailure("symmetrized resultant is not divisible by 512 mu0 mu1 mu2 mu3 mu4".into())
    })?;
    Ok(CubicCondition { f })
}

static CONDITION: LazyLock<Result<CubicCondition>> = LazyLock::new(compute_condition);

/// The cubic condition, derived once from the resultant and shared.
pub fn derive_condition() -> Result<&'static CubicCondition> {
    CONDITION.as_ref().map_err(Clone::clone)
}

pub fn cubic_condition(d: &PentahedralData) -> Rational {
    derive_condition().expect("resultant identity").eval(d)
}

pub fn is_kummer_hessian(d: &PentahedralData) -> bool {
    cubic_condition(d).is_zero()
}

/// `2 mu1 mu2 / (mu0 + mu1 + mu2 - mu3 - mu4)`.
pub fn alpha_of(d: &PentahedralData) -> Result<Rational> {
    let mu = d.mu();
    let den = &(&(&mu[0] + &mu[1]) + &mu[2]) - &(&mu[3] + &mu[4]);
    if den.is_zero() {
        return Err(Error::AlphaUndefined);
    }
    Ok(&(&mu[1] * &mu[2]) * &int(2) / den)
}

/// How the third sum `2 sum mu_i mu_j mu_k` of the displayed cubic is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleReading {
    /// Ten unordered triples of distinct indices.
    Unordered,
    /// Sixty ordered triples of distinct indices.
    Ordered,
}

/// `sum mu_i^3 - sum_{i != j} mu_i^2 mu_j + 2 sum mu_i mu_j mu_k`.
pub fn displayed_condition(reading: TripleReading) -> Poly {
    let mu = symbolic_mu();
    let cubes = mu.iter().fold(Poly::zero(vars()), |acc, m| &acc + &m.pow(3));
    let squares = (0..5)
        .permutations(2)
        .fold(Poly::zero(vars()), |acc, p| &acc + &(&mu[p[0]].pow(2) * &mu[p[1]]));
    let triples: Vec<Vec<usize>> = match reading {
        TripleReading::Unordered => (0..5).combinations(3).collect(),
        TripleReading::Ordered => (0..5).permutations(3).collect(),
    };
    let triple_sum = triples
        .iter()
        .fold(Poly::zero(vars()), |acc, t| &acc + &(&(&mu[t[0]] * &mu[t[1]]) * &mu[t[2]]));
    &(&cubes - &squares) + &triple_sum.scale(&int(2))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReadingComparison {
    pub reading: TripleReading,
    pub terms: usize,
    /// `c` with `F = c * displayed`, when proportional.
    #[serde(serialize_with = "ser_opt_rational")]
    pub scalar: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosedFormReport {
    pub readings: Vec<ReadingComparison>,
    pub matching: TripleReading,
    #[serde(with = "crate::scalar::rational_str")]
    pub scalar: Rational,
}

fn ser_opt_rational<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Compares both readings of the displayed cubic with the derived `F`.
/// Fails unless exactly one reading is proportional to it.
pub fn closed_form_condition_check() -> Result<ClosedFormReport> {
    let f = &derive_condition()?.f;
    let readings: Vec<ReadingComparison> = [TripleReading::Unordered, TripleReading::Ordered]
        .into_iter()
        .map(|reading| {
            let displayed = displayed_condition(reading);
            ReadingComparison {
                reading,
                terms: displayed.num_terms(),
                scalar: displayed.ratio_to(f),
            }
        })
        .collect();
    let matches: Vec<&ReadingComparison> = readings.iter().filter(|r| r.scalar.is_some()).collect();
    if matches.len() != 1 {
        let diffs = [TripleReading::Unordered, TripleReading::Ordered]
            .map(|r| format!("{:?}: F - displayed = {}", r, f - &displayed_condition(r)));
        return Err(Error::IdentityFailure(format!(
            "{} readings match the derived condition; {}",
            matches.len(),
            diffs.join("; ")
        )));
    }
    let (matching, scalar) = (matches[0].reading, matches[0].scalar.clone().expect("filtered"));
    Ok(ClosedFormReport {
        readings,
        matching,
        scalar,
    })
}

/// Checks that `T(s, alpha) - T(t, alpha)` is `(s - t)` times a linear
/// form in `alpha` whose root, after symmetrization, is `alpha_of`.
pub fn alpha_difference_identity() -> Result<()> {
    let mu = symbolic_mu();
    let diff = &TQuadratic::new(&mu, &var(S_VAR)).as_poly() - &TQuadratic::new(&mu, &var(T_VAR)).as_poly();
    let lin = diff.div_exact(&(&var(S_VAR) - &var(T_VAR)))?;
    if lin.degree_in(ALPHA_VAR) != Some(1) {
        return Err(Error::IdentityFailure("difference is not linear in alpha".into()));
    }
    let (e1, e2) = branch_parameter_symmetric_functions(&mu);
    let coeffs: Vec<Poly> = lin
        .coefficients_in(ALPHA_VAR)
        .iter()
        .map(|c| reduce_symmetric(c, "s", "t", &e1, &e2))
        .collect::<std::result::Result<_, _>>()?;
    // root -c0/c1 = 2 mu1 mu2 / D  <=>  c1 * 2 mu1 mu2 + c0 * D = 0
    let den = &(&(&mu[0] + &mu[1]) + &mu[2]) - &(&mu[3] + &mu[4]);
    let num = (&mu[1] * &mu[2]).scale(&int(2));
    if !(&(&coeffs[1] * &num) + &(&coeffs[0] * &den)).is_zero() {
        return Err(Error::IdentityFailure("root of the difference is not alpha".into()));
    }
    Ok(())
}

/// `T(s, alpha) T(t, alpha)` at `alpha = 2 mu1 mu2 / D`, with the
/// denominators cleared and symmetrized, divided by `F`.
pub fn alpha_condition_quotient() -> Result<Poly> {
    let mu = symbolic_mu();
    let den = &(&(&mu[0] + &mu[1]) + &mu[2]) - &(&mu[3] + &mu[4]);
    let num = (&mu[1] * &mu[2]).scale(&int(2));
    // D^2 T(s, num / D) = a2 num^2 + a1 num D + a0 D^2
    let cleared = |s: &Poly| {
        let t = TQuadratic::new(&mu, s);
        &(&(&t.a2 * &num.pow(2)) + &(&(&t.a1 * &num) * &den)) + &(&t.a0 * &den.pow(2))
    };
    let product = &cleared(&var(S_VAR)) * &cleared(&var(T_VAR));
    let (e1, e2) = branch_parameter_symmetric_functions(&mu);
    let reduced = reduce_symmetric(&product, "s", "t", &e1, &e2)?;
    reduced.div_exact(&derive_condition()?.f).map_err(|_| {
        Error::IdentityFailure("alpha root condition is not a multiple of F".into())
    })
}

/// Relabels the coefficients `mu_i -> mu_{perm[i]}` in a polynomial over
/// the shared table.
pub fn permute_mu(p: &Poly, perm: &[usize]) -> Poly {
    let mut full: Vec<usize> = (0..vars().len()).collect();
    for i in 0..5 {
        full[mu_var(i)] = mu_var(perm[i]);
    }
    p.permute_vars(&full)
}

/// Whether `p` is fixed by all 120 relabellings of `mu0..mu4`.
pub fn is_s5_symmetric(p: &Poly) -> bool {
    (0..5).permutations(5).all(|perm| permute_mu(p, &perm) == *p)
}

/// Partial irreducibility evidence: `F` has no factor invariant under
/// relabelling of degree one, i.e. it does not vanish on `sum mu_i = 0`.
pub fn has_invariant_linear_factor(f: &Poly) -> bool {
    let last = -(0..4).fold(Poly::zero(vars()), |acc, i| &acc + &var(mu_var(i)));
    f.substitute_at(mu_var(4), &last).expect("shared table").is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn t_coefficients() {
        let mu = symbolic_mu();
        let t = TQuadratic::new(&mu, &var(S_VAR));
        assert_eq!(t.a2, mu[0].scale(&int(4)));
        assert!(t.a0.eval_at(S_VAR, &Rational::zero()).is_zero());
        // s = mu0, mu1 = mu2 = m: both squares vanish, leaving -2 (2 mu0)(2m)
        let m = var(mu_var(1));
        let a1 = t
            .a1
            .substitute_many(&[(S_VAR, mu[0].clone()), (mu_var(2), m.clone())])
            .unwrap();
        let expected = (&mu[0] * &m).scale(&int(-8));
        assert_eq!(a1, expected);
    }

    #[test]
    fn condition_is_symmetric_cubic() {
        let f = &derive_condition().unwrap().f;
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), Some(3));
        assert!(f.num_terms() <= 35);
        assert!(is_s5_symmetric(f));
        assert!(!has_invariant_linear_factor(f));
    }

    #[test]
    fn resultant_identity_exact() {
        let mu = symbolic_mu();
        let lhs = symmetrized_resultant(&mu).unwrap();
        let rhs = &mu_product(&mu).scale(&int(512)) * &derive_condition().unwrap().f;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unordered_reading_matches() {
        let r = closed_form_condition_check().unwrap();
        assert_eq!(r.matching, TripleReading::Unordered);
        assert_eq!(r.scalar, int(1));
        assert_eq!(r.readings[1].scalar, None);
        let pairs = (0..5).permutations(2).count();
        assert_eq!(pairs, 20);
    }

    #[test]
    fn value_at_unit_mu() {
        let d = PentahedralData::from_ints([1, 1, 1, 1, 1]).unwrap();
        // 5 - 20 + 2 * 10
        assert_eq!(cubic_condition(&d), int(5));
        assert!(!is_kummer_hessian(&d));
    }

    #[test]
    fn alpha_values() {
        let d = PentahedralData::from_ints([1, 1, 1, 1, 1]).unwrap();
        assert_eq!(alpha_of(&d).unwrap(), int(2));
        let d = PentahedralData::new([int(3), int(2), rational(1, 2), int(5), int(1)]).unwrap();
        let a = alpha_of(&d).unwrap();
        assert_eq!(alpha_of(&d.permuted(&[0, 2, 1, 3, 4])).unwrap(), a);
        assert_eq!(alpha_of(&d.permuted(&[0, 1, 2, 4, 3])).unwrap(), a);
        let bad = PentahedralData::from_ints([1, 1, 1, 2, 1]).unwrap();
        assert_eq!(alpha_of(&bad), Err(Error::AlphaUndefined));
    }

    #[test]
    fn alpha_is_root_of_difference() {
        alpha_difference_identity().unwrap();
        let q = alpha_condition_quotient().unwrap();
        assert!(!q.is_zero());
    }

    #[test]
    fn t_quadratic_substitutes_mu() {
        let d = PentahedralData::from_ints([2, 3, 5, 7, 11]).unwrap();
        let t = t_quadratic(&d);
        assert_eq!(t.a2, kint(8));
        assert_eq!(t.a0, var(S_VAR).scale(&int(60)));
    }
}
