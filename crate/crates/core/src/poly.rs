//! Sparse multivariate polynomials with exact coefficients.
//!
//! A polynomial carries its [`VarTable`]; binary operations require both
//! operands to share one table. Terms are kept in a `BTreeMap` keyed by
//! exponent vectors, ordered lexicographically with the first variable most
//! significant. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::PolyError;
use crate::scalar::Field;

/// Ordered list of variable names shared by a family of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarTable(Arc<[String]>);

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarTable(names.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.0[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector, one entry per variable of the owning table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, divisor: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }

    /// Graded lexicographic comparison, used for printing.
    pub fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Clone, PartialEq)]
pub struct MultiPoly<K> {
    vars: VarTable,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Field> MultiPoly<K> {
    pub fn zero(vars: &VarTable) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarTable) -> Self {
        Self::constant(vars, K::one())
    }

    pub fn constant(vars: &VarTable, c: K) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn var(vars: &VarTable, name: &str) -> Result<Self, PolyError> {
        Ok(Self::var_at(vars, vars.require(name)?))
    }

    pub fn var_at(vars: &VarTable, idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::term(vars, e, K::one())
    }

    /// Single term `c * x^exps`.
    pub fn term(vars: &VarTable, exps: Vec<u32>, c: K) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    pub fn from_terms<I>(vars: &VarTable, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, K)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<K> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(K::zero))
    }

    pub fn coeff(&self, exps: &[u32]) -> K {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(K::zero)
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[idx]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Indices of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.0[idx] > 0)
    }

    fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::IncompatibleVars)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut acc: BTreeMap<Monomial, K> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(e) => *e = e.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(MultiPoly {
            vars: self.vars.clone(),
            terms: acc,
        })
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// View as a univariate polynomial in `idx`: entry `k` is the
    /// coefficient of `x_idx^k`, itself free of `x_idx`.
    pub fn coefficients_in(&self, idx: usize) -> Vec<Self> {
        let deg = self.degree_in(idx).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[idx] as usize;
            let mut e = m.0.clone();
            e[idx] = 0;
            out[k].terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(vars: &VarTable, idx: usize, coeffs: &[Self]) -> Self {
        let mut out = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut e = m.0.clone();
                e[idx] += k as u32;
                out.add_term(Monomial(e), v.clone());
            }
        }
        out
    }

    pub fn substitute(&self, var: &str, value: &Self) -> Result<Self, PolyError> {
        let idx = self.vars.require(var)?;
        self.substitute_at(idx, value)
    }

    /// Replaces `x_idx` by `value` (Horner in the coefficients of `x_idx`).
    pub fn substitute_at(&self, idx: usize, value: &Self) -> Result<Self, PolyError> {
        self.check_vars(value)?;
        let coeffs = self.coefficients_in(idx);
        let mut acc = Self::zero(&self.vars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        Ok(acc)
    }

    /// Substitutes several variables simultaneously.
    pub fn substitute_many(&self, subs: &[(usize, Self)]) -> Result<Self, PolyError> {
        for (_, v) in subs {
            self.check_vars(v)?;
        }
        let mut acc = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let mut t = Self::one(&self.vars);
            for (idx, v) in subs {
                let k = e[*idx];
                if k > 0 {
                    t = &t * &v.pow(k);
                    e[*idx] = 0;
                }
            }
            let rest = Self::term(&self.vars, e, c.clone());
            acc = &acc + &(&t * &rest);
        }
        Ok(acc)
    }

    /// Replaces `x_idx` by a field element.
    pub fn eval_at(&self, idx: usize, value: &K) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[idx];
            e[idx] = 0;
            let mut c = c.clone();
            for _ in 0..k {
                c = c * value.clone();
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Evaluates with every variable assigned (`point.len()` = table size).
    pub fn eval(&self, point: &[K]) -> K {
        assert_eq!(point.len(), self.vars.len(), "evaluation point length");
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&m.0) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let k = m.0[idx];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[idx] -= 1;
            out.add_term(Monomial(e), c.clone() * K::from_int(k as i64));
        }
        out
    }

    /// Applies a variable permutation: `x_i` becomes `x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vars.len(), "permutation length");
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; m.0.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[perm[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Re-expresses the polynomial over another table, matching by name.
    pub fn embed(&self, target: &VarTable) -> Result<Self, PolyError> {
        let map = self
            .vars
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| {
                if self.involves(i) {
                    target.require(n).map(Some)
                } else {
                    Ok(target.index_of(n))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    e[map[i].expect("used variable is mapped")] += k;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    fn leading(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back()
    }

    /// Exact division; fails unless `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.check_vars(divisor)?;
        let (lm, lc) = match divisor.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(PolyError::NotDivisible),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return Err(PolyError::NotDivisible);
            }
            let qm = m.quotient(&lm);
            let qc = c / lc.clone();
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(qc.clone() * dc.clone()));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// If `other = c * self` for a nonzero field element `c`, returns `c`.
    /// Two zero polynomials are not considered proportional.
    pub fn ratio_to(&self, other: &Self) -> Option<K> {
        if self.vars != other.vars || self.is_zero() || other.is_zero() {
            return None;
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (m0, c0) = self.terms.iter().next()?;
        let c = other.terms.get(m0)?.clone() / c0.clone();
        for (m, a) in &self.terms {
            match other.terms.get(m) {
                Some(b) if *b == a.clone() * c.clone() => {}
                _ => return None,
            }
        }
        Some(c)
    }

    /// Terms sorted in graded-lex order, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &K)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_grlex(a.0));
        v
    }

    /// Parses the canonical text form, e.g. `"3/2*X0^2*X1 - X3"`.
    pub fn parse(vars: &VarTable, text: &str) -> Result<Self, PolyError>
    where
        K: std::str::FromStr,
    {
        parse::parse(vars, text)
    }
}

impl<K: Field> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        self.vars.name(v).to_string()
                    } else {
                        format!("{}^{}", self.vars.name(v), k)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, K: Field> $tr<&'a MultiPoly<K>> for &'a MultiPoly<K> {
            type Output = MultiPoly<K>;
            fn $method(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
                self.$checked(rhs).expect("operands share a variable table")
            }
        }
        impl<K: Field> $tr for MultiPoly<K> {
            type Output = MultiPoly<K>;
            fn $method(self, rhs: MultiPoly<K>) -> MultiPoly<K> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<K: Field> Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        self.scale(&-K::one())
    }
}

impl<K: Field> Neg for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        -&self
    }
}

mod parse {
    use super::*;

    struct Lexer<'a> {
        src: &'a [u8],
        pos: usize,
    }

    impl Lexer<'_> {
        fn skip_ws(&mut self) {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.src.get(self.pos).copied()
        }

        fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &str {
            let start = self.pos;
            while self.pos < self.src.len() && f(self.src[self.pos]) {
                self.pos += 1;
            }
            std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
        }
    }

    pub(super) fn parse<K: Field + std::str::FromStr>(
        vars: &VarTable,
        text: &str,
    ) -> Result<MultiPoly<K>, PolyError> {
        let err = |msg: &str| PolyError::ParsePoly(format!("{msg} in `{text}`"));
        let mut lx = Lexer {
            src: text.as_bytes(),
            pos: 0,
        };
        let mut out = MultiPoly::zero(vars);
        let mut first = true;
        loop {
            let mut sign = K::one();
            match lx.peek() {
                None if first => return Err(err("empty input")),
                None => break,
                Some(b'+') => lx.pos += 1,
                Some(b'-') => {
                    lx.pos += 1;
                    sign = -K::one();
                }
                Some(_) if first => {}
                Some(_) => return Err(err("expected `+` or `-`")),
            }
            first = false;
            let mut coeff = sign;
            let mut exps = vec![0u32; vars.len()];
            loop {
                match lx.peek() {
                    Some(c) if c.is_ascii_digit() => {
                        let lit = lx.take_while(|c| c.is_ascii_digit() || c == b'/').to_string();
                        let v = crate::scalar::parse_rational(&lit)
                            .map_err(|_| err("bad coefficient"))?;
                        let v: K = v
                            .to_string()
                            .parse()
                            .map_err(|_| err("coefficient not representable"))?;
                        coeff = coeff * v;
                    }
                    Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                        let name = lx
                            .take_while(|c| c.is_ascii_alphanumeric() || c == b'_')
                            .to_string();
                        let idx = vars
                            .index_of(&name)
                            .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                        let mut k = 1;
                        if lx.peek() == Some(b'^') {
                            lx.pos += 1;
                            lx.skip_ws();
                            k = lx
                                .take_while(|c| c.is_ascii_digit())
                                .parse()
                                .map_err(|_| err("bad exponent"))?;
                        }
                        exps[idx] += k;
                    }
                    _ => return Err(err("expected a factor")),
                }
                if lx.peek() == Some(b'*') {
                    lx.pos += 1;
                } else {
                    break;
                }
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational};
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    fn table() -> VarTable {
        VarTable::new(["X0", "X1", "X2", "X3", "X4"]).unwrap()
    }

    fn x(v: &VarTable, i: usize) -> P {
        P::var_at(v, i)
    }

    #[test]
    fn difference_of_squares() {
        let v = table();
        let p = &(&x(&v, 0) + &x(&v, 1)) * &(&x(&v, 0) - &x(&v, 1));
        let expected = &x(&v, 0).pow(2) - &x(&v, 1).pow(2);
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "X0^2 - X1^2");
    }

    #[test]
    fn additive_identity() {
        let v = table();
        let p = &x(&v, 2).pow(3) - &x(&v, 0).scale(&rational(3, 2));
        assert_eq!(&p + &P::zero(&v), p);
    }

    #[test]
    fn cube_of_four_term_sum_has_twenty_terms() {
        let v = table();
        let s = (0..4).fold(P::zero(&v), |acc, i| &acc + &x(&v, i));
        // C(6,3) monomials of degree 3 in 4 variables
        assert_eq!(s.pow(3).num_terms(), 20);
    }

    #[test]
    fn incompatible_tables_error() {
        let a = P::var_at(&table(), 0);
        let b = P::var_at(&VarTable::new(["X0"]).unwrap(), 0);
        assert_eq!(a.checked_add(&b), Err(PolyError::IncompatibleVars));
        assert_eq!(a.checked_mul(&b), Err(PolyError::IncompatibleVars));
    }

    #[test]
    fn substitution_examples() {
        let v = table();
        let minus_sum = -(0..4).fold(P::zero(&v), |acc, i| &acc + &x(&v, i));
        assert_eq!(x(&v, 4).substitute("X4", &minus_sum).unwrap(), minus_sum);

        let p = &x(&v, 0) * &x(&v, 4);
        assert!(p.substitute("X4", &P::zero(&v)).unwrap().is_zero());

        let total = (0..5).fold(P::zero(&v), |acc, i| &acc + &x(&v, i));
        assert!(total.substitute("X4", &minus_sum).unwrap().is_zero());

        assert_eq!(
            p.substitute("Y", &minus_sum),
            Err(PolyError::UnknownVariable("Y".into()))
        );
    }

    #[test]
    fn substituted_polynomial_no_longer_involves_var() {
        let v = table();
        let p = &x(&v, 4).pow(3) + &(&x(&v, 0) * &x(&v, 4));
        let q = p.substitute("X4", &(&x(&v, 1) + &x(&v, 2))).unwrap();
        assert!(!q.involves(4));
    }

    #[test]
    fn exact_division() {
        let v = table();
        let a = &x(&v, 0) + &x(&v, 1).scale(&int(3));
        let b = &(&x(&v, 2) * &x(&v, 3)) - &x(&v, 0).pow(2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(
            (&prod + &P::one(&v)).div_exact(&a),
            Err(PolyError::NotDivisible)
        );
    }

    #[test]
    fn degree_sentinel_for_zero() {
        let v = table();
        assert_eq!(P::zero(&v).total_degree(), None);
        assert_eq!(P::zero(&v).degree_in(0), None);
        assert_eq!(P::one(&v).total_degree(), Some(0));
    }

    #[test]
    fn coefficients_round_trip() {
        let v = table();
        let p = P::parse(&v, "X0^2*X1 - 3*X0*X2 + 5/7*X1^3 + 2").unwrap();
        let cs = p.coefficients_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(P::from_coefficients_in(&v, 0, &cs), p);
    }

    #[test]
    fn permute_and_embed() {
        let v = table();
        let p = P::parse(&v, "X0^2*X1 + X4").unwrap();
        let q = p.permute_vars(&[1, 0, 2, 3, 4]);
        assert_eq!(q.to_string(), "X0*X1^2 + X4");
        let small = VarTable::new(["X4", "X1", "X0"]).unwrap();
        let e = p.embed(&small).unwrap();
        assert_eq!(e.embed(&v).unwrap(), p);
        let tiny = VarTable::new(["X0"]).unwrap();
        assert!(p.embed(&tiny).is_err());
    }

    #[test]
    fn canonical_printing_is_graded_lex() {
        let v = table();
        let p = P::parse(&v, "- X3 + 3/2*X0^2*X1").unwrap();
        assert_eq!(p.to_string(), "3/2*X0^2*X1 - X3");
        let q = P::parse(&v, "1 - X1 + X0").unwrap();
        assert_eq!(q.to_string(), "X0 - X1 + 1");
        assert_eq!(P::parse(&v, "-2").unwrap().to_string(), "-2");
    }

    #[test]
    fn ratio_detection() {
        let v = table();
        let p = P::parse(&v, "X0*X1 - 2*X2").unwrap();
        assert_eq!(p.ratio_to(&p.scale(&rational(-3, 4))), Some(rational(-3, 4)));
        assert_eq!(p.ratio_to(&(&p + &P::one(&v))), None);
        assert_eq!(p.ratio_to(&P::zero(&v)), None);
    }

    #[test]
    fn derivative_and_eval() {
        let v = table();
        let p = P::parse(&v, "X0^3*X1 + 2*X1").unwrap();
        assert_eq!(p.derivative(0).to_string(), "3*X0^2*X1");
        assert_eq!(
            p.eval(&[int(2), int(3), int(0), int(0), int(0)]),
            int(24 + 6)
        );
    }
}
