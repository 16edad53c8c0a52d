//! The correspondence between branch points of a genus-2 curve and the
//! pentahedral coefficients of its Kummer-Hessian: the quadric `R`, the
//! planes of the extra conics, and the six branch points on `l01`.

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicOrder;
use crate::error::{Error, Result};
use crate::hessian::{eliminate_x4, hessian_matrix, kint, konst, mu_var, symbolic_mu, vars, x, NodeLabel, PentahedralData};
use crate::invariant::{cubic_condition, permute_mu};
use crate::scalar::{int, rational};
use crate::{Mat, Poly, PolyMat, Rational};

/// Which three branch points are fixed at `0`, `d` and infinity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    /// `c = 0, d = -1, f = oo`.
    #[default]
    #[serde(rename = "s5")]
    DMinusOne,
    /// `c = 0, d = 1, f = oo`.
    #[serde(rename = "s1")]
    DPlusOne,
}

impl Normalization {
    pub fn d(&self) -> Rational {
        match self {
            Normalization::DMinusOne => int(-1),
            Normalization::DPlusOne => int(1),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Normalization::DMinusOne => "s5",
            Normalization::DPlusOne => "s1",
        }
    }
}

impl std::str::FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s5" => Ok(Normalization::DMinusOne),
            "s1" => Ok(Normalization::DPlusOne),
            _ => Err(Error::InvalidLabel(format!("unknown variant `{s}`"))),
        }
    }
}

/// The free branch points `a, b, e`; the others are `c = 0`, `d` and
/// `f = oo` according to the normalization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchTriple {
    #[serde(with = "crate::scalar::rational_str")]
    pub a: Rational,
    #[serde(with = "crate::scalar::rational_str")]
    pub b: Rational,
    #[serde(with = "crate::scalar::rational_str")]
    pub e: Rational,
    pub variant: Normalization,
}

impl BranchTriple {
    pub fn new(a: Rational, b: Rational, e: Rational, variant: Normalization) -> Result<Self> {
        let d = variant.d();
        let vals = [&a, &b, &e];
        if vals.iter().any(|v| v.is_zero() || **v == d) || a == b || a == e || b == e {
            return Err(Error::DegenerateCurve(format!(
                "branch points a={a}, b={b}, e={e} with c=0, d={d}, f=oo are not distinct"
            )));
        }
        Ok(BranchTriple { a, b, e, variant })
    }

    pub fn from_ints(a: i64, b: i64, e: i64, variant: Normalization) -> Result<Self> {
        Self::new(int(a), int(b), int(e), variant)
    }

    /// The six branch points `a, b, c, d, e, f`.
    pub fn branch_points(&self) -> [P1Point; 6] {
        [
            P1Point::Finite(self.a.clone()),
            P1Point::Finite(self.b.clone()),
            P1Point::Finite(Rational::zero()),
            P1Point::Finite(self.variant.d()),
            P1Point::Finite(self.e.clone()),
            P1Point::Infinity,
        ]
    }
}

fn degenerate_check(mu: [Rational; 5]) -> Result<PentahedralData> {
    if let Some(i) = mu.iter().position(Zero::is_zero) {
        return Err(Error::DegeneratePentahedron(i));
    }
    PentahedralData::new(mu)
}

pub fn branch_to_mu(t: &BranchTriple) -> Result<PentahedralData> {
    let (a, b, e) = (&t.a, &t.b, &t.e);
    let one = Rational::one();
    let mu = match t.variant {
        Normalization::DMinusOne => [
            a * (b + &one),
            e * (a + &one),
            b * (a - e),
            e - b,
            (a - b) * (e + &one),
        ],
        Normalization::DPlusOne => [
            a * (&one - b),
            e * (&one - a),
            b * (e - a),
            e - b,
            (a - b) * (&one - e),
        ],
    };
    degenerate_check(mu)
}

fn ratio(num: Rational, den: Rational, which: &'static str) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator(which));
    }
    Ok(num / den)
}

/// The printed inverse formulas of each normalization.
pub fn mu_to_branch(d: &PentahedralData, variant: Normalization) -> Result<BranchTriple> {
    let f = cubic_condition(d);
    if !f.is_zero() {
        return Err(Error::NotOnKummerLocus(f.to_string()));
    }
    let m = d.mu();
    // signed sums: coefficient +1 for indices in `plus`, -1 otherwise
    let sum = |plus: &[usize]| -> Rational {
        (0..5).fold(Rational::zero(), |acc, i| {
            if plus.contains(&i) {
                acc + &m[i]
            } else {
                acc - &m[i]
            }
        })
    };
    let two = int(2);
    let (a, b, e) = match variant {
        Normalization::DMinusOne => (
            ratio(sum(&[1, 4]), &two * &m[3], "a")?,
            ratio(&two * &m[2], sum(&[0, 4]), "b")?,
            ratio(sum(&[0, 3]), sum(&[1, 2]), "e")?,
        ),
        Normalization::DPlusOne => (
            ratio(sum(&[0, 3, 4]), &two * &m[3], "a")?,
            ratio(&two * &m[2], sum(&[1, 2, 3]), "b")?,
            ratio(sum(&[0, 3]), sum(&[0, 3, 4]), "e")?,
        ),
    };
    BranchTriple::new(a, b, e, variant)
}

/// A point of `P^4` on the hyperplane `sum X_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProjectivePoint5 {
    #[serde(with = "crate::scalar::rational_vec_str")]
    coords: Vec<Rational>,
}

impl ProjectivePoint5 {
    pub fn new(coords: [Rational; 5]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidIndices("all coordinates zero".into()));
        }
        let s = coords.iter().fold(Rational::zero(), |acc, c| acc + c);
        if !s.is_zero() {
            return Err(Error::InvalidIndices(format!("coordinates sum to {s}")));
        }
        Ok(ProjectivePoint5 { coords: coords.to_vec() })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The first four coordinates.
    pub fn chart(&self) -> [Rational; 4] {
        std::array::from_fn(|i| self.coords[i].clone())
    }

    pub fn same_point(&self, other: &ProjectivePoint5) -> bool {
        (0..5)
            .tuple_combinations()
            .all(|(i, j)| &self.coords[i] * &other.coords[j] == &self.coords[j] * &other.coords[i])
    }
}

impl fmt::Display for ProjectivePoint5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.coords.iter().join(" : "))
    }
}

/// Half the matrix of second partials of a quadratic form in `X0..X3`.
pub fn quadric_matrix(q: &Poly) -> PolyMat {
    let half = rational(1, 2);
    hessian_matrix(q).map(|p| p.scale(&half))
}

fn signed_mu_sum(mu: &[Poly; 5], plus: &[usize]) -> Poly {
    (0..5).fold(Poly::zero(vars()), |acc, i| {
        if plus.contains(&i) {
            &acc + &mu[i]
        } else {
            &acc - &mu[i]
        }
    })
}

/// `R` in all five coordinates with `alpha = an / ad`, `beta = bn / bd`,
/// multiplied through by `ad * bd`.
fn r_form(mu: &[Poly; 5], an: &Poly, ad: &Poly, bn: &Poly, bd: &Poly) -> Poly {
    let p = |a: &Poly, b: &Poly| a * b;
    let first = p(&(&p(&mu[1], &x(2)) + &p(&mu[2], &x(1))), &(&p(&mu[3], &x(4)) + &p(&mu[4], &x(3))));
    let alpha_part = &(&p(&mu[0], &p(&x(3), &x(4))) + &p(&mu[3], &p(&x(0), &x(4)))) + &p(&mu[4], &p(&x(0), &x(3)));
    let beta_part = &(&p(&mu[0], &p(&x(1), &x(2))) + &p(&mu[1], &p(&x(0), &x(2)))) + &p(&mu[2], &p(&x(0), &x(1)));
    let terms = [
        p(&p(ad, bd), &first),
        p(&p(an, bd), &alpha_part),
        p(&p(bn, ad), &beta_part),
        p(&p(an, bn), &x(0).pow(2)),
    ];
    terms.iter().fold(Poly::zero(vars()), |acc, t| &acc + t)
}

fn alpha_beta_parts(mu: &[Poly; 5]) -> (Poly, Poly, Poly, Poly) {
    let an = (&mu[1] * &mu[2]).scale(&int(2));
    let ad = signed_mu_sum(mu, &[0, 1, 2]);
    let bn = (&mu[3] * &mu[4]).scale(&int(2));
    let bd = signed_mu_sum(mu, &[0, 3, 4]);
    (an, ad, bn, bd)
}

/// `R` with `alpha`, `beta` as rational functions of symbolic `mu`, the
/// common denominator cleared, in all five coordinates.
pub fn r_form_symbolic() -> Poly {
    let mu = symbolic_mu();
    let (an, ad, bn, bd) = alpha_beta_parts(&mu);
    r_form(&mu, &an, &ad, &bn, &bd)
}

pub fn r_quadric_symbolic() -> PolyMat {
    quadric_matrix(&eliminate_x4(&r_form_symbolic()))
}

/// `alpha` and `beta` of the given coefficients.
pub fn alpha_beta(d: &PentahedralData) -> Result<(Rational, Rational)> {
    let m = d.mu();
    let ad = &(&(&m[0] + &m[1]) + &m[2]) - &(&m[3] + &m[4]);
    let bd = &(&(&m[0] + &m[3]) + &m[4]) - &(&m[1] + &m[2]);
    if ad.is_zero() {
        return Err(Error::AlphaUndefined);
    }
    if bd.is_zero() {
        return Err(Error::BetaUndefined);
    }
    Ok((&m[1] * &m[2] * int(2) / ad, &m[3] * &m[4] * int(2) / bd))
}

/// The quadratic form `R` in the chart `X0..X3`.
pub fn r_form_numeric(d: &PentahedralData) -> Result<Poly> {
    let (alpha, beta) = alpha_beta(d)?;
    let one = kint(1);
    Ok(eliminate_x4(&r_form(&d.as_polys(), &konst(alpha), &one, &konst(beta), &one)))
}

/// Symmetric coefficient matrix of `R` in the chart `X0..X3`.
pub fn r_quadric(d: &PentahedralData) -> Result<Mat> {
    Ok(quadric_matrix(&r_form_numeric(d)?)
        .to_numeric()
        .expect("numeric entries"))
}

pub fn r_rank_dichotomy(d: &PentahedralData) -> Result<usize> {
    Ok(r_quadric(d)?.rank())
}

/// `[mu1+mu2-mu3-mu4 : -mu1 : -mu2 : mu3 : mu4]` and the four other points
/// of the plane of `(03214)`, symbolic in `mu`.
pub fn base_plane_points() -> [[Poly; 5]; 5] {
    let m = symbolic_mu();
    let n = |p: &Poly| -p;
    [
        [signed_mu_sum_partial(&m, &[1, 2], &[3, 4]), n(&m[1]), n(&m[2]), m[3].clone(), m[4].clone()],
        [n(&m[0]), signed_mu_sum_partial(&m, &[0, 3], &[2, 4]), m[2].clone(), n(&m[3]), m[4].clone()],
        [m[0].clone(), n(&m[1]), m[2].clone(), signed_mu_sum_partial(&m, &[1, 4], &[0, 2]), n(&m[4])],
        [m[0].clone(), m[1].clone(), n(&m[2]), n(&m[3]), signed_mu_sum_partial(&m, &[2, 3], &[0, 1])],
        [n(&m[0]), m[1].clone(), signed_mu_sum_partial(&m, &[0, 4], &[1, 3]), m[3].clone(), n(&m[4])],
    ]
}

fn signed_mu_sum_partial(mu: &[Poly; 5], plus: &[usize], minus: &[usize]) -> Poly {
    let p = plus.iter().fold(Poly::zero(vars()), |acc, &i| &acc + &mu[i]);
    minus.iter().fold(p, |acc, &i| &acc - &mu[i])
}

pub const BASE_ORDER: [usize; 5] = [0, 3, 2, 1, 4];

/// The relabelling carrying `(03214)` to `order`, position by position.
pub fn relabelling_to(order: CyclicOrder) -> [usize; 5] {
    let seq = order.sequence();
    let mut sigma = [0; 5];
    for k in 0..5 {
        sigma[BASE_ORDER[k]] = seq[k];
    }
    sigma
}

/// The five points on the plane of the conic labelled `order`, symbolic.
pub fn plane_points_symbolic(order: CyclicOrder) -> [[Poly; 5]; 5] {
    let sigma = relabelling_to(order);
    base_plane_points().map(|pt| {
        let mut out: [Poly; 5] = std::array::from_fn(|_| Poly::zero(vars()));
        for i in 0..5 {
            out[sigma[i]] = permute_mu(&pt[i], &sigma);
        }
        out
    })
}

fn eval_mu(p: &Poly, d: &PentahedralData) -> Rational {
    let mut point = vec![Rational::zero(); vars().len()];
    for i in 0..5 {
        point[mu_var(i)] = d.mu()[i].clone();
    }
    p.eval(&point)
}

pub fn plane_points(d: &PentahedralData, order: CyclicOrder) -> Result<Vec<ProjectivePoint5>> {
    plane_points_symbolic(order)
        .iter()
        .map(|pt| ProjectivePoint5::new(std::array::from_fn(|i| eval_mu(&pt[i], d))))
        .collect()
}

/// Rank of the matrix of coordinates.
pub fn points_rank(pts: &[ProjectivePoint5]) -> usize {
    Mat::from_rows(pts.iter().map(|p| p.coords().to_vec()).collect())
        .expect("rectangular")
        .rank()
}

/// Coefficients `(c0..c3)` of the linear form `det [X; p; q; r]` expanded
/// along its first row, for three points given in the chart.
fn plane_through<T: Clone>(rows: &[[T; 4]; 3], det3: impl Fn(Vec<Vec<T>>) -> T, neg: impl Fn(T) -> T) -> [T; 4] {
    std::array::from_fn(|i| {
        let minor: Vec<Vec<T>> = rows
            .iter()
            .map(|r| (0..4).filter(|&c| c != i).map(|c| r[c].clone()).collect())
            .collect();
        let m = det3(minor);
        if i % 2 == 1 {
            neg(m)
        } else {
            m
        }
    })
}

/// The linear form in `X0..X3` vanishing on the points, from the first
/// three of them (in index order) that are independent.
pub fn plane_equation(pts: &[ProjectivePoint5]) -> Result<[Rational; 4]> {
    let rank = points_rank(pts);
    if rank != 3 {
        return Err(Error::PointsNotCoplanar(rank));
    }
    let triple = (0..pts.len())
        .combinations(3)
        .find(|c| points_rank(&c.iter().map(|&i| pts[i].clone()).collect::<Vec<_>>()) == 3)
        .expect("rank 3");
    let rows: [[Rational; 4]; 3] = std::array::from_fn(|k| pts[triple[k]].chart());
    Ok(plane_through(
        &rows,
        |m| Mat::from_rows(m).expect("3x3").determinant().expect("square"),
        |v| -v,
    ))
}

/// The plane through the first three displayed points, with coefficients
/// cubic in symbolic `mu`. On the Kummer locus it is the plane of the conic.
pub fn plane_equation_symbolic(order: CyclicOrder) -> [Poly; 4] {
    let pts = plane_points_symbolic(order);
    let rows: [[Poly; 4]; 3] = std::array::from_fn(|k| std::array::from_fn(|i| pts[k][i].clone()));
    plane_through(
        &rows,
        |m| PolyMat::from_rows(vars(), m).expect("3x3").determinant().expect("square"),
        |v| -v,
    )
}

pub fn linear_form(c: &[Rational; 4]) -> Poly {
    (0..4).fold(Poly::zero(vars()), |acc, i| &acc + &x(i).scale(&c[i]))
}

/// On the Kummer locus, `R = plane * other` for the plane of `(03214)`;
/// returns the second linear form.
pub fn r_second_factor(d: &PentahedralData) -> Result<Poly> {
    let order: CyclicOrder = "03214".parse().expect("valid");
    let plane = linear_form(&plane_equation(&plane_points(d, order)?)?);
    let r = r_form_numeric(d)?;
    r.div_exact(&plane).map_err(|_| {
        Error::IdentityFailure(format!("R is not divisible by the plane of (03214) at mu = {d}"))
    })
}

/// A point of `P^1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum P1Point {
    Finite(Rational),
    Infinity,
}

impl P1Point {
    fn homogeneous(&self) -> [Rational; 2] {
        match self {
            P1Point::Finite(t) => [t.clone(), Rational::one()],
            P1Point::Infinity => [Rational::one(), Rational::zero()],
        }
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Finite(t) => write!(f, "{t}"),
            P1Point::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for P1Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Cross-ratio `(p1 - p3)(p2 - p4) / ((p1 - p4)(p2 - p3))`, or `None` when
/// two of the points coincide.
pub fn cross_ratio(p: [&P1Point; 4]) -> Option<P1Point> {
    let h = p.map(P1Point::homogeneous);
    let det = |u: &[Rational; 2], v: &[Rational; 2]| &u[0] * &v[1] - &u[1] * &v[0];
    let num = det(&h[0], &h[2]) * det(&h[1], &h[3]);
    let den = det(&h[0], &h[3]) * det(&h[1], &h[2]);
    match (num.is_zero(), den.is_zero()) {
        (true, true) => None,
        (false, true) => Some(P1Point::Infinity),
        _ => Some(P1Point::Finite(num / den)),
    }
}

/// Whether two labelled sextuples of points of `P^1` agree up to a
/// projective transformation, compared through all cross-ratios.
pub fn projectively_equivalent(u: &[P1Point; 6], v: &[P1Point; 6]) -> bool {
    (0..6).permutations(4).all(|idx| {
        cross_ratio([&u[idx[0]], &u[idx[1]], &u[idx[2]], &u[idx[3]]])
            == cross_ratio([&v[idx[0]], &v[idx[1]], &v[idx[2]], &v[idx[3]]])
    })
}

/// The orders of the three conics whose planes meet `l01` at `b`, `e`, `a`.
pub const TROPE_CONIC_ORDERS: [(&str, char); 3] = [("01324", 'b'), ("03421", 'e'), ("01432", 'a')];

/// The letters carried by the nodes `p012`, `p013`, `p014`.
pub const NODE_LETTERS: [char; 3] = ['c', 'f', 'd'];

/// Position of `(0, 0, X2, X3, -X2 - X3)` on `l01` in the coordinate
/// `X2 / X3`.
fn l01_coordinate(x2: Rational, x3: Rational) -> P1Point {
    if x3.is_zero() {
        P1Point::Infinity
    } else {
        P1Point::Finite(x2 / x3)
    }
}

/// The nodes `p012`, `p013`, `p014` in the coordinate `X2 / X3` on `l01`.
pub fn l01_nodes() -> [(NodeLabel, P1Point); 3] {
    [2, 3, 4].map(|k| {
        let node = NodeLabel::new(0, 1, k).expect("distinct");
        let p = node.point();
        (node, l01_coordinate(p[2].clone(), p[3].clone()))
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TropeSixPoints {
    pub nodes: Vec<(String, P1Point)>,
    pub conics: Vec<(String, P1Point)>,
    /// The six points in the order of the letters `a..f`.
    pub labelled: Vec<(char, P1Point)>,
}

impl TropeSixPoints {
    pub fn points(&self) -> [P1Point; 6] {
        std::array::from_fn(|i| self.labelled[i].1.clone())
    }

    pub fn distinct(&self) -> bool {
        self.labelled.iter().map(|(_, p)| p).all_unique()
    }
}

fn plane_meets_l01(d: &PentahedralData, order: &str) -> Result<P1Point> {
    let c = plane_equation(&plane_points(d, order.parse()?)?)?;
    // on l01: c2 X2 + c3 X3 = 0
    if c[2].is_zero() && c[3].is_zero() {
        return Err(Error::PlaneContainsLine(order.to_string()));
    }
    Ok(l01_coordinate(-c[3].clone(), c[2].clone()))
}

/// The three nodes on `l01` and its meetings with the planes of the conics
/// in [`TROPE_CONIC_ORDERS`], labelled by branch letters with the node
/// letters given by `node_letters` (for `p012`, `p013`, `p014`).
pub fn trope_six_points_with(d: &PentahedralData, node_letters: [char; 3]) -> Result<TropeSixPoints> {
    let f = cubic_condition(d);
    if !f.is_zero() {
        return Err(Error::NotOnKummerLocus(f.to_string()));
    }
    let nodes = l01_nodes();
    let conics: Vec<(String, char, P1Point)> = TROPE_CONIC_ORDERS
        .iter()
        .map(|&(o, letter)| Ok((format!("({o})"), letter, plane_meets_l01(d, o)?)))
        .collect::<Result<_>>()?;
    let mut labelled: Vec<(char, P1Point)> = nodes
        .iter()
        .zip(node_letters)
        .map(|((_, p), l)| (l, p.clone()))
        .chain(conics.iter().map(|(_, l, p)| (*l, p.clone())))
        .collect();
    labelled.sort_by_key(|(l, _)| *l);
    Ok(TropeSixPoints {
        nodes: nodes.iter().map(|(n, p)| (n.to_string(), p.clone())).collect(),
        conics: conics.into_iter().map(|(o, _, p)| (o, p)).collect(),
        labelled,
    })
}

pub fn trope_six_points(d: &PentahedralData) -> Result<TropeSixPoints> {
    trope_six_points_with(d, NODE_LETTERS)
}

/// The assignments of `c, d, f` to the nodes `p012, p013, p014` for which
/// the six points on `l01` are projectively equivalent to the branch
/// points of `t`.
pub fn matching_node_assignments(t: &BranchTriple) -> Result<Vec<[char; 3]>> {
    let d = branch_to_mu(t)?;
    let target = t.branch_points();
    let mut out = Vec::new();
    for perm in ['c', 'd', 'f'].into_iter().permutations(3) {
        let letters = [perm[0], perm[1], perm[2]];
        let six = trope_six_points_with(&d, letters)?;
        if projectively_equivalent(&six.points(), &target) {
            out.push(letters);
        }
    }
    Ok(out)
}

/// The triple used to fix [`NODE_LETTERS`].
pub fn reference_triple() -> BranchTriple {
    BranchTriple::from_ints(2, 3, 5, Normalization::DMinusOne).expect("admissible")
}
