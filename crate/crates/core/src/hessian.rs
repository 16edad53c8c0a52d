//! Pentahedral cubic surfaces and their Hessian quartics.
//!
//! Projective 3-space is the hyperplane `X0 + X1 + X2 + X3 + X4 = 0` in
//! P^4. Unless stated otherwise, polynomials returned here live in the chart
//! `X0..X3`, i.e. with `X4 = -(X0 + X1 + X2 + X3)` substituted.

use std::fmt;
use std::sync::LazyLock;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, PolyMatrix};
use crate::poly::VarTable;
use crate::resultant::{discriminant, reduce_symmetric};
use crate::scalar::int;
use crate::{Poly, Rational};

/// Index of `mu_i` in [`vars`].
pub const fn mu_var(i: usize) -> usize {
    5 + i
}
pub const S_VAR: usize = 10;
pub const T_VAR: usize = 11;
pub const ALPHA_VAR: usize = 12;

static VARS: LazyLock<VarTable> = LazyLock::new(|| {
    VarTable::new([
        "X0", "X1", "X2", "X3", "X4", "mu0", "mu1", "mu2", "mu3", "mu4", "s", "t", "alpha",
    ])
    .expect("distinct names")
});

/// The variable table shared by every geometric polynomial in the crate:
/// coordinates `X0..X4`, coefficients `mu0..mu4`, the branch-cubic
/// parameters `s`, `t` (`t` plays the conjugate root) and `alpha`.
pub fn vars() -> &'static VarTable {
    &VARS
}

pub fn x(i: usize) -> Poly {
    Poly::var_at(vars(), i)
}

pub fn var(idx: usize) -> Poly {
    Poly::var_at(vars(), idx)
}

pub fn konst(c: Rational) -> Poly {
    Poly::constant(vars(), c)
}

pub fn kint(n: i64) -> Poly {
    konst(int(n))
}

/// `X4` expressed in the chart.
pub fn x4_in_chart() -> Poly {
    -(0..4).fold(Poly::zero(vars()), |acc, i| &acc + &x(i))
}

pub fn eliminate_x4(p: &Poly) -> Poly {
    p.substitute_at(4, &x4_in_chart()).expect("shared table")
}

/// The symbolic coefficients `mu0..mu4`.
pub fn symbolic_mu() -> [Poly; 5] {
    std::array::from_fn(|i| var(mu_var(i)))
}

/// Five nonzero coefficients `mu0..mu4` defining the cubic
/// `sum X_i^3 / mu_i` and its Hessian `sum mu_i prod_{j != i} X_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MuJson", into = "MuJson")]
pub struct PentahedralData {
    mu: [Rational; 5],
}

#[derive(Serialize, Deserialize)]
struct MuJson {
    #[serde(with = "crate::scalar::rational_vec_str")]
    mu: Vec<Rational>,
}

impl TryFrom<MuJson> for PentahedralData {
    type Error = Error;
    fn try_from(j: MuJson) -> Result<Self> {
        PentahedralData::from_slice(&j.mu)
    }
}

impl From<PentahedralData> for MuJson {
    fn from(d: PentahedralData) -> Self {
        MuJson { mu: d.mu.to_vec() }
    }
}

impl PentahedralData {
    pub fn new(mu: [Rational; 5]) -> Result<Self> {
        if let Some(i) = mu.iter().position(Zero::is_zero) {
            return Err(Error::ZeroMu(i));
        }
        Ok(PentahedralData { mu })
    }

    pub fn from_slice(mu: &[Rational]) -> Result<Self> {
        let arr: [Rational; 5] = mu
            .to_vec()
            .try_into()
            .map_err(|v: Vec<Rational>| Error::WrongMuCount(v.len()))?;
        Self::new(arr)
    }

    pub fn from_ints(mu: [i64; 5]) -> Result<Self> {
        Self::new(mu.map(int))
    }

    /// Parses `"p/q,p/q,p/q,p/q,p/q"` in the order `mu0..mu4`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_slice(&crate::scalar::parse_rational_list(text)?)
    }

    pub fn mu(&self) -> &[Rational; 5] {
        &self.mu
    }

    /// Cubic-form coefficients `lambda_i = 1 / mu_i`.
    pub fn lambdas(&self) -> [Rational; 5] {
        std::array::from_fn(|i| self.mu[i].recip())
    }

    pub fn scaled(&self, t: &Rational) -> Result<Self> {
        Self::new(std::array::from_fn(|i| &self.mu[i] * t))
    }

    /// Relabelled data: the coefficient at index `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize; 5]) -> Self {
        let mut mu = self.mu.clone();
        for i in 0..5 {
            mu[perm[i]] = self.mu[i].clone();
        }
        PentahedralData { mu }
    }

    pub fn as_polys(&self) -> [Poly; 5] {
        std::array::from_fn(|i| konst(self.mu[i].clone()))
    }
}

impl fmt::Display for PentahedralData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mu.iter().join(","))
    }
}

fn check_indices(idx: &[usize]) -> Result<()> {
    if idx.iter().any(|&i| i > 4) || idx.iter().duplicates().next().is_some() {
        return Err(Error::InvalidIndices(format!("{idx:?}")));
    }
    Ok(())
}

/// The line `l_ij = V(X_i, X_j)` of the pentahedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineLabel([usize; 2]);

impl LineLabel {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        check_indices(&[i, j])?;
        Ok(LineLabel([i.min(j), i.max(j)]))
    }

    pub fn indices(&self) -> [usize; 2] {
        self.0
    }

    pub fn all() -> Vec<LineLabel> {
        (0..5).tuple_combinations().map(|(i, j)| LineLabel([i, j])).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l{}{}", self.0[0], self.0[1])
    }
}

/// The node `p_ijk = V(X_i, X_j, X_k)` of the Hessian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeLabel([usize; 3]);

impl NodeLabel {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        check_indices(&[i, j, k])?;
        let mut v = [i, j, k];
        v.sort_unstable();
        Ok(NodeLabel(v))
    }

    pub fn indices(&self) -> [usize; 3] {
        self.0
    }

    pub fn all() -> Vec<NodeLabel> {
        (0..5)
            .tuple_combinations()
            .map(|(i, j, k)| NodeLabel([i, j, k]))
            .collect()
    }

    /// The three lines through this node.
    pub fn lines(&self) -> [LineLabel; 3] {
        let [i, j, k] = self.0;
        [LineLabel([i, j]), LineLabel([i, k]), LineLabel([j, k])]
    }

    /// Coordinates in P^4: the two free coordinates are `1` and `-1`.
    pub fn point(&self) -> [Rational; 5] {
        let free: Vec<usize> = (0..5).filter(|i| !self.0.contains(i)).collect();
        let mut p: [Rational; 5] = std::array::from_fn(|_| Rational::zero());
        p[free[0]] = Rational::one();
        p[free[1]] = -Rational::one();
        p
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

/// `sum mu_i prod_{j != i} X_j` in all five coordinates.
pub fn hessian_in_p4(mu: &[Poly; 5]) -> Poly {
    (0..5).fold(Poly::zero(vars()), |acc, i| {
        let prod = (0..5).filter(|&j| j != i).fold(mu[i].clone(), |p, j| &p * &x(j));
        &acc + &prod
    })
}

/// The closed-form Hessian quartic in the chart `X0..X3`.
pub fn hessian_closed_form(d: &PentahedralData) -> Poly {
    eliminate_x4(&hessian_in_p4(&d.as_polys()))
}

/// `sum X_i^3 / mu_i` in the chart `X0..X3`.
pub fn pentahedral_cubic(d: &PentahedralData) -> Poly {
    let lambdas = d.lambdas();
    let cubic = (0..5).fold(Poly::zero(vars()), |acc, i| {
        &acc + &x(i).pow(3).scale(&lambdas[i])
    });
    eliminate_x4(&cubic)
}

/// Matrix of second partials in `X0..X3`.
pub fn hessian_matrix(f: &Poly) -> PolyMatrix<Rational> {
    PolyMatrix::from_fn(vars(), 4, 4, |i, j| f.derivative(i).derivative(j))
}

/// Returns `c` with `det(Hess(cubic)) = c * hessian_closed_form`.
pub fn verify_hessian_identity(d: &PentahedralData) -> Result<Rational> {
    let det = hessian_matrix(&pentahedral_cubic(d)).determinant()?;
    let closed = hessian_closed_form(d);
    closed.ratio_to(&det).ok_or_else(|| {
        Error::IdentityFailure(format!(
            "Hessian determinant is not proportional to the closed form for mu = {d}"
        ))
    })
}

/// Degree-4 exponent vectors in four variables, lexicographically.
fn quartic_exponents() -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in (0..=4).rev() {
        for b in (0..=4 - a).rev() {
            for c in (0..=4 - a - b).rev() {
                out.push([a, b, c, 4 - a - b - c]);
            }
        }
    }
    out
}

/// Linear parameterization of `l_ij` in the chart, by `(u, v)`.
fn line_parameterization(line: LineLabel) -> [[i64; 2]; 4] {
    let [i, j] = line.indices();
    let mut param = [[0i64; 2]; 4];
    if j < 4 {
        let free: Vec<usize> = (0..4).filter(|&k| k != i && k != j).collect();
        param[free[0]] = [1, 0];
        param[free[1]] = [0, 1];
    } else {
        // X_i = 0 and X4 = 0: the remaining three chart coordinates sum to 0
        let free: Vec<usize> = (0..4).filter(|&k| k != i).collect();
        param[free[0]] = [1, 0];
        param[free[1]] = [0, 1];
        param[free[2]] = [-1, -1];
    }
    param
}

/// Coefficient matrix of the conditions "the quartic vanishes on each of
/// `lines`", one row per (line, coefficient of the restricted binary
/// quartic), one column per quartic monomial of [`quartic_exponents`].
fn vanishing_conditions(lines: &[LineLabel]) -> Matrix<Rational> {
    let uv = VarTable::new(["u", "v"]).expect("distinct");
    let u = Poly::var_at(&uv, 0);
    let v = Poly::var_at(&uv, 1);
    let monos = quartic_exponents();
    let mut rows = Vec::new();
    for &line in lines {
        let param = line_parameterization(line);
        let coords: Vec<Poly> = param
            .iter()
            .map(|[a, b]| &u.scale(&int(*a)) + &v.scale(&int(*b)))
            .collect();
        let restricted: Vec<Poly> = monos
            .iter()
            .map(|e| {
                (0..4).fold(Poly::one(&uv), |acc, k| &acc * &coords[k].pow(e[k]))
            })
            .collect();
        for a in 0..=4u32 {
            rows.push(restricted.iter().map(|r| r.coeff(&[a, 4 - a])).collect());
        }
    }
    Matrix::from_rows(rows).expect("rectangular")
}

/// Basis of the quartics in `X0..X3` vanishing on the given lines, as
/// coefficient vectors over the quartic monomials.
pub fn vanishing_quartics(lines: &[LineLabel]) -> Vec<Poly> {
    let monos = quartic_exponents();
    vanishing_conditions(lines)
        .kernel()
        .into_iter()
        .map(|coeffs| {
            Poly::from_terms(
                vars(),
                monos.iter().zip(coeffs).map(|(e, c)| {
                    let mut full = vec![0; vars().len()];
                    full[..4].copy_from_slice(e);
                    (full, c)
                }),
            )
        })
        .collect()
}

/// Dimension of the space of quartics vanishing on all ten lines `l_ij`.
pub fn vanishing_quartics_dimension() -> usize {
    vanishing_quartics(&LineLabel::all()).len()
}

/// The conic `mu0 X1 X2 + mu1 X0 X2 + mu2 X0 X1` cut out over the node `p012`.
pub fn node_conic(mu: &[Poly; 5]) -> Poly {
    let (x0, x1, x2) = (x(0), x(1), x(2));
    &(&(&mu[0] * &(&x1 * &x2)) + &(&mu[1] * &(&x0 * &x2))) + &(&mu[2] * &(&x0 * &x1))
}

/// `E_s = s X0 X1 X2 - (mu0 X1 X2 + mu1 X0 X2 + mu2 X0 X1)(X0 + X1 + X2)`.
pub fn branch_cubic(mu: &[Poly; 5], s: &Poly) -> Poly {
    let sigma = &(&x(0) + &x(1)) + &x(2);
    let xyz = &(&x(0) * &x(1)) * &x(2);
    &(s * &xyz) - &(&node_conic(mu) * &sigma)
}

/// `s + t` and `s t` for the two roots of `s^2 - 2(mu3+mu4)s + (mu3-mu4)^2`.
pub fn branch_parameter_symmetric_functions(mu: &[Poly; 5]) -> (Poly, Poly) {
    let e1 = (&mu[3] + &mu[4]).scale(&int(2));
    let e2 = (&mu[3] - &mu[4]).pow(2);
    (e1, e2)
}

/// Discriminant of the Hessian in `X3`, the product `E_s E_t` rewritten
/// through `s + t`, `s t`, and their ratio.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchSextic {
    pub discriminant: Poly,
    pub product: Poly,
    pub ratio: Rational,
}

/// Returns `(disc_X3(H), E_s E_t)` for symbolic or numeric coefficients.
pub fn branch_sextic_parts(mu: &[Poly; 5]) -> Result<(Poly, Poly)> {
    let h = eliminate_x4(&hessian_in_p4(mu));
    if h.degree_in(3) != Some(2) {
        return Err(Error::IdentityFailure(
            "Hessian is not quadratic in X3".into(),
        ));
    }
    let disc = discriminant(&h, "X3")?;
    let product = &branch_cubic(mu, &var(S_VAR)) * &branch_cubic(mu, &var(T_VAR));
    let (e1, e2) = branch_parameter_symmetric_functions(mu);
    let product = reduce_symmetric(&product, "s", "t", &e1, &e2)?;
    Ok((disc, product))
}

pub fn branch_sextic_factorization(d: &PentahedralData) -> Result<BranchSextic> {
    let (discriminant, product) = branch_sextic_parts(&d.as_polys())?;
    let ratio = product.ratio_to(&discriminant).ok_or_else(|| {
        Error::IdentityFailure(format!(
            "discriminant in X3 is not proportional to E_s E_t for mu = {d}"
        ))
    })?;
    Ok(BranchSextic {
        discriminant,
        product,
        ratio,
    })
}

/// Checks, symbolically in `s`, that `E_s` is tangent to the node conic at
/// the three points `V(X_i, X_j)`, `0 <= i < j <= 2`: both curves pass
/// through the point and their gradients there are proportional.
pub fn branch_cubic_tangent_to_node_conic(d: &PentahedralData) -> bool {
    let mu = d.as_polys();
    let e = branch_cubic(&mu, &var(S_VAR));
    let q = node_conic(&mu);
    (0..3).all(|k| {
        let mut pt = [kint(0), kint(0), kint(0)];
        pt[k] = kint(1);
        let at = |p: &Poly| {
            p.substitute_many(&[(0, pt[0].clone()), (1, pt[1].clone()), (2, pt[2].clone())])
                .expect("shared table")
        };
        if !at(&e).is_zero() || !at(&q).is_zero() {
            return false;
        }
        let ge: Vec<Poly> = (0..3).map(|i| at(&e.derivative(i))).collect();
        let gq: Vec<Poly> = (0..3).map(|i| at(&q.derivative(i))).collect();
        gq.iter().any(|g| !g.is_zero())
            && (0..3).tuple_combinations().all(|(i, j)| (&(&ge[i] * &gq[j]) - &(&ge[j] * &gq[i])).is_zero())
    })
}

/// The three intersections of `E_s` and `E_t` away from the points
/// `V(X_i, X_j)`: returns them when each lies on `X0 + X1 + X2 = 0` and the
/// two cubics cross transversally there (symbolically in `s`, `t`, `s != t`).
pub fn branch_cubics_residual_intersections(d: &PentahedralData) -> Result<Vec<[Rational; 3]>> {
    let mu = d.as_polys();
    let es = branch_cubic(&mu, &var(S_VAR));
    let et = branch_cubic(&mu, &var(T_VAR));
    // E_s - E_t = (s - t) X0 X1 X2, so the cubics meet on the coordinate
    // triangle; on X_k = 0 each restricts to -mu_k X_i X_j (X_i + X_j).
    let diff = (&es - &et).div_exact(&(&(&(&var(S_VAR) - &var(T_VAR)) * &x(0)) * &x(1)))?;
    if diff != x(2) {
        return Err(Error::IdentityFailure("E_s - E_t is not (s-t) X0 X1 X2".into()));
    }
    let mut out = Vec::new();
    for k in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        let (i, j) = (others[0], others[1]);
        let restricted = es.eval_at(k, &Rational::zero());
        let expected = &(&(&x(i) * &x(j)) * &(&x(i) + &x(j))).scale(&-d.mu()[k].clone());
        if restricted != *expected {
            return Err(Error::IdentityFailure(format!(
                "E_s restricted to X{k} = 0 is {restricted}"
            )));
        }
        let mut pt: [Rational; 3] = std::array::from_fn(|_| Rational::zero());
        pt[i] = Rational::one();
        pt[j] = -Rational::one();
        // transversality: the 2x2 minors of the gradients, after removing the
        // factor (s - t), must not all vanish
        let at = |p: &Poly| {
            (0..3).fold(p.clone(), |acc, c| acc.eval_at(c, &pt[c]))
        };
        let gs: Vec<Poly> = (0..3).map(|c| at(&es.derivative(c))).collect();
        let gt: Vec<Poly> = (0..3).map(|c| at(&et.derivative(c))).collect();
        let transverse = (0..3)
            .tuple_combinations()
            .any(|(a, b)| !(&(&gs[a] * &gt[b]) - &(&gs[b] * &gt[a])).is_zero());
        if !at(&es).is_zero() || !at(&et).is_zero() || !transverse {
            return Err(Error::IdentityFailure(format!(
                "E_s and E_t do not cross transversally at {pt:?}"
            )));
        }
        out.push(pt);
    }
    Ok(out)
}

/// Restriction of the Hessian to the plane `mu_j X_i + mu_i X_j = 0`.
///
/// In the plane the coordinates are `X_i` and the two indices other than
/// `i`, `j`, `k`, where `k` is the largest index outside `{i, j}`; `X_j` and
/// `X_k` are eliminated. The restriction equals `scale * line^2 * conic`,
/// with `line = X_i` cutting out `l_ij` and `conic` the residual conic
/// `mu_k X_l X_m + mu_l X_k X_m + mu_m X_k X_l`.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentSection {
    pub line: Poly,
    pub conic: Poly,
    pub scale: Rational,
    pub plane_coordinates: [usize; 3],
}

pub fn tangent_plane_section(d: &PentahedralData, i: usize, j: usize) -> Result<TangentSection> {
    check_indices(&[i, j])?;
    let mu = d.mu();
    let k = (0..5).rev().find(|&c| c != i && c != j).expect("five indices");
    let rest: Vec<usize> = (0..5).filter(|&c| c != i && c != j && c != k).collect();
    let (l, m) = (rest[0], rest[1]);

    let xj = x(i).scale(&(-&mu[j] / &mu[i]));
    let xk = -(&(&(&x(i) + &xj) + &x(l)) + &x(m));
    let restrict = |p: &Poly| -> Result<Poly> {
        Ok(p.substitute_at(j, &xj)?.substitute_at(k, &xk)?)
    };

    let h = restrict(&hessian_in_p4(&d.as_polys()))?;
    let line = x(i);
    let quotient = h.div_exact(&line.pow(2)).map_err(|_| {
        Error::IdentityFailure(format!("section by plane {j},{i} is not divisible by X{i}^2"))
    })?;
    let conic = restrict(
        &(&(&(&x(l) * &x(m)).scale(&mu[k]) + &(&x(k) * &x(m)).scale(&mu[l]))
            + &(&x(k) * &x(l)).scale(&mu[m])),
    )?;
    let scale = conic.ratio_to(&quotient).ok_or_else(|| {
        Error::IdentityFailure(format!("residual conic of plane {j},{i} does not match"))
    })?;
    let mut plane_coordinates = [i, l, m];
    plane_coordinates.sort_unstable();
    Ok(TangentSection {
        line,
        conic,
        scale,
        plane_coordinates,
    })
}

/// The polynomial in `mu` vanishing exactly when the cubic
/// `sum X_i^3 / mu_i` is singular.
///
/// A singular point satisfies `3 X_i^2 / mu_i = lambda` for all `i` together
/// with `sum X_i = 0`, i.e. `sum eps_i sqrt(mu_i) = 0` for some signs. The
/// product of `sum eps_i r_i` over the sixteen sign patterns with
/// `eps_0 = 1` is even in every `r_i`; substituting `r_i^2 = mu_i` gives
/// this degree-8 form.
pub fn singularity_form() -> &'static Poly {
    static FORM: LazyLock<Poly> = LazyLock::new(|| {
        let rt = VarTable::new(["r0", "r1", "r2", "r3", "r4"]).expect("distinct");
        let r: Vec<Poly> = (0..5).map(|i| Poly::var_at(&rt, i)).collect();
        let mut prod = Poly::one(&rt);
        for signs in 0..16u32 {
            let lin = (1..5).fold(r[0].clone(), |acc, i| {
                if signs & (1 << (i - 1)) == 0 {
                    &acc + &r[i]
                } else {
                    &acc - &r[i]
                }
            });
            prod = &prod * &lin;
        }
        let terms = prod.terms().map(|(m, c)| {
            let e = m.exponents();
            assert!(e.iter().all(|k| k % 2 == 0), "product is even in each root");
            let mut full = vec![0; vars().len()];
            for i in 0..5 {
                full[mu_var(i)] = e[i] / 2;
            }
            (full, c.clone())
        });
        Poly::from_terms(vars(), terms.collect::<Vec<_>>())
    });
    &FORM
}

/// Whether the cubic surface of `d` is smooth.
pub fn cubic_is_smooth(d: &PentahedralData) -> bool {
    let mut point = vec![Rational::zero(); vars().len()];
    for i in 0..5 {
        point[mu_var(i)] = d.mu()[i].clone();
    }
    !singularity_form().eval(&point).is_zero()
}
