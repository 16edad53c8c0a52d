//! Matrices over polynomial rings and over fields.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::PolyError;
use crate::poly::{MultiPoly, VarTable};
use crate::scalar::Field;

/// Rectangular grid of polynomials over one variable table.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix<K> {
    vars: VarTable,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly<K>>,
}

impl<K: Field> std::fmt::Debug for PolyMatrix<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        f.debug_struct("PolyMatrix").field("entries", &rows).finish()
    }
}

impl<K: Field> PolyMatrix<K> {
    pub fn from_rows(vars: &VarTable, rows: Vec<Vec<MultiPoly<K>>>) -> Result<Self, PolyError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(PolyError::Shape("ragged rows".into()));
            }
            for e in row {
                if e.vars() != vars {
                    return Err(PolyError::IncompatibleVars);
                }
                entries.push(e);
            }
        }
        Ok(PolyMatrix {
            vars: vars.clone(),
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn from_fn(
        vars: &VarTable,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> MultiPoly<K>,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert!(e.vars() == vars, "entry over a foreign variable table");
                entries.push(e);
            }
        }
        PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries,
        }
    }

    /// Lifts a field matrix to constant polynomials.
    pub fn from_numeric(vars: &VarTable, m: &Matrix<K>) -> Self {
        Self::from_fn(vars, m.rows(), m.cols(), |i, j| {
            MultiPoly::constant(vars, m[(i, j)].clone())
        })
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly<K> {
        &self.entries[i * self.cols + j]
    }

    pub fn map(&self, f: impl Fn(&MultiPoly<K>) -> MultiPoly<K>) -> Self {
        PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.vars, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Exact symbolic determinant by Laplace expansion along rows, memoized
    /// on the set of remaining columns.
    pub fn determinant(&self) -> Result<MultiPoly<K>, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        assert!(n < 32, "determinant expansion limited to n < 32");
        let mut memo = HashMap::new();
        Ok(self.expand(0, (1u32 << n) - 1, &mut memo))
    }

    fn expand(&self, row: usize, mask: u32, memo: &mut HashMap<u32, MultiPoly<K>>) -> MultiPoly<K> {
        if row == self.rows {
            return MultiPoly::one(&self.vars);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = MultiPoly::zero(&self.vars);
        let mut pos = 0;
        for col in 0..self.cols {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = self.get(row, col);
            if !entry.is_zero() {
                let minor = self.expand(row + 1, mask & !(1 << col), memo);
                let term = entry * &minor;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            pos += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// All `k`x`k` minors. Row index combinations vary slowest; within a
    /// row combination, column combinations follow in lexicographic order.
    pub fn minors(&self, k: usize) -> Result<Vec<MultiPoly<K>>, PolyError> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(PolyError::MinorSizeOutOfRange {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Vec::new();
        for rs in (0..self.rows).combinations(k) {
            for cs in (0..self.cols).combinations(k) {
                out.push(self.submatrix(&rs, &cs).determinant()?);
            }
        }
        Ok(out)
    }

    /// Rank over the fraction field: the largest `k` with a nonzero minor.
    pub fn rank(&self) -> usize {
        let mut r = 0;
        for k in 1..=self.rows.min(self.cols) {
            let nonzero = self.minors(k).is_ok_and(|ms| ms.iter().any(|m| !m.is_zero()));
            if nonzero {
                r = k;
            } else {
                break;
            }
        }
        r
    }

    /// The field matrix, if every entry is constant.
    pub fn to_numeric(&self) -> Option<Matrix<K>> {
        let data = self
            .entries
            .iter()
            .map(MultiPoly::constant_value)
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// Dense matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

impl<K: Field> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self, PolyError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(PolyError::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = K::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = m[(r, j)].clone() * f.clone();
                        m[(i, j)] = m[(i, j)].clone() - v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<K>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![K::zero(); self.cols];
                v[f] = K::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> Result<K, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let mut det = K::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(K::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() / pivot.clone();
                for j in c..m.cols {
                    let v = m[(c, j)].clone() * f.clone();
                    m[(i, j)] = m[(i, j)].clone() - v;
                }
            }
        }
        Ok(det)
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(K::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use num_rational::BigRational;

    type P = MultiPoly<BigRational>;

    fn vars() -> VarTable {
        VarTable::new(["x", "X0", "X1", "X2", "X3"]).unwrap()
    }

    fn num(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_determinant() {
        let v = vars();
        let m = PolyMatrix::from_numeric(&v, &Matrix::<BigRational>::identity(3));
        assert_eq!(m.determinant().unwrap(), P::one(&v));
    }

    #[test]
    fn two_by_two_symbolic() {
        let v = vars();
        let x = P::var(&v, "x").unwrap();
        let one = P::one(&v);
        let m = PolyMatrix::from_rows(&v, vec![vec![x.clone(), one.clone()], vec![one, x]]).unwrap();
        assert_eq!(m.determinant().unwrap().to_string(), "x^2 - 1");
    }

    #[test]
    fn diagonal_product() {
        let v = vars();
        let m = PolyMatrix::from_fn(&v, 4, 4, |i, j| {
            if i == j {
                P::var_at(&v, i + 1).scale(&int(6))
            } else {
                P::zero(&v)
            }
        });
        assert_eq!(m.determinant().unwrap().to_string(), "1296*X0*X1*X2*X3");
    }

    #[test]
    fn non_square_is_error() {
        let v = vars();
        let m = PolyMatrix::from_fn(&v, 2, 3, |_, _| P::one(&v));
        assert!(matches!(m.determinant(), Err(PolyError::NotSquare { rows: 2, cols: 3 })));
        assert!(num(&[&[1, 2, 3]]).determinant().is_err());
    }

    #[test]
    fn minors_of_identity() {
        let v = vars();
        let m = PolyMatrix::from_numeric(&v, &Matrix::<BigRational>::identity(2));
        let ms: Vec<_> = m.minors(1).unwrap().iter().map(|p| p.constant_value().unwrap()).collect();
        assert_eq!(ms, vec![int(1), int(0), int(0), int(1)]);
    }

    #[test]
    fn minor_count_and_range() {
        let v = vars();
        let m = PolyMatrix::from_fn(&v, 3, 4, |i, j| P::constant(&v, int((i * 4 + j) as i64)));
        assert_eq!(m.minors(2).unwrap().len(), 3 * 6);
        assert!(m.minors(4).is_err());
        assert!(m.minors(0).is_err());
    }

    #[test]
    fn rank_two_matrix_has_vanishing_three_minors() {
        // u1 v1^T + u2 v2^T
        let (u1, v1) = ([1, 2, -1, 3], [2, 0, 1, -1]);
        let (u2, v2) = ([0, 1, 4, -2], [1, 1, -3, 5]);
        let rows: Vec<Vec<BigRational>> = (0..4)
            .map(|i| (0..4).map(|j| int(u1[i] * v1[j] + u2[i] * v2[j])).collect())
            .collect();
        let m = Matrix::from_rows(rows).unwrap();
        assert_eq!(m.rank(), 2);
        let v = vars();
        let pm = PolyMatrix::from_numeric(&v, &m);
        assert!(pm.minors(3).unwrap().iter().all(P::is_zero));
        assert!(pm.minors(2).unwrap().iter().any(|p| !p.is_zero()));
        assert_eq!(pm.rank(), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = num(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(m.mul_vec(&v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn elimination_and_expansion_agree() {
        let m = num(&[&[2, -1, 0, 3], &[1, 5, -2, 0], &[0, 3, 1, 1], &[4, 0, 2, -1]]);
        let v = vars();
        let sym = PolyMatrix::from_numeric(&v, &m).determinant().unwrap();
        assert_eq!(sym.constant_value().unwrap(), m.determinant().unwrap());
    }
}
