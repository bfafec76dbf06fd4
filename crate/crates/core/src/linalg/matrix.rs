//! Dense matrices over the rationals.
//!
//! Linear maps act on column coordinate vectors: a `rows × cols` matrix maps
//! a vector of length `cols` to one of length `rows`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from a list of rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {r} has length {}, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            entries,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols);
        Matrix {
            rows,
            cols,
            entries: values.iter().map(|&v| Rational::from(v)).collect(),
        }
    }

    /// A single column built from the given entries.
    pub fn column_vector(entries: Vec<Rational>) -> Self {
        Matrix {
            rows: entries.len(),
            cols: 1,
            entries,
        }
    }

    /// A single row built from the given entries.
    pub fn row_vector(entries: Vec<Rational>) -> Self {
        Matrix {
            rows: 1,
            cols: entries.len(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn scale(&self, factor: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    /// Kronecker product with left factor major:
    /// `(a⊗b)[(i,k),(j,l)] = a[i,j]·b[k,l]`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `n`-fold Kronecker power; the zeroth power is the 1×1 identity.
    pub fn kronecker_power(&self, n: usize) -> Matrix {
        (0..n).fold(Matrix::identity(1), |acc, _| acc.kronecker(self))
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![Rational::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, acc) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *acc += a * x;
                }
            }
        }
        out
    }

    /// `P[i][j]` reindexed as `out[perm[i]][perm[j]]`, i.e. `P·M·P⁻¹` for the
    /// permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permute_conjugate(&self, perm: &[usize]) -> Matrix {
        assert!(self.is_square() && perm.len() == self.rows);
        let n = self.rows;
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = self.get(i, j);
                if !x.is_zero() {
                    out.set(perm[i], perm[j], x.clone());
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        super::column_space(self).dim()
    }

    fn check_same_shape(&self, other: &Matrix) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "shape mismatch {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.check_same_shape(rhs);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.check_same_shape(rhs);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

/// Panics on incompatible shapes; use [`Matrix::checked_mul`] for a fallible
/// product.
impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_kronecker_identity() {
        let i2 = Matrix::identity(2);
        let i3 = Matrix::identity(3);
        assert_eq!(i2.kronecker(&i3), Matrix::identity(6));
    }

    #[test]
    fn kronecker_with_unit_factor() {
        let n = Matrix::from_i64(2, 2, &[0, 1, 0, 0]);
        assert_eq!(n.kronecker(&Matrix::identity(1)), n);
        assert_eq!(Matrix::identity(1).kronecker(&n), n);
    }

    #[test]
    fn kronecker_is_left_major() {
        let a = Matrix::from_i64(2, 1, &[1, 2]);
        let b = Matrix::from_i64(1, 2, &[3, 5]);
        // (i,k),(j,l): rows indexed by i (from a), columns by l (from b)
        assert_eq!(a.kronecker(&b), Matrix::from_i64(2, 2, &[3, 5, 6, 10]));
    }

    #[test]
    fn symmetric_transpose_is_itself() {
        let s = Matrix::from_i64(2, 2, &[1, 7, 7, -2]);
        assert_eq!(s.transpose(), s);
    }

    #[test]
    fn shape_errors() {
        assert!(Matrix::new(2, 2, vec![Rational::zero(); 3]).is_err());
        let a = Matrix::zeros(2, 3);
        assert!(a.checked_mul(&a).is_err());
    }

    #[test]
    fn permute_conjugate_matches_matrix_product() {
        let m = Matrix::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let perm = [2usize, 0, 1];
        let mut p = Matrix::zeros(3, 3);
        for (j, &i) in perm.iter().enumerate() {
            p.set(i, j, Rational::one());
        }
        let expected = &(&p * &m) * &p.transpose();
        assert_eq!(m.permute_conjugate(&perm), expected);
    }
}
