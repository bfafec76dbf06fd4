//! Canonical subspaces of `ℚⁿ`.
//!
//! A subspace is stored by the nonzero rows of the reduced row-echelon form of
//! any spanning set. RREF is unique, so two subspaces are equal exactly when
//! their stored rows are equal.

use std::collections::BTreeMap;

use super::{Matrix, Rational};
use crate::error::{Error, Result};

/// Sparse row `(column, value)` sorted by column. In a stored basis the first
/// entry is the pivot and holds `1`.
type SparseRow = Vec<(usize, Rational)>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<SparseRow>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: (0..ambient_dim).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    /// Span of the given vectors, each of length `ambient_dim`.
    pub fn span<I, V>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Rational]>,
    {
        let mut builder = EchelonBuilder::new(ambient_dim);
        for v in vectors {
            builder.insert(v.as_ref())?;
        }
        Ok(builder.finish())
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let mut builder = EchelonBuilder::new(m.cols());
        for r in 0..m.rows() {
            builder
                .insert(m.row(r))
                .expect("matrix rows have the ambient length");
        }
        builder.finish()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    /// Pivot columns of the canonical basis, increasing.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Coordinates that are not pivots; these index the canonical complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for r in &self.rows {
            is_pivot[r[0].0] = true;
        }
        (0..self.ambient_dim).filter(|&i| !is_pivot[i]).collect()
    }

    /// Canonical basis as a dense RREF matrix (rows are basis vectors).
    pub fn basis(&self) -> Matrix {
        Matrix::from_rows(self.ambient_dim, self.basis_vectors()).expect("rows have ambient length")
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| densify(r, self.ambient_dim)).collect()
    }

    /// Residual of `v` after elimination against the basis. Zero exactly when
    /// `v` lies in the subspace; always zero on pivot coordinates.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(v.len())?;
        let mut out = v.to_vec();
        reduce_dense(&self.rows, &mut out);
        Ok(out)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Rational::is_zero))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for row in &other.rows {
            let v = densify(row, self.ambient_dim);
            if !self.contains_vector(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First basis vector of `other` not contained in `self`, if any.
    pub fn first_outside(&self, other: &Subspace) -> Result<Option<Vec<Rational>>> {
        self.check_ambient(other)?;
        for v in other.basis_vectors() {
            if !self.contains_vector(&v)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut builder = EchelonBuilder::from_subspace(self);
        for row in &other.rows {
            builder.insert(&densify(row, self.ambient_dim))?;
        }
        Ok(builder.finish())
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// `self ⊗ other` inside the tensor product of the ambient spaces, with the
    /// left factor's index major.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        // The Kronecker products of two RREF bases, ordered lexicographically,
        // are again in RREF: pivots (p,q) increase and every other row vanishes
        // at (p,q).
        let n = other.ambient_dim;
        let mut rows = Vec::with_capacity(self.rows.len() * other.rows.len());
        for a in &self.rows {
            for b in &other.rows {
                let mut row = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (j, y) in b {
                        row.push((i * n + j, x * y));
                    }
                }
                rows.push(row);
            }
        }
        Subspace {
            ambient_dim: self.ambient_dim * n,
            rows,
        }
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        if map.cols() != self.ambient_dim {
            return Err(Error::Shape(format!(
                "map with {} columns applied to subspace of R^{}",
                map.cols(),
                self.ambient_dim
            )));
        }
        let mut builder = EchelonBuilder::new(map.rows());
        for v in self.basis_vectors() {
            builder.insert(&map.apply(&v))?;
        }
        Ok(builder.finish())
    }

    /// Image under the coordinate permutation sending index `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Subspace {
        assert_eq!(perm.len(), self.ambient_dim);
        let mut builder = EchelonBuilder::new(self.ambient_dim);
        for row in &self.rows {
            let mut v = vec![Rational::zero(); self.ambient_dim];
            for (c, x) in row {
                v[perm[*c]] = x.clone();
            }
            builder.insert(&v).expect("same ambient");
        }
        builder.finish()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: len,
            });
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        self.check_len(other.ambient_dim)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}) {:?}",
            self.dim(),
            self.ambient_dim,
            self.basis_vectors()
        )
    }
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_contains(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.contains(b)
}

pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.equals(b)
}

/// Incremental reduced row-echelon form.
///
/// Rows are kept fully reduced at every step, so a new vector is reduced by
/// subtracting each basis row once, scaled by the vector's entry at that row's
/// pivot.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    ambient_dim: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl EchelonBuilder {
    pub fn new(ambient_dim: usize) -> Self {
        EchelonBuilder {
            ambient_dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        EchelonBuilder {
            ambient_dim: s.ambient_dim,
            rows: s.rows.iter().map(|r| (r[0].0, r.clone())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector to the span; returns whether it was independent.
    pub fn insert(&mut self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: v.len(),
            });
        }
        if self.rows.len() == self.ambient_dim {
            return Ok(false);
        }
        let mut w = v.to_vec();
        for row in self.rows.values() {
            let c = &w[row[0].0];
            if !c.is_zero() {
                let c = c.clone();
                for (col, x) in row {
                    w[*col] -= &c * x;
                }
            }
        }
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = w[pivot].recip();
        let new_row: SparseRow = w
            .into_iter()
            .enumerate()
            .skip(pivot)
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x * &inv))
            .collect();
        for row in self.rows.values_mut() {
            if let Ok(k) = row.binary_search_by_key(&pivot, |e| e.0) {
                let c = row[k].1.clone();
                *row = axpy(row, &c, &new_row);
            }
        }
        self.rows.insert(pivot, new_row);
        Ok(true)
    }

    pub fn finish(self) -> Subspace {
        Subspace {
            ambient_dim: self.ambient_dim,
            rows: self.rows.into_values().collect(),
        }
    }
}

/// `a − c·b` on sparse rows.
fn axpy(a: &SparseRow, c: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let x = &a[i].1 - &(c * &b[j].1);
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn densify(row: &SparseRow, n: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    for (c, x) in row {
        v[*c] = x.clone();
    }
    v
}

fn reduce_dense(rows: &[SparseRow], w: &mut [Rational]) {
    for row in rows {
        let c = &w[row[0].0];
        if !c.is_zero() {
            let c = c.clone();
            for (col, x) in row {
                w[*col] -= &c * x;
            }
        }
    }
}

/// Reduced row-echelon form of `m`, zero rows dropped.
pub fn rref(m: &Matrix) -> Matrix {
    Subspace::row_space(m).basis()
}

/// `{x : m·x = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let rs = Subspace::row_space(m);
    let n = m.cols();
    let pivots = rs.pivots();
    let vectors = rs.non_pivots().into_iter().map(|free| {
        let mut x = vec![Rational::zero(); n];
        x[free] = Rational::one();
        for (row, &p) in rs.rows.iter().zip(&pivots) {
            if let Ok(k) = row.binary_search_by_key(&free, |e| e.0) {
                x[p] = -&row[k].1;
            }
        }
        x
    });
    Subspace::span(n, vectors).expect("kernel vectors have ambient length")
}

/// Span of the columns of `m` (the image of the map `m` represents).
pub fn column_space(m: &Matrix) -> Subspace {
    let mut builder = EchelonBuilder::new(m.rows());
    for c in 0..m.cols() {
        builder
            .insert(&m.column(c))
            .expect("columns have ambient length");
        if builder.dim() == m.rows() {
            break;
        }
    }
    builder.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| Rational::from(v)).collect()
    }

    #[test]
    fn rref_examples() {
        assert_eq!(rref(&Matrix::identity(2)), Matrix::identity(2));
        assert_eq!(
            rref(&Matrix::from_i64(1, 2, &[2, 4])),
            Matrix::from_i64(1, 2, &[1, 2])
        );
        assert_eq!(
            rref(&Matrix::from_i64(2, 2, &[1, 1, 1, 1])),
            Matrix::from_i64(1, 2, &[1, 1])
        );
    }

    #[test]
    fn rref_clears_above_pivots() {
        let m = Matrix::from_i64(3, 3, &[0, 2, 4, 1, 1, 1, 1, 3, 5]);
        assert_eq!(rref(&m), Matrix::from_i64(2, 3, &[1, 0, -1, 0, 1, 2]));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(3)).is_zero());
        assert_eq!(kernel(&Matrix::zeros(2, 3)), Subspace::full(3));
        // x + 2y = 0
        let k = kernel(&Matrix::from_i64(1, 2, &[1, 2]));
        // span{(-2,1)} in canonical form
        assert_eq!(
            k.basis(),
            Matrix::row_vector(vec![Rational::one(), Rational::new(-1, 2)])
        );
        assert!(k.contains_vector(&q(&[-2, 1])).unwrap());
    }

    #[test]
    fn column_space_examples() {
        assert!(column_space(&Matrix::identity(3)).is_full());
        assert!(column_space(&Matrix::zeros(4, 4)).is_zero());
        let mut r = Matrix::zeros(4, 4);
        for (i, v) in [0, 1, -2, 0].into_iter().enumerate() {
            r.set(i, 1, Rational::from(v));
        }
        let cs = column_space(&r);
        assert_eq!(cs, Subspace::span(4, [q(&[0, 1, -2, 0])]).unwrap());
        assert_eq!(cs.dim(), 1);
    }

    #[test]
    fn sum_contains_equal() {
        let x = Subspace::span(2, [q(&[1, 0])]).unwrap();
        let y = Subspace::span(2, [q(&[0, 1])]).unwrap();
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(2));
        assert_eq!(x.sum(&x).unwrap(), x);
        assert!(Subspace::full(2).contains(&x).unwrap());
        assert!(!x.contains(&y).unwrap());
        assert!(x.equals(&x).unwrap());
        assert!(x.sum(&Subspace::zero(3)).is_err());
        assert!(subspace_contains(&x, &Subspace::full(3)).is_err());
        assert!(subspace_equal(&x, &Subspace::zero(5)).is_err());
    }

    #[test]
    fn tensor_of_subspaces_is_canonical() {
        let a = Subspace::span(3, [q(&[1, 2, 0]), q(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(2, [q(&[1, -1])]).unwrap();
        let t = a.tensor(&b);
        let brute = Subspace::span(
            6,
            a.basis_vectors().iter().flat_map(|u| {
                b.basis_vectors()
                    .into_iter()
                    .map(|v| u.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            }),
        )
        .unwrap();
        assert_eq!(t, brute);
    }

    #[test]
    fn reduce_leaves_only_non_pivots() {
        let s = Subspace::span(4, [q(&[0, 1, -2, 0])]).unwrap();
        let r = s.reduce(&q(&[0, 1, 0, 0])).unwrap();
        assert_eq!(r, q(&[0, 0, 2, 0]));
        assert_eq!(s.non_pivots(), vec![0, 2, 3]);
    }
}
