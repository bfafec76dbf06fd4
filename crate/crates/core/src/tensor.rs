//! Index bookkeeping for tensor powers.
//!
//! Convention used everywhere in the crate: a basis vector
//! `x_{r₁} ⊗ … ⊗ x_{rₙ}` of `X^{⊗n}` (with `dim X = d`) sits at the flat index
//! `((r₁·d + r₂)·d + …)·d + rₙ`, leftmost factor major. For a product space
//! `X ⊗ Y` the pair `(x, y)` sits at `x·dim Y + y`. Every permutation below is
//! derived from this single rule.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Subspace};

/// A multi-index `(r₁,…,rₙ)` over the alphabet `0..radix`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    radix: usize,
    digits: Vec<usize>,
}

impl MultiIndex {
    pub fn new(radix: usize, digits: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|&&r| r >= radix) {
            return Err(Error::OutOfRange(format!("digit {bad} with radix {radix}")));
        }
        Ok(MultiIndex { radix, digits })
    }

    pub fn decode(radix: usize, len: usize, mut flat: usize) -> Self {
        let mut digits = vec![0; len];
        for slot in digits.iter_mut().rev() {
            *slot = flat % radix;
            flat /= radix;
        }
        debug_assert_eq!(flat, 0, "flat index out of range");
        MultiIndex { radix, digits }
    }

    pub fn encode(&self) -> usize {
        encode_digits(self.radix, &self.digits)
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn radix(&self) -> usize {
        self.radix
    }
}

pub fn encode_digits(radix: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, &r| acc * radix + r)
}

pub fn decode_digits(radix: usize, len: usize, flat: usize) -> Vec<usize> {
    MultiIndex::decode(radix, len, flat).digits
}

/// A permutation of basis vectors: basis vector `j` goes to `images[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidStructure("not a permutation".into()));
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (j, &i) in self.images.iter().enumerate() {
            inv[i] = j;
        }
        Permutation { images: inv }
    }

    /// Action on `X^{⊗n}` induced by acting factor-wise.
    pub fn tensor_power(&self, n: usize) -> Permutation {
        let d = self.images.len();
        let size = d.pow(n as u32);
        let images = (0..size)
            .map(|flat| {
                let digits: Vec<usize> = decode_digits(d, n, flat)
                    .into_iter()
                    .map(|r| self.images[r])
                    .collect();
                encode_digits(d, &digits)
            })
            .collect();
        Permutation { images }
    }

    /// Permutation matrix `P` with `P·e_j = e_{images[j]}`.
    pub fn to_matrix(&self) -> Matrix {
        let n = self.images.len();
        let mut m = Matrix::zeros(n, n);
        for (j, &i) in self.images.iter().enumerate() {
            m.set(i, j, Rational::one());
        }
        m
    }

    /// Moves coordinates of a vector: `out[images[j]] = v[j]`.
    pub fn apply_vector(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.images.len());
        let mut out = vec![Rational::zero(); v.len()];
        for (j, x) in v.iter().enumerate() {
            out[self.images[j]] = x.clone();
        }
        out
    }

    /// `P·M·P⁻¹`.
    pub fn conjugate(&self, m: &Matrix) -> Matrix {
        m.permute_conjugate(&self.images)
    }
}

/// The canonical isomorphism `(V⊗W)^{⊗n} → V^{⊗n} ⊗ W^{⊗n}`,
/// `((a₁,b₁),…,(aₙ,bₙ)) ↦ (a₁,…,aₙ,b₁,…,bₙ)`.
pub fn phi_permutation(dv: usize, dw: usize, n: usize) -> Permutation {
    let pair = dv * dw;
    let size = pair.pow(n as u32);
    let wn = dw.pow(n as u32);
    let images = (0..size)
        .map(|flat| {
            let digits = decode_digits(pair, n, flat);
            let a = digits.iter().fold(0, |acc, g| acc * dv + g / dw);
            let b = digits.iter().fold(0, |acc, g| acc * dw + g % dw);
            a * wn + b
        })
        .collect();
    Permutation { images }
}

pub fn phi_iso(dv: usize, dw: usize, n: usize) -> Matrix {
    phi_permutation(dv, dw, n).to_matrix()
}

/// The symmetry `V⊗W → W⊗V`, `(a,b) ↦ (b,a)`.
pub fn flip_permutation(dv: usize, dw: usize) -> Permutation {
    let images = (0..dv * dw)
        .map(|flat| {
            let (a, b) = (flat / dw, flat % dw);
            b * dv + a
        })
        .collect();
    Permutation { images }
}

pub fn flip(dv: usize, dw: usize) -> Matrix {
    flip_permutation(dv, dw).to_matrix()
}

/// Middle swap `A⊗A⊗B⊗B → A⊗B⊗A⊗B`, `(a,a′,b,b′) ↦ (a,b,a′,b′)`.
pub fn tau23_permutation(da: usize, db: usize) -> Permutation {
    let size = da * da * db * db;
    let images = (0..size)
        .map(|flat| {
            let b2 = flat % db;
            let b = (flat / db) % db;
            let a2 = (flat / (db * db)) % da;
            let a = flat / (db * db * da);
            ((a * db + b) * da + a2) * db + b2
        })
        .collect();
    Permutation { images }
}

pub fn tau23(da: usize, db: usize) -> Matrix {
    tau23_permutation(da, db).to_matrix()
}

/// `V^{⊗pos} ⊗ rel ⊗ V^{⊗(n−k−pos)}` for `rel ⊆ V^{⊗k}`, `dim V = d`.
pub fn embed_at(rel: &Subspace, n: usize, pos: usize, d: usize) -> Result<Subspace> {
    let k = degree_of(rel.ambient_dim(), d)?;
    if k > n || pos > n - k {
        return Err(Error::OutOfRange(format!(
            "position {pos} for a degree-{k} subspace inside degree {n}"
        )));
    }
    let left = Subspace::full(d.pow(pos as u32));
    let right = Subspace::full(d.pow((n - k - pos) as u32));
    Ok(left.tensor(rel).tensor(&right))
}

/// Recovers `k` from `d^k`.
pub fn degree_of(ambient: usize, d: usize) -> Result<usize> {
    if d == 1 {
        return if ambient == 1 {
            Ok(0)
        } else {
            Err(Error::Shape(format!("{ambient} is not a power of 1")))
        };
    }
    let mut k = 0;
    let mut p = 1;
    while p < ambient {
        p *= d;
        k += 1;
    }
    if p != ambient {
        return Err(Error::Shape(format!("{ambient} is not a power of {d}")));
    }
    Ok(k)
}

#[cfg(test)]
#[allow(clippy::identity_op, clippy::erasing_op)]
mod tests {
    use super::*;

    fn is_permutation_matrix(m: &Matrix) -> bool {
        let n = m.rows();
        let ones = |it: &mut dyn Iterator<Item = &Rational>| {
            let v: Vec<_> = it.filter(|x| !x.is_zero()).collect();
            v.len() == 1 && v[0].is_one()
        };
        (0..n).all(|r| ones(&mut m.row(r).iter()))
            && (0..n).all(|c| ones(&mut (0..n).map(|r| m.get(r, c))))
    }

    #[test]
    fn multi_index_round_trip() {
        let m = MultiIndex::new(3, vec![2, 0, 1]).unwrap();
        assert_eq!(m.encode(), 19);
        assert_eq!(MultiIndex::decode(3, 3, 19), m);
        assert!(MultiIndex::new(2, vec![2]).is_err());
    }

    #[test]
    fn phi_low_degrees_are_identity() {
        assert_eq!(phi_iso(2, 3, 0), Matrix::identity(1));
        assert_eq!(phi_iso(2, 3, 1), Matrix::identity(6));
    }

    #[test]
    fn phi_moves_pairs_apart() {
        // ((0,1),(1,0)) ↦ (0,1,1,0)
        let p = phi_permutation(2, 2, 2);
        let src = encode_digits(4, &[0 * 2 + 1, 1 * 2 + 0]);
        assert_eq!(p.apply(src), encode_digits(2, &[0, 1, 1, 0]));
        let m = phi_iso(2, 2, 2);
        assert_eq!(&m * &m.transpose(), Matrix::identity(16));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip(1, 1), Matrix::identity(1));
        let f = flip(2, 2);
        assert!(f.get(2, 1).is_one());
        assert_eq!(&flip(2, 3) * &flip(3, 2), Matrix::identity(6));
    }

    #[test]
    fn tau23_examples() {
        assert_eq!(tau23(1, 1), Matrix::identity(1));
        let t = tau23_permutation(2, 2);
        let idx = |d: &[usize]| encode_digits(2, d);
        assert_eq!(t.apply(idx(&[0, 1, 1, 0])), idx(&[0, 1, 1, 0]));
        assert_eq!(t.apply(idx(&[0, 0, 1, 1])), idx(&[0, 1, 0, 1]));
        let m = tau23(3, 3);
        assert_eq!(&m * &m, Matrix::identity(81));
        // inverse of phi at degree two
        assert_eq!(tau23(2, 3), phi_iso(2, 3, 2).transpose());
    }

    #[test]
    fn all_constructed_permutations_are_permutation_matrices() {
        for (dv, dw) in [(1, 2), (2, 2), (2, 3), (3, 1)] {
            assert!(is_permutation_matrix(&flip(dv, dw)));
            assert!(is_permutation_matrix(&tau23(dv, dw)));
            for n in 0..=3 {
                assert!(is_permutation_matrix(&phi_iso(dv, dw, n)));
            }
        }
    }

    #[test]
    fn embed_examples() {
        let full = Subspace::full(4);
        assert_eq!(embed_at(&full, 3, 1, 2).unwrap(), Subspace::full(8));
        assert!(embed_at(&Subspace::zero(4), 3, 0, 2).unwrap().is_zero());

        let r: Vec<Rational> = [0, 1, -2, 0].into_iter().map(Rational::from).collect();
        let rel = Subspace::span(4, [r.clone()]).unwrap();
        let e = embed_at(&rel, 3, 0, 2).unwrap();
        // r⊗v0 and r⊗v1, written out by hand
        let z = Rational::zero;
        let r_v0 = vec![z(), z(), Rational::from(1), z(), Rational::from(-2), z(), z(), z()];
        let r_v1 = vec![z(), z(), z(), Rational::from(1), z(), Rational::from(-2), z(), z()];
        assert_eq!(e, Subspace::span(8, [r_v0, r_v1]).unwrap());
        assert!(embed_at(&rel, 3, 2, 2).is_err());
        assert!(embed_at(&rel, 1, 0, 2).is_err());
    }

    #[test]
    fn tensor_power_of_flip_matches_kronecker_power() {
        let f = flip_permutation(2, 2);
        assert_eq!(f.tensor_power(2).to_matrix(), flip(2, 2).kronecker_power(2));
    }
}
