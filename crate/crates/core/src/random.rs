//! Seeded generation of small random inputs for randomized checks.
//!
//! Entries are rationals `p/q` with `1 ≤ q ≤ 3` and `|p/q| ≤ 3`.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Matrix, Rational};
use crate::space::EquippedSpace;

/// Deterministic generator for a given seed, stable across platforms.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let q = rng.gen_range(1..=3i64);
    let p = rng.gen_range(-3 * q..=3 * q);
    Rational::new(p, q)
}

/// Each entry is nonzero with probability `density`.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, density: f64) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(density) {
                m.set(r, c, random_rational(rng));
            }
        }
    }
    m
}

/// A structure map on `V^{⊗n}` whose nonzero columns are a random subset, so
/// low-rank images (and hence nontrivial quotient algebras) are common.
pub fn random_structure<R: Rng>(rng: &mut R, dim: usize, degree: usize) -> Matrix {
    let size = dim.pow(degree as u32);
    let live = rng.gen_range(1..=size);
    let mut m = Matrix::zeros(size, size);
    for c in rand::seq::index::sample(rng, size, live) {
        for r in 0..size {
            if rng.gen_bool(0.6) {
                m.set(r, c, random_rational(rng));
            }
        }
    }
    m
}

/// Random equipped space of dimension `dim` with a structure map in each of
/// the given degrees (each ≥ 2).
pub fn random_space<R: Rng>(rng: &mut R, dim: usize, degrees: &[usize]) -> EquippedSpace {
    let structure: BTreeMap<usize, Matrix> = degrees
        .iter()
        .map(|&n| (n, random_structure(rng, dim, n)))
        .collect();
    EquippedSpace::new(dim, structure).expect("degrees at least 2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_output() {
        let a = random_space(&mut rng_from_seed(7), 3, &[2, 3]);
        let b = random_space(&mut rng_from_seed(7), 3, &[2, 3]);
        assert_eq!(a, b);
    }

    #[test]
    fn entries_are_bounded() {
        let mut rng = rng_from_seed(1);
        for _ in 0..200 {
            let x = random_rational(&mut rng);
            assert!(x <= Rational::from(3) && x >= Rational::from(-3));
            assert!(x.denom() <= &3.into());
        }
    }
}
