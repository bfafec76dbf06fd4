//! Standard equipped spaces used in tests, examples and the CLI.

use crate::linalg::{Matrix, Rational};
use crate::space::EquippedSpace;

/// Quantum plane `x y = q y x` on `V = span{v₀, v₁}`: the degree-2 structure
/// has a single nonzero column, at `v₀⊗v₁`, holding `v₀⊗v₁ − q·v₁⊗v₀`.
pub fn quantum_plane(q: Rational) -> EquippedSpace {
    let mut r = Matrix::zeros(4, 4);
    r.set(1, 1, Rational::one());
    r.set(2, 1, -q);
    EquippedSpace::with_structure(2, 2, r).expect("valid structure")
}

/// Drinfeld–Jimbo `R̂` for `GL_q(2)` in the basis order `(00, 01, 10, 11)`.
pub fn drinfeld_jimbo(q: Rational) -> EquippedSpace {
    let mut r = Matrix::zeros(4, 4);
    r.set(0, 0, q.clone());
    r.set(1, 1, &q - &q.recip());
    r.set(1, 2, Rational::one());
    r.set(2, 1, Rational::one());
    r.set(3, 3, q);
    EquippedSpace::with_structure(2, 2, r).expect("valid structure")
}

/// A cubic structure on `d = 2` whose image is `span{v₀v₀v₁ − v₁v₀v₀}`: the
/// only nonzero column sits at `v₀v₀v₁`.
pub fn cubic_example() -> EquippedSpace {
    let mut r = Matrix::zeros(8, 8);
    r.set(1, 1, Rational::one());
    r.set(4, 1, Rational::from(-1));
    EquippedSpace::with_structure(2, 3, r).expect("valid structure")
}
