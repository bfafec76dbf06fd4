//! Any quadratic algebra comes from an equipped space: take the projector
//! onto its relation span.

use qspace::prelude::*;

fn main() -> qspace::Result<()> {
    // x·x = y·y and x·y = 0 on two generators
    let rel = Subspace::span(
        4,
        [
            vec![Rational::one(), Rational::zero(), Rational::zero(), -Rational::one()],
            vec![Rational::zero(), Rational::one(), Rational::zero(), Rational::zero()],
        ],
    )?;
    let p = structure_projector(&rel);
    println!("P = {p:?}");
    assert_eq!(&p * &p, p);

    let space = EquippedSpace::with_structure(2, 2, p)?;
    println!("hilbert: {:?}", apply_u(&space).hilbert(5));
    Ok(())
}
