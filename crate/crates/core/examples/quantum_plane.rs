//! The quantum plane x·y = q·y·x as an equipped space: Hilbert series,
//! normal words and reduction to normal form.

use qspace::prelude::*;

fn main() -> qspace::Result<()> {
    let q = Rational::from(2);
    let plane = quantum_plane(q);
    println!("R_2 = {:?}", plane.structure(2));

    let algebra = apply_u(&plane);
    println!("hilbert: {:?}", algebra.hilbert(5));
    println!("normal words in degree 2: {:?}", algebra.normal_words(2));

    // v0·v1 is not a normal word; it rewrites to a multiple of v1·v0
    let x = FreeElement::word(2, &[0, 1]);
    println!("v0v1 -> {:?} on the normal basis", algebra.normal_form(&x)?);
    Ok(())
}
