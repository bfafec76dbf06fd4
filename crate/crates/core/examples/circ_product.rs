//! U(V⊠W) maps onto UV∘UW.

use qspace::prelude::*;

fn main() {
    let v = quantum_plane(Rational::from(2));
    let w = quantum_plane(Rational::from(-1));

    let product = apply_u(&boxtimes(&v, &w));
    let circ = circ_product(&apply_u(&v), &apply_u(&w));
    println!("hilbert U(V⊠W): {:?}", product.hilbert(3));
    println!("hilbert UV∘UW:  {:?}", circ.hilbert(3));
    println!("{}", check_u_epi(&v, &w, 3).summary());
}
