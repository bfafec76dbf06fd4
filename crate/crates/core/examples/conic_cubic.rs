//! A space whose structure lives in degree 3 only: the cubic FRT relations
//! agree with the hom construction.

use qspace::frt::verify_hom_equals_frt_conic;
use qspace::prelude::*;

fn main() -> qspace::Result<()> {
    let cubic = cubic_example();
    println!("support: {:?}", cubic.support());
    println!("hilbert: {:?}", apply_u(&cubic).hilbert(4));

    let relations = frt_relations_conic(&cubic, &cubic, 3)?;
    println!("cubic frt relations: dim {}", relations.dim());
    println!("{}", verify_hom_equals_frt_conic(&cubic, &cubic, 3)?.summary());
    Ok(())
}
