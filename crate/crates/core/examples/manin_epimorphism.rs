//! Manin's internal hom sits inside the FRT relations, giving an
//! epimorphism onto the FRT algebra.

use qspace::frt::manin_hom_algebra;
use qspace::prelude::*;

fn main() -> qspace::Result<()> {
    let plane = quantum_plane(Rational::from(2));
    let a = apply_u(&plane);

    let manin = manin_hom_relations(&a, &a)?;
    let frt = frt_relations(&plane, &plane)?;
    println!("manin relations: {}, frt relations: {}", manin.dim(), frt.dim());
    println!("manin ⊆ frt: {}", frt.contains(&manin)?);

    let manin_algebra = manin_hom_algebra(&a, &a)?;
    let frt_algebra = apply_u(&hom_space(&plane, &plane));
    println!("hilbert (manin): {:?}", manin_algebra.hilbert(3));
    println!("hilbert (frt):   {:?}", frt_algebra.hilbert(3));

    println!("{}", check_manin_epi(&plane, &plane)?.summary());
    println!("{}", corep_delta_check(&plane, &plane)?.summary());
    Ok(())
}
