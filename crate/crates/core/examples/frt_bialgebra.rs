//! The FRT bialgebra of the Drinfeld-Jimbo R-matrix for GL_q(2): relations,
//! Hilbert series, and the bialgebra checks on the t_i^j generators.

use qspace::frt::{check_coassociativity, check_counit_laws};
use qspace::prelude::*;

fn main() -> qspace::Result<()> {
    let r = drinfeld_jimbo(Rational::from(2));
    let relations = frt_relations(&r, &r)?;
    println!("relation span: dim {}", relations.dim());

    let end = hom_space(&r, &r);
    println!("hilbert of U(hom[V,V]): {:?}", apply_u(&end).hilbert(3));

    let delta = Comultiplication::new(2, 2, 2);
    let t01 = GeneratorSymbol::new(0, 1);
    println!("Δ({t01}) = {}", delta.apply_generator(t01));

    for report in [
        verify_hom_equals_frt(&r, &r)?,
        check_comult_well_defined(&r, &r, &r)?,
        counit_check(&r)?,
        check_coassociativity(2, 2, 2, 2, 2),
        check_counit_laws(2, 2, 2),
    ] {
        println!("{}", report.summary());
    }
    Ok(())
}
