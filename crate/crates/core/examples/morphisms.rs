//! Structure-preserving linear maps, and what a failure witness looks like.

use qspace::prelude::*;

fn main() -> qspace::Result<()> {
    let plane = quantum_plane(Rational::from(2));

    let diagonal = Matrix::from_i64(2, 2, &[1, 0, 0, 2]);
    println!("diag(1,2): {}", check_morphism(&diagonal, &plane, &plane)?.summary());

    let shear = Matrix::from_i64(2, 2, &[1, 1, 0, 1]);
    let report = check_morphism(&shear, &plane, &plane)?;
    println!("shear: {}", report.summary());
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));

    match LinearMorphism::new(plane.clone(), plane.clone(), shear) {
        Ok(_) => println!("unexpected: shear accepted"),
        Err(e) => println!("constructor refuses: {e}"),
    }
    Ok(())
}
