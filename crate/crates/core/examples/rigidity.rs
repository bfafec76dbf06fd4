//! Duals, evaluation and coevaluation: every equipped space is rigid.

use qspace::space::rigidity_reports;
use qspace::prelude::*;

fn main() -> qspace::Result<()> {
    let spaces = [
        ("quantum plane", quantum_plane(Rational::new(1, 3))),
        ("drinfeld-jimbo", drinfeld_jimbo(Rational::from(3))),
        ("cubic", cubic_example()),
    ];
    for (name, v) in &spaces {
        println!("{name}:");
        for report in rigidity_reports(v) {
            println!("  {}", report.summary());
        }
        let ev = ev_map(v)?;
        println!("  ev: {}x{} on V†⊠V", ev.map().rows(), ev.map().cols());
    }
    Ok(())
}
