//! Manin's internal hom of quadratic algebras and its comparison with the
//! rectangular FRT algebra.

use crate::algebra::{apply_u, PresentedAlgebra};
use crate::error::Result;
use crate::linalg::{kernel, Subspace};
use crate::report::{VerificationReport, Witness};
use crate::space::EquippedSpace;
use crate::tensor::tau23_permutation;

use super::frt_relations;

/// Relations of `hom(B, A)` for quadratic `A` (relations `R_A ⊆ A₁^{⊗2}`) and
/// `B` (relations `R_B ⊆ B₁^{⊗2}`), generated by `t_i^j = b^j ⊗ a_i`:
/// the middle swap of `R_B^⊥ ⊗ R_A`, where `R_B^⊥ ⊆ (B₁*)^{⊗2}` pairs to zero
/// with `R_B`.
pub fn manin_hom_relations(a: &PresentedAlgebra, b: &PresentedAlgebra) -> Result<Subspace> {
    let r_a = a.quadratic_relations()?;
    let r_b = b.quadratic_relations()?;
    let annihilator = kernel(&r_b.basis());
    let split = annihilator.tensor(&r_a);
    let tau = tau23_permutation(b.gen_dim(), a.gen_dim());
    Ok(split.permute(tau.images()))
}

/// The quadratic algebra presented by [`manin_hom_relations`].
pub fn manin_hom_algebra(a: &PresentedAlgebra, b: &PresentedAlgebra) -> Result<PresentedAlgebra> {
    let rel = manin_hom_relations(a, b)?;
    PresentedAlgebra::new(a.gen_dim() * b.gen_dim(), [(2, rel)].into())
}

/// The epimorphism `hom(UW, UV) ↠ U hom[W,V]` is the identity on generators,
/// so it exists exactly when the Manin relations lie in the FRT relations.
pub fn check_manin_epi(v: &EquippedSpace, w: &EquippedSpace) -> Result<VerificationReport> {
    let manin = manin_hom_relations(&apply_u(v), &apply_u(w))?;
    let frt = frt_relations(v, w)?;
    let witness = frt.first_outside(&manin)?.map(|vector| Witness::Vector {
        degree: 2,
        column: None,
        vector,
    });
    Ok(VerificationReport::from_witness("manin_epimorphism", witness)
        .with_dimension("manin", manin.dim())
        .with_dimension("frt", frt.dim()))
}
