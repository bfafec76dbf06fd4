//! Equipped quantum spaces and quantum matrix algebras, built and checked by
//! exact linear algebra over ℚ.
//!
//! An equipped space is a finite-dimensional `V` together with structure maps
//! `Rₙ: V^{⊗n} → V^{⊗n}`; its coordinate algebra is `T(V)/I[Im Rₙ]`. The crate
//! provides
//!
//! * [`linalg`]: rationals, dense matrices and canonical subspaces;
//! * [`tensor`]: multi-index flattening and the canonical permutations;
//! * [`space`]: the product `⊠`, the dual `†`, morphisms, evaluation and
//!   coevaluation, and internal hom objects `hom[W,V] = W†⊠V`;
//! * [`algebra`]: graded quotient algebras, Hilbert series, normal forms, the
//!   `∘` product and the functor `U`;
//! * [`frt`]: FRT and rectangular quantum matrix algebras, their bialgebra
//!   maps, and comparison with Manin's internal hom;
//! * [`cli`]: the file formats and commands behind the `qspace` binary.
//!
//! ```
//! use qspace::prelude::*;
//!
//! let plane = quantum_plane(Rational::from(2));
//! assert_eq!(apply_u(&plane).hilbert(4), vec![1, 2, 3, 4, 5]);
//!
//! let end = hom_space(&plane, &plane);
//! assert!(verify_hom_equals_frt(&plane, &plane).unwrap().pass);
//! assert_eq!(end.dim(), 4);
//! ```

pub mod algebra;
pub mod cli;
pub mod error;
pub mod frt;
pub mod linalg;
pub mod presets;
pub mod random;
pub mod report;
pub mod space;
pub mod tensor;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::algebra::{
        apply_u, check_algebra_morphism, check_u_epi, circ_product, structure_projector,
        FreeElement, PresentedAlgebra,
    };
    pub use crate::frt::{
        check_comult_well_defined, check_manin_epi, corep_delta_check, counit_check,
        frt_relations, frt_relations_conic, manin_hom_relations, verify_hom_equals_frt,
        Comultiplication, GeneratorSymbol,
    };
    pub use crate::linalg::{column_space, kernel, rref, Matrix, Rational, Subspace};
    pub use crate::presets::{cubic_example, drinfeld_jimbo, quantum_plane};
    pub use crate::report::{VerificationReport, Witness};
    pub use crate::space::{
        boxtimes, check_morphism, coev_map, dagger, ev_map, hom_space, unit_k, EquippedSpace,
        LinearMorphism,
    };
}
