//! Classical structures in the category of finite relations.
//!
//! A classical structure on a finite set `X` is a special commutative
//! dagger-Frobenius algebra in `Rel`. This crate builds such structures,
//! checks their axioms with concrete witnesses, enumerates them, and
//! decomposes any of them into a disjoint union of abelian groups.
//!
//! ```
//! use frobrel::{build_biproduct, verify_structure, decompose, StructureSpec, AbelianGroupSpec};
//!
//! let spec = StructureSpec::new(vec![
//!     AbelianGroupSpec::cyclic(2).unwrap().into(),
//!     AbelianGroupSpec::cyclic(3).unwrap().into(),
//! ]);
//! let c = build_biproduct(&spec);
//! assert!(verify_structure(&c).is_classical());
//! assert_eq!(decompose(&c).unwrap().spec, spec);
//! ```

pub mod analysis;
pub mod classify;
pub mod error;
pub mod groups;
pub mod rel;
pub mod structures;

pub use analysis::{
    check_duality, classical_elements, comonoid_subobjects, decompose, is_partial_bijection,
    quantum_structure, represent, star, Block, DecompositionResult, QuantumStructure,
};
pub use classify::{
    brute_force_search, comonoid_completions, cross_validate, enumerate_classical_structures,
    enumerate_special_frobenius, partitions, quotient_by_iso, ClassRow, CrossValidation, Partition,
    SearchConfig,
};
pub use error::{Error, Result};
pub use groups::{
    build_biproduct, build_group_structure, enumerate_abelian_groups, normalize_invariant_factors,
    AbelianGroupSpec, CayleyTable, GroupAxiom, GroupSpec, NamedGroup, StructureSpec,
};
pub use rel::{Rel, Vector};
pub use structures::{
    check_fro_pointwise, verify_structure, AxiomReport, FrobeniusCandidate, Verdict, Witness,
};
