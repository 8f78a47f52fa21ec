//! Finite quandles and biquandles: axiom checking, biquandle structures,
//! homomorphism sets and Hom-objects, congruences, and knot coloring
//! invariants computed from signed Gauss codes.
//!
//! Elements are stored 0-based; every text format and every witness shown to
//! a user is 1-based.

pub mod biquandle;
pub mod catalog;
pub mod congruence;
pub mod constructors;
pub mod error;
pub mod group;
pub mod homs;
pub mod knots;
pub mod perm;
pub mod quandle;
pub mod report;
pub mod reproduce;
mod search;
pub mod structures;
pub mod table;

pub use biquandle::{biquandle_isomorphism, validate_biquandle, FiniteBiquandle};
pub use congruence::{
    congruence_closure, instantiate_identities, quotient_biquandle, two_reductive_quotient, Congruence,
    Identity, Term,
};
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use perm::{conjugacy_class_count, Permutation};
pub use quandle::{automorphism_group, quandle_isomorphism, validate_quandle, FiniteQuandle};
pub use report::PropertyReport;
pub use structures::{
    classify_structures, count_constant_structures, enumerate_structures, validate_structure,
    BiquandleStructure, StructureClass,
};
pub use table::OperationTable;
