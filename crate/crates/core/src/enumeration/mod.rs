//! Isomorphism-free generation of small graph classes and the checks run on
//! them: maximality audits for `B_n` and the scaled-gap scan.

mod audit;
pub mod canon;
mod conjecture;
mod generate;

pub use audit::{audit_order, expected_degree_sequence, verify_maximal_structure, MaximalAudit};
pub use canon::{canonical_form, certificate, CanonicalForm, CANON_MAX_ORDER};
pub use conjecture::{conjecture_scan, ConjectureRow};
pub use generate::{
    enumerate_class, enumerate_trees, Argmax, ArgmaxFilter, ClassSpec, EnumerationRun, GENERAL_MAX_ORDER,
    SPARSE_MAX_ORDER,
};
