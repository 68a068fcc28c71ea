//! Exact construction of compact Lie algebras as structure-constant tables.

pub mod classical;
pub mod clifford;
pub mod exceptional;
pub mod extension;
pub mod format;
pub mod killing;
pub mod matrices;
pub mod table;
pub mod wedge;

pub use clifford::{clifford, Chirality, CliffordRep, SignedPerm};
pub use extension::{extend, Extension, ExtensionSpec, RepMatrix, Summand};
pub use table::{
    check_well_formed, verify_jacobi, verify_jacobi_with, IntTable, JacobiReport, StructureTable,
    Violation,
};

use crate::linalg::LinalgError;

#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed table: {0}")]
    Format(String),
    #[error("input is not the canonical table: {0}")]
    NonCanonical(String),
    #[error("normalization unsolvable: {0}")]
    NormalizationUnsolvable(String),
    #[error("Jacobi identity fails ({} violations)", .0.violations)]
    JacobiFailure(Box<JacobiReport>),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
