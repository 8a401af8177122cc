//! Exact computational algebra for the Iwahori-Hecke algebra of the symmetric
//! group over `Z[q, q^-1]`.
//!
//! The crate provides, bottom up: sparse Laurent-polynomial and
//! rational-function arithmetic ([`laurent`]); compositions, the listing
//! order, and merge patterns ([`compositions`]); quasi-symmetric polynomial
//! bases with their shared structure constants ([`qsym`]); the
//! composition-indexed transition matrices and their block recursions
//! ([`comp_matrices`]); the Hecke algebra itself with Jucys-Murphy elements
//! and the bilinear pairing ([`hecke`]); and centre computations: the
//! Geck-Rouquier basis, class/monomial transition matrices, and the
//! verifications built on them ([`centre`]). The [`verify`] module packages
//! the cross-checks behind report types the command-line tool prints.

pub mod compositions;
pub mod laurent;

pub mod qsym;

pub mod comp_matrices;
pub mod linalg;

pub mod hecke;

pub mod centre;

pub mod report;
pub mod verify;

use thiserror::Error as ThisError;

/// Errors surfaced by fallible operations across the crate.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular over the rational-function field")]
    SingularMatrix,
    #[error("matrix inverse has entries outside the Laurent ring")]
    NonLaurentInverse,
    #[error("bound exceeded: {what} = {got} is limited to {limit}")]
    BoundExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("no increasing element of shape {shape} exists for rank {n}")]
    ShapeNotRealizable { shape: String, n: usize },
    #[error("linear system has no solution in the expected span")]
    InconsistentSystem,
}
