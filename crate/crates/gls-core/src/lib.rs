//! Affine GLS algebras: valued quivers and their root systems, the bound
//! quiver algebras `H(Γ)`, exact module computations, stable families,
//! folded canonical decomposition and King stability.

pub mod algebra;
pub mod catalog;
pub mod decomposition;
pub mod families;
pub mod quiver;
pub mod rep;
pub mod roots;
pub mod seeds;
pub mod stability;
pub mod suites;
pub mod unfold;

pub use algebra::{Algebra, Path};
pub use catalog::{catalog_affine, AffineEntry, Family};
pub use quiver::{Edge, RankVector, ValuedQuiver};
pub use rep::Representation;

use gls_linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("expected a vector of length {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not affine: {0}")]
    NotAffine(String),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("rank {rank} out of range for family {family}")]
    RankOutOfRange { family: String, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
