use thiserror::Error;

use crate::exactlin::LinError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree overflow: operation needs degree {needed} but truncation is {available}; raise the truncation degree")]
    DegreeOverflow { needed: usize, available: usize },
    #[error("element belongs to presentation #{found}, expected #{expected}")]
    OwnershipMismatch { expected: u64, found: u64 },
    #[error("truncation degree must be at least 2, got {0}")]
    TruncationTooSmall(usize),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidLie(String),
    #[error("Jacobi identity fails on ({0}, {1}, {2})")]
    Jacobi(String, String, String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid structure tables: {0}")]
    InvalidTables(String),
    #[error("basis index {index} out of range for presentation of dimension {dim}")]
    BasisOutOfRange { index: usize, dim: usize },
    #[error("missing image for generator {0}")]
    MissingImage(String),
    #[error("image of grouplike generator {0} is not grouplike")]
    NotGrouplike(String),
    #[error("image of primitive generator {0} is not primitive")]
    NotPrimitive(String),
    #[error("relation {relation} violated by the generator images")]
    RelationViolation { relation: String },
    #[error("image of {generator} has degree {image_degree} above the generator degree {degree}")]
    FiltrationViolation {
        generator: String,
        degree: usize,
        image_degree: usize,
    },
    #[error("not a Hopf morphism: {check} fails at {witness}")]
    NotAMorphism { check: String, witness: String },
    #[error("morphisms do not compose: {0}")]
    Composition(String),
    #[error("bracket of primitives {0} and {1} does not close inside the truncation")]
    BracketNotClosed(String, String),
    #[error("{0} does not descend to the quotient within the truncation")]
    DescentFailure(String),
    #[error("subspace is not closed under {0} within the truncation")]
    ClosureFailure(String),
    #[error("unsupported presentation kind for {0}")]
    UnsupportedKind(String),
    #[error("comparison map is not bijective at degree {0}")]
    NotBijective(usize),
    #[error(transparent)]
    Linear(#[from] LinError),
}
