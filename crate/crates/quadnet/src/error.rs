//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the analysis pipeline.
///
/// Degeneracy errors (`Assumption1Violation`, `BaseLocusNotFinite`, ...)
/// describe mathematical properties of the input; they are expected outcomes
/// for some inputs, not bugs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operands belong to different fields")]
    MixedFields,

    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("base locus not finite")]
    BaseLocusNotFinite,

    #[error("smoothness assumption fails at basepoint {point}")]
    Assumption1Violation { point: String },

    #[error("branch not smooth at the base point")]
    BranchNotSmooth,

    #[error("degenerate: multiplicity bound exceeded (order of vanishing > {0})")]
    MultiplicityBoundExceeded(usize),

    #[error("basepoint search incomplete: multiplicities found sum to {found}, need 8")]
    IncompleteBasepoints { found: u32 },

    #[error("analysis incomplete over this field: {0}")]
    Incomplete(String),

    #[error("characteristic 2 is not supported for discriminant computations")]
    CharacteristicTwo,

    #[error("every member of the net is singular (identically zero discriminant)")]
    NetOfSingularQuadrics,

    #[error("singular locus is non-reduced or non-isolated")]
    NonIsolatedSingularLocus,

    #[error("singularity beyond ADE scope: {0}")]
    BeyondAdeScope(String),

    #[error("component is not an affine Dynkin diagram: {0}")]
    NotAffine(String),

    #[error("nodes {a} and {b} have intersection {value}, outside {{0, 1, 2}}")]
    BadEdge { a: String, b: String, value: i64 },

    #[error("node {label} is not a root orthogonal to the fiber class")]
    BadNode { label: String },

    #[error("sublattice has rank {rank} < 7: quotient is infinite")]
    InfiniteQuotient { rank: usize },

    #[error("zero polynomial")]
    ZeroPolynomial,
}

pub type Result<T> = std::result::Result<T, Error>;
