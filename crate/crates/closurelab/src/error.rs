use thiserror::Error;

/// Errors raised by geometric preconditions and input handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation undefined on the empty polyhedron")]
    EmptyPolyhedron,
    #[error("base point is not in the interior")]
    NotInterior,
    #[error("recession cone is not a linear space")]
    RecessionNotLinear,
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("polyhedron is the whole space")]
    FullSpace,
    #[error("polyhedron contains a line")]
    NotLineFree,
    #[error("polyhedron is not full-dimensional")]
    NotFullDimensional,
    #[error("reducer does not preserve polyhedrality (use nonclosed_witness)")]
    NonPreservingReducer,
    #[error("reducer preserves polyhedrality; no witness exists")]
    PreservingReducer,
    #[error("operation is only available in dimension 2")]
    DimensionNot2,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("support function is +inf in an enumerated direction")]
    UnboundedDirection,
    #[error("vector is not a primitive integer vector")]
    NotPrimitive,
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("remainder matrices have different row/column index sets")]
    ShapeMismatch,
    #[error("cut family has no members")]
    EmptyFamily,
    #[error("reference body is not contained in the start polyhedron")]
    ReferenceNotContained,
    #[error("undecidable at desk scale: lineality split does not leave a bounded base")]
    Undecidable,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid rational literal: {0}")]
    InvalidRational(String),
    #[error("invalid polyhedron: {0}")]
    InvalidPolyhedron(String),
    #[error("dimension {dim} exceeds the desk-scale guard of {max} (set CLOSURELAB_MAX_DIM to override)")]
    DimensionGuard { dim: usize, max: usize },
    #[error("{count} constraints exceed the desk-scale guard of {max} (set CLOSURELAB_MAX_CONSTRAINTS to override)")]
    ConstraintGuard { count: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
