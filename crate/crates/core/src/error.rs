use thiserror::Error;

/// Crate-wide error variants.
#[derive(Debug, Error)]
pub enum Error {
    /// Point dimension does not match the measure dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A direction vector is not unit length.
    #[error("direction is not a unit vector (norm = {norm})")]
    NonUnitDirection { norm: f64 },

    /// A point lies outside the support of the reference measure.
    #[error("point lies outside the support of the reference measure")]
    OutsideSupport,

    /// A point lies on or outside the boundary where an interior point is required.
    #[error("point is not in the interior of the support")]
    NotInterior,

    /// Operation requires a one-dimensional diagram.
    #[error("operation requires dimension 1, got {got}")]
    NotOneDimensional { got: usize },

    /// 1-D atoms must be sorted strictly increasing.
    #[error("atoms are not sorted strictly increasing")]
    UnsortedAtoms,

    /// Discrete measure construction failed.
    #[error("invalid discrete measure: {0}")]
    InvalidMeasure(String),

    /// Invalid solver or experiment configuration.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Solver did not reach the mass tolerance.
    #[error("solver did not converge (residual = {residual})")]
    NotConverged { residual: f64 },

    /// No Monte-Carlo sample landed in the cell of the given atom.
    #[error("no sample point landed in cell {index}; cannot estimate its rank")]
    EmptyCellRank { index: usize },

    /// Subset threshold exceeds the total available mass.
    #[error("threshold {threshold} exceeds the total mass 1")]
    InfeasibleThreshold { threshold: f64 },

    /// A contaminated atom collides with an uncontaminated one.
    #[error("contamination atom collides with an existing atom")]
    AtomCollision,

    /// Contamination requires a nonempty index set.
    #[error("contamination index set is empty")]
    EmptyContaminationSet,

    /// Symmetric-pair contamination needs contaminated mass at least 1/2.
    #[error("contaminated mass {mass} is below 1/2; symmetric pair undefined")]
    InsufficientContaminationMass { mass: f64 },

    /// Operation defined only for a specific reference kind.
    #[error("wrong reference kind: expected {expected}, got {got}")]
    WrongReferenceKind { expected: String, got: String },

    /// Target measure must carry equal weights.
    #[error("target measure is not empirical (weights are not all equal)")]
    NotEmpirical,

    /// Unsupported dimension for a closed-form routine.
    #[error("unsupported dimension {dim}")]
    UnsupportedDimension { dim: usize },

    /// Adaptive quadrature could not reach the requested accuracy.
    #[error("quadrature failed to converge (error estimate = {achieved})")]
    QuadratureFailure { achieved: f64 },

    /// File I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Malformed input file.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
