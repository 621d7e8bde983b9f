use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("expected {}x{} entries, found {found}", expected.0, expected.1)]
    Shape { expected: (usize, usize), found: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("matrix is not square: {0:?}")]
    NotSquare((usize, usize)),
    #[error("matrix is not Hermitian: max |M - M^H| = {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("eigensolver did not converge for dimension {dim}: off-diagonal residual {residual:e}")]
    NonConvergence { dim: usize, residual: f64 },
    #[error("operator of dimension {dim} is not a {qubits}-qubit operator")]
    NotQubitOperator { dim: usize, qubits: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CircuitError {
    #[error("{quantity} must be strictly positive, got {value}")]
    NonPositive { quantity: &'static str, value: f64 },
    #[error("junction count must be at least 1")]
    JunctionCount,
    #[error("flux-tuned E_Jq* = {ejq_star} GHz is not positive; flux bias is outside the transmon regime")]
    FluxBeyondValidity { ejq_star: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MajoranaError {
    #[error("Majorana index {0} out of range 1..=4")]
    IndexOutOfRange(usize),
    #[error("bilinear needs two distinct indices, got ({0}, {0})")]
    SameIndex(usize),
    #[error("operation requires configuration {expected}, got {got}")]
    WrongConfig { expected: &'static str, got: char },
    #[error("overlap factor {0} outside [0, 1]")]
    OverlapRange(f64),
    #[error("offset scan needs at least one sample")]
    EmptyRange,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProjectionError {
    #[error("lowest two levels are nearly degenerate (gap {gap:e} GHz)")]
    NearDegenerate { gap: f64 },
    #[error("coupling term is identically zero in this subspace")]
    Decoupled,
}

/// Crate-level error.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Majorana(#[from] MajoranaError),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
