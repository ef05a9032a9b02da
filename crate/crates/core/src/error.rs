//! Error type shared by all qmatrix operations.

use thiserror::Error;

/// Errors reported by matrix construction, decomposition and evolution
/// routines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum CoreError {
    /// Operand shapes are incompatible for the requested operation.
    #[error("dimension mismatch: {context} (expected {expected}, got {got})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// The input matrix deviates from Hermiticity beyond tolerance.
    #[error("matrix is not Hermitian: max |A - A^H| = {deviation:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    /// The eigensolver exhausted its sweep budget.
    #[error("eigensolver did not converge within {iterations} implicit-shift iterations")]
    NoConvergence { iterations: usize },

    /// The matrix has an eigenvalue below the positive-semidefinite tolerance.
    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPsd { min_eigenvalue: f64 },

    /// The matrix norm exceeds the scaling budget of the exponential.
    #[error("matrix norm {norm:.3e} exceeds the expm scaling budget")]
    Overflow { norm: f64 },

    /// A Fock-space cutoff of zero was requested.
    #[error("ladder cutoff must be at least 1")]
    InvalidCutoff,

    /// A non-positive quadrature scale was requested.
    #[error("quadrature scale must be positive, got {0}")]
    InvalidScale(f64),

    /// 2j is not a nonnegative integer.
    #[error("total angular momentum must be a nonnegative half-integer, got {0}")]
    InvalidJ(f64),

    /// Mode index outside the tensor-product space.
    #[error("mode index {index} out of range for a {modes}-mode space")]
    BadModeIndex { index: usize, modes: usize },

    /// No basis states match the requested particle-number sector.
    #[error("particle-number sector {sector} is empty")]
    SectorEmpty { sector: usize },

    /// An operation received an empty data set.
    #[error("input data is empty")]
    EmptyInput,

    /// A state entry became NaN or infinite during integration.
    #[error("state became non-finite at step {step}")]
    NonFiniteState { step: usize },

    /// Probability mass reached the edge of the site array.
    #[error("more than {threshold:.0}% probability mass on the outermost sites at step {step}")]
    BoundaryReached { step: usize, threshold: f64 },

    /// A coefficient matrix fits none of the symmetry classes.
    #[error("coefficient matrix is neither symmetric nor antisymmetric within tolerance")]
    Unclassifiable,

    /// Generic invalid-parameter error for preconditions on plain numbers.
    #[error("invalid parameter: {0}")]
    InvalidParam(&'static str),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoreError>;
