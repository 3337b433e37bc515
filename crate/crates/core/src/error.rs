use thiserror::Error;

/// Errors raised by the state and operator constructors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("trace is {trace}, expected 1")]
    NotNormalized { trace: f64 },

    #[error("state does not commute with the parity operator (max deviation {deviation:.3e})")]
    NotPhysical { deviation: f64 },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid mode split {m_a}x{m_b}: need m_A, m_B >= 1 and m_A + m_B <= {max}")]
    InvalidSplit { m_a: usize, m_b: usize, max: usize },

    #[error("operation requires at most {max} modes, got {modes}")]
    SizeLimit { modes: usize, max: usize },

    #[error("operation requires a {expected} split, got {m_a}x{m_b}")]
    UnsupportedSplit { expected: &'static str, m_a: usize, m_b: usize },

    #[error("Pfaffian needs an even dimension, got {0}")]
    OddDimension(usize),

    #[error("matrix is not antisymmetric (max deviation {deviation:.3e})")]
    NotAntisymmetric { deviation: f64 },

    #[error("covariance matrix violates i*Gamma <= 1 (largest eigenvalue {max_eigenvalue})")]
    InvalidCovariance { max_eigenvalue: f64 },

    #[error("covariance has an imaginary residue of {residue:.3e}")]
    ComplexCovariance { residue: f64 },

    #[error("state vector has no definite parity (odd-component weight {weight:.3e})")]
    IndefiniteParity { weight: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
