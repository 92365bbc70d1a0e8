use thiserror::Error;

/// Errors surfaced by state constructors, channels and measures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    Dimension {
        expected: usize,
        rows: usize,
        cols: usize,
    },

    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitIndex { index: usize, n_qubits: usize },

    #[error("duplicate qubit index {index}")]
    DuplicateQubit { index: usize },

    #[error("matrix is not Hermitian: max deviation {deviation:.3e} exceeds {tolerance:.1e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("state is not normalized: |norm^2 - 1| = {deviation:.3e}")]
    NotNormalized { deviation: f64 },

    #[error("operator trace deviates from 1 by {deviation:.3e}")]
    NotUnitTrace { deviation: f64 },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("probability {value} outside [0, 1]")]
    ProbabilityRange { value: f64 },

    #[error("Kraus set violates completeness: deviation {deviation:.3e}")]
    KrausCompleteness { deviation: f64 },

    #[error("invalid bipartition: {reason}")]
    InvalidBipartition { reason: String },

    #[error("invalid cut k={k} for n={n} qubits")]
    InvalidCut { k: usize, n: usize },

    #[error("gate step requires nu <= mu and mu > 0, got mu={mu}, nu={nu}")]
    InvalidGateStep { mu: usize, nu: usize },

    #[error("need at least {min} qubits, got {got}")]
    TooFewQubits { min: usize, got: usize },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
