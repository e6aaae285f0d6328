use thiserror::Error;

/// Errors raised by the decision procedures and constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree too low: {0}")]
    DegreeTooLow(String),
    #[error("degree too high: {0}")]
    DegreeTooHigh(String),
    #[error("cannot lift to fewer variables ({from} -> {to})")]
    ShrinkNotAllowed { from: usize, to: usize },
    #[error("point is not in the root simplex: {0}")]
    NotInSimplex(String),
    #[error("wrong degree: expected {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("polynomial is not hyperbolic")]
    NotHyperbolic,
    #[error("required transform is singular")]
    NonInvertibleTransform,
    #[error("input violates the hypothesis: {0}")]
    HypothesisViolated(String),
    #[error("polynomial vanishes at the all-ones direction")]
    DegenerateDirection,
    #[error("coefficient of t^(n-1) is not zero")]
    NotZeroSum,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("search exhausted without a decision: {0}")]
    SearchExhausted(String),
}

impl HyperError {
    /// Stable machine-readable name used in JSON error payloads.
    pub fn code(&self) -> &'static str {
        match self {
            HyperError::ZeroPolynomial => "ZeroPolynomial",
            HyperError::NotRealRooted => "NotRealRooted",
            HyperError::DegreeMismatch { .. } => "DegreeMismatch",
            HyperError::DegreeTooLow(_) => "DegreeTooLow",
            HyperError::DegreeTooHigh(_) => "DegreeTooHigh",
            HyperError::ShrinkNotAllowed { .. } => "ShrinkNotAllowed",
            HyperError::NotInSimplex(_) => "NotInSimplex",
            HyperError::WrongDegree { .. } => "WrongDegree",
            HyperError::NotHyperbolic => "NotHyperbolic",
            HyperError::NonInvertibleTransform => "NonInvertibleTransform",
            HyperError::HypothesisViolated(_) => "HypothesisViolated",
            HyperError::DegenerateDirection => "DegenerateDirection",
            HyperError::NotZeroSum => "NotZeroSum",
            HyperError::InvalidInput(_) => "InvalidInput",
            HyperError::SearchExhausted(_) => "SearchExhausted",
        }
    }
}

pub type Result<T> = std::result::Result<T, HyperError>;
