use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("exponent error at byte {offset}: {msg}")]
    Exponent { offset: usize, msg: String },
    #[error("operation undefined on the zero function")]
    ZeroFunction,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero divisor: first entry of the tuple vanishes identically")]
    ZeroDivisor,
    #[error("point with |z| = {modulus} lies inside guard radius {radius}")]
    GuardViolation { modulus: f64, radius: f64 },
    #[error("quadrature degenerate at r = {r}: {perturbed} of {nodes} nodes perturbed")]
    QuadratureDegenerate { r: f64, perturbed: usize, nodes: usize },
    #[error("curve lies in the hypersurface: Q(f) vanishes identically")]
    CurveInHypersurface,
    #[error("bad arity: {0}")]
    BadArity(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("not enough distinct factors: have {have}, need {need}")]
    NotEnoughFactors { have: usize, need: usize },
    #[error("too few forms: have {have}, need {need}")]
    TooFew { have: usize, need: usize },
    #[error("hypothesis beta*(alpha+1) >= alpha fails: beta = {beta}, alpha = {alpha}")]
    HypothesisFailed { alpha: String, beta: String },
    #[error("position check failed: {0}")]
    PositionFailed(String),
    #[error("curve components are dependent: {0}")]
    DependentCurve(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("expected a polynomial: {0}")]
    NotPolynomial(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
