use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {elem} does not belong to {instance}")]
    InstanceMismatch { instance: String, elem: String },
    #[error("empty argument list")]
    Arity,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} has no ordering")]
    NoOrdering(String),
    #[error("{0} is not densely ordered")]
    NonDense(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("coefficient {0} is not positive")]
    NonPositiveCoefficient(String),
    #[error("coefficients do not sum to a set containing one")]
    NotConvex,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("system is infeasible")]
    Infeasible,
    #[error("no hemispace separates the sets: {0}")]
    KakutaniCounterexample(String),
    #[error("bad table: {0}")]
    Table(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag, printed by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InstanceMismatch { .. } => "instance-mismatch",
            Error::Arity => "arity",
            Error::DivisionByZero => "division-by-zero",
            Error::NoOrdering(_) => "no-ordering",
            Error::NonDense(_) => "non-dense",
            Error::Unsupported(_) => "unsupported",
            Error::Dimension { .. } => "dimension-mismatch",
            Error::NonPositiveCoefficient(_) => "non-positive-coefficient",
            Error::NotConvex => "not-convex-combination",
            Error::Precondition(_) => "precondition",
            Error::InvalidWitness(_) => "invalid-witness",
            Error::Infeasible => "infeasible",
            Error::KakutaniCounterexample(_) => "kakutani-counterexample",
            Error::Table(_) => "table",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
