use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty interval [{lo}, {hi}]")]
    EmptyInterval { lo: String, hi: String },

    #[error("value {value} of `{var}` lies outside [{lo}, {hi}]")]
    OutOfRange {
        var: String,
        value: String,
        lo: String,
        hi: String,
    },

    #[error("malformed polynomial record on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("series precondition violated: {0}")]
    Series(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("functional needs a_{needed} but only a_1..a_{available} are known")]
    InsufficientCoefficients { needed: usize, available: usize },

    #[error("subdivision budget of {budget} boxes exhausted; gap {gap} exceeds tolerance")]
    BudgetExhausted { budget: usize, gap: String },

    #[error("tolerance must be positive")]
    NonPositiveTolerance,

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("polynomial is not univariate (variables: {0})")]
    NotUnivariate(String),

    #[error("truncation tail {tail:.3e} could flip the verdict (margin {margin:.3e})")]
    TailTooLarge { tail: f64, margin: f64 },

    #[error("function is not in the class on the requested grid (max |w^2 - 1| = {0})")]
    NotMember(f64),

    #[error("normal-form mismatch: {0}")]
    NormalForm(String),
}
