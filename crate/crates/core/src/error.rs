use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZero,

    #[error("pole at evaluation point: factor `{factor}` vanishes")]
    Pole { factor: String },

    #[error("indeterminate `{0}` is not bound")]
    Unbound(String),

    #[error("cell ({row},{col}) is not in the diagram of {partition}")]
    CellOutOfDiagram {
        row: usize,
        col: usize,
        partition: String,
    },

    #[error("weight mismatch: expected {expected}, got {got}")]
    WeightMismatch { expected: usize, got: usize },

    #[error("singular transition matrix at degree {0}")]
    SingularMatrix(usize),

    #[error("vanishing norm for {0} during Gram-Schmidt")]
    VanishingNorm(String),

    #[error("monomial {monomial} needs {needed} variables but only N = {available} are available")]
    TooManyVariables {
        monomial: String,
        needed: usize,
        available: u64,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("expanded polynomial exceeds the term budget of {budget} (reached {reached})")]
    SizeGuard { budget: usize, reached: usize },

    #[error("expected N-degree {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },

    #[error("limit still depends on kappa: {0}")]
    KappaDependence(String),

    #[error("(1-t)-order mismatch: numerator vanishes to order {numerator}, denominator to order {denominator}")]
    OrderMismatch { numerator: usize, denominator: usize },

    #[error("asymptotic profile of the zero function")]
    ZeroFunction,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
