use thiserror::Error;

/// Unified error type for the engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("word is not valid for this group: {0}")]
    InvalidWord(String),
    #[error("local free-product model exceeded: total length {total} reaches loop bound {bound}")]
    LocalModelExceeded { total: u64, bound: u64 },
    #[error("weights must be strictly increasing")]
    NonIncreasingWeights,
    #[error("enumeration budget exceeded: {0} tuples")]
    BudgetExceeded(u128),
    #[error("polynomial has negative leading coefficient")]
    NegativeLeadingCoeff,
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("query below critical index: q = {q}, critical = {critical}")]
    BelowCriticalIndex { q: u64, critical: u64 },
    #[error("parameter out of supported range: {0}")]
    OutOfRange(String),
    #[error("no patch available for tuple {0}")]
    PatchMissing(String),
    #[error("coefficient vector is not mean zero")]
    MeanNotZero,
    #[error("invalid exponent pair: {0}")]
    BadExponents(String),
    #[error("series diverges for t <= {threshold}: need t > log({rho})")]
    DivergentSeries { threshold: f64, rho: u64 },
    #[error("no feasible contraction radius for these parameters")]
    NoFeasibleRadius,
    #[error("value is irrational at this evaluation point: {0}")]
    IrrationalValue(String),
    #[error("precondition rejected: {0}")]
    PreconditionViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
