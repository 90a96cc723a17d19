use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree {0} is outside the supported range 2..=20")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#b} is not a valid degree-{m} polynomial: {reason}")]
    BadModulus { m: u32, modulus: u64, reason: String },
    #[error("{k} does not divide {m}")]
    NotDivisor { k: u32, m: u32 },
    #[error("invalid function: {0}")]
    InvalidFunction(String),
    #[error("invalid position set: {0}")]
    InvalidPositionSet(String),
    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("MacWilliams transform inconsistency: {0}")]
    MacWilliams(String),
    #[error("degenerate code: {0}")]
    Degenerate(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable tag, used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegreeOutOfRange(_) => "degree_out_of_range",
            Error::BadModulus { .. } => "bad_modulus",
            Error::NotDivisor { .. } => "not_divisor",
            Error::InvalidFunction(_) => "invalid_function",
            Error::InvalidPositionSet(_) => "invalid_position_set",
            Error::ResourceGuard(_) => "resource_guard",
            Error::Hypothesis(_) => "hypothesis",
            Error::MacWilliams(_) => "macwilliams",
            Error::Degenerate(_) => "degenerate",
            Error::Config(_) => "config",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
