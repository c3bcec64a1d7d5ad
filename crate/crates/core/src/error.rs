use thiserror::Error;

use crate::logic::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid event name `{0}`")]
    InvalidEventName(String),

    #[error("event `{0}` declared twice")]
    DuplicateEvent(String),

    #[error("unknown event `{0}`")]
    UnknownEvent(String),

    #[error("{count} events declared, at most {max} are supported")]
    TooManyEvents { count: usize, max: usize },

    #[error("event sets differ: {0}")]
    EventMismatch(String),

    #[error("invalid distribution: {0}")]
    InvalidDist(String),

    #[error("{0}")]
    Usage(String),

    #[error("invalid machine: {0}")]
    InvalidMachine(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("transition monoid exceeds {cap} elements")]
    MonoidTooLarge { cap: usize },

    #[error("support sequence did not cycle within {cap} steps")]
    SupportCapExceeded { cap: usize },

    #[error("the chain has a periodic recurrent class; its limiting distribution does not exist")]
    NoLimitingDistribution,

    #[error("singular linear system (the input is not a stochastic chain)")]
    Singular,
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::InvalidEventName(_)
            | Error::DuplicateEvent(_)
            | Error::UnknownEvent(_)
            | Error::TooManyEvents { .. }
            | Error::Usage(_)
            | Error::InvalidMachine(_) => 2,
            Error::InvalidDist(_) | Error::EventMismatch(_) | Error::InvalidChain(_) => 3,
            Error::MonoidTooLarge { .. } | Error::SupportCapExceeded { .. } => 4,
            Error::NoLimitingDistribution | Error::Singular => 4,
        }
    }
}
