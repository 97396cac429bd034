use thiserror::Error;

/// Errors raised by the counting, codebook, concatenation and relay modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what}: n = {n} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid symbol {0:?} in schedule word (expected '0' or '1')")]
    ParseWord(char),

    #[error("not an available schedule word: {0}")]
    InvalidWord(String),

    #[error("word length {found} does not match the expected length {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("index {index} is out of range (capacity {capacity})")]
    IndexOutOfRange { index: String, capacity: String },

    #[error("relay has nothing left to forward at slot {slot}")]
    FlowViolation { slot: usize },

    #[error("schedule is unbalanced: {ones} relay-receive slots vs {zeros} relay-transmit slots")]
    Unbalanced { ones: usize, zeros: usize },

    #[error("block {block} is not a valid component word")]
    InvalidBlock { block: usize },

    #[error("length {0} must be even and at least 2")]
    OddLength(usize),

    #[error("{0}")]
    Domain(String),

    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
