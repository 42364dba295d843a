use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus mismatch: expected {expected}, found {found}")]
    GenusMismatch { expected: usize, found: usize },

    #[error("homology class must have even positive length, got {0}")]
    BadLength(usize),

    #[error("class {0} is not primitive")]
    NotPrimitive(String),

    #[error("curve {}: not primitive", .index + 1)]
    CurveNotPrimitive { index: usize },

    #[error("curves {} and {} are not dual (pairing {pairing})", .index + 1, .next + 1)]
    NotDual {
        index: usize,
        next: usize,
        pairing: BigInt,
    },

    #[error("closing pair is not dual (pairing {pairing})")]
    NotClosed { pairing: BigInt },

    #[error("operation requires a closed circuit")]
    OpenCircuit,

    #[error("operation requires an untwisted diagram")]
    Twisted,

    #[error("circuit too short: length {len}, need at least {min}")]
    TooShort { len: usize, min: usize },

    #[error("position {} out of range for a circuit of length {len}", .pos + 1)]
    InvalidPosition { pos: usize, len: usize },

    #[error("index positions must differ (both {0})")]
    SamePosition(usize),

    #[error("switch matrix is not a symplectic {0}x{0} integer matrix")]
    BadSwitch(usize),

    #[error("diagram is invalid: {0}")]
    Invalid(String),

    #[error("classifier requires genus 1, found genus {0}")]
    RequiresGenusOne(usize),

    #[error("detection no longer matches the diagram: {0}")]
    StaleDetection(String),

    #[error("pattern at position {0} has no connected-sum contraction")]
    NotContractible(usize),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
