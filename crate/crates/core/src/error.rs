use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid extension degree {0}: t must be odd and in 3..=31")]
    InvalidDegree(u32),

    #[error("invalid modulus {modulus}: {reason}")]
    InvalidModulus {
        modulus: String,
        reason: &'static str,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("pole encountered: denominator vanishes at {0}")]
    PoleEncountered(String),

    #[error("{0} is not in the unit circle mu_(q+1)")]
    NotOnUnitCircle(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("field has {size} elements, above the exhaustion cap of {cap}; raise it with --cap or REDEI_EXHAUST_CAP")]
    RefusedTooLarge { size: u64, cap: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
