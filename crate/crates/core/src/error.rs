use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series is identically zero below its order {order}; it has no inverse")]
    NotInvertible { order: i64 },

    #[error("cannot invert an exact non-monomial series without a truncation order")]
    UnboundedInverse,

    #[error("coefficient of q^{exponent} is unknown: series is only exact below q^{order}")]
    BeyondOrder { exponent: i64, order: i64 },

    #[error("product factor (1 - q^0) vanishes")]
    ZeroFactor,

    #[error("denominator 1 - q^0 vanishes at summation index {index}")]
    VanishingDenominator { index: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown identity id `{0}`")]
    UnknownId(String),

    #[error("identity {id}: {side} builder failed: {source}")]
    Builder {
        id: String,
        side: &'static str,
        #[source]
        source: SeriesError,
    },

    #[error("identity {id}: builders reached order {reached}, below requested {requested}")]
    InsufficientOrder {
        id: String,
        requested: i64,
        reached: i64,
    },

    #[error("order must be at least 1, got {0}")]
    BadOrder(i64),
}

pub type Result<T, E = SeriesError> = std::result::Result<T, E>;
