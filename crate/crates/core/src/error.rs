use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument `{name}` must be nonnegative, got {value}")]
    Negative { name: &'static str, value: i64 },

    #[error("argument `{name}` = {value} is outside the admissible range {range}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        range: String,
    },

    #[error("ground set of size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("series constant term is not invertible")]
    NotInvertible,

    #[error("polynomial division by x left a nonzero remainder at z^{index}")]
    InexactDivision { index: usize },

    #[error("subset T is not contained in the singletons of the partition")]
    NotSingletons,

    #[error("malformed set partition: {0}")]
    MalformedPartition(String),

    #[error("cannot parse `{0}` as an exact number")]
    Parse(String),

    #[error("malformed JSON polynomial: {0}")]
    Shape(String),
}
