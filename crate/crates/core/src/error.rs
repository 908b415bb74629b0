use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("scale must be a finite real number, got {0}")]
    InvalidScale(f64),

    #[error("non-finite component in {0}")]
    NonFinite(&'static str),

    #[error("scale mismatch: {left} vs {right}")]
    ScaleMismatch { left: f64, right: f64 },

    #[error("element is singular (det = {det:e})")]
    SingularElement { det: f64 },

    #[error("matrix is not the image of any element at scale {scale}")]
    NotInRealization { scale: f64 },

    #[error("t * b vanishes with b != 0; the witness formula is undefined at t = 0")]
    ZeroDivisor,

    #[error("element lies on the null cone")]
    NullCone,

    #[error("sample range is empty after clipping: [{lo}, {hi}]")]
    EmptyRange { lo: f64, hi: f64 },

    #[error("moment word length {0} is outside 1..={max}", max = crate::freeprob::MAX_WORD_LEN)]
    WordLength(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
