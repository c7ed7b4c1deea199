use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero series")]
    DivisionByZero,

    #[error("exponent {exponent} beyond truncation order {order}")]
    BeyondOrder { exponent: i64, order: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance not verifiable in truncated model: {0}")]
    NotVerifiable(String),

    /// A truncated sum dropped a term that still contributes below the
    /// requested order.
    #[error("summation cutoff violated in {context}: discarded term {index} is nonzero at order {order}")]
    CutoffViolated {
        context: &'static str,
        index: i64,
        order: i64,
    },

    #[error("could not reach order {wanted} (got {got})")]
    Precision { wanted: i64, got: i64 },

    #[error("unknown identity id `{0}`")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
