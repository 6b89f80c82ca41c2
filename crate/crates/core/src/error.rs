use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("not contained: {0}")]
    NotContained(String),

    #[error("incompatible homomorphisms: {0}")]
    Incompatible(String),

    #[error("ill-defined homomorphism: {0}")]
    IllDefined(String),

    #[error("degree {index} is outside the complex range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("{line}:{col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("unknown property id `{0}`")]
    UnknownProperty(String),
}

impl Error {
    pub(crate) fn ring_mismatch(expected: &crate::PolyRing, found: &crate::PolyRing) -> Self {
        Error::RingMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
