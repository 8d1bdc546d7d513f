use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("center {center} out of range for a word of length {len}")]
    CenterOutOfRange { center: usize, len: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("pattern is not a normal S-diword")]
    NotNormal,
    #[error("alphabet error: {0}")]
    Alphabet(String),
    #[error("operands use different alphabets")]
    MixedAlphabets,
    #[error("subalgebra is not closed: {0}")]
    SubalgebraNotClosed(String),
    #[error("map is not a derivation: {0}")]
    DerivationInvalid(String),
    #[error("relation set is not a certified Gröbner–Shirshov basis")]
    NotCertified,
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
