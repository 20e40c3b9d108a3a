use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands built with different truncation caps, or caps that cannot hold
    /// the requested window.
    #[error("configuration error: {0}")]
    Config(String),

    /// A hypothesis of the computation is violated by the input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A polynomial generator in degree 0 has no finite Poincaré series in
    /// any fixed degree.
    #[error("divergent series: polynomial generator in degree 0 at weight {weight}")]
    Divergent { weight: usize },

    /// An internal consistency check failed. Never legal for valid input.
    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("coefficient overflow")]
    Overflow,
}
