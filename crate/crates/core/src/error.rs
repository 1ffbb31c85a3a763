use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A reciprocal of zero was requested while evaluating a continued fraction.
    #[error("continued fraction is not evaluable: tail evaluates to zero at term {position}")]
    Evaluation { position: usize },

    #[error("value out of domain: {0}")]
    Domain(String),

    #[error("surgery along the meridian 1/0 is not allowed here")]
    Meridian,

    #[error("determinant cannot be normalized to a symmetric polynomial with value 1 at t = 1")]
    Normalization,

    #[error("symmetrized Seifert form is singular")]
    Singular,

    /// An invariant that should hold for every valid input was violated.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
