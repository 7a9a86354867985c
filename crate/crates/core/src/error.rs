use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not reciprocal: coefficient {index} differs from coefficient {mirror}")]
    NotReciprocal { index: usize, mirror: usize },

    #[error("expected even degree, got degree {0}")]
    OddDegree(usize),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division of {num} by {den} leaves a nonzero remainder")]
    InexactDivision { num: String, den: String },

    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: i64, min: i64, max: i64 },

    #[error("series composition requires the inner series to have zero constant term")]
    SeriesComposition,

    #[error("{0} is not an edge of the complex")]
    NotAnEdge(String),

    #[error("edge order must be a permutation of the original edges: {0}")]
    BadEdgeOrder(String),

    #[error("Laurent polynomial is not symmetric under exponent negation")]
    AsymmetricLaurent,

    #[error("Laurent polynomial mixes even and odd exponents")]
    MixedParity,

    #[error("leading Chebyshev coefficient is zero but a strict-degree tuple was requested")]
    ZeroLeadingCoefficient,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
