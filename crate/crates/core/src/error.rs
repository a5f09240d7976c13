use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("both polynomials are constant in variable {0}")]
    ConstantInVariable(usize),
    #[error("zero polynomial has no leading form")]
    ZeroPolynomial,
    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),
    #[error("Weyl group of order {order} exceeds enumeration bound {bound}")]
    WeylGroupTooLarge { order: u128, bound: u128 },
    #[error("representation of dimension {dim} exceeds bound {bound}")]
    DimensionTooLarge { dim: u128, bound: u128 },
    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("highest weight is not self-dual (S^μ ≠ -S^μ)")]
    NotSelfDual,
    #[error("cannot change presentation from {from} to {to}")]
    UnsupportedPresentation { from: String, to: String },
    #[error("parity mismatch between {0} and {1}")]
    ParityMismatch(u32, u32),
    #[error("{0}")]
    OutOfRegime(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures caused by configured enumeration bounds rather than bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(self, Error::WeylGroupTooLarge { .. } | Error::DimensionTooLarge { .. })
    }
}
