use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("direction {k} out of range 1..={n}")]
    DirectionOutOfRange { k: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("matrix is not sign-skew-symmetric at ({i}, {j})")]
    NotSignSkewSymmetric { i: usize, j: usize },
    /// Mutation of a non-skew-symmetrizable matrix can leave the
    /// sign-skew-symmetric class.
    #[error("mutation in direction {k} breaks sign-skew-symmetry at ({i}, {j})")]
    LostSignSkewSymmetry { k: usize, i: usize, j: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative coefficient outside the scope of the reductivity test")]
    NegativeCoefficient,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("rank {0} outside the supported range")]
    UnsupportedRank(usize),
    #[error("{0}")]
    Domain(String),
}
