use thiserror::Error;

use crate::rational::IVec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polyhedron is empty")]
    Empty,
    #[error("polyhedron is unbounded in the requested direction")]
    Unbounded,
    #[error("polyhedron has a nontrivial lineality space")]
    NotPointed,
    #[error("polyhedron is not full-dimensional")]
    NotFullDimensional,
    #[error("linear map is not of full rank")]
    RankDeficient,
    #[error("cone has no generators")]
    ZeroCone,
    #[error("not a fan: {0}")]
    NotAFan(String),
    #[error("fan is not complete: {0}")]
    NotComplete(String),
    #[error("fan is not smooth: {0}")]
    NotSmooth(String),
    #[error("divisor is not big: its polytope has dimension {polytope_dim} < {dim}")]
    NotBig { polytope_dim: usize, dim: usize },
    #[error("divisor is not pseudo-effective: its polytope is empty")]
    NotPseudoEffective,
    #[error("invalid maximal cone index {0}")]
    InvalidCone(usize),
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("invalid class basis: {0}")]
    InvalidClassBasis(String),
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no feasible Minkowski decomposition: {0}")]
    InfeasibleDecomposition(String),
    #[error("decomposition failed exact verification: {0}")]
    DecompositionMismatch(String),
    #[error("Minkowski basis is incomplete: movable-cone rays {missing:?} were not found")]
    IncompleteBasis { missing: Vec<IVec> },
    #[error("completeness certificate failed: class {class:?} has a decomposable polytope")]
    CertificateFailed { class: IVec },
}

impl Error {
    /// Stable kebab-case name used in machine-readable error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::Empty => "empty",
            Error::Unbounded => "unbounded",
            Error::NotPointed => "not-pointed",
            Error::NotFullDimensional => "not-full-dimensional",
            Error::RankDeficient => "rank-deficient",
            Error::ZeroCone => "zero-cone",
            Error::NotAFan(_) => "not-a-fan",
            Error::NotComplete(_) => "not-complete",
            Error::NotSmooth(_) => "not-smooth",
            Error::NotBig { .. } => "not-big",
            Error::NotPseudoEffective => "not-pseudo-effective",
            Error::InvalidCone(_) => "invalid-cone",
            Error::InvalidFlag(_) => "invalid-flag",
            Error::InvalidClassBasis(_) => "invalid-class-basis",
            Error::InvalidDivisor(_) => "invalid-divisor",
            Error::Parse(_) => "parse",
            Error::InfeasibleDecomposition(_) => "infeasible-decomposition",
            Error::DecompositionMismatch(_) => "decomposition-mismatch",
            Error::IncompleteBasis { .. } => "incomplete-basis",
            Error::CertificateFailed { .. } => "certificate-failed",
        }
    }

    /// True for failures of a computation on valid input, as opposed to
    /// input that fails validation.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            Error::InfeasibleDecomposition(_)
                | Error::DecompositionMismatch(_)
                | Error::IncompleteBasis { .. }
                | Error::CertificateFailed { .. }
        )
    }
}
