use thiserror::Error;

/// Errors surfaced by the exact kernels.
///
/// `GuardExceeded` marks inputs rejected by a configurable size guard rather
/// than by mathematics; `Inconsistency` marks conditions that hold for every
/// valid input by theory, so hitting one means a bug (or an input outside the
/// documented preconditions) and is never silently absorbed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point configuration must be nonempty")]
    EmptyConfiguration,
    #[error("points must be pairwise distinct (indices {0} and {1} coincide)")]
    DuplicatePoint(usize, usize),
    #[error("all points must have dimension {expected}, point {index} has {found}")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        index: usize,
    },
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("{0} is not a sublattice of {1}")]
    NotSublattice(String, String),
    #[error("lattice rank mismatch: {0}")]
    RankMismatch(String),
    #[error("vector is not contained in the lattice")]
    NotInLattice,
    #[error("vertices lie outside the span of the reference lattice")]
    OutsideSpan,
    #[error("cone is not pointed: {0}")]
    NotPointed(String),
    #[error("faces are not nested: {0} does not contain {1}")]
    NotNested(String, String),
    #[error("face {0} is missing from the supplied table")]
    MissingFace(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
