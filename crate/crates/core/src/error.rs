use thiserror::Error;

use crate::io::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad field: {0}")]
    BadField(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("ideal is not admissible within path length {0}")]
    NotAdmissible(usize),
    #[error("relation terms are not parallel: {0}")]
    NonParallelRelation(String),
    #[error("relation has a term of length < 2: {0}")]
    RelationDegreeTooLow(String),
    #[error("relation mixes path lengths: {0}")]
    InhomogeneousRelation(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("decomposition requires a prime field")]
    RationalFieldUnsupported,
    #[error("undecided within budget {0}")]
    Undecided(u64),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("designated summand is not a split projective summand: {0}")]
    NotSplitSummand(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("unknown corpus entry {0}")]
    UnknownEntry(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
