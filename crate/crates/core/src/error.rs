use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("not a complex: f_{k} * f_{next} is nonzero", next = k + 1)]
    NotAComplex { k: usize },

    #[error("module has codimension 0; purity analysis requires codimension at least 1")]
    CodimZero,

    #[error("module is zero; nothing to analyse")]
    ZeroModule,

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("not a complete intersection: {0}")]
    NotCompleteIntersection(String),

    #[error("variables are not in Noether position: {0}")]
    NoetherPosition(String),

    #[error("section does not cut out the radical: {0}")]
    SectionMismatch(String),

    #[error("variety is not the graph of a rational section: {0}")]
    NonGraphSection(String),

    #[error("invalid variable split: {0}")]
    InvalidSplit(String),

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("resolution did not terminate within {0} steps")]
    NonTermination(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RingMismatch(_) => "ring-mismatch",
            Error::RankMismatch { .. } => "rank-mismatch",
            Error::Parse { .. } => "parse",
            Error::NotAComplex { .. } => "not-a-complex",
            Error::CodimZero => "codim-zero",
            Error::ZeroModule => "zero-module",
            Error::NotZeroDimensional => "not-zero-dimensional",
            Error::NotCompleteIntersection(_) => "not-complete-intersection",
            Error::NoetherPosition(_) => "noether-position",
            Error::SectionMismatch(_) => "section-mismatch",
            Error::NonGraphSection(_) => "non-graph-section",
            Error::InvalidSplit(_) => "invalid-split",
            Error::InexactDivision => "inexact-division",
            Error::NonTermination(_) => "non-termination",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
