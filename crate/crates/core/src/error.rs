use thiserror::Error;

/// Errors surfaced by the engine. Parse errors carry a source location so the
/// CLI can point at the offending token.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{file}:{line}:{col}: {msg}")]
    Parse {
        file: String,
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("not a prime: {0}")]
    NotPrime(u64),

    #[error("field mismatch between operands")]
    FieldMismatch,

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("relation paths are not parallel ({0})")]
    NonParallelRelation(String),

    #[error("relation contains a path of length {0}; every relation path must have length >= 2")]
    ShortRelation(usize),

    #[error("relation mixes path lengths {0} and {1}; relations must be length-homogeneous")]
    MixedLengthRelation(usize, usize),

    #[error("length cap {cap} exceeded: {what}")]
    CapExceeded { cap: usize, what: String },

    #[error("algebra is not finite-dimensional within the length cap (an irreducible path of maximal length exists)")]
    InfiniteDimensional,

    #[error("the zero module has no projective cover")]
    ZeroModule,

    #[error("module does not satisfy the algebra relations: {0}")]
    InvalidModule(String),

    #[error("map does not commute with the algebra action: {0}")]
    InvalidMap(String),

    #[error("operands live over different algebras")]
    AlgebraMismatch,

    #[error("the kept vertex set of a corner must be nonempty")]
    EmptyKeptSet,

    #[error("the removed vertex set of a corner must be nonempty and proper")]
    BadRemovedSet,

    #[error("corner radical filtration is not aligned with the basis; this corner is not supported")]
    CornerNotAligned,

    #[error("koszul degree {got} out of range 0..={max}")]
    DegreeOutOfRange { got: usize, max: usize },

    #[error("translation data invalid: {0}")]
    BadTranslationData(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
