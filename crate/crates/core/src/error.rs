use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed argument such as a negative count or an unknown catalog name.
    InvalidInput(String),
    /// A simplicial set presentation violates one of its invariants.
    InvalidSimplicialSet(String),
    /// A simplicial map does not commute with faces or has the wrong shape.
    InvalidMap(String),
    /// Sources or targets of the supplied maps do not line up.
    Mismatch(String),
    /// An output would exceed the configured dimension cap.
    DimensionCap {
        dim: usize,
        cap: usize,
    },
    InvalidGroupoid(String),
    InvalidFunctor(String),
    /// An enumeration would exceed its size cap.
    SizeCap {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    /// A documented precondition of the operation does not hold.
    Precondition(String),
    /// A family schema disagrees with a directly computed verdict.
    SchemaMismatch(String),
    /// The germ map is already an equivalence modulo the filter.
    AlreadyEquivalence,
    MissingDistinguishingLevel(String),
    /// A post-hoc validation failed; this is a bug rather than bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(s) => write!(f, "invalid input: {s}"),
            Error::InvalidSimplicialSet(s) => write!(f, "invalid simplicial set: {s}"),
            Error::InvalidMap(s) => write!(f, "invalid simplicial map: {s}"),
            Error::Mismatch(s) => write!(f, "mismatch: {s}"),
            Error::DimensionCap { dim, cap } => {
                write!(f, "output dimension {dim} exceeds the dimension cap {cap}")
            }
            Error::InvalidGroupoid(s) => write!(f, "invalid groupoid: {s}"),
            Error::InvalidFunctor(s) => write!(f, "invalid functor: {s}"),
            Error::SizeCap { what, size, cap } => {
                write!(f, "size cap exceeded for {what}: {size} > {cap}")
            }
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::SchemaMismatch(s) => write!(f, "schema mismatch: {s}"),
            Error::AlreadyEquivalence => write!(f, "already an equivalence modulo the filter"),
            Error::MissingDistinguishingLevel(s) => {
                write!(f, "missing distinguishing level: {s}")
            }
            Error::Internal(s) => write!(f, "internal validation failure: {s}"),
        }
    }
}

impl core::error::Error for Error {}
