use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the core computations.
///
/// Variants map onto the CLI exit codes: [`Error::Resource`] is a resource
/// problem, [`Error::Integrity`] signals an internal inconsistency, the rest
/// are precondition failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Unknown or unsupported Cartan type label.
    UnsupportedType {
        label: String,
        supported: &'static str,
    },
    /// Coordinate vectors of incompatible length.
    Dimension { expected: usize, found: usize },
    /// A mathematical precondition does not hold.
    Domain(String),
    /// A configured size cap was exceeded.
    Resource {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    /// An offset lies outside the region a structure was built for.
    OutOfBounds(String),
    /// A computed object violates an invariant it must satisfy.
    Integrity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedType { label, supported } => {
                write!(f, "unsupported type {label:?}; supported: {supported}")
            }
            Error::Dimension { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Resource {
                what,
                limit,
                requested,
            } => write!(f, "resource cap exceeded: {what} {requested} > {limit}"),
            Error::OutOfBounds(msg) => write!(f, "out of bounds: {msg}"),
            Error::Integrity(msg) => write!(f, "integrity error: {msg}"),
        }
    }
}

#[cfg(any(feature = "std", test))]
impl std::error::Error for Error {}
