use thiserror::Error;

use crate::trees::TreeKind;

/// Everything that can go wrong in the library. CLI and FFI layers map these
/// onto exit statuses and status codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a fraction")]
    ZeroOverZero,
    #[error("negative values are outside the positive rationals")]
    Negative,
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("{0} is a pseudo-fraction and has no value here")]
    PseudoFraction(String),
    #[error("continued fraction is empty")]
    EmptyContinuedFraction,
    #[error("continued fraction term {index} must be at least 1")]
    NonPositiveTerm { index: usize },
    #[error("continued fraction is not canonical: {0}")]
    NonCanonical(String),
    #[error("expected a continued fraction of the form [0, a1, ...]")]
    NotProperFraction,
    #[error("{value} does not occur in the {tree} tree")]
    OutOfTree { tree: TreeKind, value: String },
    #[error("index {index} is outside level {level} of the {tree} tree")]
    IndexOutOfRange {
        tree: TreeKind,
        level: u64,
        index: String,
    },
    #[error("level {level} of the {tree} tree is not addressed by a 0-1 sequence")]
    NoPath { tree: TreeKind, level: u64 },
    #[error("the root of the S-tree has no right child")]
    NoRightChild,
    #[error("depth {depth} exceeds the cap of {cap}")]
    DepthCap { depth: u64, cap: u64 },
    #[error("path must not be empty")]
    EmptyPath,
    #[error("{0}")]
    Domain(String),
    #[error("n must be at least 1")]
    FibonacciIndex,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
