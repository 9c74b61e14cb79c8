//! Error type shared by all modules of the library.

use thiserror::Error;

/// Domain errors raised by library operations.
///
/// Every variant corresponds to a violated precondition or an honest
/// "cannot decide" outcome; none of them indicate a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element is zero, expected a unit")]
    ZeroElement,
    #[error("group is infinite, exhaustive enumeration unsupported")]
    InfiniteGroup,
    #[error("operands live over different contexts: {0} vs {1}")]
    ContextMismatch(String, String),
    #[error("equality is undecidable over this backend: {0}")]
    Undecidable(String),
    #[error("operation unsupported over this backend: {0}")]
    Unsupported(String),
    #[error("element is not homogeneous of degree 0")]
    NotHomogeneous,
    #[error("degree {0} outside the implemented range [{1}, {2}]")]
    UnsupportedDegree(i64, i64, i64),
    #[error("characteristic {0} excluded by this operation")]
    BadCharacteristic(u64),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("unknown fixture name: {0}")]
    UnknownFixture(String),
    #[error("fixture not computable over this field: {0}")]
    UnsupportedField(String),
    #[error("vectors do not satisfy the quadric equation sum a_j b_j = 1")]
    NotOnQuadric,
    #[error("matrix is not in SL: determinant is {0}, expected 1")]
    NotSl(String),
    #[error("matrix already lies in H (last column (0,..,0,1))")]
    AlreadyInH,
    #[error("ring rejected: 2 must be invertible")]
    BadRing,
    #[error("argument {0} outside supported range {1}..={2}")]
    OutOfRange(i64, i64, i64),
    #[error("map does not send relations to relations (row {0})")]
    IllDefinedMap(usize),
    #[error("module data violates a required relation: {0}")]
    BadModuleData(String),
    #[error("eta does not act as zero, not a Milnor K-theory module")]
    NotKmModule,
    #[error("module data missing required degrees {0}..={1}")]
    MissingDegrees(i64, i64),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
