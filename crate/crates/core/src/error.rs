use core::fmt;

/// Errors raised by the checked operations of this crate.
///
/// Failed internal exactness assertions (a Bareiss or Faddeev–LeVerrier
/// division with a remainder) are bugs and panic instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands have incompatible dimensions.
    DimensionMismatch {
        /// Dimension of the left operand.
        left: usize,
        /// Dimension of the right operand.
        right: usize,
    },
    /// Entry count is not `dim²`.
    NotSquare {
        /// Declared dimension.
        dim: usize,
        /// Number of entries supplied.
        len: usize,
    },
    /// A zero-sized matrix, vector or polynomial.
    Empty,
    /// The operation needs a specific matrix dimension.
    WrongDimension {
        /// Required dimension.
        expected: usize,
        /// Dimension supplied.
        found: usize,
    },
    /// A polynomial argument has an unusable degree.
    Degree {
        /// Minimum degree accepted.
        min: usize,
        /// Degree supplied.
        found: usize,
    },
    /// Not enough power sums for the requested degree.
    TooFewPowerSums {
        /// Requested degree.
        degree: usize,
        /// Highest power-sum index available.
        count: usize,
    },
    /// A leading coefficient that must be nonzero (or one) is not.
    LeadingCoefficient,
    /// Newton's identities produced a non-integer coefficient at step `k`.
    NotRealizable {
        /// Newton step where the division by `k` left a remainder.
        k: usize,
    },
    /// The characteristic polynomial has a repeated root; the closed form
    /// does not apply and the Jacobian determinant must be used instead.
    RepeatedEigenvalue,
    /// Sequence indices start at one.
    ZeroIndex,
}

/// Result alias with [`Error`].
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NotSquare { dim, len } => {
                write!(f, "matrix must be square: dim {dim} needs {} entries, got {len}", dim * dim)
            }
            Error::Empty => f.write_str("empty matrix or polynomial"),
            Error::WrongDimension { expected, found } => {
                write!(f, "expected a {expected}x{expected} matrix, got {found}x{found}")
            }
            Error::Degree { min, found } => {
                write!(f, "polynomial degree must be at least {min}, got {found}")
            }
            Error::TooFewPowerSums { degree, count } => {
                write!(f, "degree {degree} needs power sums up to p_{degree}, have up to p_{count}")
            }
            Error::LeadingCoefficient => f.write_str("invalid leading coefficient"),
            Error::NotRealizable { k } => {
                write!(f, "power sums not realizable over the integers (Newton step {k})")
            }
            Error::RepeatedEigenvalue => f.write_str(
                "characteristic polynomial has a repeated root; use the Jacobian determinant",
            ),
            Error::ZeroIndex => f.write_str("sequence index must be at least 1"),
        }
    }
}

impl core::error::Error for Error {}
