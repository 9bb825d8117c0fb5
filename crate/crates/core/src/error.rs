use core::fmt;

/// Errors raised by the algebraic routines.
///
/// `IdentityFailed` is not an input error: it reports that an exact identity
/// asserted by one of the constructions did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The determinant is not of the form `c * t^k`.
    NotAUnit,
    NotMonomialPermutation,
    PeriodMismatch { left: usize, right: usize },
    DimensionMismatch { left: usize, right: usize },
    BadIndices { a: i64, b: i64 },
    InvalidWindow(&'static str),
    InvalidComposition(&'static str),
    InvalidPartition(&'static str),
    SizeMismatch { left: usize, right: usize },
    NotNilpotent,
    IdentityFailed(&'static str),
    BadDivisorIndex { index: usize, rows: usize },
    NotContained,
    NotInNilradical,
    NotUnimodular,
    NotMaximalParabolic { rows: usize },
    /// The generators do not span a lattice in `V[t, t^-1]`.
    NotALattice,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAUnit => write!(f, "determinant is not a unit of k[t, t^-1]"),
            Error::NotMonomialPermutation => {
                write!(f, "matrix is not a monomial permutation matrix with ord(det) = 0")
            }
            Error::PeriodMismatch { left, right } => {
                write!(f, "affine permutations have different periods ({left} vs {right})")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "matrix dimensions differ ({left} vs {right})")
            }
            Error::BadIndices { a, b } => write!(f, "invalid index pair ({a}, {b})"),
            Error::InvalidWindow(why) => write!(f, "invalid window: {why}"),
            Error::InvalidComposition(why) => write!(f, "invalid composition: {why}"),
            Error::InvalidPartition(why) => write!(f, "invalid partition: {why}"),
            Error::SizeMismatch { left, right } => {
                write!(f, "partitions of different sizes ({left} vs {right})")
            }
            Error::NotNilpotent => write!(f, "matrix is not a constant nilpotent matrix"),
            Error::IdentityFailed(what) => write!(f, "identity failed: {what}"),
            Error::BadDivisorIndex { index, rows } => {
                write!(f, "divisor index {index} out of range 1..{rows}")
            }
            Error::NotContained => write!(f, "inner lattice is not contained in outer lattice"),
            Error::NotInNilradical => {
                write!(f, "matrix does not lie in the nilradical of the parabolic")
            }
            Error::NotUnimodular => write!(f, "determinant is not a nonzero constant of order zero"),
            Error::NotMaximalParabolic { rows } => {
                write!(f, "composition has {rows} parts; a maximal parabolic needs exactly 2")
            }
            Error::NotALattice => write!(f, "generators do not span a lattice"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
