use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// No points were supplied where at least one is required.
    EmptyConfiguration,
    DimensionMismatch { expected: usize, found: usize },
    /// Direction index outside `0..n` (or a projection requested with `n < 2`).
    BadDirection { direction: usize, n: usize },
    BadLevel { direction: usize, level: u32 },
    /// Star level outside `2..=n`.
    BadStarLevel { s: usize, n: usize },
    /// A coordinate lies outside the declared grid.
    PointOutOfGrid,
    BadPermutation,
    /// Removing the requested level would leave no points.
    WouldBeEmpty,
    BadDegree,
    PathPreconditionFailed(&'static str),
    /// A result guaranteed by the theory could not be produced.
    InternalInvariantViolation(&'static str),
    FaceNotInComplex,
    /// Too many grid variables for the bitmask face encoding.
    ComplexTooLarge { vertices: usize },
    VanishingConditionViolated { form: usize, summand: usize },
    ReducednessGuardViolated { form: usize },
    OverlappingSummands { first: usize, second: usize },
    /// The direction forms do not occupy pairwise distinct directions.
    FormsNotRegular,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyConfiguration => write!(f, "EmptyConfiguration: no points given"),
            Error::DimensionMismatch { expected, found } => write!(
                f,
                "DimensionMismatch: expected {expected} coordinates, found {found}"
            ),
            Error::BadDirection { direction, n } => write!(
                f,
                "BadDirection: direction {} is not valid for n = {n}",
                direction + 1
            ),
            Error::BadLevel { direction, level } => write!(
                f,
                "BadLevel: level {level} is not a nonempty level of direction {}",
                direction + 1
            ),
            Error::BadStarLevel { s, n } => {
                write!(f, "BadLevel: star level {s} outside 2..={n}")
            }
            Error::PointOutOfGrid => write!(f, "PointOutOfGrid: coordinate outside the grid"),
            Error::BadPermutation => write!(f, "BadPermutation: malformed permutation"),
            Error::WouldBeEmpty => write!(f, "WouldBeEmpty: removal leaves no points"),
            Error::BadDegree => write!(f, "BadDegree: degrees must be nonnegative"),
            Error::PathPreconditionFailed(why) => write!(f, "PathPreconditionFailed: {why}"),
            Error::InternalInvariantViolation(why) => {
                write!(f, "InternalInvariantViolation: {why}")
            }
            Error::FaceNotInComplex => write!(f, "FaceNotInComplex"),
            Error::ComplexTooLarge { vertices } => {
                write!(f, "ComplexTooLarge: {vertices} vertices exceed 64")
            }
            Error::VanishingConditionViolated { form, summand } => write!(
                f,
                "VanishingConditionViolated: F_{} does not vanish on V_{}",
                form + 1,
                summand + 1
            ),
            Error::ReducednessGuardViolated { form } => write!(
                f,
                "ReducednessGuardViolated: F_{} vanishes on V_{}",
                form + 1,
                form + 1
            ),
            Error::OverlappingSummands { first, second } => write!(
                f,
                "OverlappingSummands: V_{} and V_{} share a point",
                first + 1,
                second + 1
            ),
            Error::FormsNotRegular => {
                write!(f, "FormsNotRegular: forms must lie in distinct directions")
            }
        }
    }
}

impl core::error::Error for Error {}
