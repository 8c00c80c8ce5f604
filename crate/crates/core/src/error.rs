use alloc::boxed::Box;
use core::fmt;

use crate::exactnum::{Rat, RootVal};
use crate::numlat::DivClass;

pub type Result<T> = core::result::Result<T, Error>;

/// Precondition and hypothesis failures.
///
/// Every variant names the violated condition; the CLI prints the
/// `Display` form verbatim as its diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The invariant `e` of a normalized ruled surface must be `>= 0`.
    NegativeInvariant(i64),
    /// The operation needs `e > 0`.
    InvariantNotPositive(i64),
    /// Cohomology and genus formulas are only implemented over the projective line.
    RationalOnly {
        base_genus: u32,
    },
    NotAmple(DivClass),
    /// Number of points exceeds the invariant `e`.
    TooManyPoints {
        r: u32,
        e: i64,
    },
    InvalidConfig(&'static str),
    /// A stated theorem hypothesis does not hold for the input.
    Hypothesis(&'static str),
    InvalidArgument(&'static str),
    EmptySearchSpace,
    BoundsDidNotMeet {
        upper: Box<Rat>,
        lower: Box<RootVal>,
    },
    Parse(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeInvariant(e) => write!(f, "invariant e must be >= 0 (got {e})"),
            Error::InvariantNotPositive(e) => write!(f, "invariant e must be > 0 (got {e})"),
            Error::RationalOnly { base_genus } => write!(
                f,
                "operation requires a rational ruled surface (base genus 0, got {base_genus})"
            ),
            Error::NotAmple(d) => {
                write!(f, "line bundle {d} is not ample (need a > 0 and b > a*e)")
            }
            Error::TooManyPoints { r, e } => {
                write!(
                    f,
                    "number of points r = {r} exceeds invariant e = {e} (need r <= e)"
                )
            }
            Error::InvalidConfig(why) => write!(f, "invalid point configuration: {why}"),
            Error::Hypothesis(why) => write!(f, "hypothesis violated: {why}"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
            Error::EmptySearchSpace => write!(f, "search space is empty under the given caps"),
            Error::BoundsDidNotMeet { upper, lower } => write!(
                f,
                "upper bound {upper} and lower bound {lower} did not meet; enlarge the search caps"
            ),
            Error::Parse(why) => write!(f, "parse error: {why}"),
        }
    }
}

impl core::error::Error for Error {}
