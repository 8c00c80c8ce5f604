//! Exact rationals and square roots of rationals.
//!
//! A [`RootVal`] stands for the nonnegative number `sqrt(radicand)`. It is
//! never evaluated: comparisons against rationals and other roots square
//! both sides and compare rationals.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rat(BigRational);

impl Rat {
    /// `numer / denom`.
    ///
    /// Panics if `denom == 0`.
    pub fn new(numer: i128, denom: i128) -> Rat {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(numer.into(), denom.into()))
    }

    pub fn checked_new(numer: i128, denom: i128) -> Option<Rat> {
        (denom != 0).then(|| Rat::new(numer, denom))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Option<Rat> {
        (!denom.is_zero()).then(|| Rat(BigRational::new(numer, denom)))
    }

    pub fn integer(n: i128) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn square(&self) -> Rat {
        Rat(&self.0 * &self.0)
    }

    pub fn recip(&self) -> Option<Rat> {
        (!self.is_zero()).then(|| Rat(self.0.recip()))
    }

    /// Exact integer value, if this is an integer that fits in `i128`.
    pub fn to_i128(&self) -> Option<i128> {
        if self.is_integer() {
            self.numer().to_i128()
        } else {
            None
        }
    }

    /// Nearest `f64`, for human-facing approximations only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Square root, if the value is the square of a nonnegative rational.
    pub fn exact_sqrt(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Rat::from_bigints(n, d)
    }
}

fn exact_isqrt(x: &BigInt) -> Option<BigInt> {
    let root = x.sqrt();
    (&root * &root == *x).then_some(root)
}

/// Ordering of `a - b` by the sign of the cross-multiplied difference.
pub fn rat_cmp(a: &Rat, b: &Rat) -> Ordering {
    // Denominators are positive, so cross-multiplying preserves the order.
    let lhs = a.numer() * b.denom();
    let rhs = b.numer() * a.denom();
    lhs.cmp(&rhs)
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        rat_cmp(self, other)
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::integer(n.into())
    }
}

impl From<i128> for Rat {
    fn from(n: i128) -> Rat {
        Rat::integer(n)
    }
}

impl From<u32> for Rat {
    fn from(n: u32) -> Rat {
        Rat::integer(n.into())
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $Trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $Trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, as for the underlying ratio type.
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `p` or `p/q` with optional sign on `p`; the result is reduced.
    fn from_str(s: &str) -> Result<Rat> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n
            .parse()
            .map_err(|_| Error::Parse("malformed rational numerator"))?;
        let d: BigInt = d
            .parse()
            .map_err(|_| Error::Parse("malformed rational denominator"))?;
        if d.sign() == Sign::NoSign {
            return Err(Error::Parse("zero denominator"));
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

/// The nonnegative square root of a nonnegative rational.
///
/// Equality and ordering are those of the radicands.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootVal {
    radicand: Rat,
}

impl RootVal {
    pub fn new(radicand: Rat) -> Result<RootVal> {
        if radicand.is_negative() {
            return Err(Error::InvalidArgument("radicand must be >= 0"));
        }
        Ok(RootVal { radicand })
    }

    /// `sqrt(a^2)`, i.e. `|a|` as a root.
    pub fn of_square(a: &Rat) -> RootVal {
        RootVal {
            radicand: a.square(),
        }
    }

    pub fn zero() -> RootVal {
        RootVal {
            radicand: Rat::zero(),
        }
    }

    pub fn radicand(&self) -> &Rat {
        &self.radicand
    }

    pub fn into_radicand(self) -> Rat {
        self.radicand
    }

    /// The represented value as a rational, when the radicand is a perfect square.
    pub fn as_rat(&self) -> Option<Rat> {
        self.radicand.exact_sqrt()
    }

    /// Rational form when exact, `sqrt(..)` form otherwise.
    pub fn to_simplified_string(&self) -> String {
        match self.as_rat() {
            Some(q) => alloc::format!("{q}"),
            None => alloc::format!("{self}"),
        }
    }

    pub fn to_f64(&self) -> f64 {
        newton_sqrt(self.radicand.to_f64())
    }
}

// core has no f64::sqrt; Newton iteration is plenty for display purposes.
fn newton_sqrt(x: f64) -> f64 {
    if x.is_nan() || x <= 0.0 || x.is_infinite() {
        return if x == 0.0 { 0.0 } else { f64::NAN };
    }
    let mut y = if x >= 1.0 { x } else { 1.0 };
    for _ in 0..2000 {
        let next = 0.5 * (y + x / y);
        if next >= y {
            break;
        }
        y = next;
    }
    y
}

impl Mul<&RootVal> for &RootVal {
    type Output = RootVal;
    fn mul(self, rhs: &RootVal) -> RootVal {
        RootVal {
            radicand: &self.radicand * &rhs.radicand,
        }
    }
}

impl Mul for RootVal {
    type Output = RootVal;
    fn mul(self, rhs: RootVal) -> RootVal {
        RootVal {
            radicand: self.radicand * rhs.radicand,
        }
    }
}

/// Ordering of `sqrt(s1)` against `sqrt(s2)`: the ordering of the radicands.
pub fn root_cmp(s1: &RootVal, s2: &RootVal) -> Ordering {
    rat_cmp(&s1.radicand, &s2.radicand)
}

/// Ordering of a rational `a` against `sqrt(s)`.
///
/// Negative `a` is `Less`. Otherwise `a^2` is compared with the radicand.
pub fn cmp_rat_root(a: &Rat, s: &RootVal) -> Ordering {
    if a.is_negative() {
        return Ordering::Less;
    }
    rat_cmp(&a.square(), &s.radicand)
}

impl Ord for RootVal {
    fn cmp(&self, other: &Self) -> Ordering {
        root_cmp(self, other)
    }
}

impl PartialOrd for RootVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({})", self.radicand)
    }
}

impl FromStr for RootVal {
    type Err = Error;

    fn from_str(s: &str) -> Result<RootVal> {
        let inner = s
            .trim()
            .strip_prefix("sqrt(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or(Error::Parse("expected sqrt(p/q)"))?;
        RootVal::new(inner.parse()?)
    }
}
