//! Numerical lattice of a ruled surface.
//!
//! Classes are written `a*C0 + b*f` where `C0` is the normalized section
//! (`C0^2 = -e`) and `f` a fibre (`f^2 = 0`, `C0.f = 1`). Intersection
//! numbers are returned as `i128`, which cannot overflow for `i64`
//! coefficients.

use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::Rat;

/// A ruled surface, up to numerical equivalence: base genus and invariant `e >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RuledSurface {
    e: i64,
    base_genus: u32,
}

/// A numerical class `a*C0 + b*f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivClass {
    pub a: i64,
    pub b: i64,
}

impl DivClass {
    pub const C0: DivClass = DivClass { a: 1, b: 0 };
    pub const FIBRE: DivClass = DivClass { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> DivClass {
        DivClass { a, b }
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 0 {
            write!(f, "{}*C0-{}*f", self.a, self.b.unsigned_abs())
        } else {
            write!(f, "{}*C0+{}*f", self.a, self.b)
        }
    }
}

impl FromStr for DivClass {
    type Err = Error;

    /// Parses the `a*C0+b*f` form written by `Display`.
    fn from_str(s: &str) -> Result<DivClass> {
        let s: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (a, rest) = s
            .split_once("*C0")
            .ok_or(Error::Parse("expected a*C0+b*f"))?;
        let b = rest
            .strip_suffix("*f")
            .ok_or(Error::Parse("expected a*C0+b*f"))?;
        let b = b.strip_prefix('+').unwrap_or(b);
        let a = a
            .parse()
            .map_err(|_| Error::Parse("malformed C0 coefficient"))?;
        let b = b
            .parse()
            .map_err(|_| Error::Parse("malformed f coefficient"))?;
        Ok(DivClass { a, b })
    }
}

impl RuledSurface {
    pub fn new(e: i64, base_genus: u32) -> Result<RuledSurface> {
        if e < 0 {
            return Err(Error::NegativeInvariant(e));
        }
        Ok(RuledSurface { e, base_genus })
    }

    /// The Hirzebruch surface `F_e`, i.e. the rational ruled surface with invariant `e`.
    pub fn rational(e: i64) -> Result<RuledSurface> {
        RuledSurface::new(e, 0)
    }

    pub fn invariant(&self) -> i64 {
        self.e
    }

    pub fn base_genus(&self) -> u32 {
        self.base_genus
    }

    pub fn is_rational(&self) -> bool {
        self.base_genus == 0
    }

    fn require_rational(&self) -> Result<()> {
        if self.is_rational() {
            Ok(())
        } else {
            Err(Error::RationalOnly {
                base_genus: self.base_genus,
            })
        }
    }

    /// `D1 . D2 = -a1 a2 e + a1 b2 + a2 b1`.
    pub fn intersect(&self, d1: DivClass, d2: DivClass) -> i128 {
        let (a1, b1) = (i128::from(d1.a), i128::from(d1.b));
        let (a2, b2) = (i128::from(d2.a), i128::from(d2.b));
        -a1 * a2 * i128::from(self.e) + a1 * b2 + a2 * b1
    }

    pub fn self_intersection(&self, d: DivClass) -> i128 {
        self.intersect(d, d)
    }

    /// `K = -2 C0 + (-2 - e) f`.
    pub fn canonical_class(&self) -> Result<DivClass> {
        self.require_rational()?;
        Ok(DivClass {
            a: -2,
            b: -2 - self.e,
        })
    }

    /// `a > 0` and `b > a e`.
    pub fn is_ample(&self, d: DivClass) -> bool {
        d.a > 0 && i128::from(d.b) > i128::from(d.a) * i128::from(self.e)
    }

    /// Numerical condition for a class to contain an irreducible curve:
    /// `C0`, `f`, `a > 0, b > a e`, or `e > 0, a > 0, b = a e`.
    pub fn is_irreducible_candidate(&self, d: DivClass) -> bool {
        if d == DivClass::C0 || d == DivClass::FIBRE {
            return true;
        }
        let ae = i128::from(d.a) * i128::from(self.e);
        let b = i128::from(d.b);
        d.a > 0 && (b > ae || (self.e > 0 && b == ae))
    }

    /// `h^0(O(D))` on the Hirzebruch surface, via the pushforward
    /// `pi_* O(aC0+bf) = sum_{k=0}^{a} O(b - k e)`.
    pub fn h0(&self, d: DivClass) -> Result<i128> {
        self.require_rational()?;
        if d.a < 0 || d.b < 0 {
            return Ok(0);
        }
        let (a, b, e) = (i128::from(d.a), i128::from(d.b), i128::from(self.e));
        // Terms b - k e + 1 are positive exactly for k <= b / e.
        let last = if e == 0 { a } else { a.min(b / e) };
        Ok((last + 1) * (b + 1) - e * last * (last + 1) / 2)
    }

    /// `chi(O(D)) = 1 + (D.D - K.D) / 2`.
    pub fn chi(&self, d: DivClass) -> Result<Rat> {
        let k = self.canonical_class()?;
        let twice = self.self_intersection(d) - self.intersect(k, d);
        Ok(Rat::integer(1) + Rat::new(twice, 2))
    }

    /// `p_a(D) = 1 + (D.D + K.D) / 2`.
    pub fn arithmetic_genus(&self, d: DivClass) -> Result<Rat> {
        let k = self.canonical_class()?;
        let twice = self.self_intersection(d) + self.intersect(k, d);
        Ok(Rat::integer(1) + Rat::new(twice, 2))
    }
}
