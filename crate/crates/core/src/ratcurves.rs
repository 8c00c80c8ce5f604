//! Smooth rational curves on Hirzebruch surfaces and the bound they leave in
//! force for many points.
//!
//! A multiplicity-one Seshadri curve through very general points must be a
//! smooth rational curve with `C^2 = s - 1`. The classes carrying such curves
//! are listed explicitly; the arithmetic genus is kept alongside as an
//! independent decision procedure.

use core::fmt;

use crate::bounds::{general_lower_bound, Guarantee};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::numlat::{DivClass, RuledSurface};

/// Which of the six rational cases a class `m C0 + n f` falls into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalCurveCase {
    /// (1) `C = C0`.
    C0,
    /// (2) `C = f`.
    Fibre,
    /// (3) `m = 1, n > e`.
    SectionHighDegree,
    /// (4) `e > 0, m = 1, n = e`.
    SectionMinimal,
    /// (5) `e = 0, m >= 1, n = 1`.
    E0Section,
    /// (6) `e = 1, m = n = 2`.
    ConicF1,
    /// Irreducible candidate of positive arithmetic genus.
    NotRational(Rat),
    NotIrreducibleClass,
}

impl RationalCurveCase {
    /// Case number `1..=6` for the rational cases.
    pub fn case_number(&self) -> Option<u8> {
        match self {
            RationalCurveCase::C0 => Some(1),
            RationalCurveCase::Fibre => Some(2),
            RationalCurveCase::SectionHighDegree => Some(3),
            RationalCurveCase::SectionMinimal => Some(4),
            RationalCurveCase::E0Section => Some(5),
            RationalCurveCase::ConicF1 => Some(6),
            RationalCurveCase::NotRational(_) | RationalCurveCase::NotIrreducibleClass => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.case_number().is_some()
    }
}

impl fmt::Display for RationalCurveCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalCurveCase::NotRational(g) => write!(f, "not-rational({g})"),
            RationalCurveCase::NotIrreducibleClass => f.write_str("not-irreducible"),
            case => write!(f, "({})", case.case_number().unwrap_or_default()),
        }
    }
}

/// Classifies `D = m C0 + n f` against the rational-curve list.
///
/// The list is checked in order, so when two cases overlap (only (3) and
/// (5) at `e = 0, m = n = 1`) the lower case number wins.
pub fn classify_smooth_rational(surface: &RuledSurface, d: DivClass) -> Result<RationalCurveCase> {
    if !surface.is_rational() {
        return Err(Error::RationalOnly {
            base_genus: surface.base_genus(),
        });
    }
    let e = surface.invariant();
    if d == DivClass::C0 {
        return Ok(RationalCurveCase::C0);
    }
    if d == DivClass::FIBRE {
        return Ok(RationalCurveCase::Fibre);
    }
    if !surface.is_irreducible_candidate(d) {
        return Ok(RationalCurveCase::NotIrreducibleClass);
    }
    let (m, n) = (d.a, d.b);
    let case = if m == 1 && n > e {
        RationalCurveCase::SectionHighDegree
    } else if e > 0 && m == 1 && n == e {
        RationalCurveCase::SectionMinimal
    } else if e == 0 && m >= 1 && n == 1 {
        RationalCurveCase::E0Section
    } else if e == 1 && m == 2 && n == 2 {
        RationalCurveCase::ConicF1
    } else {
        RationalCurveCase::NotRational(surface.arithmetic_genus(d)?)
    };
    Ok(case)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityFailure {
    NotIrreducibleClass,
    /// `h^0 < r + 1`: the class does not pass through `r` very general points.
    TooFewSections {
        h0: i128,
        needed: i128,
    },
    /// `D^2 >= r`.
    SelfIntersectionNotBelowR {
        csq: i128,
        r: u32,
    },
}

impl fmt::Display for RigidityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigidityFailure::NotIrreducibleClass => {
                f.write_str("class contains no irreducible curve")
            }
            RigidityFailure::TooFewSections { h0, needed } => write!(f, "h0 = {h0} < {needed}"),
            RigidityFailure::SelfIntersectionNotBelowR { csq, r } => {
                write!(f, "D^2 = {csq} >= r = {r}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rigidity {
    /// `D^2 = r - 1` and `p_a(D) = 0`.
    Rigid,
    HypothesisFailed(RigidityFailure),
}

/// An irreducible curve through `r` very general points with `C^2 < r` has
/// `C^2 = r - 1` and is smooth rational.
///
/// Panics if a class meeting the hypotheses fails the conclusion.
pub fn check_seshadri_curve_rigidity(
    surface: &RuledSurface,
    d: DivClass,
    r: u32,
) -> Result<Rigidity> {
    if r < 1 {
        return Err(Error::InvalidArgument("number of points r must be >= 1"));
    }
    let h0 = surface.h0(d)?;
    if !surface.is_irreducible_candidate(d) {
        return Ok(Rigidity::HypothesisFailed(
            RigidityFailure::NotIrreducibleClass,
        ));
    }
    let needed = i128::from(r) + 1;
    if h0 < needed {
        return Ok(Rigidity::HypothesisFailed(
            RigidityFailure::TooFewSections { h0, needed },
        ));
    }
    let csq = surface.self_intersection(d);
    if csq >= i128::from(r) {
        return Ok(Rigidity::HypothesisFailed(
            RigidityFailure::SelfIntersectionNotBelowR { csq, r },
        ));
    }
    assert_eq!(
        csq,
        i128::from(r) - 1,
        "rigidity violated: D^2 != r - 1 for {d} on F_{}",
        surface.invariant()
    );
    assert!(
        surface.arithmetic_genus(d)?.is_zero(),
        "rigidity violated: p_a({d}) != 0 on F_{}",
        surface.invariant()
    );
    Ok(Rigidity::Rigid)
}

/// The general lower bound is guaranteed on a Hirzebruch surface once `r >= L^2 + 5`.
pub fn guaranteed_bound_rational_ruled(
    surface: &RuledSurface,
    l: DivClass,
    r: u32,
) -> Result<Guarantee> {
    if !surface.is_rational() {
        return Err(Error::RationalOnly {
            base_genus: surface.base_genus(),
        });
    }
    if !surface.is_ample(l) {
        return Err(Error::NotAmple(l));
    }
    let lsq = surface.self_intersection(l);
    if i128::from(r) >= lsq + 5 {
        Ok(Guarantee::Guaranteed(general_lower_bound(lsq, r)?))
    } else {
        Ok(Guarantee::NoGuarantee)
    }
}

/// `(L.C)^2 - L^2 C^2 - (n - b)^2` for `L = C0 + b f`, `C = C0 + n f`; identically zero.
pub fn section_hodge_defect(e: i64, b: i64, n: i64) -> Result<i128> {
    let surface = RuledSurface::rational(e)?;
    let (l, c) = (DivClass::new(1, b), DivClass::new(1, n));
    let lc = surface.intersect(l, c);
    let diff = i128::from(n) - i128::from(b);
    Ok(lc * lc - surface.self_intersection(l) * surface.self_intersection(c) - diff * diff)
}

/// `Q(s) = -(r+2) s^2 + r(r+3) s - r(r+3)`; `Q(s) >= 0` is
/// `r(r+3)(s-1) >= (r+2) s^2`.
pub fn seshadri_quadratic(r: i128, s: i128) -> i128 {
    -(r + 2) * s * s + r * (r + 3) * s - r * (r + 3)
}

/// `(4/5)^2 >= 3(r+2) / (r(r+3))`, the conic-on-`F_1` comparison.
pub fn conic_comparison_holds(r: u32) -> bool {
    let r = i128::from(r);
    Rat::new(16, 25) >= Rat::new(3 * (r + 2), r * (r + 3))
}

/// `(n-b)^2 (r+3) / L^2 >= 3`.
pub fn final_chain_holds(diff: i128, r: u32, lsq: i128) -> bool {
    Rat::new(diff * diff * (i128::from(r) + 3), lsq) >= Rat::integer(3)
}
