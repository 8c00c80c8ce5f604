//! Lower and upper bounds that depend on `L` only through `L^2`, and the
//! multiplicity inequalities used to derive them.
//!
//! The bounds are all of the form `c * sqrt(L^2 / r)` with a rational
//! prefactor under the root, so they are returned as [`RootVal`]s.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{rat_cmp, root_cmp, Rat, RootVal};

/// Multiplicities `m_1 >= m_2 >= ... >= m_s > 0` of a curve at the points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultVector(Vec<u32>);

impl MultVector {
    /// Sorts the input non-increasingly. Rejects empty input and zero entries.
    pub fn new(mut mults: Vec<u32>) -> Result<MultVector> {
        if mults.is_empty() {
            return Err(Error::InvalidArgument(
                "multiplicity vector must be nonempty",
            ));
        }
        if mults.contains(&0) {
            return Err(Error::InvalidArgument("multiplicities must be >= 1"));
        }
        mults.sort_unstable_by(|x, y| y.cmp(x));
        Ok(MultVector(mults))
    }

    /// `count` points of multiplicity one.
    pub fn ones(count: u32) -> Result<MultVector> {
        MultVector::new(alloc::vec![1; count as usize])
    }

    pub(crate) fn from_sorted_unchecked(mults: Vec<u32>) -> MultVector {
        debug_assert!(!mults.is_empty() && mults.windows(2).all(|w| w[0] >= w[1]));
        MultVector(mults)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `s`, the number of points with positive multiplicity.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn largest(&self) -> u32 {
        self.0[0]
    }

    pub fn smallest(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    /// `m = sum m_i`.
    pub fn total(&self) -> i128 {
        self.0.iter().map(|&m| i128::from(m)).sum()
    }

    pub fn sum_of_squares(&self) -> i128 {
        self.0.iter().map(|&m| i128::from(m) * i128::from(m)).sum()
    }

    /// Upper bound on the number of linear conditions imposed by the
    /// multiplicities: `sum m_i (m_i + 1) / 2`.
    pub fn condition_count(&self) -> i128 {
        self.0
            .iter()
            .map(|&m| i128::from(m) * (i128::from(m) + 1) / 2)
            .sum()
    }
}

impl fmt::Display for MultVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(")")
    }
}

/// Outcome of a bound that only applies under a hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Guarantee {
    Guaranteed(RootVal),
    NoGuarantee,
}

impl Guarantee {
    pub fn is_guaranteed(&self) -> bool {
        matches!(self, Guarantee::Guaranteed(_))
    }
}

fn require_r_at_least_two(r: u32) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidArgument("number of points r must be >= 2"));
    }
    Ok(())
}

fn require_positive_lsq(lsq: i128) -> Result<()> {
    if lsq < 1 {
        return Err(Error::InvalidArgument("L^2 must be >= 1"));
    }
    Ok(())
}

/// `sqrt((r+2)/(r+3)) * sqrt(L^2/r)`, the general lower bound that holds
/// unless a multiplicity-one Seshadri curve exists.
pub fn general_lower_bound(lsq: i128, r: u32) -> Result<RootVal> {
    require_positive_lsq(lsq)?;
    require_r_at_least_two(r)?;
    let r = i128::from(r);
    RootVal::new(Rat::new((r + 2) * lsq, (r + 3) * r))
}

/// `sqrt((r-1)/r) * sqrt(L^2/r)`: below it the surface is fibred by Seshadri curves.
pub fn fibration_bound(lsq: i128, r: u32) -> Result<RootVal> {
    require_positive_lsq(lsq)?;
    require_r_at_least_two(r)?;
    let r = i128::from(r);
    RootVal::new(Rat::new((r - 1) * lsq, r * r))
}

/// `sqrt(L^2/r)`, the elementary upper bound.
pub fn maximal_bound(lsq: i128, r: u32) -> Result<RootVal> {
    require_positive_lsq(lsq)?;
    if r < 1 {
        return Err(Error::InvalidArgument("number of points r must be >= 1"));
    }
    RootVal::new(Rat::new(lsq, i128::from(r)))
}

/// The three `L^2`-bounds at `r` points and their pairwise ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub lsq: i128,
    pub r: u32,
    pub general_bound: RootVal,
    /// The fibration threshold, written `ss` after its source.
    pub ss_bound: RootVal,
    pub max_bound: RootVal,
    pub general_vs_ss: Ordering,
    pub general_vs_max: Ordering,
    pub ss_vs_max: Ordering,
}

pub fn bound_report(lsq: i128, r: u32) -> Result<BoundReport> {
    let general_bound = general_lower_bound(lsq, r)?;
    let ss_bound = fibration_bound(lsq, r)?;
    let max_bound = maximal_bound(lsq, r)?;
    let report = BoundReport {
        lsq,
        r,
        general_vs_ss: root_cmp(&general_bound, &ss_bound),
        general_vs_max: root_cmp(&general_bound, &max_bound),
        ss_vs_max: root_cmp(&ss_bound, &max_bound),
        general_bound,
        ss_bound,
        max_bound,
    };
    // (r+2)/(r+3) > (r-1)/r  <=>  r^2 + 2r > r^2 + 2r - 3
    assert_eq!(
        report.general_vs_ss,
        Ordering::Greater,
        "general bound must beat the fibration bound"
    );
    Ok(report)
}

/// `sum m_i^2 - m_s`: the least self-intersection of a curve with these
/// multiplicities at very general points.
pub fn el_min_self_intersection(m: &MultVector) -> i128 {
    m.sum_of_squares() - i128::from(m.smallest())
}

/// `sum m_i^2 - m_1 + gon`, the sharper variant valid when `m_1 >= 2`.
pub fn el_gonality_min_self_intersection(m: &MultVector, gon: u32) -> Result<i128> {
    if m.largest() < 2 {
        return Err(Error::Hypothesis("m_1 >= 2 is required"));
    }
    if gon < 1 {
        return Err(Error::InvalidArgument("gonality must be >= 1"));
    }
    Ok(m.sum_of_squares() - i128::from(m.largest()) + i128::from(gon))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HanOutcome {
    Applicable { holds: bool },
    NotApplicable,
}

/// Whether the multiplicity inequality
/// `(s+3)s/(s+2) * (sum m_i^2 - m_s) >= (sum m_i)^2` is in force for `m`.
pub fn han_applicable(m: &MultVector) -> bool {
    let s = m.len();
    let v = m.as_slice();
    !(m.largest() < 2 || s == 1 || (s == 2 && v[0] == 2 && v[1] == 2))
}

/// `(lhs, rhs)` of the multiplicity inequality as exact rationals.
pub fn han_sides(m: &MultVector) -> (Rat, Rat) {
    let s = m.len() as i128;
    let lhs = Rat::new((s + 3) * s, s + 2) * Rat::integer(el_min_self_intersection(m));
    let rhs = Rat::integer(m.total() * m.total());
    (lhs, rhs)
}

pub fn han_inequality(m: &MultVector) -> HanOutcome {
    if !han_applicable(m) {
        return HanOutcome::NotApplicable;
    }
    let (lhs, rhs) = han_sides(m);
    HanOutcome::Applicable {
        holds: rat_cmp(&lhs, &rhs) != Ordering::Less,
    }
}

/// `C^2 < s`: necessary for a multiplicity-one Seshadri curve through `s`
/// very general points below the general bound.
pub fn seshadri_curve_constraint(s: u32, csq: i128) -> Result<bool> {
    if s < 1 {
        return Err(Error::InvalidArgument("s must be >= 1"));
    }
    Ok(csq < i128::from(s))
}

/// The general lower bound on a K3 surface, guaranteed once `r >= max(L^2, 2)`.
pub fn k3_lower_bound(lsq: i128, r: u32) -> Result<Guarantee> {
    if lsq < 2 || lsq % 2 != 0 {
        return Err(Error::InvalidArgument(
            "K3 self-intersection L^2 must be even and >= 2",
        ));
    }
    if r < 1 {
        return Err(Error::InvalidArgument("number of points r must be >= 1"));
    }
    if i128::from(r) >= lsq.max(2) {
        Ok(Guarantee::Guaranteed(general_lower_bound(lsq, r)?))
    } else {
        Ok(Guarantee::NoGuarantee)
    }
}
