//! Finite searches that certify upper bounds and desk-check the proofs.
//!
//! Upper bounds at very general points come from condition counting: if
//! `h^0(D) > sum m_i (m_i + 1) / 2`, some member of `|D|` has multiplicity
//! at least `m_i` at each of any `r` points, so
//! `epsilon(X, L, r) <= L.D / sum m_i`. The search never claims that a
//! divisor does *not* exist.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bounds::{self, HanOutcome, MultVector};
use crate::error::{Error, Result};
use crate::exactnum::{cmp_rat_root, Rat, RootVal};
use crate::numlat::{DivClass, RuledSurface};
use crate::seshadri::{self, Certificate, PointConfig, SeshadriResult};

/// Caps on the enumerated classes `(a, b)` and on `sum m_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchParams {
    pub max_a: u32,
    pub max_b: u32,
    pub max_total_mult: u32,
}

impl SearchParams {
    pub fn new(max_a: u32, max_b: u32, max_total_mult: u32) -> Result<SearchParams> {
        if max_a < 1 || max_b < 1 || max_total_mult < 1 {
            return Err(Error::InvalidArgument("search caps must all be >= 1"));
        }
        Ok(SearchParams {
            max_a,
            max_b,
            max_total_mult,
        })
    }

    /// `max_a = max(3, a_L + 1)`, `max_b = 4 max(e, 1) max_a + 4`, `max_total_mult = 2r`.
    pub fn defaults(surface: &RuledSurface, l: DivClass, r: u32) -> SearchParams {
        let max_a = 3u32.max(u32::try_from(l.a.saturating_add(1)).unwrap_or(u32::MAX));
        let e = u32::try_from(surface.invariant().max(1)).unwrap_or(u32::MAX);
        SearchParams {
            max_a,
            max_b: e.saturating_mul(max_a).saturating_mul(4).saturating_add(4),
            max_total_mult: r.saturating_mul(2).max(1),
        }
    }
}

/// An effective class with prescribed multiplicities, bounding `epsilon` above by `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBoundCert {
    pub class: DivClass,
    pub mults: MultVector,
    /// `L.class / sum mults`.
    pub value: Rat,
}

impl Ord for UpperBoundCert {
    /// Smallest value first, then lexicographic `(a, b, mults)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.value
            .cmp(&other.value)
            .then_with(|| self.class.cmp(&other.class))
            .then_with(|| self.mults.cmp(&other.mults))
    }
}

impl PartialOrd for UpperBoundCert {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sufficient condition for a member of `|D|` with multiplicities `m` at any points.
pub fn exists_divisor_with_mults(
    surface: &RuledSurface,
    d: DivClass,
    m: &MultVector,
) -> Result<bool> {
    Ok(surface.h0(d)? > m.condition_count())
}

/// Least `sum m_i (m_i+1)/2` over vectors of total `total` with at most `parts`
/// entries: spread `total` as evenly as possible over `min(parts, total)` points.
fn even_split(total: u32, parts: u32) -> Vec<u32> {
    let k = parts.min(total);
    let (q, extra) = (total / k, total % k);
    (0..k).map(|i| if i < extra { q + 1 } else { q }).collect()
}

fn even_split_cost(total: u32, parts: u32) -> i128 {
    let k = i128::from(parts.min(total));
    let (q, extra) = (i128::from(total) / k, i128::from(total) % k);
    extra * (q + 1) * (q + 2) / 2 + (k - extra) * q * (q + 1) / 2
}

/// Best multiplicity vector for one class under the certificate order.
///
/// For a fixed class the value only depends on `sum m_i`, so the winner has
/// the largest feasible total. Among vectors with that total the even split
/// is both the cheapest in conditions and the lexicographically smallest.
fn best_mults(h0: i128, r: u32, max_total: u32) -> Option<MultVector> {
    // even_split_cost is strictly increasing in the total
    let total = (1..=max_total)
        .take_while(|&t| even_split_cost(t, r) < h0)
        .last()?;
    Some(MultVector::from_sorted_unchecked(even_split(total, r)))
}

fn check_search_inputs(surface: &RuledSurface, l: DivClass, r: u32) -> Result<()> {
    if !surface.is_rational() {
        return Err(Error::RationalOnly {
            base_genus: surface.base_genus(),
        });
    }
    if !surface.is_ample(l) {
        return Err(Error::NotAmple(l));
    }
    if r < 1 {
        return Err(Error::InvalidArgument("number of points r must be >= 1"));
    }
    Ok(())
}

/// Best certificate using the single class `d`, if any multiplicities are admissible.
///
/// This is the unit of work of [`upper_bound_very_general`]; callers that
/// partition the class box themselves reduce the results with `min`.
pub fn best_certificate_for_class(
    surface: &RuledSurface,
    l: DivClass,
    d: DivClass,
    r: u32,
    params: &SearchParams,
) -> Result<Option<UpperBoundCert>> {
    check_search_inputs(surface, l, r)?;
    if d.a < 0 || d.b < 0 || (d.a == 0 && d.b == 0) {
        return Ok(None);
    }
    let h0 = surface.h0(d)?;
    let Some(mults) = best_mults(h0, r, params.max_total_mult) else {
        return Ok(None);
    };
    let value = Rat::new(surface.intersect(l, d), mults.total());
    Ok(Some(UpperBoundCert {
        class: d,
        mults,
        value,
    }))
}

/// Minimizes `L.D / sum m_i` over `0 <= a <= max_a`, `0 <= b <= max_b`,
/// `(a, b) != (0, 0)` and admissible multiplicity vectors of length `<= r`.
pub fn upper_bound_very_general(
    surface: &RuledSurface,
    l: DivClass,
    r: u32,
    params: &SearchParams,
) -> Result<UpperBoundCert> {
    check_search_inputs(surface, l, r)?;
    let mut best: Option<UpperBoundCert> = None;
    for a in 0..=params.max_a {
        for b in 0..=params.max_b {
            let d = DivClass::new(a.into(), b.into());
            if let Some(cert) = best_certificate_for_class(surface, l, d, r, params)? {
                if best.as_ref().is_none_or(|cur| cert < *cur) {
                    best = Some(cert);
                }
            }
        }
    }
    best.ok_or(Error::EmptySearchSpace)
}

/// Result of checking the classwise inequality behind the `r <= e` theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallRReport {
    pub epsilon: SeshadriResult,
    pub classes_checked: usize,
    /// Classes with `L.D / (r alpha) < epsilon`; each would falsify the theorem.
    pub violators: Vec<DivClass>,
    /// Smallest `L.D / (r alpha)` seen, with its class.
    pub worst: Option<(DivClass, Rat)>,
}

/// For every irreducible candidate `D = alpha C0 + beta f` other than `C0`
/// and `f` inside the caps, checks `L.D / (r alpha) >= epsilon`, where
/// `m <= r alpha` bounds the total multiplicity of `D` at the points.
///
/// `params.max_total_mult` is not used.
pub fn verify_theorem_r_le_e(
    surface: &RuledSurface,
    l: DivClass,
    cfg: PointConfig,
    params: &SearchParams,
) -> Result<SmallRReport> {
    let epsilon = seshadri::special_points(surface, l, cfg)?;
    let r = i128::from(cfg.r());
    let mut report = SmallRReport {
        epsilon,
        classes_checked: 0,
        violators: Vec::new(),
        worst: None,
    };
    for alpha in 1..=i64::from(params.max_a) {
        for beta in 0..=i64::from(params.max_b) {
            let d = DivClass::new(alpha, beta);
            if d == DivClass::C0 || !surface.is_irreducible_candidate(d) {
                continue;
            }
            report.classes_checked += 1;
            let ratio = Rat::new(surface.intersect(l, d), r * i128::from(alpha));
            if ratio < report.epsilon.value {
                report.violators.push(d);
            }
            if report.worst.as_ref().is_none_or(|(_, w)| ratio < *w) {
                report.worst = Some((d, ratio));
            }
        }
    }
    Ok(report)
}

/// Upper and lower bounds for the scroll family and whether they meet.
///
/// The lower bound assumes a multiplicity-one Seshadri curve through `s`
/// points: `s = 1` forces `epsilon >= 1`, and `s >= 2` gives
/// `epsilon >= sqrt((r-1)(s-1)) / s` from `C^2 >= s - 1` and Hodge index.
/// That reduction only applies when the upper bound is below the general bound.
pub fn scroll_exact_value(r: u32, params: &SearchParams) -> Result<SeshadriResult> {
    let inst = seshadri::scroll(r)?;
    let lsq = inst.surface.self_intersection(inst.line_bundle);
    let upper = upper_bound_very_general(&inst.surface, inst.line_bundle, r, params)?;

    let general = bounds::general_lower_bound(lsq, r)?;
    if cmp_rat_root(&upper.value, &general) != Ordering::Less {
        return Err(Error::BoundsDidNotMeet {
            upper: Box::new(upper.value),
            lower: Box::new(general),
        });
    }

    let r_int = i128::from(r);
    let lower = (2..=r_int)
        .map(|s| RootVal::new(Rat::new((r_int - 1) * (s - 1), s * s)))
        .try_fold(RootVal::of_square(&Rat::one()), |acc, cand| {
            cand.map(|c| acc.min(c))
        })?;

    if cmp_rat_root(&upper.value, &lower) != Ordering::Equal {
        return Err(Error::BoundsDidNotMeet {
            upper: Box::new(upper.value),
            lower: Box::new(lower),
        });
    }
    let s = u32::try_from(upper.mults.total())
        .map_err(|_| Error::InvalidArgument("multiplicity overflow"))?;
    Ok(SeshadriResult {
        value: upper.value,
        certificate: Certificate::ScrollDivisor {
            class: upper.class,
            s,
        },
    })
}

/// Exhaustive check of the multiplicity inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HanSweepReport {
    pub max_s: u32,
    pub max_m1: u32,
    pub vectors_seen: usize,
    pub applicable: usize,
    pub counterexamples: Vec<MultVector>,
    /// Vectors where both sides are equal.
    pub equality_cases: Vec<MultVector>,
    /// Smallest `lhs / rhs` over the applicable vectors (first in sweep order on ties).
    pub tightest: Option<(MultVector, Rat)>,
}

/// Calls `visit` on every non-increasing vector of length `1..=max_len` with
/// entries in `1..=max_entry`, shorter vectors first, each length in lexicographic order.
pub fn for_each_mult_vector(max_len: u32, max_entry: u32, mut visit: impl FnMut(&MultVector)) {
    fn rec(buf: &mut Vec<u32>, len: usize, cap: u32, visit: &mut dyn FnMut(&MultVector)) {
        if buf.len() == len {
            visit(&MultVector::from_sorted_unchecked(buf.clone()));
            return;
        }
        for m in 1..=cap {
            buf.push(m);
            rec(buf, len, m, visit);
            buf.pop();
        }
    }
    if max_entry == 0 {
        return;
    }
    let mut buf = Vec::new();
    for len in 1..=max_len as usize {
        // lexicographic: smallest first entry first
        for first in 1..=max_entry {
            buf.push(first);
            rec(&mut buf, len, first, &mut visit);
            buf.pop();
        }
    }
}

pub fn sweep_han_inequality(max_s: u32, max_m1: u32) -> Result<HanSweepReport> {
    if max_s < 2 || max_m1 < 2 {
        return Err(Error::InvalidArgument("need max_s >= 2 and max_m1 >= 2"));
    }
    let mut report = HanSweepReport {
        max_s,
        max_m1,
        vectors_seen: 0,
        applicable: 0,
        counterexamples: Vec::new(),
        equality_cases: Vec::new(),
        tightest: None,
    };
    for_each_mult_vector(max_s, max_m1, |m| {
        report.vectors_seen += 1;
        let HanOutcome::Applicable { holds } = bounds::han_inequality(m) else {
            return;
        };
        report.applicable += 1;
        if !holds {
            report.counterexamples.push(m.clone());
        }
        let (lhs, rhs) = bounds::han_sides(m);
        if lhs == rhs {
            report.equality_cases.push(m.clone());
        }
        let ratio = lhs / rhs;
        if report.tightest.as_ref().is_none_or(|(_, t)| ratio < *t) {
            report.tightest = Some((m.clone(), ratio));
        }
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fe(e: i64) -> RuledSurface {
        RuledSurface::rational(e).unwrap()
    }

    fn mv(v: &[u32]) -> MultVector {
        MultVector::new(v.to_vec()).unwrap()
    }

    fn params(a: u32, b: u32, m: u32) -> SearchParams {
        SearchParams::new(a, b, m).unwrap()
    }

    #[test]
    fn existence_examples() {
        assert!(exists_divisor_with_mults(&fe(0), DivClass::new(1, 2), &mv(&[1; 5])).unwrap());
        assert!(!exists_divisor_with_mults(&fe(0), DivClass::FIBRE, &mv(&[1, 1])).unwrap());
        assert!(exists_divisor_with_mults(&fe(0), DivClass::new(1, 2), &mv(&[2])).unwrap());
        assert!(exists_divisor_with_mults(
            &RuledSurface::new(0, 1).unwrap(),
            DivClass::FIBRE,
            &mv(&[1])
        )
        .is_err());
    }

    #[test]
    fn even_split_shape() {
        assert_eq!(even_split(5, 3), vec![2, 2, 1]);
        assert_eq!(even_split(2, 5), vec![1, 1]);
        assert_eq!(even_split(4, 1), vec![4]);
        assert_eq!(even_split_cost(5, 3), 3 + 3 + 1);
        assert_eq!(even_split_cost(4, 1), 10);
    }

    #[test]
    fn upper_bound_examples() {
        let scroll =
            upper_bound_very_general(&fe(0), DivClass::new(1, 2), 5, &params(3, 10, 10)).unwrap();
        assert_eq!(scroll.class, DivClass::new(1, 2));
        assert_eq!(scroll.mults, mv(&[1; 5]));
        assert_eq!(scroll.value, Rat::new(4, 5));

        let fibre =
            upper_bound_very_general(&fe(3), DivClass::new(2, 7), 2, &params(3, 15, 6)).unwrap();
        assert_eq!(
            (fibre.class, fibre.mults.clone()),
            (DivClass::FIBRE, mv(&[1]))
        );
        assert_eq!(fibre.value, Rat::integer(2));

        let quadric =
            upper_bound_very_general(&fe(0), DivClass::new(1, 1), 2, &params(3, 6, 6)).unwrap();
        assert_eq!(quadric.value, Rat::integer(1));
        assert_eq!((quadric.class, quadric.mults), (DivClass::FIBRE, mv(&[1])));
    }

    #[test]
    fn upper_bound_errors() {
        let p = params(3, 6, 6);
        assert_eq!(
            upper_bound_very_general(&fe(1), DivClass::new(1, 1), 2, &p),
            Err(Error::NotAmple(DivClass::new(1, 1)))
        );
        assert!(upper_bound_very_general(
            &RuledSurface::new(0, 1).unwrap(),
            DivClass::new(1, 1),
            2,
            &p
        )
        .is_err());
        assert!(SearchParams::new(0, 1, 1).is_err());
        // caps (1, 1): of C0, f and C0+f the fibre is cheapest
        let tiny =
            upper_bound_very_general(&fe(5), DivClass::new(1, 6), 1, &params(1, 1, 1)).unwrap();
        assert_eq!(tiny.class, DivClass::FIBRE);
    }

    #[test]
    fn default_params() {
        let p = SearchParams::defaults(&fe(3), DivClass::new(2, 7), 4);
        assert_eq!(
            p,
            SearchParams {
                max_a: 3,
                max_b: 40,
                max_total_mult: 8
            }
        );
        let q = SearchParams::defaults(&fe(0), DivClass::new(5, 1), 2);
        assert_eq!(
            q,
            SearchParams {
                max_a: 6,
                max_b: 28,
                max_total_mult: 4
            }
        );
    }

    #[test]
    fn thm31_examples() {
        let rep = verify_theorem_r_le_e(
            &fe(3),
            DivClass::new(2, 7),
            PointConfig::new(3, 2, 1).unwrap(),
            &params(10, 40, 1),
        )
        .unwrap();
        assert!(rep.violators.is_empty());
        assert_eq!(rep.worst, Some((DivClass::new(1, 3), Rat::new(7, 3))));
        assert_eq!(rep.epsilon.value, Rat::integer(1));

        let rep = verify_theorem_r_le_e(
            &fe(1),
            DivClass::new(1, 2),
            PointConfig::new(1, 1, 0).unwrap(),
            &params(8, 16, 1),
        )
        .unwrap();
        assert!(rep.violators.is_empty());
        assert_eq!(rep.epsilon.value, Rat::integer(1));

        let rep = verify_theorem_r_le_e(
            &fe(4),
            DivClass::new(3, 25),
            PointConfig::new(4, 4, 0).unwrap(),
            &params(6, 40, 1),
        )
        .unwrap();
        assert!(rep.violators.is_empty());
        assert_eq!(rep.epsilon.value, Rat::new(3, 4));
        assert!(rep.classes_checked > 0);
    }

    #[test]
    fn scroll_exact_examples() {
        let five = scroll_exact_value(5, &params(3, 10, 10)).unwrap();
        assert_eq!(five.value, Rat::new(4, 5));
        assert_eq!(
            five.certificate,
            Certificate::ScrollDivisor {
                class: DivClass::new(1, 2),
                s: 5
            }
        );
        assert_eq!(
            scroll_exact_value(3, &params(3, 8, 8)).unwrap().value,
            Rat::new(2, 3)
        );
        let six = scroll_exact_value(6, &params(3, 12, 12)).unwrap();
        assert_eq!(six.value, Rat::new(5, 6));
        assert_eq!(
            six.certificate,
            Certificate::ScrollDivisor {
                class: DivClass::new(1, 3),
                s: 6
            }
        );
    }

    #[test]
    fn scroll_exact_fails_with_small_caps() {
        // without room for the scroll class itself the fibre gives only 1
        let err = scroll_exact_value(5, &params(3, 1, 10)).unwrap_err();
        assert!(matches!(err, Error::BoundsDidNotMeet { .. }));
    }

    #[test]
    fn han_sweep_examples() {
        let big = sweep_han_inequality(8, 12).unwrap();
        assert!(big.counterexamples.is_empty());
        assert!(big.equality_cases.contains(&mv(&[2, 2, 2])));

        let small = sweep_han_inequality(3, 2).unwrap();
        assert_eq!(small.tightest, Some((mv(&[2, 2, 2]), Rat::integer(1))));

        let tiny = sweep_han_inequality(2, 2).unwrap();
        assert_eq!(tiny.applicable, 1);
        assert_eq!(tiny.tightest.map(|(m, _)| m), Some(mv(&[2, 1])));
        assert!(tiny.counterexamples.is_empty());

        assert!(sweep_han_inequality(1, 5).is_err());
    }

    #[test]
    fn mult_vector_enumeration_order() {
        let mut seen = Vec::new();
        for_each_mult_vector(2, 2, |m| seen.push(m.as_slice().to_vec()));
        assert_eq!(
            seen,
            vec![vec![1], vec![2], vec![1, 1], vec![2, 1], vec![2, 2]]
        );
    }
}
