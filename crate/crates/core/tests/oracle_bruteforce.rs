//! The oracle's per-class shortcut checked against literal enumeration of
//! every class and every multiplicity vector.

use std::cmp::Ordering;

use proptest::prelude::*;
use seshadri_core::oracle::{best_certificate_for_class, upper_bound_very_general};
use seshadri_core::{bounds, cmp_rat_root, DivClass, Rat, RuledSurface, SearchParams};

fn fe(e: i64) -> RuledSurface {
    RuledSurface::rational(e).unwrap()
}

/// h^0 from the pushforward, term by term.
fn h0_direct(e: i64, a: i64, b: i64) -> i64 {
    (0..=a).map(|k| (b - k * e + 1).max(0)).sum()
}

/// All non-increasing positive vectors of length <= max_len with sum <= max_sum.
fn all_vectors(max_len: usize, max_sum: u32) -> Vec<Vec<u32>> {
    fn rec(cur: &mut Vec<u32>, cap: u32, left: u32, max_len: usize, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        for m in 1..=cap.min(left) {
            cur.push(m);
            rec(cur, m, left - m, max_len, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), max_sum, max_sum, max_len, &mut out);
    out
}

type Key = (Rat, i64, i64, Vec<u32>);

fn brute_force(e: i64, l: DivClass, r: u32, p: &SearchParams) -> Option<Key> {
    let vecs = all_vectors(r as usize, p.max_total_mult);
    let mut best: Option<Key> = None;
    for a in 0..=i64::from(p.max_a) {
        for b in 0..=i64::from(p.max_b) {
            if a == 0 && b == 0 {
                continue;
            }
            let h0 = h0_direct(e, a, b);
            let ld = -i128::from(a * l.a * e) + i128::from(a * l.b) + i128::from(l.a * b);
            for v in &vecs {
                let conditions: u32 = v.iter().map(|m| m * (m + 1) / 2).sum();
                if i64::from(conditions) >= h0 {
                    continue;
                }
                let total: u32 = v.iter().sum();
                let key = (Rat::new(ld, total.into()), a, b, v.clone());
                if best.as_ref().is_none_or(|cur| key < *cur) {
                    best = Some(key);
                }
            }
        }
    }
    best
}

#[test]
fn shortcut_matches_exhaustive_search() {
    for e in 0..=3 {
        for la in 1..=2 {
            for lb in (la * e + 1)..=(la * e + 3) {
                let l = DivClass::new(la, lb);
                for r in 1..=6u32 {
                    for (ma, mb, mt) in [(2, 6, 2 * r), (3, 8, r + 1), (1, 4, 3)] {
                        let p = SearchParams::new(ma, mb, mt).unwrap();
                        let fast = upper_bound_very_general(&fe(e), l, r, &p).ok();
                        let slow = brute_force(e, l, r, &p);
                        let fast_key = fast
                            .map(|c| (c.value, c.class.a, c.class.b, c.mults.as_slice().to_vec()));
                        assert_eq!(fast_key, slow, "e={e} L={l} r={r} caps=({ma},{mb},{mt})");
                    }
                }
            }
        }
    }
}

#[test]
fn many_points_regime_never_undercuts_general_bound() {
    let mut instances = 0;
    for e in 0..=3 {
        let s = fe(e);
        for la in 1..=2 {
            for lb in (la * e + 1)..=8 {
                let l = DivClass::new(la, lb);
                let lsq = s.self_intersection(l);
                if lsq > 8 {
                    continue;
                }
                for r in (lsq + 5) as u32..=(lsq + 10) as u32 {
                    let cert =
                        upper_bound_very_general(&s, l, r, &SearchParams::defaults(&s, l, r))
                            .unwrap();
                    let lower = bounds::general_lower_bound(lsq, r).unwrap();
                    assert_ne!(
                        cmp_rat_root(&cert.value, &lower),
                        Ordering::Less,
                        "e={e} L={l} r={r}"
                    );
                    instances += 1;
                }
            }
        }
    }
    assert!(instances > 0);
}

#[test]
fn very_general_small_r_matches_oracle() {
    for e in 1..=5 {
        let s = fe(e);
        for la in 1..=3 {
            for lb in (la * e + 1)..=(la * e + 4) {
                let l = DivClass::new(la, lb);
                for r in 1..=e as u32 {
                    let cert =
                        upper_bound_very_general(&s, l, r, &SearchParams::defaults(&s, l, r))
                            .unwrap();
                    assert_eq!(cert.value, Rat::integer(la.into()), "e={e} L={l} r={r}");
                    // restricted to single-point multiplicity-one certificates
                    let single = SearchParams {
                        max_total_mult: 1,
                        ..SearchParams::defaults(&s, l, r)
                    };
                    let one = upper_bound_very_general(&s, l, r, &single).unwrap();
                    assert_eq!(one.value, Rat::integer(la.into()));
                    assert_eq!(one.class, DivClass::FIBRE);
                }
            }
        }
    }
}

fn ample_instance() -> impl Strategy<Value = (i64, DivClass, u32)> {
    (0i64..4, 1i64..3, 1i64..4, 1u32..8)
        .prop_map(|(e, a, extra, r)| (e, DivClass::new(a, a * e + extra), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn larger_caps_never_raise_the_bound(
        (e, l, r) in ample_instance(),
        a in 1u32..4, b in 1u32..12, m in 1u32..10,
        da in 0u32..3, db in 0u32..6, dm in 0u32..5,
    ) {
        let s = fe(e);
        let small = upper_bound_very_general(&s, l, r, &SearchParams::new(a, b, m).unwrap());
        let big = upper_bound_very_general(&s, l, r, &SearchParams::new(a + da, b + db, m + dm).unwrap());
        if let Ok(small) = small {
            prop_assert!(big.unwrap().value <= small.value);
        }
    }

    #[test]
    fn reduction_order_does_not_matter((e, l, r) in ample_instance(), seed in any::<u64>()) {
        let s = fe(e);
        let p = SearchParams::defaults(&s, l, r);
        let mut certs: Vec<_> = (0..=p.max_a)
            .flat_map(|a| (0..=p.max_b).map(move |b| DivClass::new(a.into(), b.into())))
            .filter_map(|d| best_certificate_for_class(&s, l, d, r, &p).unwrap())
            .collect();
        // deterministic shuffle
        let mut x = seed | 1;
        for i in (1..certs.len()).rev() {
            x ^= x << 13; x ^= x >> 7; x ^= x << 17;
            certs.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let folded = certs.iter().cloned().reduce(|acc, c| acc.min(c)).unwrap();
        let rfolded = certs.into_iter().rev().reduce(|acc, c| acc.min(c)).unwrap();
        prop_assert_eq!(&folded, &rfolded);
        prop_assert_eq!(folded, upper_bound_very_general(&s, l, r, &p).unwrap());
    }
}
