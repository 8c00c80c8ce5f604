//! The reproduction suite behind `seshadri verify paper`.
//!
//! Each criterion is a closed finite computation. A criterion passes when
//! its check returns `Ok` and, if it carries a time limit, finishes inside it.

use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use seshadri_core::bounds::{self, Guarantee};
use seshadri_core::oracle::{scroll_exact_value, sweep_han_inequality, verify_theorem_r_le_e};
use seshadri_core::ratcurves::{
    classify_smooth_rational, conic_comparison_holds, final_chain_holds, section_hodge_defect,
    seshadri_quadratic,
};
use seshadri_core::seshadri::{arbitrary_value, scroll, special_points};
use seshadri_core::{
    cmp_rat_root, Certificate, DivClass, MultVector, PointConfig, Rat, RootVal, RuledSurface,
    SearchParams,
};

use crate::parallel::upper_bound_parallel;

type Check = fn() -> Result<String, String>;

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub limit: Option<Duration>,
    check: Check,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} [{:>2}] {}: {} ({:.2} s)",
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

impl Criterion {
    pub fn run(&self) -> Outcome {
        let start = Instant::now();
        let result = (self.check)();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if let Some(limit) = self.limit {
            if elapsed > limit {
                passed = false;
                detail = format!("{detail}; exceeded {} s limit", limit.as_secs());
            }
        }
        Outcome {
            id: self.id,
            name: self.name,
            passed,
            detail,
            elapsed,
        }
    }
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

pub const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        name: "scroll family",
        limit: secs(10),
        check: scroll_family,
    },
    Criterion {
        id: 2,
        name: "projective plane, two points",
        limit: None,
        check: plane_two_points,
    },
    Criterion {
        id: 3,
        name: "special points grid, r <= e",
        limit: secs(60),
        check: special_points_grid,
    },
    Criterion {
        id: 4,
        name: "arbitrary rational values",
        limit: None,
        check: arbitrary_values,
    },
    Criterion {
        id: 5,
        name: "rational curve list vs genus",
        limit: None,
        check: rational_list,
    },
    Criterion {
        id: 6,
        name: "multiplicity inequality sweep",
        limit: None,
        check: multiplicity_sweep,
    },
    Criterion {
        id: 7,
        name: "many-points proof arithmetic",
        limit: None,
        check: proof_arithmetic,
    },
    Criterion {
        id: 8,
        name: "many-points oracle consistency",
        limit: secs(120),
        check: oracle_consistency,
    },
    Criterion {
        id: 9,
        name: "Hodge index",
        limit: None,
        check: hodge_index,
    },
    Criterion {
        id: 10,
        name: "auxiliary inequalities",
        limit: None,
        check: auxiliary_inequalities,
    },
    Criterion {
        id: 11,
        name: "K3 gate",
        limit: None,
        check: k3_gate,
    },
];

pub fn run_all() -> Vec<Outcome> {
    CRITERIA.iter().map(Criterion::run).collect()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fe(e: i64) -> Result<RuledSurface, String> {
    RuledSurface::rational(e).map_err(|err| err.to_string())
}

fn scroll_family() -> Result<String, String> {
    for r in 3..=12u32 {
        let inst = scroll(r).map_err(|e| e.to_string())?;
        let params = SearchParams::defaults(&inst.surface, inst.line_bundle, r);
        let res = scroll_exact_value(r, &params).map_err(|e| format!("r={r}: {e}"))?;
        let expected = Rat::new(i128::from(r) - 1, r.into());
        ensure!(
            res.value == expected,
            "r={r}: got {} expected {expected}",
            res.value
        );
        let Certificate::ScrollDivisor { class, s } = res.certificate else {
            return Err(format!("r={r}: unexpected certificate {}", res.certificate));
        };
        let ld = inst.surface.intersect(inst.line_bundle, class);
        ensure!(
            Rat::new(ld, s.into()) == expected,
            "r={r}: certificate {class} through {s} gives {ld}/{s}"
        );
        let lsq = inst.surface.self_intersection(inst.line_bundle);
        let general = bounds::general_lower_bound(lsq, r).map_err(|e| e.to_string())?;
        ensure!(
            cmp_rat_root(&expected, &general) == Ordering::Less,
            "r={r}: {expected} not below {general}"
        );
    }
    Ok("epsilon = (r-1)/r below the general bound for r = 3..12".into())
}

fn plane_two_points() -> Result<String, String> {
    let general = bounds::general_lower_bound(1, 2).map_err(|e| e.to_string())?;
    let expected = RootVal::new(Rat::new(2, 5)).map_err(|e| e.to_string())?;
    ensure!(
        general == expected,
        "general bound {general}, expected {expected}"
    );
    let half = Rat::new(1, 2);
    ensure!(
        cmp_rat_root(&half, &general) == Ordering::Less,
        "1/2 is not below {general}"
    );
    Ok(format!("1/2 < {general}"))
}

fn special_points_grid() -> Result<String, String> {
    let mut instances = 0usize;
    let mut classes = 0usize;
    for e in 1..=6i64 {
        let s = fe(e)?;
        let params = SearchParams::new(12, 12 * e as u32 + 12, 1).map_err(|e| e.to_string())?;
        for a in 1..=3i64 {
            for b in (a * e + 1)..=(3 * e + 3) {
                let l = DivClass::new(a, b);
                for r in 1..=e as u32 {
                    for cfg in PointConfig::all_for(r) {
                        let res = special_points(&s, l, cfg).map_err(|err| err.to_string())?;
                        let fibre = Rat::new(a.into(), cfg.t().into());
                        let expected = match cfg.s() {
                            0 => fibre,
                            sc => fibre.min(Rat::new((b - a * e).into(), sc.into())),
                        };
                        ensure!(
                            res.value == expected,
                            "e={e} L={l} {cfg:?}: {} != {expected}",
                            res.value
                        );
                        let rep = verify_theorem_r_le_e(&s, l, cfg, &params)
                            .map_err(|err| err.to_string())?;
                        ensure!(
                            rep.violators.is_empty(),
                            "e={e} L={l} {cfg:?}: violators {:?}",
                            rep.violators
                        );
                        instances += 1;
                        classes += rep.classes_checked;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{instances} instances, {classes} class checks, 0 violators"
    ))
}

fn arbitrary_values() -> Result<String, String> {
    for (a, t) in [(1u32, 2u32), (3, 4), (5, 3), (7, 1)] {
        let inst = arbitrary_value(a, t).map_err(|e| e.to_string())?;
        let q = Rat::new(a.into(), t.into());
        ensure!(inst.value == q, "a/t = {q}: got {}", inst.value);
        let lsq = inst.surface.self_intersection(inst.line_bundle);
        let max = bounds::maximal_bound(lsq, t).map_err(|e| e.to_string())?;
        ensure!(
            cmp_rat_root(&Rat::integer(a.into()), &max) != Ordering::Greater,
            "a/t = {q}: {max} < {a}"
        );
    }
    Ok("1/2, 3/4, 5/3, 7 reproduced".into())
}

fn rational_list() -> Result<String, String> {
    let mut checked = 0usize;
    for e in 0..=5 {
        let s = fe(e)?;
        for m in 1..=25 {
            for n in 1..=25 {
                let d = DivClass::new(m, n);
                if !s.is_irreducible_candidate(d) {
                    continue;
                }
                let case = classify_smooth_rational(&s, d).map_err(|err| err.to_string())?;
                let pa = s.arithmetic_genus(d).map_err(|err| err.to_string())?;
                ensure!(
                    case.is_rational() == pa.is_zero(),
                    "e={e} D={d}: case {case}, p_a = {pa}"
                );
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} classes, 0 mismatches"))
}

fn multiplicity_sweep() -> Result<String, String> {
    let rep = sweep_han_inequality(8, 12).map_err(|e| e.to_string())?;
    ensure!(
        rep.counterexamples.is_empty(),
        "counterexamples {:?}",
        rep.counterexamples
    );
    let witness = MultVector::new(vec![2, 2, 2]).map_err(|e| e.to_string())?;
    ensure!(
        rep.equality_cases.contains(&witness),
        "no equality at (2,2,2)"
    );
    Ok(format!(
        "{} vectors, {} applicable, 0 counterexamples, equality at {witness}",
        rep.vectors_seen, rep.applicable
    ))
}

fn proof_arithmetic() -> Result<String, String> {
    for e in 0..=5 {
        for b in 0..=30 {
            for n in 0..=30 {
                let defect = section_hodge_defect(e, b, n).map_err(|err| err.to_string())?;
                ensure!(defect == 0, "identity fails at e={e} b={b} n={n}");
            }
        }
    }
    for r in 4..=200i128 {
        ensure!(
            seshadri_quadratic(r, 2) >= 0 && seshadri_quadratic(r, r - 1) >= 0,
            "Q < 0 at r={r}"
        );
    }
    for r in 5..=200u32 {
        ensure!(conic_comparison_holds(r), "conic comparison fails at r={r}");
    }
    for lsq in 1..=20i128 {
        // the ratio grows with r and with |n - b|, so the corner is the hardest case
        for diff in 2..=12 {
            for r in (lsq as u32 + 5)..=(lsq as u32 + 60) {
                ensure!(
                    final_chain_holds(diff, r, lsq),
                    "final chain fails at L^2={lsq} n-b={diff} r={r}"
                );
            }
        }
    }
    Ok("identity, Q(2), Q(r-1), conic and final chain hold".into())
}

fn oracle_consistency() -> Result<String, String> {
    let mut instances = 0usize;
    for e in 0..=3i64 {
        let s = fe(e)?;
        for a in 1..=8i64 {
            for b in (a * e + 1).. {
                let l = DivClass::new(a, b);
                let lsq = s.self_intersection(l);
                if lsq > 8 {
                    break;
                }
                for r in (lsq + 5) as u32..=(lsq + 10) as u32 {
                    let params = SearchParams::defaults(&s, l, r);
                    let cert =
                        upper_bound_parallel(&s, l, r, &params).map_err(|err| err.to_string())?;
                    let lower =
                        bounds::general_lower_bound(lsq, r).map_err(|err| err.to_string())?;
                    ensure!(
                        cmp_rat_root(&cert.value, &lower) != Ordering::Less,
                        "e={e} L={l} r={r}: upper {} below {lower}",
                        cert.value
                    );
                    instances += 1;
                }
            }
        }
    }
    Ok(format!("{instances} instances, 0 violations"))
}

fn hodge_index() -> Result<String, String> {
    let mut pairs = 0usize;
    for e in 0..=5i64 {
        let s = fe(e)?;
        for la in 1..=15i64 {
            for lb in (la * e + 1)..=15 {
                let l = DivClass::new(la, lb);
                let lsq = s.self_intersection(l);
                for a in -15..=15 {
                    for b in -15..=15 {
                        let d = DivClass::new(a, b);
                        let ld = s.intersect(l, d);
                        ensure!(ld * ld >= lsq * s.self_intersection(d), "e={e} L={l} D={d}");
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, 0 violations"))
}

fn auxiliary_inequalities() -> Result<String, String> {
    let (seven_sixteenths, two_fifths) = (Rat::new(7, 16), Rat::new(2, 5));
    for r in 2..=10_000i128 {
        let q = Rat::new(r + 2, r * (r + 3));
        ensure!(q <= seven_sixteenths && q <= two_fifths, "r={r}: {q}");
    }
    for m in 2..=10_000i128 {
        ensure!(Rat::integer(m * m - m) >= Rat::new(2 * m * m, 5), "m={m}");
    }
    Ok("both ratios and m^2 - m >= 2m^2/5 hold up to 10^4".into())
}

fn k3_gate() -> Result<String, String> {
    for lsq in (2..=12i128).step_by(2) {
        for r in 1..=20u32 {
            let g = bounds::k3_lower_bound(lsq, r).map_err(|e| e.to_string())?;
            let expected = i128::from(r) >= lsq.max(2);
            ensure!(g.is_guaranteed() == expected, "L^2={lsq} r={r}: {g:?}");
            if let Guarantee::Guaranteed(v) = g {
                let general = bounds::general_lower_bound(lsq, r).map_err(|e| e.to_string())?;
                ensure!(v == general, "L^2={lsq} r={r}: {v} != {general}");
            }
        }
    }
    Ok("guaranteed exactly when r >= max(L^2, 2)".into())
}
