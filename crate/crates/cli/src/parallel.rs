//! Rayon front end for the oracle's upper-bound search.
//!
//! The class box is split by `a`; each worker scans its column with
//! [`best_certificate_for_class`] and the partial winners are combined
//! with `min` under the certificate order. That order is total, so the
//! result does not depend on scheduling.

use rayon::prelude::*;
use seshadri_core::oracle::{best_certificate_for_class, UpperBoundCert};
use seshadri_core::{DivClass, Error, Result, RuledSurface, SearchParams};

pub fn upper_bound_parallel(
    surface: &RuledSurface,
    l: DivClass,
    r: u32,
    params: &SearchParams,
) -> Result<UpperBoundCert> {
    (0..=params.max_a)
        .into_par_iter()
        .map(|a| column_best(surface, l, a, r, params))
        .try_reduce_with(|x, y| Ok(min_opt(x, y)))
        .unwrap_or(Ok(None))?
        .ok_or(Error::EmptySearchSpace)
}

fn column_best(
    surface: &RuledSurface,
    l: DivClass,
    a: u32,
    r: u32,
    params: &SearchParams,
) -> Result<Option<UpperBoundCert>> {
    let mut best = None;
    for b in 0..=params.max_b {
        let cert =
            best_certificate_for_class(surface, l, DivClass::new(a.into(), b.into()), r, params)?;
        best = min_opt(best, cert);
    }
    Ok(best)
}

fn min_opt(x: Option<UpperBoundCert>, y: Option<UpperBoundCert>) -> Option<UpperBoundCert> {
    match (x, y) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use seshadri_core::oracle::upper_bound_very_general;

    #[test]
    fn agrees_with_sequential_search() {
        for e in 0..=3 {
            let s = RuledSurface::rational(e).unwrap();
            for la in 1..=2 {
                for lb in (la * e + 1)..=(la * e + 3) {
                    let l = DivClass::new(la, lb);
                    for r in 1..=9 {
                        let p = SearchParams::defaults(&s, l, r);
                        assert_eq!(
                            upper_bound_parallel(&s, l, r, &p),
                            upper_bound_very_general(&s, l, r, &p)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn errors_propagate() {
        let s = RuledSurface::rational(2).unwrap();
        let l = DivClass::new(1, 2);
        let p = SearchParams::new(2, 2, 2).unwrap();
        assert_eq!(upper_bound_parallel(&s, l, 3, &p), Err(Error::NotAmple(l)));
    }
}
