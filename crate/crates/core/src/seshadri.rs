//! Closed-form Seshadri constants on ruled surfaces.
//!
//! For `1 <= r <= e` the constant at any `r` points depends only on how many
//! of them share a fibre and how many lie on `C0`; at very general points it
//! is always `L.f`. The rational normal scrolls give the family with
//! `epsilon(X, L, r) = (r-1)/r`.

use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{cmp_rat_root, Rat};
use crate::numlat::{DivClass, RuledSurface};

/// Position summary of `r` distinct points: at most `t` on one fibre, `s` on `C0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PointConfig {
    r: u32,
    t: u32,
    s: u32,
}

impl PointConfig {
    pub fn new(r: u32, t: u32, s: u32) -> Result<PointConfig> {
        if r < 1 {
            return Err(Error::InvalidConfig("r must be >= 1"));
        }
        if t < 1 || t > r {
            return Err(Error::InvalidConfig("need 1 <= t <= r"));
        }
        if s > r {
            return Err(Error::InvalidConfig("need 0 <= s <= r"));
        }
        // a fibre meets C0 once, so it holds at most one of the C0-points
        if s >= 1 && t > r - s + 1 {
            return Err(Error::InvalidConfig("need t <= r - s + 1 when s >= 1"));
        }
        Ok(PointConfig { r, t, s })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Every valid `(t, s)` for `r` points.
    pub fn all_for(r: u32) -> impl Iterator<Item = PointConfig> {
        (1..=r).flat_map(move |t| (0..=r).filter_map(move |s| PointConfig::new(r, t, s).ok()))
    }
}

/// The curve (or result) that realizes a Seshadri value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A fibre through `t` of the points.
    FibreCurve {
        t: u32,
    },
    /// The section `C0` through `s` of the points.
    SectionC0 {
        s: u32,
    },
    /// A curve of the given class through `s` points with multiplicity one.
    ScrollDivisor {
        class: DivClass,
        s: u32,
    },
    TheoremTag(&'static str),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::FibreCurve { t } => write!(f, "fibre through {t} point(s)"),
            Certificate::SectionC0 { s } => write!(f, "section C0 through {s} point(s)"),
            Certificate::ScrollDivisor { class, s } => {
                write!(f, "curve {class} through {s} point(s)")
            }
            Certificate::TheoremTag(name) => f.write_str(name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeshadriResult {
    pub value: Rat,
    pub certificate: Certificate,
}

fn require_small_r(surface: &RuledSurface, l: DivClass, r: u32) -> Result<()> {
    if surface.invariant() <= 0 {
        return Err(Error::InvariantNotPositive(surface.invariant()));
    }
    if i64::from(r) > surface.invariant() {
        return Err(Error::TooManyPoints {
            r,
            e: surface.invariant(),
        });
    }
    if !surface.is_ample(l) {
        return Err(Error::NotAmple(l));
    }
    Ok(())
}

/// `epsilon(X, L, x_1..x_r) = min(L.f / t, L.C0 / s)` (just `L.f / t` when
/// `s = 0`), for `e > 0` and `r <= e`. Ties are certified by the fibre.
pub fn special_points(
    surface: &RuledSurface,
    l: DivClass,
    cfg: PointConfig,
) -> Result<SeshadriResult> {
    require_small_r(surface, l, cfg.r)?;
    let along_fibre = Rat::new(surface.intersect(l, DivClass::FIBRE), cfg.t.into());
    let fibre = SeshadriResult {
        value: along_fibre,
        certificate: Certificate::FibreCurve { t: cfg.t },
    };
    if cfg.s == 0 {
        return Ok(fibre);
    }
    let along_c0 = Rat::new(surface.intersect(l, DivClass::C0), cfg.s.into());
    if along_c0 < fibre.value {
        Ok(SeshadriResult {
            value: along_c0,
            certificate: Certificate::SectionC0 { s: cfg.s },
        })
    } else {
        Ok(fibre)
    }
}

/// `L.f / t` when additionally `b >= 2ae + 1`.
pub fn special_points_simplified(
    surface: &RuledSurface,
    l: DivClass,
    cfg: PointConfig,
) -> Result<SeshadriResult> {
    require_small_r(surface, l, cfg.r)?;
    let ae = i128::from(l.a) * i128::from(surface.invariant());
    if i128::from(l.b) < 2 * ae + 1 {
        return Err(Error::Hypothesis("b >= 2ae + 1"));
    }
    Ok(SeshadriResult {
        value: Rat::new(surface.intersect(l, DivClass::FIBRE), cfg.t.into()),
        certificate: Certificate::FibreCurve { t: cfg.t },
    })
}

/// A polarized surface with points realizing a prescribed Seshadri value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArbitraryValueInstance {
    pub surface: RuledSurface,
    pub line_bundle: DivClass,
    pub r: u32,
    pub config: PointConfig,
    pub value: Rat,
}

/// For `q = a/t`: the Hirzebruch surface with `e = t`, `L = a C0 + (2at+1) f`
/// and `t` points on a single fibre, where the Seshadri constant is `a/t`.
pub fn arbitrary_value(a: u32, t: u32) -> Result<ArbitraryValueInstance> {
    if a < 1 || t < 1 {
        return Err(Error::InvalidArgument("need a >= 1 and t >= 1"));
    }
    let surface = RuledSurface::rational(t.into())?;
    let b = 2 * i64::from(a) * i64::from(t) + 1;
    let line_bundle = DivClass::new(a.into(), b);
    let config = PointConfig::new(t, t, 0)?;
    let value = special_points_simplified(&surface, line_bundle, config)?.value;
    Ok(ArbitraryValueInstance {
        surface,
        line_bundle,
        r: t,
        config,
        value,
    })
}

/// `epsilon(X, L, r) = L.f` at very general points when `1 <= r <= e`.
///
/// Panics if the value is not submaximal, which would contradict
/// `L^2 = a(2b - ae) > a^2 e >= a^2 r`.
pub fn very_general_small_r(surface: &RuledSurface, l: DivClass, r: u32) -> Result<SeshadriResult> {
    if r < 1 {
        return Err(Error::InvalidArgument("number of points r must be >= 1"));
    }
    // very general points: none on C0, no two on a fibre
    let result = special_points(surface, l, PointConfig::new(r, 1, 0)?)?;
    let max = crate::bounds::maximal_bound(surface.self_intersection(l), r)?;
    assert_eq!(
        cmp_rat_root(&result.value, &max),
        Ordering::Less,
        "L.f must be submaximal"
    );
    Ok(result)
}

/// The rational normal scroll realizing `epsilon(X, L, r) = (r-1)/r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollInstance {
    pub surface: RuledSurface,
    pub line_bundle: DivClass,
    pub r: u32,
    pub value: Rat,
}

/// `L = C0 + n f` on `F_e` with `r = 2n - e + 1`, taking `e = 0` for odd `r`
/// and `e = 1` for even `r`.
pub fn scroll(r: u32) -> Result<ScrollInstance> {
    if r < 3 {
        return Err(Error::InvalidArgument("scroll family needs r >= 3"));
    }
    let e = i64::from(r.is_multiple_of(2));
    let n = (i64::from(r) - 1 + e) / 2;
    debug_assert!(n > e && 2 * n - e + 1 == i64::from(r));
    let surface = RuledSurface::rational(e)?;
    let r_int = i128::from(r);
    Ok(ScrollInstance {
        surface,
        line_bundle: DivClass::new(1, n),
        r,
        value: Rat::new(r_int - 1, r_int),
    })
}
