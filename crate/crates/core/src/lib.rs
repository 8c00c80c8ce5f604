//! Exact multi-point Seshadri constants on ruled surfaces.
//!
//! Everything here is integer or rational arithmetic. Bounds of the form
//! `sqrt(q)` are carried as [`RootVal`]s and compared by squaring, so no
//! decision in this crate ever goes through floating point.
//!
//! The crate is `no_std` and only needs `alloc` (for arbitrary-precision
//! integers and multiplicity vectors). IO, the command line and structured
//! reports live in the `seshadri-cli` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod error;
pub mod exactnum;
pub mod numlat;
pub mod oracle;
pub mod ratcurves;
pub mod seshadri;

pub use bounds::{BoundReport, Guarantee, HanOutcome, MultVector};
pub use error::{Error, Result};
pub use exactnum::{cmp_rat_root, rat_cmp, root_cmp, Rat, RootVal};
pub use numlat::{DivClass, RuledSurface};
pub use oracle::{SearchParams, UpperBoundCert};
pub use ratcurves::{RationalCurveCase, Rigidity};
pub use seshadri::{Certificate, PointConfig, SeshadriResult};
