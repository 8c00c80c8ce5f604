//! Argument parsing and dispatch for the `seshadri` binary.
//!
//! Exit status: 0 on success, 1 on a parse or precondition error, 2 when a
//! verification finds a failure.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use seshadri_core::bounds::{self, Guarantee};
use seshadri_core::oracle::{scroll_exact_value, verify_theorem_r_le_e};
use seshadri_core::ratcurves::{classify_smooth_rational, guaranteed_bound_rational_ruled};
use seshadri_core::seshadri::{arbitrary_value, scroll, special_points};
use seshadri_core::{
    DivClass, Error, PointConfig, RootVal, RuledSurface, SearchParams, SeshadriResult,
};

use crate::parallel::upper_bound_parallel;
use crate::report::{self, Report};
use crate::suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "seshadri",
    version,
    about = "Exact multi-point Seshadri constants on ruled surfaces"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also print 12-significant-digit decimal approximations.
    #[arg(long, global = true)]
    approx: bool,
    /// Genus of the base curve of the ruled surface.
    #[arg(long, global = true, default_value_t = 0)]
    genus: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct ClassArgs {
    /// Invariant e of the ruled surface.
    e: i64,
    /// Coefficient of C0.
    a: i64,
    /// Coefficient of the fibre f.
    b: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Intersection number of a1*C0+b1*f and a2*C0+b2*f.
    #[command(allow_negative_numbers = true)]
    Intersect {
        e: i64,
        a1: i64,
        b1: i64,
        a2: i64,
        b2: i64,
    },
    /// Ampleness of a*C0+b*f.
    #[command(allow_negative_numbers = true)]
    Ample(ClassArgs),
    /// Dimension of the space of sections.
    #[command(allow_negative_numbers = true)]
    H0(ClassArgs),
    /// Arithmetic genus and Euler characteristic.
    #[command(allow_negative_numbers = true)]
    Genus(ClassArgs),
    /// Place a class on the list of smooth rational curves.
    #[command(allow_negative_numbers = true)]
    Classify(ClassArgs),
    /// Exact Seshadri constants.
    #[command(subcommand)]
    Seshadri(SeshadriCommand),
    /// General, fibration and maximal bounds from L^2 and r.
    Bounds {
        lsq: i64,
        r: u32,
        /// Also apply the K3 gate r >= max(L^2, 2).
        #[arg(long)]
        k3: bool,
    },
    /// Whether the general bound is guaranteed on a Hirzebruch surface.
    Guarantee {
        #[command(flatten)]
        class: ClassArgs,
        r: u32,
    },
    /// Finite searches for upper bounds and certificates.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Reproduction suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
enum SeshadriCommand {
    /// epsilon at r <= e points, t on one fibre and s on C0.
    Exact {
        #[command(flatten)]
        class: ClassArgs,
        r: u32,
        t: u32,
        s: u32,
    },
    /// The scroll attaining (r-1)/r at r very general points.
    Scroll { r: u32 },
    /// A polarized surface and points with epsilon = a/t.
    Anyq { a: u32, t: u32 },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Smallest L.D / sum(m) over an explicit box of classes and multiplicities.
    Search {
        #[command(flatten)]
        class: ClassArgs,
        r: u32,
        #[arg(long)]
        max_a: Option<u32>,
        #[arg(long)]
        max_b: Option<u32>,
        #[arg(long)]
        max_mult: Option<u32>,
    },
    /// Classwise check of the r <= e formula: L.D / (r alpha) >= epsilon.
    #[command(name = "verify-thm31")]
    VerifyThm31 {
        #[command(flatten)]
        class: ClassArgs,
        r: u32,
        t: u32,
        s: u32,
        /// Cap on alpha (default 12).
        #[arg(long)]
        max_a: Option<u32>,
        /// Cap on beta (default 12e+12).
        #[arg(long)]
        max_b: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Run every reproduction criterion and print one line per criterion.
    Paper,
}

/// A report plus the exit status it implies.
struct Outcome {
    report: Report,
    status: i32,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Outcome {
        Outcome {
            report,
            status: EXIT_OK,
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_PRECONDITION
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(Outcome { report, status }) => {
            let text = if cli.json {
                report.render_json(cli.approx)
            } else {
                report.render_text(cli.approx)
            };
            let _ = out.write_all(text.as_bytes());
            status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BoundsDidNotMeet { .. } => EXIT_VERIFICATION,
                _ => EXIT_PRECONDITION,
            }
        }
    }
}

fn surface(cli: &Cli, e: i64) -> Result<RuledSurface, Error> {
    RuledSurface::new(e, cli.genus)
}

fn echo_class(rep: &mut Report, c: &ClassArgs, cli: &Cli) {
    rep.input("e", c.e)
        .input("a", c.a)
        .input("b", c.b)
        .input("genus", cli.genus);
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Intersect { e, a1, b1, a2, b2 } => {
            let s = surface(cli, *e)?;
            let (d1, d2) = (DivClass::new(*a1, *b1), DivClass::new(*a2, *b2));
            let n = s.intersect(d1, d2);
            let mut rep = Report::new("intersect");
            rep.input("e", *e)
                .input("genus", cli.genus)
                .input("d1", report::class(d1))
                .input("d2", report::class(d2));
            rep.field("intersection", report::int(n))
                .line(format!("({d1}).({d2}) = {n}"));
            Ok(rep.into())
        }
        Command::Ample(c) => {
            let s = surface(cli, c.e)?;
            let d = DivClass::new(c.a, c.b);
            let ample = s.is_ample(d);
            let mut rep = Report::new("ample");
            echo_class(&mut rep, c, cli);
            rep.field("ample", ample)
                .field("self_intersection", report::int(s.self_intersection(d)));
            rep.line(format!("{d} is {}ample", if ample { "" } else { "not " }));
            Ok(rep.into())
        }
        Command::H0(c) => {
            let s = surface(cli, c.e)?;
            let d = DivClass::new(c.a, c.b);
            let h0 = s.h0(d)?;
            let mut rep = Report::new("h0");
            echo_class(&mut rep, c, cli);
            rep.field("h0", report::int(h0))
                .line(format!("h0({d}) = {h0}"));
            Ok(rep.into())
        }
        Command::Genus(c) => {
            let s = surface(cli, c.e)?;
            let d = DivClass::new(c.a, c.b);
            let (pa, chi) = (s.arithmetic_genus(d)?, s.chi(d)?);
            let mut rep = Report::new("genus");
            echo_class(&mut rep, c, cli);
            rep.field("arithmetic_genus", report::rat(&pa))
                .field("chi", report::rat(&chi));
            rep.line(format!("p_a({d}) = {pa}"))
                .line(format!("chi({d}) = {chi}"));
            Ok(rep.into())
        }
        Command::Classify(c) => {
            let s = surface(cli, c.e)?;
            let d = DivClass::new(c.a, c.b);
            let case = classify_smooth_rational(&s, d)?;
            let mut rep = Report::new("classify");
            echo_class(&mut rep, c, cli);
            rep.field("case", case.to_string())
                .field("rational", case.is_rational());
            if let Some(n) = case.case_number() {
                rep.field("case_number", n);
            }
            rep.line(format!("case {case}"));
            Ok(rep.into())
        }
        Command::Seshadri(sub) => seshadri(cli, sub),
        Command::Bounds { lsq, r, k3 } => bounds_cmd(i128::from(*lsq), *r, *k3),
        Command::Guarantee { class: c, r } => {
            let s = surface(cli, c.e)?;
            let l = DivClass::new(c.a, c.b);
            let g = guaranteed_bound_rational_ruled(&s, l, *r)?;
            let lsq = s.self_intersection(l);
            let mut rep = Report::new("guarantee");
            echo_class(&mut rep, c, cli);
            rep.input("r", *r)
                .field("self_intersection", report::int(lsq));
            guarantee_fields(&mut rep, &g, &format!("r >= L^2 + 5 = {}", lsq + 5));
            Ok(rep.into())
        }
        Command::Oracle(sub) => oracle(cli, sub),
        Command::Verify(VerifyCommand::Paper) => Ok(verify_paper()),
    }
}

fn guarantee_fields(rep: &mut Report, g: &Guarantee, needs: &str) {
    match g {
        Guarantee::Guaranteed(v) => {
            rep.field("guaranteed", true)
                .field("lower_bound", report::root(v));
            rep.line(format!("guaranteed: epsilon >= {v}"))
                .approx("lower bound", v.to_f64());
        }
        Guarantee::NoGuarantee => {
            rep.field("guaranteed", false);
            rep.line(format!("no guarantee: needs {needs}"));
        }
    }
}

fn epsilon_fields(rep: &mut Report, res: &SeshadriResult) {
    rep.field("epsilon", report::rat(&res.value))
        .field("certificate", res.certificate.to_string());
    rep.line(format!("epsilon = {}", res.value))
        .line(format!("certificate: {}", res.certificate));
    rep.approx("epsilon", res.value.to_f64());
}

fn seshadri(cli: &Cli, sub: &SeshadriCommand) -> Result<Outcome, Error> {
    match sub {
        SeshadriCommand::Exact { class: c, r, t, s } => {
            let surf = surface(cli, c.e)?;
            let cfg = PointConfig::new(*r, *t, *s)?;
            let res = special_points(&surf, DivClass::new(c.a, c.b), cfg)?;
            let mut rep = Report::new("seshadri exact");
            echo_class(&mut rep, c, cli);
            rep.input("r", *r).input("t", *t).input("s", *s);
            epsilon_fields(&mut rep, &res);
            Ok(rep.into())
        }
        SeshadriCommand::Scroll { r } => {
            let inst = scroll(*r)?;
            let params = SearchParams::defaults(&inst.surface, inst.line_bundle, *r);
            let res = scroll_exact_value(*r, &params)?;
            let mut rep = Report::new("seshadri scroll");
            rep.input("r", *r);
            rep.field("e", inst.surface.invariant())
                .field("line_bundle", report::class(inst.line_bundle));
            epsilon_fields(&mut rep, &res);
            rep.line(format!(
                "surface F_{}, L = {}",
                inst.surface.invariant(),
                inst.line_bundle
            ));
            Ok(rep.into())
        }
        SeshadriCommand::Anyq { a, t } => {
            let inst = arbitrary_value(*a, *t)?;
            let mut rep = Report::new("seshadri anyq");
            rep.input("a", *a).input("t", *t);
            rep.field("e", inst.surface.invariant())
                .field("line_bundle", report::class(inst.line_bundle))
                .field("points_on_fibre", inst.config.t())
                .field("epsilon", report::rat(&inst.value));
            rep.line(format!("epsilon = {}", inst.value)).line(format!(
                "surface F_{}, L = {}, {} point(s) on one fibre",
                inst.surface.invariant(),
                inst.line_bundle,
                inst.config.t()
            ));
            rep.approx("epsilon", inst.value.to_f64());
            Ok(rep.into())
        }
    }
}

fn bounds_cmd(lsq: i128, r: u32, k3: bool) -> Result<Outcome, Error> {
    let b = bounds::bound_report(lsq, r)?;
    let mut rep = Report::new("bounds");
    rep.input("lsq", report::int(lsq))
        .input("r", r)
        .input("k3", k3);
    let ordering = |o| Value::from(report::ordering_symbol(o));
    rep.field("general_bound", report::root(&b.general_bound))
        .field("ss_bound", report::root(&b.ss_bound))
        .field("max_bound", report::root(&b.max_bound))
        .field("general_vs_ss", ordering(b.general_vs_ss))
        .field("general_vs_max", ordering(b.general_vs_max))
        .field("ss_vs_max", ordering(b.ss_vs_max));
    let show = RootVal::to_simplified_string;
    rep.line(format!("general bound = {}", show(&b.general_bound)))
        .line(format!("fibration bound = {}", show(&b.ss_bound)))
        .line(format!("maximal bound = {}", show(&b.max_bound)))
        .line(format!(
            "note: {} {} {}",
            show(&b.ss_bound),
            report::ordering_symbol(b.general_vs_ss.reverse()),
            show(&b.general_bound)
        ));
    rep.approx("general bound", b.general_bound.to_f64())
        .approx("fibration bound", b.ss_bound.to_f64())
        .approx("maximal bound", b.max_bound.to_f64());
    if k3 {
        let g = bounds::k3_lower_bound(lsq, r)?;
        let mut sub = Report::new("k3");
        guarantee_fields(&mut sub, &g, &format!("r >= max(L^2, 2) = {}", lsq.max(2)));
        rep.field("k3", Value::Object(sub.result().clone()));
        match g {
            Guarantee::Guaranteed(_) => rep.line("K3 gate: guaranteed"),
            Guarantee::NoGuarantee => {
                rep.line(format!("K3 gate: no guarantee, needs r >= {}", lsq.max(2)))
            }
        };
    }
    Ok(rep.into())
}

fn oracle(cli: &Cli, sub: &OracleCommand) -> Result<Outcome, Error> {
    match sub {
        OracleCommand::Search {
            class: c,
            r,
            max_a,
            max_b,
            max_mult,
        } => {
            let s = surface(cli, c.e)?;
            let l = DivClass::new(c.a, c.b);
            let d = SearchParams::defaults(&s, l, *r);
            let params = SearchParams::new(
                max_a.unwrap_or(d.max_a),
                max_b.unwrap_or(d.max_b),
                max_mult.unwrap_or(d.max_total_mult),
            )?;
            let cert = upper_bound_parallel(&s, l, *r, &params)?;
            let mut rep = Report::new("oracle search");
            echo_class(&mut rep, c, cli);
            rep.input("r", *r)
                .input("max_a", params.max_a)
                .input("max_b", params.max_b)
                .input("max_mult", params.max_total_mult);
            rep.field("upper_bound", report::rat(&cert.value))
                .field("class", report::class(cert.class))
                .field("mults", report::mults(&cert.mults));
            rep.line(format!("upper bound = {}", cert.value))
                .line(format!(
                    "certificate: {} with multiplicities {}",
                    cert.class, cert.mults
                ));
            rep.approx("upper bound", cert.value.to_f64());
            Ok(rep.into())
        }
        OracleCommand::VerifyThm31 {
            class: c,
            r,
            t,
            s,
            max_a,
            max_b,
        } => {
            let surf = surface(cli, c.e)?;
            let l = DivClass::new(c.a, c.b);
            let cfg = PointConfig::new(*r, *t, *s)?;
            let default_b = u32::try_from(c.e.max(0))
                .unwrap_or(u32::MAX)
                .saturating_mul(12)
                .saturating_add(12);
            let params = SearchParams::new(max_a.unwrap_or(12), max_b.unwrap_or(default_b), 1)?;
            let rep31 = verify_theorem_r_le_e(&surf, l, cfg, &params)?;
            let mut rep = Report::new("oracle verify-thm31");
            echo_class(&mut rep, c, cli);
            rep.input("r", *r)
                .input("t", *t)
                .input("s", *s)
                .input("max_a", params.max_a)
                .input("max_b", params.max_b);
            epsilon_fields(&mut rep, &rep31.epsilon);
            let violators: Vec<Value> = rep31.violators.iter().map(|&d| report::class(d)).collect();
            rep.field("classes_checked", rep31.classes_checked)
                .field("violators", violators);
            rep.line(format!("classes checked = {}", rep31.classes_checked));
            if let Some((d, w)) = &rep31.worst {
                rep.field(
                    "worst",
                    serde_json::json!({ "class": report::class(*d), "ratio": report::rat(w) }),
                );
                rep.line(format!("smallest L.D/(r alpha) = {w} at {d}"));
            }
            let status = if rep31.violators.is_empty() {
                rep.line("violators: none");
                EXIT_OK
            } else {
                let list: Vec<String> = rep31.violators.iter().map(DivClass::to_string).collect();
                rep.line(format!("violators: {}", list.join(", ")));
                EXIT_VERIFICATION
            };
            Ok(Outcome {
                report: rep,
                status,
            })
        }
    }
}

fn verify_paper() -> Outcome {
    let outcomes = suite::run_all();
    let mut rep = Report::new("verify paper");
    let mut items = Vec::new();
    for o in &outcomes {
        rep.line(o.to_string());
        items.push(serde_json::json!({
            "id": o.id,
            "name": o.name,
            "passed": o.passed,
            "detail": o.detail,
        }));
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let all = passed == outcomes.len();
    rep.field("criteria", items).field("all_passed", all);
    rep.line(format!("{passed}/{} criteria passed", outcomes.len()));
    Outcome {
        report: rep,
        status: if all { EXIT_OK } else { EXIT_VERIFICATION },
    }
}
