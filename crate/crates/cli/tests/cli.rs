use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

fn seshadri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seshadri"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn scroll_five() {
    let o = seshadri(&["seshadri", "scroll", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("epsilon = 4/5"));
}

#[test]
fn conic_on_f1() {
    let o = seshadri(&["classify", "1", "2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "case (6)\n");
}

#[test]
fn plane_bounds_note() {
    let o = seshadri(&["bounds", "1", "2"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(text.contains("general bound = sqrt(2/5)"), "{text}");
    assert!(text.contains("1/2 < sqrt(2/5)"), "{text}");
    assert!(!text.contains("approximation"));
}

#[test]
fn approximations_are_labeled() {
    let text = stdout(&seshadri(&["bounds", "1", "2", "--approx"]));
    assert!(
        text.contains("general bound ~ 0.632455532034 (approximation)"),
        "{text}"
    );
}

#[test]
fn exit_status_classes() {
    // precondition: r > e
    assert_eq!(
        seshadri(&["seshadri", "exact", "3", "2", "7", "4", "1", "0"])
            .status
            .code(),
        Some(1)
    );
    // not ample
    assert_eq!(
        seshadri(&["oracle", "search", "2", "1", "2", "3"])
            .status
            .code(),
        Some(1)
    );
    // malformed integer and unknown subcommand
    assert_eq!(seshadri(&["h0", "1", "x", "2"]).status.code(), Some(1));
    assert_eq!(seshadri(&["frobnicate"]).status.code(), Some(1));
    // odd L^2 is not a K3 degree
    assert_eq!(
        seshadri(&["bounds", "3", "2", "--k3"]).status.code(),
        Some(1)
    );
    assert_eq!(seshadri(&["--help"]).status.code(), Some(0));
    let err = String::from_utf8(seshadri(&["seshadri", "scroll", "2"]).stderr).unwrap();
    assert!(err.contains("r >= 3"), "{err}");
}

#[test]
fn k3_gate_from_command_line() {
    let yes = stdout(&seshadri(&["bounds", "4", "5", "--k3"]));
    assert!(yes.contains("K3 gate: guaranteed"), "{yes}");
    let no = stdout(&seshadri(&["bounds", "6", "5", "--k3"]));
    assert!(no.contains("K3 gate: no guarantee, needs r >= 6"), "{no}");
}

#[test]
fn guarantee_threshold() {
    // F_0, L = C0 + f: L^2 = 2, guaranteed from r = 7 with 9 * 2 / (10 * 7)
    assert!(stdout(&seshadri(&["guarantee", "0", "1", "1", "6"])).starts_with("no guarantee"));
    assert_eq!(
        stdout(&seshadri(&["guarantee", "0", "1", "1", "7"])),
        "guaranteed: epsilon >= sqrt(9/35)\n"
    );
}

#[test]
fn anyq_and_oracle() {
    assert_eq!(
        stdout(&seshadri(&["seshadri", "anyq", "3", "4"]))
            .lines()
            .next(),
        Some("epsilon = 3/4")
    );
    let o = seshadri(&["oracle", "search", "1", "1", "2", "4"]);
    assert_eq!(stdout(&o).lines().next(), Some("upper bound = 3/4"));
    let o = seshadri(&["oracle", "verify-thm31", "4", "3", "25", "4", "4", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("epsilon = 3/4\n"));
}

#[test]
fn verify_paper_passes() {
    let o = seshadri(&["verify", "paper"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 11);
    assert!(text.ends_with("11/11 criteria passed\n"));
}

fn assert_round_trip(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = seshadri(&full);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    assert_eq!(
        serde_json::to_string_pretty(&v).unwrap() + "\n",
        text,
        "{args:?}"
    );
    v
}

#[test]
fn json_round_trips_for_every_subcommand() {
    let cases: &[&[&str]] = &[
        &["intersect", "2", "1", "-2", "0", "1"],
        &["ample", "1", "2", "3"],
        &["h0", "2", "2", "5"],
        &["genus", "0", "2", "2"],
        &["classify", "1", "2", "2"],
        &["seshadri", "exact", "3", "2", "7", "3", "2", "1"],
        &["seshadri", "scroll", "6"],
        &["seshadri", "anyq", "5", "3"],
        &["bounds", "1", "2"],
        &["--approx", "bounds", "8", "9", "--k3"],
        &["guarantee", "1", "1", "2", "8"],
        &["oracle", "search", "0", "1", "1", "3", "--max-mult", "4"],
        &["oracle", "verify-thm31", "2", "1", "3", "2", "1", "1"],
    ];
    for args in cases {
        assert_round_trip(args);
    }
    let v = assert_round_trip(&["seshadri", "scroll", "5"]);
    assert_eq!(v["result"]["epsilon"], "4/5");
    assert_eq!(v["inputs"]["r"], 5);
    let v = assert_round_trip(&["bounds", "1", "2"]);
    assert_eq!(v["result"]["general_bound"], "sqrt(2/5)");
    assert_eq!(v["result"]["general_vs_ss"], ">");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn library_json_round_trips(e in 0i64..5, a in -3i64..6, b in -3i64..20, which in 0usize..4) {
        let (e, a, b) = (e.to_string(), a.to_string(), b.to_string());
        let cmd = ["ample", "h0", "genus", "classify"][which];
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = seshadri_cli::cli::run(["seshadri", "--json", cmd, &e, &a, &b], &mut out, &mut err);
        prop_assume!(code == 0);
        let text = String::from_utf8(out).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    }

    #[test]
    fn bounds_json_round_trips(lsq in 1i64..200, r in 1u32..300) {
        let (l, rs) = (lsq.to_string(), r.to_string());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = seshadri_cli::cli::run(["seshadri", "--json", "--approx", "bounds", &l, &rs], &mut out, &mut err);
        prop_assert_eq!(code, 0);
        let text = String::from_utf8(out).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    }
}
