use std::process::Command;

use g2forge::catalog;
use g2forge::input::{load_bytes, parse_spec, InputError};
use g2forge::report::{analyze, to_json, to_markdown, AnalysisError, Mode, Report};
use g2forge::{CliError, EXIT_FAILED, EXIT_INTERNAL, EXIT_INVALID_INPUT, EXIT_PASS};
use g2forge_core::{AltForm, Scalar};
use tempfile::TempDir;

fn pointers(e: &InputError) -> Vec<&str> {
    e.issues().iter().map(|i| i.pointer.as_str()).collect()
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_g2forge"));
    c.env_remove("G2FORGE_FORMAT");
    c
}

fn write(dir: &TempDir, name: &str, body: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const NON_INTEGRABLE: &str = r#"{"name": "heis_x", "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]}"#;
const HEISENBERG: &str = r#"{"name": "heis", "brackets": [
    {"i": 1, "j": 2, "k": 7, "c": "-1"}, {"i": 3, "j": 4, "k": 7, "c": "-1"}, {"i": 5, "j": 6, "k": 7, "c": "-1"}]}"#;

#[test]
fn catalog_files_match_structure_equations() {
    let loaded = catalog::load("su2su2u1_standard_phi").unwrap();
    let d = |i: usize| loaded.algebra.d(&AltForm::basis(&[i]));
    assert_eq!(d(1), AltForm::basis(&[2, 3]));
    assert_eq!(d(2), -AltForm::basis(&[1, 3]));
    assert_eq!(d(3), AltForm::basis(&[1, 2]));
    assert_eq!(d(4), AltForm::basis(&[5, 6]));
    assert!(d(7).is_zero());
    for name in catalog::names() {
        let spec = parse_spec(catalog::source(name).unwrap().as_bytes()).unwrap();
        assert_eq!(spec.name, name);
        spec.load().unwrap();
    }
    assert!(catalog::load("nope").is_none());
}

#[test]
fn empty_brackets_give_the_abelian_algebra() {
    let loaded = load_bytes(br#"{"name": "flat", "brackets": []}"#).unwrap();
    assert!(loaded.algebra.is_abelian());
}

#[test]
fn input_errors_carry_json_pointers() {
    let e = parse_spec(br#"{"name": "x", "brackets": [{"i": 1, "j": 2, "k": 9, "c": "1"}]}"#).unwrap_err();
    assert_eq!(pointers(&e), ["/brackets/0/k"]);

    let e =
        parse_spec(br#"{"name": "x", "brackets": [{"i": 1, "j": 2, "k": 3, "c": "one"}], "extra": 1}"#).unwrap_err();
    assert_eq!(pointers(&e), ["/extra", "/brackets/0/c"]);

    let e = parse_spec(br#"{"brackets": [], "phi": [{"idx": [2, 1, 3], "c": "1"}]}"#).unwrap_err();
    assert_eq!(pointers(&e), ["/name", "/phi/0/idx"]);

    assert!(matches!(parse_spec(b"{not json"), Err(InputError::Json(_))));
    assert!(parse_spec(b"[]").is_err());
}

#[test]
fn jacobi_failures_name_the_triple() {
    // [e1,e2] = e3 and [e1,e3] = e1 give a cyclic sum −e3 on (e1,e2,e3)
    let e = load_bytes(
        br#"{"name": "bad", "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 1, "j": 3, "k": 1, "c": "1"}]}"#,
    )
    .unwrap_err();
    let text = e.to_string();
    assert!(
        text.contains("/brackets") && text.contains("Jacobi identity fails for (e1,e2,e3)"),
        "{text}"
    );
}

#[test]
fn forms_must_induce_the_identity_metric() {
    let e = load_bytes(br#"{"name": "bad", "brackets": [], "phi": [{"idx": [1, 2, 3], "c": "2"}]}"#).unwrap_err();
    assert_eq!(pointers(&e), ["/phi"]);
    let e = load_bytes(
        br#"{"name": "c", "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 2, "j": 1, "k": 3, "c": "1"}]}"#,
    )
    .unwrap_err();
    assert_eq!(pointers(&e), ["/brackets/1"]);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    for name in catalog::names() {
        let loaded = catalog::load(name).unwrap();
        let a = to_json(&analyze(&loaded, Mode::Exact).unwrap());
        let b = to_json(&analyze(&loaded, Mode::Exact).unwrap());
        assert_eq!(a, b, "{name}");
        let parsed: Report = serde_json::from_str(&a).unwrap();
        assert_eq!(to_json(&parsed), a, "{name}");
        let md = to_markdown(&parsed);
        for row in &parsed.identity_ledger {
            assert!(md.contains(&format!("| {} |", row.name)), "{name}: {}", row.name);
            assert!(a.contains(&format!("\"{}\"", row.name)));
        }
    }
}

#[test]
fn report_contents() {
    let r = analyze(&catalog::load("su2su2u1_phi_pi4").unwrap(), Mode::Exact).unwrap();
    assert!(r.passes());
    assert!(r.classification.balanced);
    assert_eq!(r.torsion.as_ref().unwrap().display, "e123 + e456");
    assert_eq!(r.lambda, "sqrt2");
    assert_eq!(r.norms.torsion_sq.as_deref(), Some("12"));

    let r = analyze(&catalog::load("bi_su2su2u1").unwrap(), Mode::Exact).unwrap();
    let bi = r.bi_g2.unwrap();
    assert!(bi.pass && bi.opposite_torsions);
    assert_eq!(bi.opposite_torsion, "-e123 - e456");

    let r = analyze(&catalog::load("abelian").unwrap(), Mode::Exact).unwrap();
    assert!(r.classification.parallel && r.curvature.unwrap().flat);
}

#[test]
fn non_integrable_and_unclosed_structures() {
    let r = analyze(&load_bytes(NON_INTEGRABLE.as_bytes()).unwrap(), Mode::Exact).unwrap();
    assert!(!r.passes());
    assert!(!r.ledger_entry("integrability").unwrap().pass);
    assert!(r.torsion.is_none() && r.curvature.is_none());

    // integrable, curved, dT ≠ 0: the battery passes and the soliton section is omitted
    let r = analyze(&load_bytes(HEISENBERG.as_bytes()).unwrap(), Mode::Exact).unwrap();
    assert!(r.passes());
    assert!(r.soliton.is_none());
    assert!(!r.curvature.unwrap().closed_torsion);
}

#[test]
fn float_mode_reproduces_exact_verdicts() {
    for name in catalog::names() {
        let loaded = catalog::load(name).unwrap();
        let exact = analyze(&loaded, Mode::Exact).unwrap();
        let float = analyze(&loaded, Mode::Float { tol: 1e-9 }).unwrap();
        assert_eq!(exact.verdict, float.verdict, "{name}");
        assert_eq!(exact.classification, float.classification);
        assert_eq!(float.mode, "float");
    }
    let r = analyze(
        &load_bytes(NON_INTEGRABLE.as_bytes()).unwrap(),
        Mode::Float { tol: 1e-9 },
    )
    .unwrap();
    assert!(!r.passes());
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = write(&dir, "good.json", catalog::source("su2su2u1_phi0").unwrap());
    let bad_index = write(
        &dir,
        "bad.json",
        r#"{"name": "x", "brackets": [{"i": 1, "j": 2, "k": 9, "c": "1"}]}"#,
    );
    let non_int = write(&dir, "nonint.json", NON_INTEGRABLE);

    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    let p = |p: &std::path::PathBuf| p.to_str().unwrap().to_string();

    assert_eq!(code(&["analyze", &p(&good)]), Some(EXIT_PASS));
    assert_eq!(code(&["battery", &p(&good)]), Some(EXIT_PASS));
    assert_eq!(code(&["analyze", &p(&non_int)]), Some(EXIT_FAILED));
    assert_eq!(code(&["battery", &p(&non_int)]), Some(EXIT_INVALID_INPUT));
    assert_eq!(code(&["analyze", &p(&bad_index)]), Some(EXIT_INVALID_INPUT));
    assert_eq!(code(&["analyze", "/nonexistent/file.json"]), Some(EXIT_INVALID_INPUT));
    assert_eq!(code(&["catalog", "run", "nope"]), Some(EXIT_INVALID_INPUT));
    assert_eq!(
        code(&["catalog", "run", "abelian", "--mode", "bogus"]),
        Some(EXIT_INVALID_INPUT)
    );
    assert_eq!(code(&["catalog", "list"]), Some(EXIT_PASS));
    assert_eq!(code(&["--help"]), Some(EXIT_PASS));

    let err = CliError::Analysis(AnalysisError::Inconsistent("∇φ ≠ 0".into()));
    assert_eq!(err.exit_code(), EXIT_INTERNAL);
}

#[test]
fn binary_output_is_byte_identical_and_honours_format_variable() {
    let run = |envs: &[(&str, &str)], args: &[&str]| {
        let mut c = bin();
        c.args(args);
        for (k, v) in envs {
            c.env(k, v);
        }
        c.output().unwrap().stdout
    };
    let a = run(&[], &["catalog", "run", "bi_su2su2u1"]);
    let b = run(&[], &["catalog", "run", "bi_su2su2u1"]);
    assert_eq!(a, b);
    assert!(a.starts_with(b"{"));

    let md = String::from_utf8(run(&[("G2FORGE_FORMAT", "md")], &["catalog", "run", "abelian"])).unwrap();
    assert!(md.starts_with("# abelian"));
    let json = run(
        &[("G2FORGE_FORMAT", "md")],
        &["catalog", "run", "abelian", "--format", "json"],
    );
    assert!(json.starts_with(b"{"));

    let list = String::from_utf8(run(&[], &["catalog", "list"])).unwrap();
    assert_eq!(list.lines().count(), catalog::ENTRIES.len());
}

#[test]
fn scalar_strings_in_reports_parse_back() {
    let r = analyze(&catalog::load("su2su2u1_phi_3pi4").unwrap(), Mode::Exact).unwrap();
    for term in &r.theta.terms {
        let c: Scalar = term.c.parse().unwrap();
        assert_eq!(c, Scalar::quadratic(0, -1));
    }
    assert_eq!(r.theta.display, "-sqrt2*e7");
}
