//! Integration tests for the CLI surface: parser round-trips, report schema
//! and determinism, and command exit behaviour.

use std::process::Command;

use proptest::prelude::*;

use supercliff::dims::Dims;
use supercliff::scalar::Scalar;
use supercliff::superexpr::SuperExpr;

#[path = "../src/parser.rs"]
mod parser;

fn dims() -> Dims {
    Dims::hermitian(2, 1)
}

#[derive(Clone, Debug)]
enum Atom {
    X(usize),
    Xg(usize),
    E(usize),
    Eg(usize),
    Int(i64),
    I,
    Radial(i64),
}

fn atom_strategy() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (0usize..4).prop_map(Atom::X),
        (0usize..2).prop_map(Atom::Xg),
        (0usize..4).prop_map(Atom::E),
        (0usize..2).prop_map(Atom::Eg),
        (-3i64..4).prop_map(Atom::Int),
        Just(Atom::I),
        (-3i64..0).prop_map(Atom::Radial),
    ]
}

fn build(atoms: &[Atom]) -> SuperExpr {
    let d = dims();
    let mut acc = SuperExpr::one(d);
    for a in atoms {
        let f = match a {
            Atom::X(j) => SuperExpr::x(d, *j).unwrap(),
            Atom::Xg(j) => SuperExpr::xg(d, *j).unwrap(),
            Atom::E(j) => SuperExpr::e(d, *j).unwrap(),
            Atom::Eg(j) => SuperExpr::eg(d, *j).unwrap(),
            Atom::Int(k) => SuperExpr::scalar(d, Scalar::from_int(*k)),
            Atom::I => SuperExpr::scalar(d, Scalar::i()),
            Atom::Radial(l) => SuperExpr::radial(d, supercliff::scalar::Rat64::new(*l, 1)),
        };
        acc = acc.mul(&f);
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parse_render_roundtrip(
        terms in prop::collection::vec(prop::collection::vec(atom_strategy(), 0..4), 1..4)
    ) {
        let d = dims();
        let expr = terms.iter().fold(SuperExpr::zero(d), |acc, t| acc.add(&build(t)));
        let rendered = format!("{expr}");
        let reparsed = parser::parse(d, &rendered)
            .unwrap_or_else(|e| panic!("canonical rendering `{rendered}` failed to parse: {e}"));
        prop_assert_eq!(reparsed, expr);
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_supercliff"))
}

#[test]
fn verify_algebra_suite_passes_and_writes_schema_stable_json() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("supercliff_algebra_1.json");
    let p2 = dir.join("supercliff_algebra_2.json");
    for p in [&p1, &p2] {
        let out = bin()
            .args(["verify", "algebra", "--dims", "2,1", "--json"])
            .arg(p)
            .output()
            .expect("run verify");
        assert!(out.status.success(), "verify algebra failed: {:?}", out);
    }
    let v1: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p1).unwrap()).unwrap();
    let v2: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&p2).unwrap()).unwrap();

    // schema fields
    assert!(v1.get("suite").is_some());
    assert!(v1["config"].get("dims").is_some());
    assert!(v1["config"].get("phase").is_some());
    assert!(v1["config"]["quadrature"].get("tol").is_some());
    for case in v1["cases"].as_array().unwrap() {
        for field in ["name", "status", "expected", "actual", "abs_err", "runtime_ms"] {
            assert!(case.get(field).is_some(), "missing field {field}");
        }
        assert_eq!(case["status"], "pass");
    }

    // determinism apart from runtime fields
    let strip = |mut v: serde_json::Value| {
        for case in v["cases"].as_array_mut().unwrap() {
            case["runtime_ms"] = 0.into();
        }
        v
    };
    assert_eq!(strip(v1), strip(v2));
}

#[test]
fn unknown_suite_fails() {
    let out = bin().args(["verify", "nonsense"]).output().expect("run");
    assert!(!out.status.success());
}

#[test]
fn integrate_command_computes_superball_volume() {
    let out = bin()
        .args([
            "integrate",
            "--dims",
            "2,1",
            "--phase",
            "supersphere:1",
            "--mode",
            "domain",
            "--integrand",
            "1",
        ])
        .output()
        .expect("run integrate");
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("pi^1"), "expected πR² in output, got: {text}");
}

#[test]
fn bm_exterior_point_gives_zero() {
    let out = bin()
        .args([
            "bm", "--dims", "2,1", "--radius", "1", "--F", "z1", "--y", "3,0,0,0", "--tol",
            "1e-6",
        ])
        .output()
        .expect("run bm");
    assert!(out.status.success(), "{:?}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("expected 0"), "{text}");
}

#[test]
fn parse_errors_surface_with_usage() {
    let out = bin()
        .args([
            "integrate",
            "--dims",
            "2,1",
            "--integrand",
            "x1 + $",
        ])
        .output()
        .expect("run integrate");
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse error"), "{err}");
}
