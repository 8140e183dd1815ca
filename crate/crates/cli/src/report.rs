//! Machine-readable suite reports.
//!
//! Schema: `{suite, config: {dims, phase, quadrature}, cases: [{name, status,
//! expected, actual, abs_err, runtime_ms}]}`. Identical invocations produce
//! byte-identical JSON apart from the runtime fields.

use std::path::Path;
use std::time::Duration;

use serde::Serialize;

#[derive(Serialize, Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub config: Config,
    pub cases: Vec<Case>,
}

#[derive(Serialize, Clone, Debug)]
pub struct Config {
    pub dims: String,
    pub phase: String,
    pub quadrature: Quadrature,
}

#[derive(Serialize, Clone, Debug)]
pub struct Quadrature {
    pub tol: f64,
}

#[derive(Serialize, Clone, Debug)]
pub struct Case {
    pub name: String,
    pub status: String,
    pub expected: String,
    pub actual: String,
    pub abs_err: f64,
    pub runtime_ms: u64,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.status == "pass")
    }
}

pub fn case(
    name: impl Into<String>,
    pass: bool,
    expected: impl Into<String>,
    actual: impl Into<String>,
    abs_err: f64,
    runtime: Duration,
) -> Case {
    Case {
        name: name.into(),
        status: if pass { "pass" } else { "fail" }.into(),
        expected: expected.into(),
        actual: actual.into(),
        abs_err,
        runtime_ms: runtime.as_millis() as u64,
    }
}

pub fn single_case_report(
    suite: &str,
    dims: (usize, usize),
    phase: &str,
    tol: f64,
    name: &str,
    expected: &str,
    actual: &str,
    abs_err: f64,
    runtime: Duration,
    pass: bool,
) -> SuiteReport {
    SuiteReport {
        suite: suite.into(),
        config: Config {
            dims: format!("{},{}", dims.0, dims.1),
            phase: phase.into(),
            quadrature: Quadrature { tol },
        },
        cases: vec![case(name, pass, expected, actual, abs_err, runtime)],
    }
}

/// Prints the human view and optionally writes the JSON file.
pub fn emit(report: &SuiteReport, json: Option<&Path>) -> std::io::Result<()> {
    for c in &report.cases {
        println!(
            "[{}] {} — expected {}, actual {} (err {:.3e}, {} ms)",
            if c.status == "pass" { "PASS" } else { "FAIL" },
            c.name,
            if c.expected.is_empty() { "—" } else { &c.expected },
            c.actual,
            c.abs_err,
            c.runtime_ms
        );
    }
    let passed = report.cases.iter().filter(|c| c.status == "pass").count();
    println!("suite {}: {passed}/{} passed", report.suite, report.cases.len());
    if let Some(path) = json {
        std::fs::write(path, serde_json::to_string_pretty(report)?)?;
    }
    Ok(())
}
