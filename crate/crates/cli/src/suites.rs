//! Suite runner: maps suite names onto the core verification batteries.

use std::time::Instant;

use supercliff::dist::kernel_checks::CheckItem;
use supercliff::error::{Error, Result};
use supercliff::integrate::quad::QuadratureSpec;
use supercliff::suites as core_suites;

use crate::report::{case, Config, Quadrature, SuiteReport};

fn quadrature(tol: f64) -> QuadratureSpec {
    QuadratureSpec {
        angular_degree: if tol <= 1e-8 { 12 } else { 8 },
        radial_halfwidth: 0.25,
        radial_points: 9,
        richardson_levels: 2,
        tol,
    }
}

fn items_to_cases(items: Vec<CheckItem>, elapsed_ms: u64) -> Vec<crate::report::Case> {
    let n = items.len().max(1) as u64;
    items
        .into_iter()
        .map(|it| {
            case(
                it.name,
                it.pass,
                "exact identity / stated tolerance",
                it.detail,
                0.0,
                std::time::Duration::from_millis(elapsed_ms / n),
            )
        })
        .collect()
}

pub fn run_suite(name: &str, dims: (usize, usize), tol: f64) -> Result<SuiteReport> {
    let (m, n) = dims;
    let q = quadrature(tol);
    let started = Instant::now();
    let items: Vec<CheckItem> = match name {
        "algebra" => core_suites::algebra_suite(m, n)?,
        "kernels" => {
            let mut v = core_suites::kernels_suite()?;
            v.extend(core_suites::kernel_derivative_suite()?);
            v
        }
        "distributions" => core_suites::distributions_suite()?,
        "integration" => {
            let mut v = core_suites::measure_suite()?;
            v.extend(core_suites::stokes_suite(&q)?);
            let q_bm = QuadratureSpec { angular_degree: 12, ..q.clone() };
            v.extend(core_suites::bm_suite(&q_bm)?);
            v.extend(core_suites::classical_bm_suite(&q_bm)?);
            let q_cp = QuadratureSpec { angular_degree: 6, tol: 1e-6, ..q.clone() };
            v.extend(core_suites::cauchy_pompeiu_suite(&q_cp)?);
            v.extend(core_suites::koppelman_suite(&q_cp)?);
            v.extend(core_suites::bm_antisymmetry_suite(&q_bm)?);
            v.extend(core_suites::reparametrization_suite(&q_bm)?);
            v
        }
        "spinor" => core_suites::spinor_suite(200, 0x5eed_cafe)?,
        "all" => {
            let mut v = Vec::new();
            for (mm, nn) in [(2usize, 1usize), (3, 1), (3, 2)] {
                v.extend(core_suites::algebra_suite(mm, nn)?);
            }
            v.extend(core_suites::kernels_suite()?);
            v.extend(core_suites::kernel_derivative_suite()?);
            v.extend(core_suites::distributions_suite()?);
            v.extend(run_suite("integration", dims, tol)?.cases.into_iter().map(|c| {
                CheckItem { name: c.name, pass: c.status == "pass", detail: c.actual }
            }));
            v.extend(core_suites::spinor_suite(200, 0x5eed_cafe)?);
            v
        }
        other => return Err(Error::UnknownSuite(other.into())),
    };
    let elapsed = started.elapsed().as_millis() as u64;
    Ok(SuiteReport {
        suite: name.into(),
        config: Config {
            dims: format!("{m},{n}"),
            phase: "supersphere:1".into(),
            quadrature: Quadrature { tol },
        },
        cases: items_to_cases(items, elapsed),
    })
}
