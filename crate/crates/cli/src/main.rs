mod parser;
mod report;
mod suites;

use std::process::ExitCode;

use clap::{Parser as ClapParser, Subcommand};

use supercliff::dims::Dims;
use supercliff::dist::levelset::PhaseFunction;
use supercliff::integrate::quad::QuadratureSpec;
use supercliff::scalar::Rat64;

#[derive(ClapParser)]
#[command(name = "supercliff", version, about = "Exact superspace Clifford engine and verification harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Verify {
        /// algebra | kernels | distributions | integration | spinor | all
        suite: String,
        /// Hermitian dimensions m,n
        #[arg(long, default_value = "2,1", value_parser = parse_dims)]
        dims: (usize, usize),
        /// Write the machine-readable report here.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        /// Target absolute tolerance for the quadrature-backed checks.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Worker threads (scheduling hint only; results are independent).
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Evaluate a domain or surface integral over a built-in phase.
    Integrate {
        #[arg(long, default_value = "2,1", value_parser = parse_dims)]
        dims: (usize, usize),
        /// supersphere:R or bosonic:ball:R
        #[arg(long, default_value = "supersphere:1")]
        phase: String,
        /// domain | surface | oriented
        #[arg(long, default_value = "domain")]
        mode: String,
        /// Integrand expression.
        #[arg(long)]
        integrand: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Bochner-Martinelli evaluation of a holomorphic integrand.
    Bm {
        #[arg(long, default_value = "2,1", value_parser = parse_dims)]
        dims: (usize, usize),
        /// Supersphere radius.
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        /// Holomorphic expression F.
        #[arg(long = "F")]
        f: String,
        /// Evaluation point y̲ (comma-separated, 2m coordinates).
        #[arg(long)]
        y: String,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Hermitian Cauchy-Pompeiu evaluation for a matrix function G·I₂.
    Cp {
        #[arg(long, default_value = "2,1", value_parser = parse_dims)]
        dims: (usize, usize),
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        /// Expression G (entry of the diagonal circulant matrix).
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected m,n".into());
    }
    let m = parts[0].trim().parse().map_err(|e| format!("bad m: {e}"))?;
    let n = parts[1].trim().parse().map_err(|e| format!("bad n: {e}"))?;
    if m == 0 {
        return Err("m must be ≥ 1".into());
    }
    Ok((m, n))
}

fn parse_point(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|e| format!("bad coordinate: {e}")))
        .collect()
}

fn spec_for(tol: f64) -> QuadratureSpec {
    // degree ladder tied to the requested tolerance
    let angular = if tol <= 1e-8 {
        14
    } else if tol <= 1e-6 {
        12
    } else {
        8
    };
    QuadratureSpec {
        angular_degree: angular,
        radial_halfwidth: 0.25,
        radial_points: 9,
        richardson_levels: 2,
        tol,
    }
}

fn parse_phase(dims: Dims, s: &str) -> Result<PhaseFunction, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["supersphere", r] => {
            let radius: f64 = r.parse().map_err(|e| format!("bad radius: {e}"))?;
            let rat = Rat64::approximate_float(radius).ok_or("radius not representable")?;
            Ok(PhaseFunction::supersphere(dims, rat))
        }
        ["bosonic", "ball", r] | ["bosonic", r] => {
            let radius: f64 = r.parse().map_err(|e| format!("bad radius: {e}"))?;
            let rat = Rat64::approximate_float(radius).ok_or("radius not representable")?;
            Ok(PhaseFunction::bosonic_ball(dims, rat))
        }
        _ => Err(format!("unknown phase `{s}` (use supersphere:R or bosonic:ball:R)")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify { suite, dims, json, tol, threads } => {
            let _ = threads;
            let report = suites::run_suite(&suite, dims, tol).map_err(|e| e.to_string())?;
            report::emit(&report, json.as_deref()).map_err(|e| e.to_string())?;
            Ok(report.all_pass())
        }
        Command::Integrate { dims, phase, mode, integrand, tol, json, threads } => {
            let _ = threads;
            let d = Dims::hermitian(dims.0, dims.1);
            let ph = parse_phase(d, &phase)?;
            let f = parser::parse(d, &integrand).map_err(|e| e.to_string())?;
            let q = spec_for(tol);
            let started = std::time::Instant::now();
            let res = match mode.as_str() {
                "domain" => supercliff::integrate::measure::domain_integral(&ph, &f, &q),
                "surface" => supercliff::integrate::measure::surface_integral(&ph, &f, false, &q),
                "oriented" => supercliff::integrate::measure::surface_integral(&ph, &f, true, &q),
                other => return Err(format!("unknown mode `{other}`")),
            }
            .map_err(|e| e.to_string())?;
            let report = report::single_case_report(
                "integrate",
                dims,
                &phase,
                tol,
                "integral value",
                "",
                &format!("{}", res.value),
                res.est_err,
                started.elapsed(),
                true,
            );
            report::emit(&report, json.as_deref()).map_err(|e| e.to_string())?;
            Ok(true)
        }
        Command::Bm { dims, radius, f, y, tol, json, threads } => {
            let _ = threads;
            let d = Dims::hermitian(dims.0, dims.1);
            let rat = Rat64::approximate_float(radius).ok_or("radius not representable")?;
            let ph = PhaseFunction::supersphere(d, rat);
            let fx = parser::parse(d, &f).map_err(|e| e.to_string())?;
            let y = parse_point(&y)?;
            if y.len() != d.p {
                return Err(format!("y needs {} coordinates", d.p));
            }
            let q = spec_for(tol);
            let started = std::time::Instant::now();
            let res = supercliff::integrate::bm::bm_evaluate(&ph, &fx, &y, &q)
                .map_err(|e| e.to_string())?;
            let expected = supercliff::integrate::bm::bm_expected(&ph, &fx, &y)
                .map_err(|e| e.to_string())?;
            let g0 = ph.body().eval(&y).map_err(|e| e.to_string())?.re;
            let (exp_str, err) = if g0 < 0.0 {
                (format!("{expected}"), res.value.sub(&expected).max_abs())
            } else {
                ("0".to_string(), res.value.max_abs())
            };
            let pass = err <= tol;
            let report = report::single_case_report(
                "bm",
                dims,
                &format!("supersphere:{radius}"),
                tol,
                &format!("F(U) for F = {f}"),
                &exp_str,
                &format!("{}", res.value),
                err,
                started.elapsed(),
                pass,
            );
            report::emit(&report, json.as_deref()).map_err(|e| e.to_string())?;
            Ok(pass)
        }
        Command::Cp { dims, radius, g, y, tol, json, threads } => {
            let _ = threads;
            let d = Dims::hermitian(dims.0, dims.1);
            let rat = Rat64::approximate_float(radius).ok_or("radius not representable")?;
            let ph = PhaseFunction::supersphere(d, rat);
            let gx = parser::parse(d, &g).map_err(|e| e.to_string())?;
            let y = parse_point(&y)?;
            if y.len() != d.p {
                return Err(format!("y needs {} coordinates", d.p));
            }
            let q = spec_for(tol);
            let started = std::time::Instant::now();
            let mat = supercliff::ops::circulant::Circulant2::diagonal(gx);
            let rep = supercliff::integrate::cauchy::cauchy_pompeiu(&ph, &mat, &y, &q)
                .map_err(|e| e.to_string())?;
            let pass = rep.residual <= tol;
            let report = report::single_case_report(
                "cp",
                dims,
                &format!("supersphere:{radius}"),
                tol,
                &format!("boundary − volume = H(−g₀(y̲))·G(y) for G = {g}"),
                &format!("{}", rep.expected.a),
                &format!("{}", rep.boundary.sub(&rep.volume).a),
                rep.residual,
                started.elapsed(),
                pass,
            );
            report::emit(&report, json.as_deref()).map_err(|e| e.to_string())?;
            Ok(pass)
        }
    }
}
