//! Integration-engine invariants: quadrature convergence, run-to-run
//! determinism, exterior-point annihilation of the Cauchy-type evaluators,
//! and the antisymmetric pairing relations.

use supercliff::dims::Dims;
use supercliff::dist::levelset::PhaseFunction;
use supercliff::integrate::bm::{bm_evaluate, bm_expected};
use supercliff::integrate::cauchy::{dirac_u_matrix, teodorescu};
use supercliff::integrate::measure::{surface_pairing, volume_pairing};
use supercliff::integrate::quad::QuadratureSpec;
use supercliff::ops::circulant::Circulant2;
use supercliff::ops::vector::{z_var, zg_var};
use supercliff::scalar::Rat64;
use supercliff::superexpr::SuperExpr;

fn q(deg: usize) -> QuadratureSpec {
    QuadratureSpec {
        angular_degree: deg,
        radial_halfwidth: 0.25,
        radial_points: 7,
        richardson_levels: 2,
        tol: 1e-10,
    }
}

#[test]
fn quadrature_convergence_is_monotone_to_floor() {
    // residual against the known value shrinks as the angular degree doubles,
    // until the tolerance floor
    let d = Dims::hermitian(2, 1);
    let phase = PhaseFunction::supersphere(d, Rat64::from_integer(1));
    let f = z_var(d, 1).unwrap();
    let y = [0.35, 0.1, 0.2, 0.0];
    let expect = bm_expected(&phase, &f, &y).unwrap();
    let mut prev = f64::INFINITY;
    for deg in [4usize, 8, 16] {
        let res = bm_evaluate(&phase, &f, &y, &q(deg)).unwrap();
        let err = res.value.sub(&expect).max_abs();
        assert!(
            err < prev.max(1e-12),
            "degree {deg}: error {err} did not improve on {prev}"
        );
        prev = err;
    }
    assert!(prev < 1e-10, "finest error {prev}");
}

#[test]
fn identical_inputs_give_bit_identical_results() {
    let d = Dims::hermitian(2, 1);
    let phase = PhaseFunction::supersphere(d, Rat64::from_integer(1));
    let f = z_var(d, 1).unwrap().mul(&zg_var(d, 1).unwrap());
    let y = [0.2, 0.0, 0.1, 0.0];
    let a = bm_evaluate(&phase, &f, &y, &q(8)).unwrap();
    let b = bm_evaluate(&phase, &f, &y, &q(8)).unwrap();
    assert_eq!(a.value, b.value);

    let spec = q(6);
    let integrand = SuperExpr::one(d).add(&f.complex_conjugate().mul(&f));
    let w = |x: &[f64]| integrand.eval_numeric(x);
    let s1 = surface_pairing(&phase, &spec, &w).unwrap();
    let s2 = surface_pairing(&phase, &spec, &w).unwrap();
    assert_eq!(s1.value, s2.value);
    let v1 = volume_pairing(&phase, &spec, &w).unwrap();
    let v2 = volume_pairing(&phase, &spec, &w).unwrap();
    assert_eq!(v1.value, v2.value);
}

#[test]
fn bm_antisymmetry_relations() {
    let d = Dims::hermitian(2, 1);
    let phase = PhaseFunction::supersphere(d, Rat64::from_integer(1));
    let f = z_var(d, 1).unwrap();
    let reports = supercliff::integrate::bm::bm_antisymmetry_check(
        &phase,
        &f,
        &[0.2, 0.0, 0.1, 0.0],
        &q(10),
    )
    .unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.residual < 1e-6, "{}: residual {}", r.name, r.residual);
    }
    // trivial integrand: all residuals exactly zero
    let zero = SuperExpr::zero(d);
    let trivial = supercliff::integrate::bm::bm_antisymmetry_check(
        &phase,
        &zero,
        &[0.2, 0.0, 0.1, 0.0],
        &q(4),
    )
    .unwrap();
    for r in &trivial {
        assert_eq!(r.residual, 0.0, "{}", r.name);
    }
}

#[test]
fn teodorescu_inversion_contract() {
    // 𝒟_{(U,U†)} T_g G = H(−g₀(y̲)) G(y): reproduces G inside, 0 outside
    let d = Dims::hermitian(2, 1);
    let phase = PhaseFunction::supersphere(d, Rat64::from_integer(1));
    let g = Circulant2::diagonal(z_var(d, 1).unwrap());
    let spec = QuadratureSpec {
        angular_degree: 6,
        radial_halfwidth: 0.25,
        radial_points: 7,
        richardson_levels: 2,
        tol: 1e-6,
    };
    let t_fun = |y: &[f64]| teodorescu(&phase, &g, y, &spec);
    let h = spec.tol.powf(0.2);

    let y_in = [0.25, 0.0, 0.0, 0.1];
    let inner = dirac_u_matrix(d, &t_fun, &y_in, h).unwrap();
    let expect = {
        let pt = supercliff::integrate::bm::SuperPoint::new(d, y_in.to_vec()).unwrap();
        pt.eval_function(&g.a).unwrap().shift_fermionic_down(2 * d.n, d)
    };
    let err_in = inner.a.sub(&expect).max_abs().max(inner.b.max_abs());
    assert!(err_in < 1e-3, "interior inversion error {err_in}");

    let y_out = [2.5, 0.0, 0.0, 0.0];
    let outer = dirac_u_matrix(d, &t_fun, &y_out, h).unwrap();
    assert!(outer.max_abs() < 1e-3, "exterior inversion residue {}", outer.max_abs());
}
