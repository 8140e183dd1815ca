//! Two-sided evaluation of the distributional Stokes identities on a
//! supersphere phase:
//!
//!   ∫ H(−g)[(F∂)G + F(∂G)] = ∫ F δ(g) ∂[g] G
//!
//! for the four operator variants ∂ ∈ {∂_x, ∂_{J(x)}, ∂_Z, ∂_{Z†}}. Both
//! sides are evaluated by independent quadrature (volume pairing vs surface
//! pairing) and the report carries the residual.

use crate::dims::Dims;
use crate::dist::levelset::PhaseFunction;
use crate::error::Result;
use crate::integrate::measure::{surface_pairing, volume_pairing, IntegralResult};
use crate::integrate::quad::QuadratureSpec;
use crate::ops::dirac::{dirac, hermitian_dirac, twisted_dirac, HermitianWhich, Side};
use crate::superexpr::SuperExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StokesVariant {
    Plain,
    Twisted,
    Z,
    ZDag,
}

impl StokesVariant {
    pub fn all() -> [StokesVariant; 4] {
        [StokesVariant::Plain, StokesVariant::Twisted, StokesVariant::Z, StokesVariant::ZDag]
    }

    pub fn name(&self) -> &'static str {
        match self {
            StokesVariant::Plain => "plain",
            StokesVariant::Twisted => "twisted",
            StokesVariant::Z => "Z",
            StokesVariant::ZDag => "Zdag",
        }
    }

    fn apply(&self, f: &SuperExpr, side: Side) -> Result<SuperExpr> {
        match self {
            StokesVariant::Plain => dirac(f, side),
            StokesVariant::Twisted => twisted_dirac(f, side),
            StokesVariant::Z => hermitian_dirac(f, HermitianWhich::Z, side),
            StokesVariant::ZDag => hermitian_dirac(f, HermitianWhich::ZDag, side),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StokesReport {
    pub variant: StokesVariant,
    pub lhs: IntegralResult,
    pub rhs: IntegralResult,
    pub residual: f64,
}

/// Evaluates both sides of the Stokes identity for (F, G) and reports the
/// largest componentwise deviation.
pub fn stokes_check(
    phase: &PhaseFunction,
    f: &SuperExpr,
    g: &SuperExpr,
    variant: StokesVariant,
    q: &QuadratureSpec,
) -> Result<StokesReport> {
    let _dims = phase.dims;
    // LHS integrand: (F∂)G + F(∂G), symbolic
    let f_right = variant.apply(f, Side::Right)?;
    let g_left = variant.apply(g, Side::Left)?;
    let lhs_integrand = f_right.mul(g).add(&f.mul(&g_left)).to_float();
    let lhs = volume_pairing(phase, q, &move |x: &[f64]| lhs_integrand.eval_numeric(x))?;

    // RHS integrand: F ∂[g] G (the δ(g)-coefficients are supplied by the
    // surface pairing and commute with F, being even).
    let element = variant.apply(&phase.g, Side::Left)?;
    let rhs_integrand = f.mul(&element).mul(g).to_float();
    let rhs = surface_pairing(phase, q, &move |x: &[f64]| rhs_integrand.eval_numeric(x))?;

    let residual = lhs.value.sub(&rhs.value).max_abs();
    Ok(StokesReport { variant, lhs, rhs, residual })
}

/// The 10-case polynomial battery used by the acceptance suite.
pub fn stokes_battery(dims: Dims) -> Result<Vec<(SuperExpr, SuperExpr)>> {
    let one = SuperExpr::one(dims);
    let x = crate::ops::vector::supervector(dims);
    let x1 = SuperExpr::x(dims, 0)?;
    let x2 = SuperExpr::x(dims, 1)?;
    let x3 = SuperExpr::x(dims, 2)?;
    let xg1 = SuperExpr::xg(dims, 0)?;
    let xg2 = SuperExpr::xg(dims, 1)?;
    let e1 = SuperExpr::e(dims, 0)?;
    let e2 = SuperExpr::e(dims, 1)?;
    let z1 = crate::ops::vector::z_var(dims, 1)?;
    let z1c = crate::ops::vector::z_var_conj(dims, 1)?;
    let zg1 = crate::ops::vector::zg_var(dims, 1)?;
    Ok(vec![
        (one.clone(), one.clone()),
        (one.clone(), x.clone()),
        (one.clone(), z1c.clone()),
        (x1.clone(), x2.mul(&x2)),
        (one.clone(), x1.mul(&xg1)),
        (xg1.mul(&xg2), x1.clone()),
        (e1.mul(&x1), x.mul(&x)),
        (z1.clone(), zg1.clone()),
        (x3.mul(&e2), xg1.mul(&x1).mul(&x1)),
        (z1.mul(&z1), z1c.mul(&xg2)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat64;

    #[test]
    fn stokes_f1_gx_plain() {
        // F = 1, G = x: LHS = ∫H(−g)·M = M·Vol (M = 2), RHS matches
        let d = Dims::hermitian(2, 1);
        let phase = PhaseFunction::supersphere(d, Rat64::from_integer(1));
        let q = QuadratureSpec::default().with_angular_degree(8);
        let x = crate::ops::vector::supervector(d);
        let rep = stokes_check(&phase, &SuperExpr::one(d), &x, StokesVariant::Plain, &q).unwrap();
        assert!(rep.residual < 1e-9, "residual {}", rep.residual);
        // LHS = M·Vol = 2·π
        let lhs_val = rep.lhs.value.body0().as_constant().unwrap().to_complex();
        assert!((lhs_val.re - 2.0 * std::f64::consts::PI).abs() < 1e-9, "{lhs_val}");
    }

    #[test]
    fn stokes_trivial_and_z_variant() {
        let d = Dims::hermitian(2, 1);
        let phase = PhaseFunction::supersphere(d, Rat64::from_integer(1));
        let q = QuadratureSpec::default().with_angular_degree(8);
        // F = G = 1: both sides vanish
        let rep =
            stokes_check(&phase, &SuperExpr::one(d), &SuperExpr::one(d), StokesVariant::Plain, &q)
                .unwrap();
        assert!(rep.lhs.value.max_abs() < 1e-12);
        assert!(rep.rhs.value.max_abs() < 1e-12);
        // Z-variant with F = 1, G = z1^c
        let z1c = crate::ops::vector::z_var_conj(d, 1).unwrap();
        let repz =
            stokes_check(&phase, &SuperExpr::one(d), &z1c, StokesVariant::Z, &q).unwrap();
        assert!(repz.residual < 1e-9, "residual {}", repz.residual);
    }
}
