//! Domain and surface integrals in superspace.
//!
//! The fermionic part is handled by expanding H(−g) or δ(g) over derivatives
//! of δ(g₀) and applying the Berezin integral; the bosonic part reduces to
//! radial level-set pairings ⟨δ^{(l)}(g₀), ·⟩ = (−1)^l ψ^{(l)}(t₀) with
//! ψ(t) = ½ t^{(p-2)/2} ∮ Φ(√t ω) dω, plus an ordinary volume term over
//! {g₀ < 0}. Exact routes are used for radial-class symbolic integrands;
//! otherwise the angular integral is quadrature and the t-derivatives come
//! from a Chebyshev stencil.

use num::complex::Complex64;
use num::ToPrimitive;

use crate::body::Body;
use crate::dims::Dims;
use crate::dist::levelset::{
    delta_expand, heaviside_minus_expand, PhaseFamily, PhaseFunction,
};
use crate::dist::pairing::{ball_integral_exact, radial_delta_pair_exact};
use crate::error::{Error, Result};
use crate::integrate::quad::{
    chebyshev_stencil, interpolated_derivative, sphere_rule, QuadratureSpec, SphereRule,
};
use crate::ops::dirac::{dirac, Side};
use crate::ops::vector::super_pow;
use crate::scalar::{Rat64, Scalar};
use crate::superexpr::SuperExpr;

/// Result of a superspace integral: the value retains the Grassmann structure
/// over any formal parameters and whatever Clifford content the integrand
/// carried.
#[derive(Clone, Debug)]
pub struct IntegralResult {
    pub value: SuperExpr,
    pub est_err: f64,
    pub nodes: usize,
}

impl IntegralResult {
    pub fn exact(value: SuperExpr) -> Self {
        IntegralResult { value, est_err: 0.0, nodes: 0 }
    }
}

/// Deterministic pairwise sum of expressions (fixed tree shape).
pub fn pairwise_sum_exprs(dims: Dims, values: &[SuperExpr]) -> SuperExpr {
    match values.len() {
        0 => SuperExpr::zero(dims),
        1 => values[0].clone(),
        n => {
            let mid = n / 2;
            pairwise_sum_exprs(dims, &values[..mid])
                .add(&pairwise_sum_exprs(dims, &values[mid..]))
        }
    }
}

pub type Integrand<'a> = dyn Fn(&[f64]) -> Result<SuperExpr> + 'a;
pub type MultiIntegrand<'a> = dyn Fn(&[f64]) -> Result<Vec<SuperExpr>> + 'a;

/// ∮_{|x̲|=r} f dS via the product sphere rule (unnormalized, area-weighted),
/// for several components sharing the evaluation pass.
pub fn angular_integral_multi(
    dims: Dims,
    f: &MultiIntegrand<'_>,
    radius: f64,
    rule: &SphereRule,
) -> Result<Vec<SuperExpr>> {
    let mut comps: Vec<Vec<SuperExpr>> = Vec::new();
    for (pt, w) in rule.points.iter().zip(&rule.weights) {
        let x: Vec<f64> = pt.iter().map(|v| v * radius).collect();
        let vs = f(&x)?;
        if comps.is_empty() {
            comps = vec![Vec::with_capacity(rule.points.len()); vs.len()];
        }
        for (slot, v) in comps.iter_mut().zip(vs) {
            slot.push(v.scale(&Scalar::from_f64(*w)));
        }
    }
    Ok(comps.into_iter().map(|vals| pairwise_sum_exprs(dims, &vals)).collect())
}

pub fn angular_integral(
    dims: Dims,
    f: &Integrand<'_>,
    radius: f64,
    rule: &SphereRule,
) -> Result<SuperExpr> {
    let multi = |x: &[f64]| -> Result<Vec<SuperExpr>> { Ok(vec![f(x)?]) };
    Ok(angular_integral_multi(dims, &multi, radius, rule)?.pop().unwrap())
}

fn radius_of_body(phase: &PhaseFunction) -> Result<Rat64> {
    // accepts bodies of the shape |x̲|² − R²
    let body = phase.body();
    let rsq = Body::radial_power(phase.dims.p, Rat64::from_integer(2));
    let diff = body.sub(&rsq);
    match diff.as_constant() {
        Some(c) => {
            let v = c.to_complex();
            if v.im != 0.0 || v.re >= 0.0 {
                return Err(Error::UnsupportedPhase("body is not |x̲|²−R²".into()));
            }
            if let Some(g) = c.as_gauss_rat() {
                let num = g.re.numer().to_i64().ok_or_else(|| {
                    Error::UnsupportedPhase("radius out of range".into())
                })?;
                let den = g.re.denom().to_i64().ok_or_else(|| {
                    Error::UnsupportedPhase("radius out of range".into())
                })?;
                let rsq = Rat64::new(-num, den);
                // exact rational square root if available, else error
                let num_root = (*rsq.numer() as f64).sqrt().round() as i64;
                let den_root = (*rsq.denom() as f64).sqrt().round() as i64;
                if num_root * num_root == *rsq.numer() && den_root * den_root == *rsq.denom() {
                    Ok(Rat64::new(num_root, den_root))
                } else {
                    Err(Error::UnsupportedPhase("radius² is not a perfect square".into()))
                }
            } else {
                Err(Error::UnsupportedPhase("radius is not rational".into()))
            }
        }
        None => Err(Error::UnsupportedPhase("body is not |x̲|²−R²".into())),
    }
}

/// Numeric ⟨δ^{(l)}(|x̲|²−R²), W⟩ for an integrand given by a closure.
///
/// The profile χ(u) := ψ(u²) = ½ u^{p-2} ∮ W(u ω) dω is interpolated on a
/// Chebyshev stencil in the radius u (polynomial integrands make χ a
/// polynomial, so the interpolation is then exact), and the t-derivatives at
/// t₀ = R² come from the chain rule. The half-width is halved once for an
/// error estimate.
fn radial_delta_pair_numeric(
    dims: Dims,
    w: &Integrand<'_>,
    order: usize,
    t0: f64,
    rule: &SphereRule,
    q: &QuadratureSpec,
) -> Result<(SuperExpr, f64, usize)> {
    let multi = |x: &[f64]| -> Result<Vec<SuperExpr>> { Ok(vec![w(x)?]) };
    let (mut vs, e, n) = radial_delta_pair_numeric_multi(dims, &multi, order, t0, rule, q)?;
    Ok((vs.pop().unwrap(), e, n))
}

fn radial_delta_pair_numeric_multi(
    dims: Dims,
    w: &MultiIntegrand<'_>,
    order: usize,
    t0: f64,
    rule: &SphereRule,
    q: &QuadratureSpec,
) -> Result<(Vec<SuperExpr>, f64, usize)> {
    if order > 2 {
        return Err(Error::Quadrature("radial stencil supports δ-orders ≤ 2".into()));
    }
    let p = dims.p as i32;
    let r0 = t0.sqrt();
    let profile = |u: f64, nodes_acc: &mut usize| -> Result<Vec<SuperExpr>> {
        *nodes_acc += rule.points.len();
        let ang = angular_integral_multi(dims, w, u, rule)?;
        let s = Scalar::from_f64(0.5 * u.powi(p - 2));
        Ok(ang.into_iter().map(|a| a.scale(&s)).collect())
    };
    let mut nodes = 0usize;
    if order == 0 {
        let v = profile(r0, &mut nodes)?;
        return Ok((v, q.tol * 0.01, nodes));
    }
    let count = q.radial_points.max(2 * order + 5);
    let eval_at_halfwidth = |h: f64, nodes_acc: &mut usize| -> Result<Vec<SuperExpr>> {
        let us = chebyshev_stencil(r0, h, count);
        let mut samples: Vec<Vec<SuperExpr>> = Vec::with_capacity(count);
        for &u in &us {
            samples.push(profile(u, nodes_acc)?);
        }
        let ncomp = samples[0].len();
        let mut out = Vec::with_capacity(ncomp);
        for comp in 0..ncomp {
            let mut keys = std::collections::BTreeSet::new();
            for s in &samples {
                for (k, _) in s[comp].terms() {
                    keys.insert(k.clone());
                }
            }
            let mut acc = SuperExpr::zero(dims);
            for key in keys {
                let ys: Vec<Complex64> = samples
                    .iter()
                    .map(|s| {
                        s[comp]
                            .coefficient(key.0, &key.1)
                            .as_constant()
                            .map(|c| c.to_complex())
                            .unwrap_or(Complex64::new(0.0, 0.0))
                    })
                    .collect();
                // chain rule: ψ'(t) = χ'(u)/(2u), ψ''(t) = (χ''u − χ')/(4u³)
                let d = match order {
                    1 => interpolated_derivative(&us, &ys, r0, 1) / (2.0 * r0),
                    _ => {
                        let d1 = interpolated_derivative(&us, &ys, r0, 1);
                        let d2 = interpolated_derivative(&us, &ys, r0, 2);
                        (d2 * r0 - d1) / (4.0 * r0.powi(3))
                    }
                };
                if d != Complex64::new(0.0, 0.0) {
                    acc = acc.add(&SuperExpr::from_term(
                        dims,
                        key.0,
                        key.1.clone(),
                        Body::constant(dims.p, Scalar::from_complex(d)),
                    ));
                }
            }
            out.push(acc);
        }
        Ok(out)
    };
    let h1 = (q.radial_halfwidth * r0.max(0.5)).min(0.8 * r0);
    let d1 = eval_at_halfwidth(h1, &mut nodes)?;
    let d2 = eval_at_halfwidth(h1 * 0.5, &mut nodes)?;
    let err = d1
        .iter()
        .zip(&d2)
        .map(|(a, b)| a.sub(b).max_abs())
        .fold(0.0f64, f64::max);
    let sign = Scalar::from_f64(if order % 2 == 0 { 1.0 } else { -1.0 });
    Ok((d2.into_iter().map(|v| v.scale(&sign)).collect(), err, nodes))
}

/// Surface pairing ∫ δ(g)·W with the full sandwich W supplied as a closure
/// (it must already contain the surface element and any outer factors).
pub fn surface_pairing(
    phase: &PhaseFunction,
    q: &QuadratureSpec,
    w: &Integrand<'_>,
) -> Result<IntegralResult> {
    let multi = |x: &[f64]| -> Result<Vec<SuperExpr>> { Ok(vec![w(x)?]) };
    let (mut vs, est_err, nodes) = surface_pairing_multi(phase, q, &multi)?;
    Ok(IntegralResult { value: vs.pop().unwrap(), est_err, nodes })
}

/// Multi-component surface pairing: one quadrature pass for several
/// integrands (used by the circulant matrix evaluators).
pub fn surface_pairing_multi(
    phase: &PhaseFunction,
    q: &QuadratureSpec,
    w: &MultiIntegrand<'_>,
) -> Result<(Vec<SuperExpr>, f64, usize)> {
    q.validate()?;
    let dims = phase.dims;
    let radius = radius_of_body(phase)?;
    let t0 = radius.to_f64().unwrap().powi(2);
    let expansion = delta_expand(phase, 0)?;
    let rule = sphere_rule(dims.p, q.angular_degree)?;
    let mut total: Vec<SuperExpr> = Vec::new();
    let mut est = 0.0f64;
    let mut nodes = 0usize;
    for term in &expansion.delta_terms {
        let coeff = term.coeff.to_float();
        let wj = move |x: &[f64]| -> Result<Vec<SuperExpr>> {
            let c = coeff.eval_numeric(x)?;
            Ok(w(x)?.into_iter().map(|v| c.mul(&v).berezin()).collect())
        };
        let (vs, e, n) =
            radial_delta_pair_numeric_multi(dims, &wj, term.order as usize, t0, &rule, q)?;
        if total.is_empty() {
            total = vs;
        } else {
            total = total.iter().zip(&vs).map(|(a, b)| a.add(b)).collect();
        }
        est += e;
        nodes += n;
    }
    Ok((total, est, nodes))
}

/// Volume pairing ∫ H(−g)·W: indicator part over the ball plus the δ-terms
/// of the Heaviside expansion.
pub fn volume_pairing(
    phase: &PhaseFunction,
    q: &QuadratureSpec,
    w: &Integrand<'_>,
) -> Result<IntegralResult> {
    q.validate()?;
    let dims = phase.dims;
    let radius = radius_of_body(phase)?;
    let rf = radius.to_f64().unwrap();
    let t0 = rf * rf;
    let expansion = heaviside_minus_expand(phase)?;
    let rule = sphere_rule(dims.p, q.angular_degree)?;
    let radial = crate::integrate::quad::gauss_legendre_on(
        (q.angular_degree + 4).max(8),
        0.0,
        rf,
    );
    let wb = move |x: &[f64]| -> Result<SuperExpr> { Ok(w(x)?.berezin()) };
    let mut vals = Vec::with_capacity(radial.len());
    let mut nodes = 0usize;
    for &(r, wr) in &radial {
        let ang = angular_integral(dims, &wb, r, &rule)?;
        nodes += rule.points.len();
        vals.push(ang.scale(&Scalar::from_f64(wr * r.powi(dims.p as i32 - 1))));
    }
    let mut total = pairwise_sum_exprs(dims, &vals);
    let mut est = 0.0;
    for term in &expansion.delta_terms {
        let coeff = term.coeff.to_float();
        let wj = move |x: &[f64]| -> Result<SuperExpr> {
            let c = coeff.eval_numeric(x)?;
            Ok(c.mul(&w(x)?).berezin())
        };
        let (v, e, n) =
            radial_delta_pair_numeric(dims, &wj, term.order as usize, t0, &rule, q)?;
        total = total.add(&v);
        est += e;
        nodes += n;
    }
    Ok(IntegralResult { value: total, est_err: est, nodes })
}

/// ⟨δ^{(order)}(g₀), ∫_B W⟩ for a radial-body phase, several components per
/// evaluation pass; used by callers that assemble their own level-set
/// expansions.
pub fn radial_delta_pair_multi(
    dims: Dims,
    phase: &PhaseFunction,
    q: &QuadratureSpec,
    order: usize,
    w: &MultiIntegrand<'_>,
) -> Result<(Vec<SuperExpr>, f64)> {
    let radius = radius_of_body(phase)?;
    let t0 = radius.to_f64().unwrap().powi(2);
    let rule = sphere_rule(dims.p, q.angular_degree)?;
    let wb = move |x: &[f64]| -> Result<Vec<SuperExpr>> {
        Ok(w(x)?.into_iter().map(|v| v.berezin()).collect())
    };
    let (vs, e, _) = radial_delta_pair_numeric_multi(dims, &wb, order, t0, &rule, q)?;
    Ok((vs, e))
}

/// The oriented surface element ∂_x[g], symbolic.
pub fn oriented_element(phase: &PhaseFunction) -> Result<SuperExpr> {
    dirac(&phase.g, Side::Left)
}

/// The non-oriented element |∂_x[g]| = (−(∂_x[g])²)^{1/2}, symbolic when the
/// body allows it.
pub fn absolute_element(phase: &PhaseFunction) -> Result<SuperExpr> {
    let el = oriented_element(phase)?;
    super_pow(&el.mul(&el).neg(), Rat64::new(1, 2))
}

/// Exact domain integral ∫ H(−g) F for radial-class symbolic F.
pub fn domain_integral_exact(phase: &PhaseFunction, f: &SuperExpr) -> Result<SuperExpr> {
    let radius = radius_of_body(phase)?;
    let expansion = heaviside_minus_expand(phase)?;
    // indicator term: Berezin then ball integral
    let mut total = ball_integral_exact(&f.berezin(), radius)?;
    for term in &expansion.delta_terms {
        let integrand = term.coeff.mul(f);
        total = total.add(&radial_delta_pair_exact(
            &integrand,
            term.order as u32,
            radius,
        )?);
    }
    Ok(total)
}

/// Exact surface integral ∫ δ(g)·E·F for radial-class symbolic F, where E is
/// the oriented or absolute element.
pub fn surface_integral_exact(
    phase: &PhaseFunction,
    f: &SuperExpr,
    oriented: bool,
) -> Result<SuperExpr> {
    let radius = radius_of_body(phase)?;
    let element = if oriented { oriented_element(phase)? } else { absolute_element(phase)? };
    let expansion = delta_expand(phase, 0)?;
    let mut total = SuperExpr::zero(phase.dims);
    for term in &expansion.delta_terms {
        let integrand = term.coeff.mul(&element).mul(f);
        total = total.add(&radial_delta_pair_exact(
            &integrand,
            term.order as u32,
            radius,
        )?);
    }
    Ok(total)
}

/// ∫_{Ω_{p|2n}} F: the user-facing domain integral. Radial-class symbolic
/// integrands take the exact route; anything else goes through quadrature.
pub fn domain_integral(
    phase: &PhaseFunction,
    f: &SuperExpr,
    q: &QuadratureSpec,
) -> Result<IntegralResult> {
    match phase.family {
        PhaseFamily::Supersphere { .. } | PhaseFamily::PurelyBosonic => {}
        PhaseFamily::Custom => {
            if !phase.nilpotent().is_zero() {
                return Err(Error::UnsupportedPhase(
                    "custom phases must have purely bosonic nilpotent part".into(),
                ));
            }
        }
    }
    match domain_integral_exact(phase, f) {
        Ok(v) => Ok(IntegralResult::exact(v)),
        Err(_) => {
            let w = move |x: &[f64]| f.eval_numeric(x);
            volume_pairing(phase, q, &w)
        }
    }
}

/// Surface integral (oriented or not) of a symbolic integrand.
pub fn surface_integral(
    phase: &PhaseFunction,
    f: &SuperExpr,
    oriented: bool,
    q: &QuadratureSpec,
) -> Result<IntegralResult> {
    match surface_integral_exact(phase, f, oriented) {
        Ok(v) => Ok(IntegralResult::exact(v)),
        Err(_) => {
            let element = oriented_element(phase)?;
            let w = move |x: &[f64]| -> Result<SuperExpr> {
                let el_num = element.eval_numeric(x)?;
                let el = if oriented {
                    el_num
                } else {
                    super_pow(&el_num.mul(&el_num).neg(), Rat64::new(1, 2))?
                };
                Ok(el.mul(&f.eval_numeric(x)?))
            };
            surface_pairing(phase, q, &w)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn superball_volume_and_area() {
        // (m,n) = (2,1): volume = πR², area = 2πR
        let d = Dims::hermitian(2, 1);
        for r in [Rat64::from_integer(1), Rat64::from_integer(2)] {
            let phase = PhaseFunction::supersphere(d, r);
            let vol = domain_integral_exact(&phase, &SuperExpr::one(d)).unwrap();
            let expect_vol =
                SuperExpr::scalar(d, &Scalar::from_rat(r * r) * &Scalar::pi_half_pow(2));
            assert_eq!(vol, expect_vol, "volume at R={r}");
            let area = surface_integral_exact(&phase, &SuperExpr::one(d), false).unwrap();
            let expect_area = SuperExpr::scalar(
                d,
                &(&Scalar::from_int(2) * &Scalar::from_rat(r)) * &Scalar::pi_half_pow(2),
            );
            assert_eq!(area, expect_area, "area at R={r}");
        }
    }

    #[test]
    fn oriented_integral_of_one_vanishes() {
        let d = Dims::hermitian(2, 1);
        let phase = PhaseFunction::supersphere(d, Rat64::from_integer(1));
        let v = surface_integral_exact(&phase, &SuperExpr::one(d), true).unwrap();
        assert!(v.is_zero(), "{v}");
    }

    #[test]
    fn purely_bosonic_reduces_to_classical_times_berezin() {
        // ∫ H(−g₀) F(x̲)·xg1 xg2 = (∫_Ω F dV)·π^{-1}
        let d = Dims::new(4, 1);
        let phase = PhaseFunction::bosonic_ball(d, Rat64::from_integer(1));
        let f_body = SuperExpr::x(d, 0).unwrap().mul(&SuperExpr::x(d, 0).unwrap());
        let f = f_body
            .mul(&SuperExpr::xg(d, 0).unwrap())
            .mul(&SuperExpr::xg(d, 1).unwrap());
        let v = domain_integral_exact(&phase, &f).unwrap();
        // ∫_{B_1 ⊂ ℝ⁴} x1² dV = |S³|/4 · ∫₀¹ r⁵ = 2π²/24 = π²/12
        let expect = SuperExpr::scalar(
            d,
            &Scalar::from_rat(Rat64::new(1, 12)) * &Scalar::pi_half_pow(2),
        );
        assert_eq!(v, expect);
        // purely bosonic test function dies under the Berezin integral
        let v2 = domain_integral_exact(&phase, &f_body).unwrap();
        assert!(v2.is_zero());
    }

    #[test]
    fn numeric_path_matches_exact() {
        let d = Dims::hermitian(2, 1);
        let phase = PhaseFunction::supersphere(d, Rat64::from_integer(1));
        let x1 = SuperExpr::x(d, 0).unwrap();
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        let f = x1
            .mul(&x1)
            .add(&x1.mul(&x1).mul(&xg1).mul(&xg2))
            .add(&SuperExpr::one(d));
        let exact = domain_integral_exact(&phase, &f).unwrap();
        let q = QuadratureSpec::default().with_angular_degree(10);
        let w = |x: &[f64]| f.eval_numeric(x);
        let numeric = volume_pairing(&phase, &q, &w).unwrap();
        let diff = numeric.value.sub(&exact.to_float()).max_abs();
        assert!(diff < 1e-8, "numeric {} vs exact {}", numeric.value, exact);

        let se = surface_integral_exact(&phase, &f, false).unwrap();
        let element = absolute_element(&phase).unwrap();
        let ws = |x: &[f64]| -> Result<SuperExpr> {
            Ok(element.eval_numeric(x)?.mul(&f.eval_numeric(x)?))
        };
        let sn = surface_pairing(&phase, &q, &ws).unwrap();
        let sdiff = sn.value.sub(&se.to_float()).max_abs();
        assert!(sdiff < 1e-7, "numeric {} vs exact {}", sn.value, se);
    }

    #[test]
    fn reparametrization_invariance_exact() {
        // g vs (1 + ½ xg1 xg2)·g give identical surface/domain integrals
        let d = Dims::hermitian(2, 1);
        let phase = PhaseFunction::supersphere(d, Rat64::from_integer(1));
        let h = SuperExpr::one(d).add(
            &SuperExpr::xg(d, 0)
                .unwrap()
                .mul(&SuperExpr::xg(d, 1).unwrap())
                .scale(&Scalar::from_rat(Rat64::new(1, 2))),
        );
        let scaled = phase.scaled(&h).unwrap();
        let x1 = SuperExpr::x(d, 0).unwrap();
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let f = SuperExpr::one(d)
            .add(&x1.mul(&x1))
            .add(&x1.mul(&xg1));
        let v1 = domain_integral_exact(&phase, &f).unwrap();
        let v2 = domain_integral_exact(&scaled, &f).unwrap();
        assert_eq!(v1, v2, "domain reparametrization");
        let s1 = surface_integral_exact(&phase, &f, false).unwrap();
        let s2 = surface_integral_exact(&scaled, &f, false).unwrap();
        assert_eq!(s1, s2, "non-oriented surface reparametrization");
        let o1 = surface_integral_exact(&phase, &f, true).unwrap();
        let o2 = surface_integral_exact(&scaled, &f, true).unwrap();
        assert_eq!(o1, o2, "oriented surface reparametrization");
    }
}
