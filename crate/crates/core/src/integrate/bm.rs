//! Bochner-Martinelli representation of holomorphic superfunctions:
//!
//!   (2/|𝕊^{2m-1|2n}|) ∫ δ(g) |Z−U|^{-M} D†_{Z−U,Z}[g] F(Z) = F(U)
//!
//! for interior U, with D† = Σ (z_j−u_j)^c ∂_{z_j^c} + Σ (zg_j−ug_j)^c ∂_{zg_j^c},
//! plus the antisymmetric pairing relations and the classical n = 0
//! reduction checked against an independent kernel quadrature.

use num::complex::Complex64;

use crate::dims::Dims;
use crate::dist::levelset::PhaseFunction;
use crate::error::{Error, Result};
use crate::integrate::measure::{surface_pairing, IntegralResult};
use crate::integrate::quad::{sphere_rule, QuadratureSpec};
use crate::ops::dirac::{d_z_conj, d_zg_conj, is_holomorphic};
use crate::ops::vector::{super_pow, z_var, zg_var};
use crate::scalar::{Rat64, Scalar};
use crate::superexpr::SuperExpr;

/// Shifted-point data: a numeric bosonic point y̲ whose fermionic partner
/// lives in the formal Grassmann parameters xg_{2n+1}..xg_{4n}.
#[derive(Clone, Debug)]
pub struct SuperPoint {
    pub dims: Dims,
    pub y_bos: Vec<f64>,
}

impl SuperPoint {
    /// Extends base dimensions with 2n parameters for the point's fermionic
    /// coordinates.
    pub fn new(base: Dims, y_bos: Vec<f64>) -> Result<Self> {
        if y_bos.len() != base.p {
            return Err(Error::DimensionMismatch("point has wrong bosonic size".into()));
        }
        Ok(SuperPoint { dims: base.with_params(2 * base.n), y_bos })
    }

    /// u_j = y_j + i y_{m+j} as a constant.
    pub fn u(&self, j: usize) -> Result<Scalar> {
        let m = self.dims.m()?;
        Ok(Scalar::from_complex(Complex64::new(self.y_bos[j - 1], self.y_bos[m + j - 1])))
    }

    /// ug_j = yg_{2j-1} + i yg_{2j} as a parameter expression.
    pub fn ug(&self, j: usize) -> Result<SuperExpr> {
        let off = 2 * self.dims.n;
        let a = SuperExpr::xg(self.dims, off + 2 * j - 2)?;
        let b = SuperExpr::xg(self.dims, off + 2 * j - 1)?;
        Ok(a.add(&b.scale(&Scalar::i())))
    }

    /// z_j − u_j as an expression in the extended algebra.
    pub fn z_minus_u(&self, j: usize) -> Result<SuperExpr> {
        Ok(z_var(self.dims, j)?.sub(&SuperExpr::scalar(self.dims, self.u(j)?)))
    }

    pub fn zg_minus_ug(&self, j: usize) -> Result<SuperExpr> {
        Ok(zg_var(self.dims, j)?.sub(&self.ug(j)?))
    }

    /// |Z−U|² = |x̲−y̲|² − Σ (xg−yg)_{2j-1}(xg−yg)_{2j}, symbolic with the
    /// numeric point folded in.
    pub fn rho_sq(&self) -> Result<SuperExpr> {
        let d = self.dims;
        let mut acc = SuperExpr::zero(d);
        for j in 0..d.p {
            let diff = SuperExpr::x(d, j)?
                .sub(&SuperExpr::scalar(d, Scalar::from_f64(self.y_bos[j])));
            acc = acc.add(&diff.mul(&diff));
        }
        for j in 0..d.n {
            let a = SuperExpr::xg(d, 2 * j)?.sub(&SuperExpr::xg(d, 2 * d.n + 2 * j)?);
            let b = SuperExpr::xg(d, 2 * j + 1)?.sub(&SuperExpr::xg(d, 2 * d.n + 2 * j + 1)?);
            acc = acc.sub(&a.mul(&b));
        }
        Ok(acc)
    }

    /// F evaluated at the point: bosonic coordinates numeric, fermionic ones
    /// replaced by the parameters.
    pub fn eval_function(&self, f: &SuperExpr) -> Result<SuperExpr> {
        let shifted = f.extend_dims(self.dims).shift_fermionic(2 * self.dims.n, self.dims);
        shifted.eval_numeric(&self.y_bos)
    }

    pub fn interior_of(&self, phase: &PhaseFunction) -> Result<bool> {
        let g0 = phase.body().eval(&self.y_bos)?;
        if g0.re == 0.0 {
            return Err(Error::PointOnBoundary);
        }
        Ok(g0.re < 0.0)
    }
}

/// D†_{Z−U,Z}[g] = Σ (z_j−u_j)^c ∂_{z_j^c}[g] + Σ (zg_j−ug_j)^c ∂_{zg_j^c}[g],
/// assembled symbolically in the extended algebra.
pub fn directional_derivative_of_phase(
    point: &SuperPoint,
    phase_g: &SuperExpr,
) -> Result<SuperExpr> {
    let d = point.dims;
    let m = d.m()?;
    let g = phase_g.extend_dims(d);
    let mut acc = SuperExpr::zero(d);
    for j in 1..=m {
        let factor = point.z_minus_u(j)?.complex_conjugate();
        acc = acc.add(&factor.mul(&d_z_conj(&g, j)?));
    }
    for j in 1..=d.n {
        let factor = point.zg_minus_ug(j)?.complex_conjugate();
        acc = acc.add(&factor.mul(&d_zg_conj(&g, j)?));
    }
    Ok(acc)
}

/// Left-hand side of the Bochner-Martinelli formula; the caller compares the
/// result against F(U).
pub fn bm_evaluate(
    phase: &PhaseFunction,
    f: &SuperExpr,
    y_bos: &[f64],
    q: &QuadratureSpec,
) -> Result<IntegralResult> {
    let base = phase.dims;
    let m = base.require_hermitian()?;
    if m <= base.n {
        return Err(Error::RequiresMGreaterN { m, n: base.n });
    }
    if !is_holomorphic(f)? {
        return Err(Error::NotHolomorphic);
    }
    let m_dim = base.superdim();
    let point = SuperPoint::new(base, y_bos.to_vec())?;
    let dims = point.dims;
    let phase_ext = PhaseFunction {
        dims,
        g: phase.g.extend_dims(dims),
        family: phase.family.clone(),
    };
    let _ = point.interior_of(&phase_ext)?; // reject boundary points
    let area = Scalar::supersphere_area(base.p as i64, base.n as i64)?;
    let prefactor = &Scalar::from_int(2) * &area.inv()?;

    let rho_sq = point.rho_sq()?.to_float();
    let ddag_g = directional_derivative_of_phase(&point, &phase.g)?.to_float();
    let f_ext = f.extend_dims(dims).to_float();

    let w = move |x: &[f64]| -> Result<SuperExpr> {
        let rho = super_pow(&rho_sq.eval_numeric(x)?, Rat64::new(-m_dim, 2))?;
        let dd = ddag_g.eval_numeric(x)?;
        let fv = f_ext.eval_numeric(x)?;
        Ok(rho.mul(&dd).mul(&fv))
    };
    let mut res = surface_pairing(&phase_ext, q, &w)?;
    res.value = res.value.scale(&prefactor);
    Ok(res)
}

/// F(U): the theorem's right-hand side.
pub fn bm_expected(phase: &PhaseFunction, f: &SuperExpr, y_bos: &[f64]) -> Result<SuperExpr> {
    let point = SuperPoint::new(phase.dims, y_bos.to_vec())?;
    point.eval_function(f)
}

/// One pairing ∫ δ(g) factor · ρ^{-M} · ∂[g]-factor · F of the antisymmetry
/// families.
fn bm_family_integral(
    phase_ext: &PhaseFunction,
    point: &SuperPoint,
    numerator: &SuperExpr,
    cr_derivative_of_g: &SuperExpr,
    f_ext: &SuperExpr,
    m_dim: i64,
    q: &QuadratureSpec,
) -> Result<SuperExpr> {
    let numerator = numerator.to_float();
    let cr_derivative_of_g = cr_derivative_of_g.to_float();
    let f_ext = f_ext.to_float();
    let rho_sq = point.rho_sq()?.to_float();
    let w = move |x: &[f64]| -> Result<SuperExpr> {
        let rho = super_pow(&rho_sq.eval_numeric(x)?, Rat64::new(-m_dim, 2))?;
        Ok(numerator
            .eval_numeric(x)?
            .mul(&rho)
            .mul(&cr_derivative_of_g.eval_numeric(x)?)
            .mul(&f_ext.eval_numeric(x)?))
    };
    Ok(surface_pairing(phase_ext, q, &w)?.value)
}

#[derive(Clone, Debug)]
pub struct AntisymmetryReport {
    pub name: String,
    pub residual: f64,
}

/// The three families of paired integrals behind the vanishing of
/// (Z−U)∂_{Z†}[g]F against the spinor basis: z–z symmetric, z–zg mixed with
/// the −2i factor, zg–zg antisymmetric (the diagonal forces zero).
pub fn bm_antisymmetry_check(
    phase: &PhaseFunction,
    f: &SuperExpr,
    y_bos: &[f64],
    q: &QuadratureSpec,
) -> Result<Vec<AntisymmetryReport>> {
    let base = phase.dims;
    let m = base.require_hermitian()?;
    if !is_holomorphic(f)? {
        return Err(Error::NotHolomorphic);
    }
    let m_dim = base.superdim();
    let point = SuperPoint::new(base, y_bos.to_vec())?;
    let dims = point.dims;
    let phase_ext =
        PhaseFunction { dims, g: phase.g.extend_dims(dims), family: phase.family.clone() };
    let g_ext = phase.g.extend_dims(dims);
    let f_ext = f.extend_dims(dims);
    let mut out = Vec::new();

    let dzc_g: Vec<SuperExpr> =
        (1..=m).map(|j| d_z_conj(&g_ext, j)).collect::<Result<_>>()?;
    let dzgc_g: Vec<SuperExpr> =
        (1..=base.n).map(|j| d_zg_conj(&g_ext, j)).collect::<Result<_>>()?;

    // z–z family: I[j,k] = I[k,j]
    for j in 1..=m {
        for k in (j + 1)..=m {
            let a = bm_family_integral(
                &phase_ext,
                &point,
                &point.z_minus_u(j)?,
                &dzc_g[k - 1],
                &f_ext,
                m_dim,
                q,
            )?;
            let b = bm_family_integral(
                &phase_ext,
                &point,
                &point.z_minus_u(k)?,
                &dzc_g[j - 1],
                &f_ext,
                m_dim,
                q,
            )?;
            out.push(AntisymmetryReport {
                name: format!("z{j}–z{k} symmetric"),
                residual: a.sub(&b).max_abs(),
            });
        }
    }
    // z–zg family: −2i·I[z_j, zg_k] = I[zg_k, z_j]
    for j in 1..=m {
        for k in 1..=base.n {
            let a = bm_family_integral(
                &phase_ext,
                &point,
                &point.z_minus_u(j)?,
                &dzgc_g[k - 1],
                &f_ext,
                m_dim,
                q,
            )?;
            let b = bm_family_integral(
                &phase_ext,
                &point,
                &point.zg_minus_ug(k)?,
                &dzc_g[j - 1],
                &f_ext,
                m_dim,
                q,
            )?;
            let lhs = a.scale(&(&Scalar::from_int(-2) * &Scalar::i()));
            out.push(AntisymmetryReport {
                name: format!("z{j}–zg{k} mixed"),
                residual: lhs.sub(&b).max_abs(),
            });
        }
    }
    // zg–zg family: I[j,k] = −I[k,j] (diagonal must vanish)
    for j in 1..=base.n {
        for k in j..=base.n {
            let a = bm_family_integral(
                &phase_ext,
                &point,
                &point.zg_minus_ug(j)?,
                &dzgc_g[k - 1],
                &f_ext,
                m_dim,
                q,
            )?;
            let b = bm_family_integral(
                &phase_ext,
                &point,
                &point.zg_minus_ug(k)?,
                &dzgc_g[j - 1],
                &f_ext,
                m_dim,
                q,
            )?;
            out.push(AntisymmetryReport {
                name: format!("zg{j}–zg{k} antisymmetric"),
                residual: a.add(&b).max_abs(),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct ClassicalBmReport {
    pub engine_value: Complex64,
    pub classical_value: Complex64,
    pub expected: Complex64,
    pub engine_err: f64,
    pub classical_err: f64,
}

/// n = 0 reduction: the engine path against the classical Bochner-Martinelli
/// kernel evaluated by direct surface quadrature (for m = 1 this is the
/// Cauchy integral on the circle).
pub fn classical_bm_check(
    m: usize,
    radius: f64,
    f: &SuperExpr,
    u: &[f64],
    q: &QuadratureSpec,
) -> Result<ClassicalBmReport> {
    let dims = Dims::hermitian(m, 0);
    if f.dims != dims {
        return Err(Error::DimensionMismatch("classical check needs n = 0 dims".into()));
    }
    let r_rat = num::rational::Ratio::<i64>::approximate_float(radius)
        .ok_or_else(|| Error::UnsupportedPhase("radius not representable".into()))?;
    let phase = PhaseFunction::supersphere(dims, r_rat);
    let engine = bm_evaluate(&phase, f, u, q)?;
    let engine_value = engine
        .value
        .body0()
        .as_constant()
        .map(|c| c.to_complex())
        .unwrap_or(Complex64::new(0.0, 0.0));

    // classical path: f(u) = (2/|S^{2m-1}|) ∮ Σ_j (z_j−u_j)^c (ν_j/2) |z−u|^{-2m} f dS
    // with the complex normal ν_j = (x_j + i x_{m+j})/R on the sphere.
    let rule = sphere_rule(2 * m, q.angular_degree + 4)?;
    let area = Scalar::supersphere_area(2 * m as i64, 0).unwrap();
    let mut acc = Vec::with_capacity(rule.points.len());
    for (pt, w) in rule.points.iter().zip(&rule.weights) {
        let x: Vec<f64> = pt.iter().map(|v| v * radius).collect();
        let fv = f
            .eval_numeric(&x)?
            .body0()
            .as_constant()
            .map(|c| c.to_complex())
            .unwrap_or(Complex64::new(0.0, 0.0));
        let mut kernel = Complex64::new(0.0, 0.0);
        let mut dist_sq = 0.0;
        for j in 0..2 * m {
            dist_sq += (x[j] - u[j]) * (x[j] - u[j]);
        }
        for j in 0..m {
            let zmu = Complex64::new(x[j] - u[j], x[m + j] - u[m + j]);
            let nu_j = Complex64::new(x[j], x[m + j]) / radius;
            kernel += zmu.conj() * nu_j * 0.5;
        }
        let val = kernel * dist_sq.powf(-(m as f64)) * fv;
        // surface measure: weights are the unit-sphere measure, scale by R^{2m-1}
        acc.push(val * w * radius.powi(2 * m as i32 - 1));
    }
    let classical_value = crate::integrate::quad::pairwise_sum(&acc)
        * (Complex64::new(2.0, 0.0) / area.to_complex());

    let expected = {
        let point = SuperPoint::new(dims, u.to_vec())?;
        point
            .eval_function(f)?
            .body0()
            .as_constant()
            .map(|c| c.to_complex())
            .unwrap_or(Complex64::new(0.0, 0.0))
    };
    Ok(ClassicalBmReport {
        engine_value,
        classical_value,
        expected,
        engine_err: (engine_value - expected).norm(),
        classical_err: (classical_value - expected).norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::vector::{z_var_conj, zg_var_conj};

    fn q() -> QuadratureSpec {
        QuadratureSpec::default().with_angular_degree(12).with_tol(1e-8)
    }

    #[test]
    fn supersphere_directional_derivative_is_anticommutator() {
        // D†[g] = {Z, (Z−U)†} for g = |Z|² − R², checked symbolically at a
        // numeric point via both routes.
        let base = Dims::hermitian(2, 1);
        let phase = PhaseFunction::supersphere(base, Rat64::from_integer(1));
        let point = SuperPoint::new(base, vec![0.2, 0.0, 0.1, 0.0]).unwrap();
        let dd = directional_derivative_of_phase(&point, &phase.g).unwrap();
        // anticommutator route
        let d = point.dims;
        let (z, _) = crate::ops::dirac::hermitian_vars(d).unwrap();
        let mut zd_minus_ud = SuperExpr::zero(d);
        let m = 2;
        for j in 1..=m {
            let f_dag = {
                let e = SuperExpr::e(d, j - 1).unwrap();
                let em = SuperExpr::e(d, m + j - 1).unwrap();
                e.add(&em.scale(&Scalar::i()))
                    .scale(&Scalar::from_rat(Rat64::new(-1, 2)))
            };
            zd_minus_ud = zd_minus_ud
                .add(&point.z_minus_u(j).unwrap().complex_conjugate().mul(&f_dag));
        }
        for j in 1..=d.n {
            let fg_dag = {
                let ego = SuperExpr::eg(d, 2 * j - 2).unwrap();
                let ege = SuperExpr::eg(d, 2 * j - 1).unwrap();
                ego.add(&ege.scale(&Scalar::i()))
                    .scale(&Scalar::from_rat(Rat64::new(-1, 2)))
            };
            zd_minus_ud = zd_minus_ud
                .add(&point.zg_minus_ug(j).unwrap().complex_conjugate().mul(&fg_dag));
        }
        let anti = z.mul(&zd_minus_ud).add(&zd_minus_ud.mul(&z));
        assert_eq!(dd, anti);
    }

    #[test]
    fn bm_reproduces_z1_on_supersphere() {
        let base = Dims::hermitian(2, 1);
        let phase = PhaseFunction::supersphere(base, Rat64::from_integer(1));
        let f = z_var(base, 1).unwrap();
        let y = [0.2, 0.0, 0.1, 0.0];
        let res = bm_evaluate(&phase, &f, &y, &q()).unwrap();
        let expect = bm_expected(&phase, &f, &y).unwrap();
        let diff = res.value.sub(&expect).max_abs();
        assert!(diff < 1e-8, "value {} expected {}", res.value, expect);
    }

    #[test]
    fn bm_grassmann_valued_result() {
        let base = Dims::hermitian(2, 1);
        let phase = PhaseFunction::supersphere(base, Rat64::from_integer(1));
        let f = z_var(base, 1).unwrap().mul(&zg_var(base, 1).unwrap());
        let y = [0.2, 0.0, 0.1, 0.0];
        let res = bm_evaluate(&phase, &f, &y, &q()).unwrap();
        let expect = bm_expected(&phase, &f, &y).unwrap();
        assert!(!expect.is_zero());
        let diff = res.value.sub(&expect).max_abs();
        assert!(diff < 1e-8, "value {} expected {}", res.value, expect);
    }

    #[test]
    fn bm_rejects_non_holomorphic() {
        let base = Dims::hermitian(2, 1);
        let phase = PhaseFunction::supersphere(base, Rat64::from_integer(1));
        let f = z_var_conj(base, 1).unwrap();
        assert!(matches!(
            bm_evaluate(&phase, &f, &[0.2, 0.0, 0.1, 0.0], &q()),
            Err(Error::NotHolomorphic)
        ));
    }

    #[test]
    fn classical_reduction_m1() {
        // m = 1, unit circle, f(z) = z², u = 0.3 → 0.09 from both paths
        let dims = Dims::hermitian(1, 0);
        let z = z_var(dims, 1).unwrap();
        let f = z.mul(&z);
        let rep = classical_bm_check(1, 1.0, &f, &[0.3, 0.0], &q()).unwrap();
        assert!((rep.expected - Complex64::new(0.09, 0.0)).norm() < 1e-14);
        assert!(rep.engine_err < 1e-9, "engine err {}", rep.engine_err);
        assert!(rep.classical_err < 1e-9, "classical err {}", rep.classical_err);
    }
}
