//! Quadrature building blocks: Gauss-Legendre rules, product rules on the
//! unit sphere 𝕊^{p-1}, Chebyshev differentiation stencils, and a fixed-shape
//! pairwise summation tree for run-to-run determinism.

use num::complex::Complex64;

use crate::error::{Error, Result};

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    let nn = n as f64;
    for i in 0..n {
        // Tricomi-style initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nn + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0f64;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss-Legendre rule transplanted to [a, b].
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> Vec<(f64, f64)> {
    gauss_legendre(n)
        .into_iter()
        .map(|(x, w)| (0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w))
        .collect()
}

/// Product quadrature on the unit sphere 𝕊^{p-1} ⊂ ℝ^p, exact for
/// polynomial integrands up to the requested degree.
///
/// Each latitude integral ∫₀^π f(cosθ) sin^k θ dθ is transplanted to
/// ∫_{-1}^{1} f(c) (1-c²)^{(k-1)/2} dc and handled by Gauss-Legendre (odd k,
/// polynomial weight folded in) or Gauss-Chebyshev of the second kind
/// (even k, the √(1-c²) factor is the Chebyshev weight). The final angle
/// uses the trapezoid rule, exact for trigonometric polynomials.
pub struct SphereRule {
    pub points: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
}

/// Nodes/weights for ∫_{-1}^1 f(c) (1-c²)^{(k-1)/2} dc, exact for
/// polynomial f of degree ≤ 2·count−1−(k-1)·(k odd).
fn gegenbauer_rule(k: usize, count: usize) -> Vec<(f64, f64)> {
    if k % 2 == 1 {
        // polynomial weight (1-c²)^{(k-1)/2}
        gauss_legendre(count)
            .into_iter()
            .map(|(c, w)| (c, w * (1.0 - c * c).powi(((k - 1) / 2) as i32)))
            .collect()
    } else {
        // Chebyshev 2nd kind weight √(1-c²) times polynomial (1-c²)^{(k-2)/2}
        let n = count;
        (1..=n)
            .map(|j| {
                let t = std::f64::consts::PI * j as f64 / (n + 1) as f64;
                let c = t.cos();
                let w = std::f64::consts::PI / (n + 1) as f64 * t.sin() * t.sin();
                let extra = if k >= 2 {
                    (1.0 - c * c).powi(((k - 2) / 2) as i32)
                } else {
                    // k = 0: weight (1-c²)^{-1/2} is not needed by sphere rules
                    1.0 / (1.0 - c * c)
                };
                (c, w * extra)
            })
            .collect()
    }
}

pub fn sphere_rule(p: usize, degree: usize) -> Result<SphereRule> {
    if p < 2 {
        return Err(Error::Quadrature(format!("no sphere rule for p = {p}")));
    }
    let mut points = Vec::new();
    let mut weights = Vec::new();
    if p == 2 {
        let n_phi = (2 * degree + 2).max(6);
        for k in 0..n_phi {
            let phi = 2.0 * std::f64::consts::PI * k as f64 / n_phi as f64;
            points.push(vec![phi.cos(), phi.sin()]);
            weights.push(2.0 * std::f64::consts::PI / n_phi as f64);
        }
        return Ok(SphereRule { points, weights });
    }
    // x = (c, √(1-c²)·ω') with ω' ∈ 𝕊^{p-2}, weight (1-c²)^{(p-3)/2} dc
    let inner = sphere_rule(p - 1, degree)?;
    let lat = gegenbauer_rule(p - 2, degree.max(2) + 2);
    for &(c, w) in &lat {
        let s = (1.0 - c * c).sqrt();
        for (ipt, iw) in inner.points.iter().zip(&inner.weights) {
            let mut x = Vec::with_capacity(p);
            x.push(c);
            for v in ipt {
                x.push(s * v);
            }
            points.push(x);
            weights.push(w * iw);
        }
    }
    Ok(SphereRule { points, weights })
}

/// Chebyshev points of the second kind on [c-h, c+h].
pub fn chebyshev_stencil(c: f64, h: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|k| {
            let t = std::f64::consts::PI * k as f64 / (count - 1) as f64;
            c + h * t.cos()
        })
        .collect()
}

/// j-th derivative at `c` of the polynomial interpolating `(xs, ys)`.
///
/// Newton's divided differences expanded about `c`.
pub fn interpolated_derivative(xs: &[f64], ys: &[Complex64], c: f64, j: usize) -> Complex64 {
    let n = xs.len();
    // divided-difference coefficients
    let mut dd: Vec<Complex64> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // expand Newton form into a Taylor series about c: maintain polynomial
    // coefficients in (x - c).
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
    // horner over the newton basis, highest term first
    let mut poly = vec![Complex64::new(0.0, 0.0); n];
    poly[0] = dd[n - 1];
    let mut deg = 0usize;
    for i in (0..n - 1).rev() {
        // poly := poly·(x - xs[i]) + dd[i], in (x-c) coordinates:
        // (x - xs[i]) = (x - c) + (c - xs[i])
        let shift = c - xs[i];
        let mut next = vec![Complex64::new(0.0, 0.0); deg + 2];
        for k in 0..=deg {
            next[k + 1] += poly[k];
            next[k] += poly[k] * shift;
        }
        next[0] += dd[i];
        deg += 1;
        poly = next;
    }
    coeffs[..poly.len()].copy_from_slice(&poly);
    let mut fact = 1.0f64;
    for t in 1..=j {
        fact *= t as f64;
    }
    coeffs.get(j).copied().unwrap_or(Complex64::new(0.0, 0.0)) * fact
}

/// Deterministic pairwise summation over a fixed ordering.
pub fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    match values.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => values[0],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// Quadrature configuration shared by the integral evaluators.
#[derive(Clone, Debug)]
pub struct QuadratureSpec {
    /// Gauss-Legendre points per angular dimension.
    pub angular_degree: usize,
    /// Half-width of the radial Chebyshev stencil (relative to t₀).
    pub radial_halfwidth: f64,
    /// Points in the radial stencil per derivative order (2j + this).
    pub radial_points: usize,
    /// Richardson levels for the radial derivative.
    pub richardson_levels: usize,
    /// Target absolute tolerance.
    pub tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            angular_degree: 16,
            radial_halfwidth: 0.25,
            radial_points: 7,
            richardson_levels: 2,
            tol: 1e-8,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.tol <= 0.0 || self.angular_degree < 2 || self.radial_points < 3 {
            return Err(Error::Quadrature("invalid quadrature spec".into()));
        }
        Ok(())
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_angular_degree(mut self, d: usize) -> Self {
        self.angular_degree = d;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_exactness() {
        // degree-9 polynomial with a 5-point rule
        let rule = gauss_legendre(5);
        let val: f64 = rule.iter().map(|&(x, w)| w * x.powi(8)).sum();
        assert!((val - 2.0 / 9.0).abs() < 1e-14);
        let odd: f64 = rule.iter().map(|&(x, w)| w * x.powi(9)).sum();
        assert!(odd.abs() < 1e-14);
    }

    #[test]
    fn sphere_rule_areas_and_moments() {
        for (p, area) in [
            (2usize, 2.0 * std::f64::consts::PI),
            (3, 4.0 * std::f64::consts::PI),
            (4, 2.0 * std::f64::consts::PI.powi(2)),
            (6, std::f64::consts::PI.powi(3)),
        ] {
            let rule = sphere_rule(p, 12).unwrap();
            let total: f64 = rule.weights.iter().sum();
            assert!((total - area).abs() < 1e-10 * area, "p={p}: {total} vs {area}");
            // ∫ x_1² = area / p
            let m2: f64 = rule
                .points
                .iter()
                .zip(&rule.weights)
                .map(|(x, w)| w * x[0] * x[0])
                .sum();
            assert!((m2 - area / p as f64).abs() < 1e-10, "p={p}");
            // odd moment vanishes
            let m1: f64 = rule
                .points
                .iter()
                .zip(&rule.weights)
                .map(|(x, w)| w * x[p - 1])
                .sum();
            assert!(m1.abs() < 1e-12);
        }
    }

    #[test]
    fn interpolated_derivative_accuracy() {
        let c = 1.0;
        let h = 0.3;
        let xs = chebyshev_stencil(c, h, 9);
        let ys: Vec<Complex64> = xs
            .iter()
            .map(|&x| Complex64::new((2.0 * x).sin(), 0.0))
            .collect();
        let d1 = interpolated_derivative(&xs, &ys, c, 1);
        assert!((d1.re - 2.0 * (2.0 * c).cos()).abs() < 1e-8);
        let d2 = interpolated_derivative(&xs, &ys, c, 2);
        assert!((d2.re + 4.0 * (2.0 * c).sin()).abs() < 1e-6);
    }

    #[test]
    fn pairwise_sum_deterministic() {
        let vals: Vec<Complex64> =
            (0..1000).map(|i| Complex64::new((i as f64).sin(), 0.0)).collect();
        let a = pairwise_sum(&vals);
        let b = pairwise_sum(&vals);
        assert_eq!(a, b);
    }
}
