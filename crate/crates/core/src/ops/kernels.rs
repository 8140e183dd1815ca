//! Fundamental solutions of the super Dirac operators.
//!
//! The closed form is `ν₁ = x / (|𝕊^{p-1|2n}| |x|^M)` with `M = p − 2n`,
//! valid for `M ∉ −2ℕ+2`. The series form assembles ν₁ from the classical
//! fundamental solutions of powers of the bosonic Dirac operator; both routes
//! must canonicalize to the same expression.

use crate::dims::Dims;
use crate::error::{Error, Result};
use crate::ops::vector::{abs_x_pow, bosonic_vector, fermionic_vector, supervector};
use crate::scalar::{Rat64, Scalar};
use crate::superexpr::SuperExpr;

/// Fundamental-solution pair (ν₁, J(ν₁)).
#[derive(Clone, Debug, PartialEq)]
pub struct KernelPair {
    pub nu: SuperExpr,
    pub j_nu: SuperExpr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelForm {
    Closed,
    Series,
}

/// ν₁ for the super Dirac operator.
pub fn nu1(dims: Dims, form: KernelForm) -> Result<SuperExpr> {
    if dims.p < 2 {
        return Err(Error::UnsupportedBody(
            "kernels are restricted to p ≥ 2 bosonic dimensions".into(),
        ));
    }
    let m_dim = dims.require_valid_superdim()?;
    match form {
        KernelForm::Closed => {
            let area = Scalar::supersphere_area(dims.p as i64, dims.n as i64)?;
            let x = supervector(dims);
            let inv_pow = abs_x_pow(dims, Rat64::from_integer(-m_dim))?;
            Ok(x.mul(&inv_pow).scale(&area.inv()?))
        }
        KernelForm::Series => nu1_series(dims),
    }
}

/// Classical fundamental solution of ∂_{x̲}^{2k+2} in `p` bosonic dimensions:
/// φ_{2k+2} = Γ(p/2 − k − 1) / (2^{2k+2} π^{p/2} Γ(k+1)) · |x̲|^{2k+2-p}.
fn phi_even(dims: Dims, k: i64) -> Result<SuperExpr> {
    let p = dims.p as i64;
    let gamma = Scalar::gamma_half(p - 2 * k - 2);
    let denom = &Scalar::from_rat(Rat64::new(1, 1 << (2 * k + 2)))
        * &Scalar::pi_half_pow(-(p as i32));
    let coeff = &(&gamma * &denom) * &Scalar::gamma_half(2 * k + 2).inv()?;
    Ok(SuperExpr::radial(dims, Rat64::from_integer(2 * k + 2 - p)).scale(&coeff))
}

/// φ_{2k+1} = −Γ(p/2 − k) / (2^{2k+1} π^{p/2} Γ(k+1)) · x̲ |x̲|^{2k-p}.
fn phi_odd(dims: Dims, k: i64) -> Result<SuperExpr> {
    let p = dims.p as i64;
    let gamma = Scalar::gamma_half(p - 2 * k);
    let denom = &Scalar::from_rat(Rat64::new(-1, 1 << (2 * k + 1)))
        * &Scalar::pi_half_pow(-(p as i32));
    let coeff = &(&gamma * &denom) * &Scalar::gamma_half(2 * k + 2).inv()?;
    let xb = bosonic_vector(dims);
    Ok(xb
        .scale_body(&crate::body::Body::radial_power(dims.p, Rat64::from_integer(2 * k - p)))
        .scale(&coeff))
}

fn nu1_series(dims: Dims) -> Result<SuperExpr> {
    let n = dims.n as i64;
    let xf = fermionic_vector(dims);
    let mut acc = SuperExpr::zero(dims);
    // π^n Σ_{k=0}^{n-1} 2^{2k+1} k!/(n-k-1)! · φ_{2k+2} · x̲`^{2n-2k-1}
    for k in 0..n {
        let coeff = &(&Scalar::pi_half_pow(2 * n as i32)
            * &Scalar::from_rat(Rat64::from_integer(1 << (2 * k + 1))))
            * &(&Scalar::gamma_half(2 * k + 2)
                * &Scalar::gamma_half(2 * (n - k - 1) + 2).inv()?);
        let term = phi_even(dims, k)?
            .mul(&xf.pow((2 * n - 2 * k - 1) as usize))
            .scale(&coeff);
        acc = acc.add(&term);
    }
    // − π^n Σ_{k=0}^{n} 2^{2k} k!/(n-k)! · φ_{2k+1} · x̲`^{2n-2k}
    for k in 0..=n {
        let coeff = &(&Scalar::pi_half_pow(2 * n as i32)
            * &Scalar::from_rat(Rat64::from_integer(1 << (2 * k))))
            * &(&Scalar::gamma_half(2 * k + 2) * &Scalar::gamma_half(2 * (n - k) + 2).inv()?);
        let term = phi_odd(dims, k)?
            .mul(&xf.pow((2 * n - 2 * k) as usize))
            .scale(&coeff);
        acc = acc.sub(&term);
    }
    Ok(acc)
}

/// The pair (ν₁, J(ν₁)) in the Hermitian setting.
pub fn kernel_pair(dims: Dims) -> Result<KernelPair> {
    dims.require_hermitian()?;
    let nu = nu1(dims, KernelForm::Closed)?;
    let j_nu = nu.apply_j()?;
    Ok(KernelPair { nu, j_nu })
}

/// Hermitian counterparts Ψ = ν₁ + iJ(ν₁) and Ψ† = −(ν₁ − iJ(ν₁)).
pub fn psi_kernels(dims: Dims) -> Result<(SuperExpr, SuperExpr)> {
    let m = dims.require_hermitian()?;
    if m <= dims.n {
        return Err(Error::RequiresMGreaterN { m, n: dims.n });
    }
    let KernelPair { nu, j_nu } = kernel_pair(dims)?;
    let psi = nu.add(&j_nu.scale(&Scalar::i()));
    let psi_dag = nu.sub(&j_nu.scale(&Scalar::i())).neg();
    Ok((psi, psi_dag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::dirac::{dirac, hermitian_vars, Side};

    #[test]
    fn closed_form_small_cases() {
        // p = 2, n = 0: ν₁ = (1/2π) x |x|⁻²
        let d = Dims::new(2, 0);
        let nu = nu1(d, KernelForm::Closed).unwrap();
        let x = supervector(d);
        let expect = x
            .scale_body(&crate::body::Body::radial_power(2, Rat64::new(-2, 1)))
            .scale(&(&Scalar::from_rat(Rat64::new(1, 2)) * &Scalar::pi_half_pow(-2)));
        assert_eq!(nu, expect);
    }

    #[test]
    fn excluded_superdimensions_rejected() {
        assert!(nu1(Dims::new(2, 1), KernelForm::Closed).is_err()); // M = 0
        assert!(nu1(Dims::new(2, 2), KernelForm::Closed).is_err()); // M = -2
        assert!(nu1(Dims::new(3, 2), KernelForm::Closed).is_ok()); // M = -1
    }

    #[test]
    fn series_equals_closed() {
        for p in 2..=6usize {
            for n in 0..=2usize {
                let d = Dims::new(p, n);
                if d.require_valid_superdim().is_err() {
                    continue;
                }
                let closed = nu1(d, KernelForm::Closed).unwrap();
                let series = nu1(d, KernelForm::Series).unwrap();
                assert_eq!(series, closed, "series ≠ closed at (p,n)=({p},{n})");
            }
        }
    }

    #[test]
    fn nu1_is_monogenic_away_from_origin() {
        for (p, n) in [(4usize, 1usize), (3, 1), (6, 2)] {
            let d = Dims::new(p, n);
            let nu = nu1(d, KernelForm::Closed).unwrap();
            assert!(dirac(&nu, Side::Left).unwrap().is_zero(), "(p,n)=({p},{n})");
            assert!(dirac(&nu, Side::Right).unwrap().is_zero(), "right (p,n)=({p},{n})");
        }
    }

    #[test]
    fn psi_closed_forms() {
        let d = Dims::hermitian(2, 1);
        let (psi, psi_dag) = psi_kernels(d).unwrap();
        // Ψ = (2/σ) Z |x|^{-M}
        let (z, zdag) = hermitian_vars(d).unwrap();
        let area = Scalar::supersphere_area(4, 1).unwrap();
        let inv_pow = abs_x_pow(d, Rat64::from_integer(-2)).unwrap();
        let two_over = &Scalar::from_int(2) * &area.inv().unwrap();
        assert_eq!(psi, z.mul(&inv_pow).scale(&two_over));
        assert_eq!(psi_dag, zdag.mul(&inv_pow).scale(&two_over));
        // Ψ + Ψ† = 2i J(ν₁)
        let pair = kernel_pair(d).unwrap();
        let sum = psi.add(&psi_dag);
        assert_eq!(sum, pair.j_nu.scale(&(&Scalar::from_int(2) * &Scalar::i())));
        // m ≤ n rejected
        assert!(psi_kernels(Dims::hermitian(1, 1)).is_err());
    }
}
