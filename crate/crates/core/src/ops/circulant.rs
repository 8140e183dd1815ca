//! 2×2 circulant matrix calculus for the Hermitian setting.

use crate::error::Result;
use crate::ops::dirac::{hermitian_dirac, HermitianWhich, Side};
use crate::superexpr::SuperExpr;

/// Pair (a, b) standing for the circulant matrix [[a, b], [b, a]].
#[derive(Clone, Debug, PartialEq)]
pub struct Circulant2 {
    pub a: SuperExpr,
    pub b: SuperExpr,
}

impl Circulant2 {
    pub fn new(a: SuperExpr, b: SuperExpr) -> Self {
        Circulant2 { a, b }
    }

    /// G·I₂.
    pub fn diagonal(a: SuperExpr) -> Self {
        let b = SuperExpr::zero(a.dims);
        Circulant2 { a, b }
    }

    pub fn identity(dims: crate::dims::Dims) -> Self {
        Circulant2::diagonal(SuperExpr::one(dims))
    }

    pub fn zero(dims: crate::dims::Dims) -> Self {
        Circulant2 { a: SuperExpr::zero(dims), b: SuperExpr::zero(dims) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &Circulant2) -> Circulant2 {
        Circulant2 { a: self.a.add(&other.a), b: self.b.add(&other.b) }
    }

    pub fn sub(&self, other: &Circulant2) -> Circulant2 {
        Circulant2 { a: self.a.sub(&other.a), b: self.b.sub(&other.b) }
    }

    pub fn neg(&self) -> Circulant2 {
        Circulant2 { a: self.a.neg(), b: self.b.neg() }
    }

    pub fn scale(&self, c: &crate::scalar::Scalar) -> Circulant2 {
        Circulant2 { a: self.a.scale(c), b: self.b.scale(c) }
    }

    /// [[a,b],[b,a]]·[[c,d],[d,c]] = [[ac+bd, ad+bc], [ad+bc, ac+bd]].
    pub fn mul(&self, other: &Circulant2) -> Circulant2 {
        Circulant2 {
            a: self.a.mul(&other.a).add(&self.b.mul(&other.b)),
            b: self.a.mul(&other.b).add(&self.b.mul(&other.a)),
        }
    }

    /// Multiplies both entries by an even scalar factor.
    pub fn scale_expr(&self, f: &SuperExpr) -> Circulant2 {
        Circulant2 { a: f.mul(&self.a), b: f.mul(&self.b) }
    }

    pub fn max_abs(&self) -> f64 {
        self.a.max_abs().max(self.b.max_abs())
    }
}

/// 𝒟_{(Z,Z†)} applied to a circulant matrix from `side`:
/// left action gives [[∂_Z a + ∂_{Z†} b, ∂_Z b + ∂_{Z†} a], …],
/// right action the mirrored products.
pub fn dirac_matrix_apply(g: &Circulant2, side: Side) -> Result<Circulant2> {
    let dz_a = hermitian_dirac(&g.a, HermitianWhich::Z, side)?;
    let dz_b = hermitian_dirac(&g.b, HermitianWhich::Z, side)?;
    let dzd_a = hermitian_dirac(&g.a, HermitianWhich::ZDag, side)?;
    let dzd_b = hermitian_dirac(&g.b, HermitianWhich::ZDag, side)?;
    Ok(Circulant2 { a: dz_a.add(&dzd_b), b: dz_b.add(&dzd_a) })
}

/// SH-monogenicity of a circulant matrix function.
pub fn is_sh_monogenic_matrix(g: &Circulant2) -> Result<bool> {
    Ok(dirac_matrix_apply(g, Side::Left)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dims::Dims;
    use crate::ops::vector::z_var;
    use crate::scalar::Scalar;

    #[test]
    fn identity_multiplication() {
        let d = Dims::hermitian(2, 1);
        let z1 = z_var(d, 1).unwrap();
        let g = Circulant2::new(z1.clone(), z1.mul(&z1).scale(&Scalar::i()));
        let id = Circulant2::identity(d);
        assert_eq!(id.mul(&g), g);
        assert_eq!(g.mul(&id), g);
    }

    #[test]
    fn diagonal_matrix_dirac() {
        // 𝒟 G₀ has ∂_Z G on the diagonal and ∂_{Z†} G off it; for
        // sh-monogenic G the result vanishes.
        let d = Dims::hermitian(2, 1);
        let g0 = Circulant2::diagonal(z_var(d, 1).unwrap());
        let dg = dirac_matrix_apply(&g0, Side::Left).unwrap();
        // z1 is holomorphic hence sh-monogenic? ∂_Z z1 = Σ f_j† ∂_{z_j} z1 = f_1† ≠ 0.
        assert!(!dg.is_zero());
        let c = Circulant2::diagonal(SuperExpr::one(d));
        assert!(is_sh_monogenic_matrix(&c).unwrap());
    }
}
