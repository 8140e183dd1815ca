//! Super Dirac operators, their twisted and Hermitian variants, and the
//! monogenicity predicates.
//!
//! Left actions:
//!   ∂_x·  = ∂_{x̲`}· − ∂_{x̲}·         with ∂_{x̲} = Σ e_j ∂_{x_j},
//!   ∂_{x̲`} = 2 Σ (eg_{2j} ∂_{xg_{2j-1}} − eg_{2j-1} ∂_{xg_{2j}}),
//! right actions:
//!   ·∂_x  = −·∂_{x̲`} − ·∂_{x̲}.
//! The twisted operators substitute J-transformed generators, and the
//! Hermitian operators are ∂_Z = ¼(∂_x − i∂_{J(x)}), ∂_{Z†} = −¼(∂_x + i∂_{J(x)}).

use crate::dims::Dims;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::superexpr::SuperExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Σ e_j ∂_{x_j} acting from `side`.
pub fn dirac_bosonic(a: &SuperExpr, side: Side) -> Result<SuperExpr> {
    let d = a.dims;
    let mut acc = SuperExpr::zero(d);
    for j in 0..d.p {
        let e = SuperExpr::e(d, j)?;
        let da = a.derive_bosonic(j)?;
        let term = match side {
            Side::Left => e.mul(&da),
            Side::Right => da.mul(&e),
        };
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// 2 Σ (eg_{2j} ∂_{xg_{2j-1}} − eg_{2j-1} ∂_{xg_{2j}}) from `side`.
pub fn dirac_fermionic(a: &SuperExpr, side: Side) -> Result<SuperExpr> {
    let d = a.dims;
    let mut acc = SuperExpr::zero(d);
    for j in 0..d.n {
        let eg_odd = SuperExpr::eg(d, 2 * j)?; // eg_{2j-1}
        let eg_even = SuperExpr::eg(d, 2 * j + 1)?; // eg_{2j}
        let term = match side {
            Side::Left => {
                let d_odd = a.derive_fermionic(2 * j)?;
                let d_even = a.derive_fermionic(2 * j + 1)?;
                eg_even.mul(&d_odd).sub(&eg_odd.mul(&d_even))
            }
            Side::Right => {
                let d_odd = a.derive_fermionic_right(2 * j)?;
                let d_even = a.derive_fermionic_right(2 * j + 1)?;
                d_odd.mul(&eg_even).sub(&d_even.mul(&eg_odd))
            }
        };
        acc = acc.add(&term);
    }
    Ok(acc.scale(&Scalar::from_int(2)))
}

/// Super Dirac operator (super-gradient).
pub fn dirac(a: &SuperExpr, side: Side) -> Result<SuperExpr> {
    let f = dirac_fermionic(a, side)?;
    let b = dirac_bosonic(a, side)?;
    Ok(match side {
        Side::Left => f.sub(&b),
        Side::Right => f.neg().sub(&b),
    })
}

/// J(∂_{x̲}) = Σ (e_j ∂_{x_{m+j}} − e_{m+j} ∂_{x_j}) from `side`.
pub fn twisted_bosonic(a: &SuperExpr, side: Side) -> Result<SuperExpr> {
    let d = a.dims;
    let m = d.m()?;
    let mut acc = SuperExpr::zero(d);
    for j in 0..m {
        let ej = SuperExpr::e(d, j)?;
        let emj = SuperExpr::e(d, m + j)?;
        let da_hi = a.derive_bosonic(m + j)?;
        let da_lo = a.derive_bosonic(j)?;
        let term = match side {
            Side::Left => ej.mul(&da_hi).sub(&emj.mul(&da_lo)),
            Side::Right => da_hi.mul(&ej).sub(&da_lo.mul(&emj)),
        };
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// J(∂_{x̲`}) = 2 Σ (eg_{2j-1} ∂_{xg_{2j-1}} + eg_{2j} ∂_{xg_{2j}}) from `side`.
pub fn twisted_fermionic(a: &SuperExpr, side: Side) -> Result<SuperExpr> {
    let d = a.dims;
    d.require_hermitian()?;
    let mut acc = SuperExpr::zero(d);
    for j in 0..d.n {
        let eg_odd = SuperExpr::eg(d, 2 * j)?;
        let eg_even = SuperExpr::eg(d, 2 * j + 1)?;
        let term = match side {
            Side::Left => {
                let d_odd = a.derive_fermionic(2 * j)?;
                let d_even = a.derive_fermionic(2 * j + 1)?;
                eg_odd.mul(&d_odd).add(&eg_even.mul(&d_even))
            }
            Side::Right => {
                let d_odd = a.derive_fermionic_right(2 * j)?;
                let d_even = a.derive_fermionic_right(2 * j + 1)?;
                d_odd.mul(&eg_odd).add(&d_even.mul(&eg_even))
            }
        };
        acc = acc.add(&term);
    }
    Ok(acc.scale(&Scalar::from_int(2)))
}

/// Twisted super Dirac operator ∂_{J(x)}.
pub fn twisted_dirac(a: &SuperExpr, side: Side) -> Result<SuperExpr> {
    let f = twisted_fermionic(a, side)?;
    let b = twisted_bosonic(a, side)?;
    Ok(match side {
        Side::Left => f.sub(&b),
        Side::Right => f.neg().sub(&b),
    })
}

/// Δ = Σ ∂²_{x_j} − 4 Σ ∂_{xg_{2j-1}} ∂_{xg_{2j}}.
pub fn laplacian(a: &SuperExpr) -> Result<SuperExpr> {
    let d = a.dims;
    let mut acc = SuperExpr::zero(d);
    for j in 0..d.p {
        acc = acc.add(&a.derive_bosonic(j)?.derive_bosonic(j)?);
    }
    for j in 0..d.n {
        let term = a.derive_fermionic(2 * j + 1)?.derive_fermionic(2 * j)?;
        acc = acc.sub(&term.scale(&Scalar::from_int(4)));
    }
    Ok(acc)
}

/// Hermitian supervector variables Z = ½(x + iJ(x)), Z† = −½(x − iJ(x)).
pub fn hermitian_vars(dims: Dims) -> Result<(SuperExpr, SuperExpr)> {
    dims.require_hermitian()?;
    let x = super::vector::supervector(dims);
    let jx = x.apply_j()?;
    let half = Scalar::from_rat(crate::scalar::Rat64::new(1, 2));
    let z = x.add(&jx.scale(&Scalar::i())).scale(&half);
    let zdag = x.sub(&jx.scale(&Scalar::i())).scale(&half).neg();
    Ok((z, zdag))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermitianWhich {
    Z,
    ZDag,
}

/// Hermitian Dirac operators ∂_Z, ∂_{Z†} acting from `side`.
pub fn hermitian_dirac(a: &SuperExpr, which: HermitianWhich, side: Side) -> Result<SuperExpr> {
    a.dims.require_hermitian()?;
    let dx = dirac(a, side)?;
    let djx = twisted_dirac(a, side)?;
    let quarter = Scalar::from_rat(crate::scalar::Rat64::new(1, 4));
    Ok(match which {
        HermitianWhich::Z => dx.sub(&djx.scale(&Scalar::i())).scale(&quarter),
        HermitianWhich::ZDag => dx.add(&djx.scale(&Scalar::i())).scale(&quarter).neg(),
    })
}

/// Cauchy-Riemann derivative ∂_{z_j} = ½(∂_{x_j} − i ∂_{x_{m+j}}), 1-based.
pub fn d_z(a: &SuperExpr, j: usize) -> Result<SuperExpr> {
    let m = a.dims.m()?;
    let half = Scalar::from_rat(crate::scalar::Rat64::new(1, 2));
    let da = a.derive_bosonic(j - 1)?;
    let db = a.derive_bosonic(m + j - 1)?;
    Ok(da.sub(&db.scale(&Scalar::i())).scale(&half))
}

/// ∂_{z_j^c} = ½(∂_{x_j} + i ∂_{x_{m+j}}).
pub fn d_z_conj(a: &SuperExpr, j: usize) -> Result<SuperExpr> {
    let m = a.dims.m()?;
    let half = Scalar::from_rat(crate::scalar::Rat64::new(1, 2));
    let da = a.derive_bosonic(j - 1)?;
    let db = a.derive_bosonic(m + j - 1)?;
    Ok(da.add(&db.scale(&Scalar::i())).scale(&half))
}

/// Fermionic Cauchy-Riemann derivative ∂_{zg_j} = ½(∂_{xg_{2j-1}} − i ∂_{xg_{2j}}).
pub fn d_zg(a: &SuperExpr, j: usize) -> Result<SuperExpr> {
    let half = Scalar::from_rat(crate::scalar::Rat64::new(1, 2));
    let da = a.derive_fermionic(2 * j - 2)?;
    let db = a.derive_fermionic(2 * j - 1)?;
    Ok(da.sub(&db.scale(&Scalar::i())).scale(&half))
}

/// ∂_{zg_j^c} = ½(∂_{xg_{2j-1}} + i ∂_{xg_{2j}}).
pub fn d_zg_conj(a: &SuperExpr, j: usize) -> Result<SuperExpr> {
    let half = Scalar::from_rat(crate::scalar::Rat64::new(1, 2));
    let da = a.derive_fermionic(2 * j - 2)?;
    let db = a.derive_fermionic(2 * j - 1)?;
    Ok(da.add(&db.scale(&Scalar::i())).scale(&half))
}

/// Holomorphic in z_1..z_m, zg_1..zg_n: Clifford-scalar and annihilated by
/// every conjugate Cauchy-Riemann derivative.
pub fn is_holomorphic(f: &SuperExpr) -> Result<bool> {
    let m = f.dims.m()?;
    if !f.is_clifford_scalar() {
        return Ok(false);
    }
    for j in 1..=m {
        if !d_z_conj(f, j)?.is_zero() {
            return Ok(false);
        }
    }
    for k in 1..=f.dims.n {
        if !d_zg_conj(f, k)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Null solution of the left super Dirac operator.
pub fn is_monogenic(f: &SuperExpr) -> Result<bool> {
    Ok(dirac(f, Side::Left)?.is_zero())
}

/// Simultaneous null solution of ∂_x and ∂_{J(x)} (equivalently ∂_Z, ∂_{Z†}).
pub fn is_sh_monogenic(f: &SuperExpr) -> Result<bool> {
    f.dims.require_hermitian()?;
    Ok(dirac(f, Side::Left)?.is_zero() && twisted_dirac(f, Side::Left)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::vector::{supervector, z_var_conj};
    use crate::scalar::Rat64;

    #[test]
    fn dirac_of_supervector_is_superdimension() {
        for (p, n) in [(2usize, 0usize), (3, 1), (4, 1), (6, 2), (2, 1)] {
            let d = Dims::new(p, n);
            let x = supervector(d);
            let m_dim = d.superdim();
            let expect = SuperExpr::scalar(d, Scalar::from_int(m_dim));
            assert_eq!(dirac(&x, Side::Left).unwrap(), expect, "left (p,n)=({p},{n})");
            assert_eq!(dirac(&x, Side::Right).unwrap(), expect, "right (p,n)=({p},{n})");
        }
    }

    #[test]
    fn dirac_squared_is_minus_laplacian() {
        let d = Dims::hermitian(2, 1);
        // a polynomial with body, fermionic and Clifford content
        let x1 = SuperExpr::x(d, 0).unwrap();
        let x2 = SuperExpr::x(d, 1).unwrap();
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        let e1 = SuperExpr::e(d, 0).unwrap();
        let f = x1
            .mul(&x1)
            .mul(&x2)
            .add(&x2.mul(&xg1).scale(&Scalar::i()))
            .add(&x1.mul(&xg1).mul(&xg2).mul(&e1));
        let ddf = dirac(&dirac(&f, Side::Left).unwrap(), Side::Left).unwrap();
        let lap = laplacian(&f).unwrap();
        assert_eq!(ddf, lap.neg());
    }

    #[test]
    fn twisted_identities() {
        let d = Dims::hermitian(2, 1);
        let x = supervector(d);
        let jx = x.apply_j().unwrap();
        // ∂_{J(x)}[J(x)] = 2m - 2n = 2
        assert_eq!(
            twisted_dirac(&jx, Side::Left).unwrap(),
            SuperExpr::scalar(d, Scalar::from_int(2))
        );
        // ∂_x[J(x)] = 2B with B = e1e3 + e2e4 − Σ eg_j²
        let b_vec = {
            let e1 = SuperExpr::e(d, 0).unwrap();
            let e2 = SuperExpr::e(d, 1).unwrap();
            let e3 = SuperExpr::e(d, 2).unwrap();
            let e4 = SuperExpr::e(d, 3).unwrap();
            let eg1 = SuperExpr::eg(d, 0).unwrap();
            let eg2 = SuperExpr::eg(d, 1).unwrap();
            e1.mul(&e3)
                .add(&e2.mul(&e4))
                .sub(&eg1.mul(&eg1))
                .sub(&eg2.mul(&eg2))
        };
        assert_eq!(
            dirac(&jx, Side::Left).unwrap(),
            b_vec.scale(&Scalar::from_int(2))
        );
        // {∂_x, ∂_{J(x)}}[F] = 0 on a sample polynomial
        let x1 = SuperExpr::x(d, 0).unwrap();
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let f = x1.mul(&x1).mul(&xg1).add(&x1.mul(&x1).mul(&x1));
        let a = twisted_dirac(&dirac(&f, Side::Left).unwrap(), Side::Left).unwrap();
        let b = dirac(&twisted_dirac(&f, Side::Left).unwrap(), Side::Left).unwrap();
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn hermitian_vars_identities() {
        let d = Dims::hermitian(2, 1);
        let (z, zdag) = hermitian_vars(d).unwrap();
        // Z² = 0, (Z†)² = 0
        assert!(z.mul(&z).is_zero());
        assert!(zdag.mul(&zdag).is_zero());
        // Z − Z† ... the defining algebra: Z + (−Z†) reconstructs x? Z − Z†·...
        // Z = ½(x + iJx), Z† = −½(x − iJx): Z − Z† = x.
        let x = supervector(d);
        assert_eq!(z.sub(&zdag), x);
        // {Z, Z†} = |x|² = −x²
        let anti = z.mul(&zdag).add(&zdag.mul(&z));
        assert_eq!(anti, x.mul(&x).neg());
    }

    #[test]
    fn hermitian_dirac_identities() {
        let d = Dims::hermitian(2, 1);
        // ∂_Z[z1^c] = 0 and ∂_{Z†}[z1^c] = 𝔣₁ = ½(e1 − i e3)
        let z1c = z_var_conj(d, 1).unwrap();
        assert!(hermitian_dirac(&z1c, HermitianWhich::Z, Side::Left)
            .unwrap()
            .is_zero());
        let f1 = {
            let e1 = SuperExpr::e(d, 0).unwrap();
            let e3 = SuperExpr::e(d, 2).unwrap();
            e1.sub(&e3.scale(&Scalar::i())).scale(&Scalar::from_rat(Rat64::new(1, 2)))
        };
        assert_eq!(
            hermitian_dirac(&z1c, HermitianWhich::ZDag, Side::Left).unwrap(),
            f1
        );
        // ∂_Z² = 0 and 4{∂_Z, ∂_{Z†}} = Δ on a messy polynomial
        let x1 = SuperExpr::x(d, 0).unwrap();
        let x4 = SuperExpr::x(d, 3).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        let f = x1.mul(&x1).mul(&x4).add(&x4.mul(&xg2)).mul(&z1c);
        let dz = |g: &SuperExpr| hermitian_dirac(g, HermitianWhich::Z, Side::Left).unwrap();
        let dzd = |g: &SuperExpr| hermitian_dirac(g, HermitianWhich::ZDag, Side::Left).unwrap();
        assert!(dz(&dz(&f)).is_zero());
        assert!(dzd(&dzd(&f)).is_zero());
        let anti = dz(&dzd(&f)).add(&dzd(&dz(&f))).scale(&Scalar::from_int(4));
        assert_eq!(anti, laplacian(&f).unwrap());
    }

    #[test]
    fn monogenicity_basics() {
        let d = Dims::hermitian(2, 1);
        assert!(is_monogenic(&SuperExpr::one(d)).unwrap());
        let x = supervector(d);
        assert!(!is_monogenic(&x).unwrap()); // M = 2 ≠ 0
    }
}
