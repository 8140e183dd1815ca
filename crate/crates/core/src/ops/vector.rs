//! Supervector variables, complex variables, and analytic extension of real
//! functions to even superfunctions.

use num::Zero;

use crate::body::Body;
use crate::dims::Dims;
use crate::error::{Error, Result};
use crate::scalar::{Rat64, Scalar};
use crate::superexpr::SuperExpr;

/// x = Σ x_j e_j + Σ xg_j eg_j.
pub fn supervector(dims: Dims) -> SuperExpr {
    let mut acc = SuperExpr::zero(dims);
    for j in 0..dims.p {
        let term = SuperExpr::x(dims, j).unwrap().mul(&SuperExpr::e(dims, j).unwrap());
        acc = acc.add(&term);
    }
    for j in 0..dims.fermionic() {
        let term = SuperExpr::xg(dims, j).unwrap().mul(&SuperExpr::eg(dims, j).unwrap());
        acc = acc.add(&term);
    }
    acc
}

/// Bosonic part x̲ = Σ x_j e_j.
pub fn bosonic_vector(dims: Dims) -> SuperExpr {
    let mut acc = SuperExpr::zero(dims);
    for j in 0..dims.p {
        acc = acc.add(&SuperExpr::x(dims, j).unwrap().mul(&SuperExpr::e(dims, j).unwrap()));
    }
    acc
}

/// Fermionic part x̲` = Σ xg_j eg_j.
pub fn fermionic_vector(dims: Dims) -> SuperExpr {
    let mut acc = SuperExpr::zero(dims);
    for j in 0..dims.fermionic() {
        acc = acc.add(&SuperExpr::xg(dims, j).unwrap().mul(&SuperExpr::eg(dims, j).unwrap()));
    }
    acc
}

/// Commuting complex variable z_j = x_j + i x_{m+j} (1-based `j`).
pub fn z_var(dims: Dims, j: usize) -> Result<SuperExpr> {
    let m = dims.m()?;
    if j == 0 || j > m {
        return Err(Error::IndexOutOfRange { index: j, limit: m });
    }
    let a = SuperExpr::x(dims, j - 1)?;
    let b = SuperExpr::x(dims, m + j - 1)?;
    Ok(a.add(&b.scale(&Scalar::i())))
}

pub fn z_var_conj(dims: Dims, j: usize) -> Result<SuperExpr> {
    Ok(z_var(dims, j)?.complex_conjugate())
}

/// Anticommuting complex variable zg_j = xg_{2j-1} + i xg_{2j} (1-based `j`).
pub fn zg_var(dims: Dims, j: usize) -> Result<SuperExpr> {
    if j == 0 || j > dims.n {
        return Err(Error::IndexOutOfRange { index: j, limit: dims.n });
    }
    let a = SuperExpr::xg(dims, 2 * j - 2)?;
    let b = SuperExpr::xg(dims, 2 * j - 1)?;
    Ok(a.add(&b.scale(&Scalar::i())))
}

pub fn zg_var_conj(dims: Dims, j: usize) -> Result<SuperExpr> {
    Ok(zg_var(dims, j)?.complex_conjugate())
}

fn check_positive_body(c: &Scalar) -> Result<()> {
    let v = c.to_complex();
    if v.re > 0.0 && v.im.abs() <= 1e-9 * v.re.max(1.0) {
        Ok(())
    } else {
        Err(Error::UnsupportedBody("body constant not real positive".into()))
    }
}

/// a^p for an even superfunction `a = a₀ + **a**` with a₀ > 0 whose body is a
/// pure radial power or constant:
/// `a^p = Σ_j **a**^j / j! · p(p-1)···(p-j+1) a₀^{p-j}`.
pub fn super_pow(a: &SuperExpr, p: Rat64) -> Result<SuperExpr> {
    if !a.is_even_superfunction() {
        return Err(Error::NotEven);
    }
    let body = a.body0();
    let (c, lambda) = body
        .as_radial_power()
        .ok_or_else(|| Error::UnsupportedBody("body is not c·|x|^λ".into()))?;
    check_positive_body(&c)?;
    let bold = a.nilpotent_part();

    let mut acc = SuperExpr::zero(a.dims);
    let mut bold_pow = SuperExpr::one(a.dims);
    let mut fall = Rat64::from_integer(1); // p(p-1)···(p-j+1)
    let mut factorial = Rat64::from_integer(1);
    let mut j: i64 = 0;
    loop {
        if bold_pow.is_zero() || fall.is_zero() {
            break;
        }
        let e = p - Rat64::from_integer(j);
        let coeff = c.rational_pow(e)?;
        let base = Body::monomial(a.dims.p, &[], lambda * e, coeff);
        let coef_scalar = &Scalar::from_rat(fall) * &Scalar::from_rat(factorial).inv()?;
        acc = acc.add(&bold_pow.scale_body(&base).scale(&coef_scalar));

        j += 1;
        bold_pow = bold_pow.mul(&bold);
        fall *= p - Rat64::from_integer(j - 1);
        factorial *= Rat64::from_integer(j);
    }
    Ok(acc)
}

/// |x| = (-x²)^{1/2}.
pub fn abs_x(dims: Dims) -> Result<SuperExpr> {
    abs_x_pow(dims, Rat64::from_integer(1))
}

/// |x|^λ = (-x²)^{λ/2}.
pub fn abs_x_pow(dims: Dims, lambda: Rat64) -> Result<SuperExpr> {
    let x = supervector(dims);
    let minus_sq = x.mul(&x).neg();
    super_pow(&minus_sq, lambda / Rat64::from_integer(2))
}

/// F(a) = Σ_j **a**^j / j! · F^{(j)}(a₀), given the Taylor data of F at a₀.
pub fn compose_analytic(coeffs: &[Scalar], a: &SuperExpr) -> Result<SuperExpr> {
    if !a.is_even_superfunction() {
        return Err(Error::NotEven);
    }
    let bold = a.nilpotent_part();
    let mut acc = SuperExpr::zero(a.dims);
    let mut bold_pow = SuperExpr::one(a.dims);
    let mut factorial = Rat64::from_integer(1);
    let mut j = 0usize;
    loop {
        if bold_pow.is_zero() {
            break;
        }
        let Some(cj) = coeffs.get(j) else {
            return Err(Error::NotEnoughCoefficients { need: j + 1, got: coeffs.len() });
        };
        let coef = &Scalar::from_rat(factorial).inv()? * cj;
        acc = acc.add(&bold_pow.scale(&coef));
        j += 1;
        bold_pow = bold_pow.mul(&bold);
        factorial *= Rat64::from_integer(j as i64);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supervector_square() {
        // x² = -Σ x_j² + Σ xg_{2j-1}xg_{2j}  (p = 2, n = 1)
        let d = Dims::new(2, 1);
        let x = supervector(d);
        let sq = x.mul(&x);
        let mut expect = SuperExpr::zero(d);
        for j in 0..2 {
            let xj = SuperExpr::x(d, j).unwrap();
            expect = expect.sub(&xj.mul(&xj));
        }
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        expect = expect.add(&xg1.mul(&xg2));
        assert_eq!(sq, expect);
    }

    #[test]
    fn nilpotent_square_root() {
        // (4 + xg1 xg2)^{1/2} = 2 + xg1 xg2 / 4
        let d = Dims::new(2, 1);
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        let a = SuperExpr::scalar(d, Scalar::from_int(4)).add(&xg1.mul(&xg2));
        let root = super_pow(&a, Rat64::new(1, 2)).unwrap();
        let expect = SuperExpr::scalar(d, Scalar::from_int(2))
            .add(&xg1.mul(&xg2).scale(&Scalar::from_rat(Rat64::new(1, 4))));
        assert_eq!(root, expect);
        assert_eq!(root.mul(&root), a);
    }

    #[test]
    fn abs_x_expansion() {
        // |x| = |x̲| - xg1 xg2/(2|x̲|) for p = 4, n = 1
        let d = Dims::hermitian(2, 1);
        let v = abs_x(d).unwrap();
        let r = SuperExpr::radial(d, Rat64::new(1, 1));
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        let corr = xg1
            .mul(&xg2)
            .scale_body(&Body::radial_power(4, Rat64::new(-1, 1)))
            .scale(&Scalar::from_rat(Rat64::new(-1, 2)));
        assert_eq!(v, r.add(&corr));
        // |x|² = -x²
        let x = supervector(d);
        assert_eq!(v.mul(&v), x.mul(&x).neg());
    }

    #[test]
    fn power_laws() {
        let d = Dims::hermitian(2, 1);
        let x = supervector(d);
        let a = x.mul(&x).neg(); // -x², positive body |x̲|²
        let p1 = super_pow(&a, Rat64::new(3, 2)).unwrap();
        let p2 = super_pow(&a, Rat64::new(-1, 2)).unwrap();
        let prod = p1.mul(&p2);
        let direct = super_pow(&a, Rat64::new(1, 1)).unwrap();
        assert_eq!(prod, direct);
        assert_eq!(direct, a);
        // |x|^M · |x|^{-M} = 1
        let m = d.superdim();
        let pm = abs_x_pow(d, Rat64::from_integer(m)).unwrap();
        let pmi = abs_x_pow(d, Rat64::from_integer(-m)).unwrap();
        assert_eq!(pm.mul(&pmi), SuperExpr::one(d));
    }

    #[test]
    fn compose_exp_truncation() {
        // exp at a = xg1 xg2: Taylor data of exp at 0 is [1, 1].
        let d = Dims::new(2, 1);
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        let a = xg1.mul(&xg2);
        let res = compose_analytic(&[Scalar::one(), Scalar::one()], &a).unwrap();
        assert_eq!(res, SuperExpr::one(d).add(&a));
        // identity function reproduces a
        let res_id = compose_analytic(&[Scalar::zero(), Scalar::one()], &a).unwrap();
        assert_eq!(res_id, a);
        assert!(compose_analytic(&[Scalar::one()], &a).is_err());
    }

    #[test]
    fn compose_square_matches_mul() {
        // F = t², a = a₀ + N: compare against direct multiplication
        let d = Dims::new(3, 1);
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        let x1 = SuperExpr::x(d, 0).unwrap();
        let a0 = Scalar::from_int(3);
        let a = SuperExpr::scalar(d, a0).add(&x1.mul(&xg1).mul(&xg2));
        let res = compose_analytic(
            &[Scalar::from_int(9), Scalar::from_int(6), Scalar::from_int(2)],
            &a,
        )
        .unwrap();
        assert_eq!(res, a.mul(&a));
    }

    #[test]
    fn complex_variables() {
        let d = Dims::hermitian(2, 1);
        // z1 z1^c = x1² + x3²
        let z1 = z_var(d, 1).unwrap();
        let z1c = z_var_conj(d, 1).unwrap();
        let prod = z1.mul(&z1c);
        let x1 = SuperExpr::x(d, 0).unwrap();
        let x3 = SuperExpr::x(d, 2).unwrap();
        assert_eq!(prod, x1.mul(&x1).add(&x3.mul(&x3)));
        // zg1 zg1^c = -2i xg1 xg2
        let zg1 = zg_var(d, 1).unwrap();
        let zg1c = zg_var_conj(d, 1).unwrap();
        let fprod = zg1.mul(&zg1c);
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        let expect = xg1.mul(&xg2).scale(&(&Scalar::from_int(-2) * &Scalar::i()));
        assert_eq!(fprod, expect);
    }
}
