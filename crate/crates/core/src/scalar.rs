//! Scalar tower for the exact engine.
//!
//! Exact scalars are finite sums `Σ c · π^(h/2) · γ^g` with Gaussian-rational
//! coefficients `c`, integer half-exponents `h` of π, and natural powers `g`
//! of the Euler-Mascheroni constant γ. Half powers of π keep Γ at
//! half-integers exact; γ shows up in finite-part pairings against Gaussian
//! tails. A parallel float payload carries the same algebra for quadrature.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::{BigRational, Ratio};
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat64 = Ratio<i64>;

/// Numeric value of γ, used when an exact scalar is demoted to a float.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Gaussian rational `re + im·i` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(k: i64) -> Self {
        GaussRat::new(BigRational::from_integer(k.into()), BigRational::zero())
    }

    pub fn from_rat(r: Rat64) -> Self {
        GaussRat::new(
            BigRational::new((*r.numer()).into(), (*r.denom()).into()),
            BigRational::zero(),
        )
    }

    pub fn zero() -> Self {
        GaussRat::from_int(0)
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussRat::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussRat::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn neg(&self) -> Self {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussRat::new(&self.re / &norm, -(&self.im / &norm)))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Exact `q-th` root when both parts are compatible: only defined for
    /// real rationals whose numerator and denominator are perfect powers.
    pub fn rational_root(&self, q: i64) -> Option<GaussRat> {
        if !self.im.is_zero() {
            return None;
        }
        debug_assert!(q >= 1);
        if q == 1 {
            return Some(self.clone());
        }
        if self.re.is_negative() {
            return None;
        }
        let num = int_root(self.re.numer(), q)?;
        let den = int_root(self.re.denom(), q)?;
        Some(GaussRat::new(BigRational::new(num, den), BigRational::zero()))
    }
}

fn int_root(v: &BigInt, q: i64) -> Option<BigInt> {
    if v.is_zero() {
        return Some(BigInt::zero());
    }
    let r = v.nth_root(q as u32);
    if num::pow::pow(r.clone(), q as usize) == *v {
        Some(r)
    } else {
        None
    }
}

/// Key of one exact term: `(half power of π, power of γ)`.
type TowerKey = (i32, u32);

/// Exact element of ℚ(i)[π^(±1/2), γ].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactScalar {
    terms: BTreeMap<TowerKey, GaussRat>,
}

impl ExactScalar {
    fn single(key: TowerKey, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        ExactScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: TowerKey, c: &GaussRat) {
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                if !c.is_zero() {
                    self.terms.insert(key, c.clone());
                }
            }
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(h, g), c) in &self.terms {
            let mag = std::f64::consts::PI.powf(h as f64 / 2.0) * EULER_GAMMA.powi(g as i32);
            acc += c.to_complex() * mag;
        }
        acc
    }
}

/// Scalar with two payloads: exact (authoritative) and float (quadrature).
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(ExactScalar),
    Float(Complex64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(ExactScalar::default())
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar::Exact(ExactScalar::single((0, 0), GaussRat::i()))
    }

    pub fn from_int(k: i64) -> Self {
        Scalar::Exact(ExactScalar::single((0, 0), GaussRat::from_int(k)))
    }

    pub fn from_rat(r: Rat64) -> Self {
        Scalar::Exact(ExactScalar::single((0, 0), GaussRat::from_rat(r)))
    }

    pub fn from_gauss(g: GaussRat) -> Self {
        Scalar::Exact(ExactScalar::single((0, 0), g))
    }

    pub fn from_f64(v: f64) -> Self {
        Scalar::Float(Complex64::new(v, 0.0))
    }

    pub fn from_complex(v: Complex64) -> Self {
        Scalar::Float(v)
    }

    /// `c · π^(h/2) · γ^g`.
    pub fn tower(c: GaussRat, pi_half: i32, gamma: u32) -> Self {
        Scalar::Exact(ExactScalar::single((pi_half, gamma), c))
    }

    /// π^(h/2)
    pub fn pi_half_pow(h: i32) -> Self {
        Scalar::tower(GaussRat::one(), h, 0)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(e) => e.is_zero(),
            Scalar::Float(f) => f.re == 0.0 && f.im == 0.0,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(e) => e.to_complex(),
            Scalar::Float(f) => *f,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Exact(e) => {
                let mut out = ExactScalar::default();
                for (k, c) in &e.terms {
                    out.add_term(*k, &c.conj());
                }
                Scalar::Exact(out)
            }
            Scalar::Float(f) => Scalar::Float(f.conj()),
        }
    }

    /// Exact rationals embedded in the tower, if this is one.
    pub fn as_gauss_rat(&self) -> Option<GaussRat> {
        match self {
            Scalar::Exact(e) => {
                if e.is_zero() {
                    return Some(GaussRat::zero());
                }
                if e.terms.len() == 1 {
                    let (&k, c) = e.terms.iter().next().unwrap();
                    if k == (0, 0) {
                        return Some(c.clone());
                    }
                }
                None
            }
            Scalar::Float(_) => None,
        }
    }

    /// Multiplicative inverse. Exact scalars must be tower monomials with no
    /// γ content; anything else is only invertible in float mode.
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Exact(e) => {
                if e.terms.len() != 1 {
                    return Err(Error::NotInvertible);
                }
                let (&(h, g), c) = e.terms.iter().next().unwrap();
                if g != 0 {
                    return Err(Error::NotInvertible);
                }
                Ok(Scalar::tower(c.inv()?, -h, 0))
            }
            Scalar::Float(f) => {
                if f.re == 0.0 && f.im == 0.0 {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Float(Complex64::new(1.0, 0.0) / f))
                }
            }
        }
    }

    /// Exact rational power of a tower monomial, when the result stays inside
    /// the tower (integer π-half-exponent, perfect roots of the coefficient).
    pub fn rational_pow(&self, e: Rat64) -> Result<Scalar> {
        if e.is_zero() {
            return Ok(Scalar::one());
        }
        if *e.denom() == 1 && !e.is_negative() {
            let mut acc = Scalar::one();
            for _ in 0..*e.numer() {
                acc = &acc * self;
            }
            return Ok(acc);
        }
        match self {
            Scalar::Float(f) => Ok(Scalar::Float(f.powf(e.to_f64().unwrap()))),
            Scalar::Exact(x) => {
                if x.terms.len() != 1 {
                    return Err(Error::UnsupportedPower);
                }
                let (&(h, g), c) = x.terms.iter().next().unwrap();
                if g != 0 {
                    return Err(Error::UnsupportedPower);
                }
                // π exponent: (h/2)·e must be a half-integer again.
                let pi_exp = Rat64::new(h as i64, 2) * e;
                let twice = pi_exp * Rat64::from_integer(2);
                if *twice.denom() != 1 {
                    return Err(Error::UnsupportedPower);
                }
                let root = c
                    .rational_root(*e.denom())
                    .ok_or(Error::UnsupportedPower)?;
                let mut acc = GaussRat::one();
                let k = *e.numer();
                let base = if k >= 0 { root } else { root.inv()? };
                for _ in 0..k.abs() {
                    acc = acc.mul(&base);
                }
                Ok(Scalar::tower(acc, twice.numer().to_i32().unwrap(), 0))
            }
        }
    }

    /// Γ(k/2) for integer `k` with k/2 not a non-positive integer.
    pub fn gamma_half(k: i64) -> Scalar {
        if k % 2 == 0 {
            let m = k / 2;
            assert!(m >= 1, "Γ pole at non-positive integer {m}");
            let mut acc = BigRational::one();
            for j in 1..m {
                acc *= BigRational::from_integer(j.into());
            }
            Scalar::from_gauss(GaussRat::new(acc, BigRational::zero()))
        } else {
            // Γ(1/2) = √π, recursed in both directions.
            let mut half = Rat64::new(k, 2);
            let mut coeff = BigRational::one();
            while half > Rat64::new(1, 2) {
                half -= Rat64::one();
                coeff *= BigRational::new((*half.numer()).into(), (*half.denom()).into());
            }
            while half < Rat64::new(1, 2) {
                coeff /= BigRational::new((*half.numer()).into(), (*half.denom()).into());
                half += Rat64::one();
            }
            Scalar::tower(GaussRat::new(coeff, BigRational::zero()), 1, 0)
        }
    }

    /// |𝕊^{p-1|2n}| = 2 π^{M/2} / Γ(M/2) with M = p − 2n.
    pub fn supersphere_area(p: i64, n: i64) -> Result<Scalar> {
        let m_dim = p - 2 * n;
        if m_dim % 2 == 0 && m_dim <= 0 {
            return Err(Error::ExcludedSuperdimension(m_dim));
        }
        let gamma = Scalar::gamma_half(m_dim);
        let inv_gamma = gamma.inv()?;
        Ok(&(&Scalar::from_int(2) * &Scalar::pi_half_pow(m_dim as i32)) * &inv_gamma)
    }

    pub fn abs(&self) -> f64 {
        self.to_complex().norm()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                let mut out = a.clone();
                for (k, c) in &b.terms {
                    out.add_term(*k, c);
                }
                Scalar::Exact(out)
            }
            _ => Scalar::Float(self.to_complex() + rhs.to_complex()),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(a) => {
                let mut out = ExactScalar::default();
                for (k, c) in &a.terms {
                    out.add_term(*k, &c.neg());
                }
                Scalar::Exact(out)
            }
            Scalar::Float(f) => Scalar::Float(-f),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                let mut out = ExactScalar::default();
                for (&(h1, g1), c1) in &a.terms {
                    for (&(h2, g2), c2) in &b.terms {
                        out.add_term((h1 + h2, g1 + g2), &c1.mul(c2));
                    }
                }
                Scalar::Exact(out)
            }
            _ => Scalar::Float(self.to_complex() * rhs.to_complex()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Float(c) => {
                if c.im == 0.0 {
                    write!(f, "{}", c.re)
                } else if c.im < 0.0 {
                    write!(f, "({}-{}i)", c.re, -c.im)
                } else {
                    write!(f, "({}+{}i)", c.re, c.im)
                }
            }
            Scalar::Exact(e) => {
                if e.is_zero() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (&(h, g), c) in &e.terms {
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let mut factors: Vec<String> = Vec::new();
                    let coeff = if c.im.is_zero() {
                        format_big(&c.re)
                    } else if c.re.is_zero() {
                        format!("{}*i", format_big(&c.im))
                    } else if c.im.is_negative() {
                        format!("({}-{}*i)", format_big(&c.re), format_big(&(-c.im.clone())))
                    } else {
                        format!("({}+{}*i)", format_big(&c.re), format_big(&c.im))
                    };
                    factors.push(coeff);
                    if h != 0 {
                        if h % 2 == 0 {
                            factors.push(format!("pi^{}", h / 2));
                        } else {
                            factors.push(format!("pi^({}/2)", h));
                        }
                    }
                    if g > 0 {
                        if g == 1 {
                            factors.push("eugamma".into());
                        } else {
                            factors.push(format!("eugamma^{g}"));
                        }
                    }
                    write!(f, "{}", factors.join("*"))?;
                }
                Ok(())
            }
        }
    }
}

fn format_big(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_half_integers() {
        // Γ(3) = 2
        assert_eq!(Scalar::gamma_half(6), Scalar::from_int(2));
        // Γ(1/2) = √π
        assert_eq!(Scalar::gamma_half(1), Scalar::pi_half_pow(1));
        // Γ(3/2) = √π/2
        assert_eq!(
            Scalar::gamma_half(3),
            &Scalar::from_rat(Rat64::new(1, 2)) * &Scalar::pi_half_pow(1)
        );
        // Γ(-1/2) = -2√π
        assert_eq!(
            Scalar::gamma_half(-1),
            &Scalar::from_int(-2) * &Scalar::pi_half_pow(1)
        );
        // numeric sanity
        assert!((Scalar::gamma_half(5).to_complex().re - 1.329_340_388_179_137).abs() < 1e-12);
    }

    #[test]
    fn surface_areas() {
        // |S^1| = 2π, |S^3| = 2π²
        let s1 = Scalar::supersphere_area(2, 0).unwrap();
        assert!((s1.to_complex().re - 2.0 * std::f64::consts::PI).abs() < 1e-12);
        let s3 = Scalar::supersphere_area(4, 0).unwrap();
        assert!((s3.to_complex().re - 2.0 * std::f64::consts::PI.powi(2)).abs() < 1e-12);
        // |S^{3|2}| = 2π (M = 2)
        let s32 = Scalar::supersphere_area(4, 1).unwrap();
        assert_eq!(s32, &Scalar::from_int(2) * &Scalar::pi_half_pow(2));
        // M = 0 rejected
        assert!(Scalar::supersphere_area(2, 1).is_err());
    }

    #[test]
    fn monomial_inverse_and_powers() {
        let x = Scalar::tower(GaussRat::from_rat(Rat64::new(3, 4)), 3, 0);
        let inv = x.inv().unwrap();
        assert_eq!(&x * &inv, Scalar::one());
        // 4^(1/2) = 2
        let four = Scalar::from_int(4);
        assert_eq!(four.rational_pow(Rat64::new(1, 2)).unwrap(), Scalar::from_int(2));
        // 2^(1/2) not in the tower
        assert!(Scalar::from_int(2).rational_pow(Rat64::new(1, 2)).is_err());
        // (π^1)^(1/2) = π^(1/2)
        let pi = Scalar::pi_half_pow(2);
        assert_eq!(pi.rational_pow(Rat64::new(1, 2)).unwrap(), Scalar::pi_half_pow(1));
    }

    #[test]
    fn mixed_mode_promotes_to_float() {
        let a = Scalar::from_int(3);
        let b = Scalar::from_f64(0.5);
        match &a * &b {
            Scalar::Float(f) => assert_eq!(f.re, 1.5),
            _ => panic!("expected float"),
        }
    }
}
