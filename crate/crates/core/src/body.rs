//! Radial-polynomial bodies: finite sums `c · x^α · |x̲|^λ`.
//!
//! The class is closed under products and bosonic derivatives via
//! `∂_j (x^α |x̲|^λ) = α_j x^{α-e_j} |x̲|^λ + λ x^{α+e_j} |x̲|^{λ-2}`.
//!
//! Because `|x̲|² = Σ x_j²`, the naive representation is not unique. Terms
//! are therefore grouped by the residue of λ mod 2 and each group is written
//! with the smallest non-negative power of `|x̲|²` in the denominator: the
//! numerator polynomial is expanded fully and divided by `Σ x_j²` as often as
//! it is exactly divisible (never past the residue level). With that
//! reduction, equality of bodies is equality of term tables.

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;
use num::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rat64, Scalar};

pub type MultiIndex = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BodyKey {
    /// Rational exponent of |x̲|, ordered first so λ-classes group together.
    pub lambda: Rat64,
    pub alpha: MultiIndex,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Body {
    /// Number of bosonic variables.
    pub p: usize,
    terms: BTreeMap<BodyKey, Scalar>,
}

fn alpha_trim(mut a: MultiIndex) -> MultiIndex {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn alpha_degree(a: &[u16]) -> i64 {
    a.iter().map(|&v| v as i64).sum()
}

impl Body {
    pub fn zero(p: usize) -> Self {
        Body { p, terms: BTreeMap::new() }
    }

    pub fn constant(p: usize, c: Scalar) -> Self {
        let mut b = Body::zero(p);
        b.add_term(&[], Rat64::zero(), c);
        b.canonicalize();
        b
    }

    pub fn one(p: usize) -> Self {
        Body::constant(p, Scalar::one())
    }

    /// The variable x_{j+1}.
    pub fn var(p: usize, index0: usize) -> Self {
        let mut alpha = vec![0u16; index0 + 1];
        alpha[index0] = 1;
        let mut b = Body::zero(p);
        b.add_term(&alpha, Rat64::zero(), Scalar::one());
        b
    }

    /// |x̲|^λ (canonicalized, so even non-negative λ expands to a polynomial).
    pub fn radial_power(p: usize, lambda: Rat64) -> Self {
        let mut b = Body::zero(p);
        b.add_term(&[], lambda, Scalar::one());
        b.canonicalize();
        b
    }

    pub fn monomial(p: usize, alpha: &[u16], lambda: Rat64, c: Scalar) -> Self {
        let mut b = Body::zero(p);
        b.add_term(alpha, lambda, c);
        b.canonicalize();
        b
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BodyKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, alpha: &[u16], lambda: Rat64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = BodyKey { lambda, alpha: alpha_trim(alpha.to_vec()) };
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Body) -> Body {
        debug_assert_eq!(self.p, other.p);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(&k.alpha, k.lambda, c.clone());
        }
        out.canonicalize();
        out
    }

    pub fn neg(&self) -> Body {
        let mut out = Body::zero(self.p);
        for (k, c) in &self.terms {
            out.terms.insert(k.clone(), -c);
        }
        out
    }

    pub fn sub(&self, other: &Body) -> Body {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Body {
        let mut out = Body::zero(self.p);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            let w = v * c;
            if !w.is_zero() {
                out.terms.insert(k.clone(), w);
            }
        }
        out
    }

    pub fn mul(&self, other: &Body) -> Body {
        debug_assert_eq!(self.p, other.p);
        let mut out = Body::zero(self.p);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut alpha = k1.alpha.clone();
                if alpha.len() < k2.alpha.len() {
                    alpha.resize(k2.alpha.len(), 0);
                }
                for (j, &a) in k2.alpha.iter().enumerate() {
                    alpha[j] += a;
                }
                out.add_term(&alpha, k1.lambda + k2.lambda, c1 * c2);
            }
        }
        out.canonicalize();
        out
    }

    /// ∂_{x_{j+1}}.
    pub fn derive(&self, index0: usize) -> Body {
        let mut out = Body::zero(self.p);
        for (k, c) in &self.terms {
            let aj = *k.alpha.get(index0).unwrap_or(&0);
            if aj > 0 {
                let mut alpha = k.alpha.clone();
                alpha[index0] -= 1;
                out.add_term(&alpha, k.lambda, &Scalar::from_int(aj as i64) * c);
            }
            if !k.lambda.is_zero() {
                let mut alpha = k.alpha.clone();
                if alpha.len() <= index0 {
                    alpha.resize(index0 + 1, 0);
                }
                alpha[index0] += 1;
                let lc = &Scalar::from_rat(k.lambda) * c;
                out.add_term(&alpha, k.lambda - Rat64::from_integer(2), lc);
            }
        }
        out.canonicalize();
        out
    }

    /// Substitutes numeric coordinates; errors when a negative radial power
    /// is evaluated at the origin.
    pub fn eval(&self, point: &[f64]) -> Result<Complex64> {
        debug_assert_eq!(point.len(), self.p);
        let r2: f64 = point.iter().map(|v| v * v).sum();
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in &self.terms {
            let mut mono = 1.0f64;
            for (j, &a) in k.alpha.iter().enumerate() {
                mono *= point[j].powi(a as i32);
            }
            let lam = k.lambda.to_f64().unwrap();
            let radial = if k.lambda.is_zero() {
                1.0
            } else if r2 == 0.0 {
                if lam < 0.0 {
                    return Err(Error::SingularEvaluation);
                }
                0.0
            } else {
                r2.powf(lam / 2.0)
            };
            acc += c.to_complex() * mono * radial;
        }
        Ok(acc)
    }

    /// Body as a plain constant, if it is one.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            if k.alpha.is_empty() && k.lambda.is_zero() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Recognizes `c · |x̲|^λ`, which includes expanded powers of Σ x_j².
    pub fn as_radial_power(&self) -> Option<(Scalar, Rat64)> {
        if self.is_zero() {
            return None;
        }
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            if k.alpha.is_empty() {
                return Some((c.clone(), k.lambda));
            }
        }
        // all terms must share one λ and form c·(Σx²)^t at that level
        let lambda = self.terms.keys().next().unwrap().lambda;
        if self.terms.keys().any(|k| k.lambda != lambda) {
            return None;
        }
        let mut poly: BTreeMap<MultiIndex, Scalar> = self
            .terms
            .iter()
            .map(|(k, c)| (k.alpha.clone(), c.clone()))
            .collect();
        let mut shift = 0i64;
        loop {
            if poly.len() == 1 {
                let (alpha, c) = poly.iter().next().unwrap();
                if alpha.is_empty() {
                    return Some((c.clone(), lambda + Rat64::from_integer(2 * shift)));
                }
            }
            match divide_by_r2(&poly, self.p) {
                Some(q) => {
                    poly = q;
                    shift += 1;
                }
                None => return None,
            }
        }
    }

    /// Canonical reduction described in the module docs.
    fn canonicalize(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        // plain polynomials are already canonical
        if self.terms.keys().all(|k| k.lambda.is_zero()) {
            return;
        }
        // Partition by residue λ mod 2 (in [0,2)).
        let mut classes: BTreeMap<Rat64, Vec<(BodyKey, Scalar)>> = BTreeMap::new();
        let two = Rat64::from_integer(2);
        for (k, c) in std::mem::take(&mut self.terms) {
            let t = (k.lambda / two).floor();
            let residue = k.lambda - two * t;
            classes.entry(residue).or_default().push((k, c));
        }
        for (residue, terms) in classes {
            // express every term at the minimal level of the class
            let level_of = |lam: Rat64| -> i64 {
                // lam = residue + 2t
                ((lam - residue) / two).to_integer()
            };
            let t_min = terms.iter().map(|(k, _)| level_of(k.lambda)).min().unwrap();
            // canonical level never sits above the residue
            let t_base = t_min.min(0);
            let mut poly: BTreeMap<MultiIndex, Scalar> = BTreeMap::new();
            for (k, c) in terms {
                let t = level_of(k.lambda) - t_base;
                let expanded = expand_r2_power(&k.alpha, c, t as usize, self.p);
                for (a, v) in expanded {
                    merge(&mut poly, a, v);
                }
            }
            let mut level = t_base;
            // reduce only while below the residue level
            while level < 0 && !poly.is_empty() {
                match divide_by_r2(&poly, self.p) {
                    Some(q) => {
                        poly = q;
                        level += 1;
                    }
                    None => break,
                }
            }
            let lambda = residue + two * Rat64::from_integer(level);
            for (alpha, c) in poly {
                if !c.is_zero() {
                    let key = BodyKey { lambda, alpha: alpha_trim(alpha) };
                    match self.terms.get_mut(&key) {
                        Some(v) => {
                            *v = &*v + &c;
                            if v.is_zero() {
                                self.terms.remove(&key);
                            }
                        }
                        None => {
                            self.terms.insert(key, c);
                        }
                    }
                }
            }
        }
    }

    /// Largest polynomial degree + λ over the terms (used by quadrature
    /// degree heuristics).
    pub fn max_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|k| alpha_degree(&k.alpha) + k.lambda.ceil().to_integer())
            .max()
            .unwrap_or(0)
    }

    /// Exact power `(c·|x̲|^λ)^q` of a radial body.
    pub fn radial_pow(&self, q: Rat64) -> Result<Body> {
        let (c, lambda) = self
            .as_radial_power()
            .ok_or_else(|| Error::UnsupportedBody("not a pure radial power".into()))?;
        let coeff = c.rational_pow(q)?;
        let mut out = Body::zero(self.p);
        out.add_term(&[], lambda * q, coeff);
        out.canonicalize();
        Ok(out)
    }

    pub fn conj(&self) -> Body {
        let mut out = Body::zero(self.p);
        for (k, c) in &self.terms {
            out.terms.insert(k.clone(), c.conj());
        }
        out
    }

    /// Promotes every coefficient to the float payload.
    pub fn to_float(&self) -> Body {
        let mut out = Body::zero(self.p);
        for (k, c) in &self.terms {
            out.terms.insert(k.clone(), Scalar::from_complex(c.to_complex()));
        }
        out
    }
}

fn merge(map: &mut BTreeMap<MultiIndex, Scalar>, alpha: MultiIndex, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let alpha = alpha_trim(alpha);
    match map.get_mut(&alpha) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                map.remove(&alpha);
            }
        }
        None => {
            map.insert(alpha, c);
        }
    }
}

/// x^α (Σ x_j²)^t expanded as a polynomial map.
fn expand_r2_power(
    alpha: &[u16],
    c: Scalar,
    t: usize,
    p: usize,
) -> BTreeMap<MultiIndex, Scalar> {
    let mut acc: BTreeMap<MultiIndex, Scalar> = BTreeMap::new();
    acc.insert(alpha_trim(alpha.to_vec()), c);
    for _ in 0..t {
        let mut next: BTreeMap<MultiIndex, Scalar> = BTreeMap::new();
        for (a, v) in &acc {
            for j in 0..p {
                let mut a2 = a.clone();
                if a2.len() <= j {
                    a2.resize(j + 1, 0);
                }
                a2[j] += 2;
                merge(&mut next, a2, v.clone());
            }
        }
        acc = next;
    }
    acc
}

/// Exact division of a polynomial by Σ x_j², if divisible.
fn divide_by_r2(
    poly: &BTreeMap<MultiIndex, Scalar>,
    p: usize,
) -> Option<BTreeMap<MultiIndex, Scalar>> {
    // Single-divisor multivariate division with lex leading term x_1².
    let mut rem = poly.clone();
    let mut quot: BTreeMap<MultiIndex, Scalar> = BTreeMap::new();
    loop {
        // find the lex-largest term with α_1 ≥ 2
        let cand = rem
            .iter()
            .filter(|(a, _)| a.first().map_or(false, |&v| v >= 2))
            .max_by(|(a, _), (b, _)| lex_cmp(a, b))
            .map(|(a, c)| (a.clone(), c.clone()));
        match cand {
            Some((a, c)) => {
                let mut qa = a.clone();
                qa[0] -= 2;
                // rem -= c · x^{qa} · r²
                for j in 0..p {
                    let mut term = qa.clone();
                    if term.len() <= j {
                        term.resize(j + 1, 0);
                    }
                    term[j] += 2;
                    merge(&mut rem, term, -&c);
                }
                merge(&mut quot, qa, c);
            }
            None => break,
        }
    }
    if rem.is_empty() {
        Some(quot)
    } else {
        None
    }
}

fn lex_cmp(a: &[u16], b: &[u16]) -> std::cmp::Ordering {
    let len = a.len().max(b.len());
    for j in 0..len {
        let av = *a.get(j).unwrap_or(&0);
        let bv = *b.get(j).unwrap_or(&0);
        match av.cmp(&bv) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

impl fmt::Display for Body {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = format!("{c}");
            let mut parts = if cs.contains('+') || cs.contains(' ') || cs.starts_with('-') {
                vec![format!("({cs})")]
            } else {
                vec![cs]
            };
            for (j, &a) in k.alpha.iter().enumerate() {
                if a == 1 {
                    parts.push(format!("x{}", j + 1));
                } else if a > 1 {
                    parts.push(format!("x{}^{}", j + 1, a));
                }
            }
            if !k.lambda.is_zero() {
                if *k.lambda.denom() == 1 {
                    parts.push(format!("abs(x)^{}", k.lambda.numer()));
                } else {
                    parts.push(format!("abs(x)^({}/{})", k.lambda.numer(), k.lambda.denom()));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
