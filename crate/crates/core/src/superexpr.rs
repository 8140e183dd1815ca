//! The universal value type: exact elements of
//! (radial-polynomial bodies) ⊗ (Grassmann algebra) ⊗ (Clifford-Weyl algebra).

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;

use crate::body::Body;
use crate::clifford::CliffordMono;
use crate::dims::Dims;
use crate::error::{Error, Result};
use crate::grassmann::GrassmannMono;
use crate::scalar::{Rat64, Scalar};

type Key = (GrassmannMono, CliffordMono);

#[derive(Clone, Debug, PartialEq)]
pub struct SuperExpr {
    pub dims: Dims,
    table: BTreeMap<Key, Body>,
}

impl SuperExpr {
    pub fn zero(dims: Dims) -> Self {
        SuperExpr { dims, table: BTreeMap::new() }
    }

    pub fn from_body(dims: Dims, body: Body) -> Self {
        let mut s = SuperExpr::zero(dims);
        s.insert((GrassmannMono::ONE, CliffordMono::ONE), body);
        s
    }

    pub fn scalar(dims: Dims, c: Scalar) -> Self {
        SuperExpr::from_body(dims, Body::constant(dims.p, c))
    }

    pub fn one(dims: Dims) -> Self {
        SuperExpr::scalar(dims, Scalar::one())
    }

    /// Bosonic variable x_{j+1}.
    pub fn x(dims: Dims, index0: usize) -> Result<Self> {
        if index0 >= dims.p {
            return Err(Error::IndexOutOfRange { index: index0 + 1, limit: dims.p });
        }
        Ok(SuperExpr::from_body(dims, Body::var(dims.p, index0)))
    }

    /// Fermionic variable xg_{j+1} (parameters included).
    pub fn xg(dims: Dims, index0: usize) -> Result<Self> {
        if index0 >= dims.total_fermionic() {
            return Err(Error::IndexOutOfRange {
                index: index0 + 1,
                limit: dims.total_fermionic(),
            });
        }
        let mut s = SuperExpr::zero(dims);
        s.insert((GrassmannMono::var(index0), CliffordMono::ONE), Body::one(dims.p));
        Ok(s)
    }

    /// Orthogonal generator e_{j+1}; index `dims.p` addresses the extra
    /// spinor generator.
    pub fn e(dims: Dims, index0: usize) -> Result<Self> {
        if index0 > dims.p {
            return Err(Error::IndexOutOfRange { index: index0 + 1, limit: dims.p + 1 });
        }
        let mut s = SuperExpr::zero(dims);
        s.insert((GrassmannMono::ONE, CliffordMono::e(index0)), Body::one(dims.p));
        Ok(s)
    }

    /// Symplectic generator eg_{j+1}.
    pub fn eg(dims: Dims, index0: usize) -> Result<Self> {
        if index0 >= dims.fermionic() {
            return Err(Error::IndexOutOfRange { index: index0 + 1, limit: dims.fermionic() });
        }
        let mut s = SuperExpr::zero(dims);
        s.insert((GrassmannMono::ONE, CliffordMono::eg(index0)), Body::one(dims.p));
        Ok(s)
    }

    /// |x̲|^λ as a body factor.
    pub fn radial(dims: Dims, lambda: Rat64) -> Self {
        SuperExpr::from_body(dims, Body::radial_power(dims.p, lambda))
    }

    /// Builds a one-term expression from an already-canonical key.
    pub fn from_term(dims: Dims, g: GrassmannMono, c: CliffordMono, body: Body) -> Self {
        let mut s = SuperExpr::zero(dims);
        s.insert((g, c), body);
        s
    }

    fn insert(&mut self, key: Key, body: Body) {
        if body.is_zero() {
            return;
        }
        match self.table.get_mut(&key) {
            Some(b) => {
                let sum = b.add(&body);
                if sum.is_zero() {
                    self.table.remove(&key);
                } else {
                    *b = sum;
                }
            }
            None => {
                self.table.insert(key, body);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Body)> {
        self.table.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.table.len()
    }

    pub fn coefficient(&self, g: GrassmannMono, c: &CliffordMono) -> Body {
        self.table
            .get(&(g, c.clone()))
            .cloned()
            .unwrap_or_else(|| Body::zero(self.dims.p))
    }

    /// The body (Grassmann-empty, Clifford-scalar coefficient).
    pub fn body0(&self) -> Body {
        self.coefficient(GrassmannMono::ONE, &CliffordMono::ONE)
    }

    /// Everything except the `body0` coefficient.
    pub fn nilpotent_part(&self) -> SuperExpr {
        let mut s = self.clone();
        s.table.remove(&(GrassmannMono::ONE, CliffordMono::ONE));
        s
    }

    pub fn add(&self, other: &SuperExpr) -> SuperExpr {
        debug_assert!(self.dims.same_space(&other.dims).is_ok());
        let mut out = self.clone();
        for (k, b) in &other.table {
            out.insert(k.clone(), b.clone());
        }
        out
    }

    pub fn neg(&self) -> SuperExpr {
        let mut out = SuperExpr::zero(self.dims);
        for (k, b) in &self.table {
            out.table.insert(k.clone(), b.neg());
        }
        out
    }

    pub fn sub(&self, other: &SuperExpr) -> SuperExpr {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> SuperExpr {
        let mut out = SuperExpr::zero(self.dims);
        if c.is_zero() {
            return out;
        }
        for (k, b) in &self.table {
            let s = b.scale(c);
            if !s.is_zero() {
                out.table.insert(k.clone(), s);
            }
        }
        out
    }

    pub fn scale_body(&self, body: &Body) -> SuperExpr {
        let mut out = SuperExpr::zero(self.dims);
        for (k, b) in &self.table {
            out.insert(k.clone(), b.mul(body));
        }
        out
    }

    pub fn mul(&self, other: &SuperExpr) -> SuperExpr {
        debug_assert!(self.dims.same_space(&other.dims).is_ok());
        let mut out = SuperExpr::zero(self.dims);
        for ((g1, c1), b1) in &self.table {
            for ((g2, c2), b2) in &other.table {
                // Fermionic variables commute with Clifford generators, so the
                // only signs come from the two factor algebras themselves.
                let Some((gsign, g)) = g1.mul(g2) else { continue };
                let body = b1.mul(b2);
                if body.is_zero() {
                    continue;
                }
                let body = if gsign < 0 { body.neg() } else { body };
                for (coeff, cmono) in c1.mul(c2) {
                    let scaled = match coeff {
                        1 => body.clone(),
                        -1 => body.neg(),
                        k => body.scale(&Scalar::from_int(k)),
                    };
                    out.insert((g, cmono), scaled);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> SuperExpr {
        let mut acc = SuperExpr::one(self.dims);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// ∂_{x_{j+1}} (bosonic partial derivative; two-sided).
    pub fn derive_bosonic(&self, index0: usize) -> Result<SuperExpr> {
        if index0 >= self.dims.p {
            return Err(Error::IndexOutOfRange { index: index0 + 1, limit: self.dims.p });
        }
        let mut out = SuperExpr::zero(self.dims);
        for (k, b) in &self.table {
            out.insert(k.clone(), b.derive(index0));
        }
        Ok(out)
    }

    /// Left fermionic derivative ∂_{xg_{j+1}}.
    pub fn derive_fermionic(&self, index0: usize) -> Result<SuperExpr> {
        if index0 >= self.dims.fermionic() {
            return Err(Error::IndexOutOfRange {
                index: index0 + 1,
                limit: self.dims.fermionic(),
            });
        }
        let mut out = SuperExpr::zero(self.dims);
        for ((g, c), b) in &self.table {
            if let Some((sign, g2)) = g.derive_left(index0) {
                let body = if sign < 0 { b.neg() } else { b.clone() };
                out.insert((g2, c.clone()), body);
            }
        }
        Ok(out)
    }

    /// Right fermionic derivative ·∂_{xg_{j+1}}.
    pub fn derive_fermionic_right(&self, index0: usize) -> Result<SuperExpr> {
        if index0 >= self.dims.fermionic() {
            return Err(Error::IndexOutOfRange {
                index: index0 + 1,
                limit: self.dims.fermionic(),
            });
        }
        let mut out = SuperExpr::zero(self.dims);
        for ((g, c), b) in &self.table {
            if let Some((sign, g2)) = g.derive_right(index0) {
                let body = if sign < 0 { b.neg() } else { b.clone() };
                out.insert((g2, c.clone()), body);
            }
        }
        Ok(out)
    }

    /// Berezin integral π^{-n} ∂_{xg_{2n}} ··· ∂_{xg_1} over the integrated
    /// fermionic variables; Grassmann parameters survive.
    pub fn berezin(&self) -> SuperExpr {
        let n = self.dims.n;
        let full = if n == 0 { 0u64 } else { (1u64 << (2 * n)) - 1 };
        let factor = Scalar::pi_half_pow(-2 * n as i32);
        let mut out = SuperExpr::zero(self.dims);
        for ((g, c), b) in &self.table {
            let (xpart, ypart) = g.split_at(2 * n);
            if xpart.0 != full {
                continue;
            }
            // Parameters carry higher indices than the integrated block, so
            // the ascending word is already (x-block)(y-block): no extra sign,
            // and ∂_{2n}···∂_1 of the full x-block is +1.
            out.insert((ypart, c.clone()), b.scale(&factor));
        }
        out
    }

    /// Clifford conjugation (bar): reverses each generator word with the sign
    /// (-1)^{k+s(s+1)/2}; scalars and fermionic variables are untouched.
    pub fn clifford_conjugate(&self) -> SuperExpr {
        let mut out = SuperExpr::zero(self.dims);
        for ((g, c), b) in &self.table {
            let k = c.ortho_degree() as i64;
            let s = c.symp_degree() as i64;
            let sign_exp = k + s * (s + 1) / 2;
            let sign = if sign_exp % 2 == 0 { 1i64 } else { -1i64 };
            // product of the reversed factor list
            let mut factors = c.factors();
            factors.reverse();
            let mut acc: Vec<(i64, CliffordMono)> = vec![(1, CliffordMono::ONE)];
            for (is_ortho, idx) in factors {
                let gen = if is_ortho { CliffordMono::e(idx) } else { CliffordMono::eg(idx) };
                let mut next = Vec::new();
                for (coef, mono) in &acc {
                    for (c2, m2) in mono.mul(&gen) {
                        next.push((coef * c2, m2));
                    }
                }
                acc = next;
            }
            for (coef, mono) in acc {
                let k = coef * sign;
                let scaled = match k {
                    1 => b.clone(),
                    -1 => b.neg(),
                    _ => b.scale(&Scalar::from_int(k)),
                };
                out.insert((*g, mono), scaled);
            }
        }
        out
    }

    /// Hermitian conjugation: bar composed with complex conjugation.
    pub fn hermitian_conjugate(&self) -> SuperExpr {
        self.complex_conjugate().clifford_conjugate()
    }

    /// Complex conjugation of the scalars only.
    pub fn complex_conjugate(&self) -> SuperExpr {
        let mut out = SuperExpr::zero(self.dims);
        for (k, b) in &self.table {
            out.table.insert(k.clone(), b.conj());
        }
        out
    }

    /// Complex structure J: identity on bodies and fermionic variables,
    /// e_j ↦ -e_{m+j}, e_{m+j} ↦ e_j, eg_{2j-1} ↦ -eg_{2j}, eg_{2j} ↦ eg_{2j-1},
    /// extended multiplicatively.
    pub fn apply_j(&self) -> Result<SuperExpr> {
        let m = self.dims.m()?;
        let mut out = SuperExpr::zero(self.dims);
        for ((g, c), b) in &self.table {
            if c.ortho & (1 << self.dims.p) != 0 {
                return Err(Error::UnsupportedBody(
                    "J undefined on the extra spinor generator".into(),
                ));
            }
            let mut acc: Vec<(i64, CliffordMono)> = vec![(1, CliffordMono::ONE)];
            for (is_ortho, idx) in c.factors() {
                let (sgn, gen) = if is_ortho {
                    if idx < m {
                        (-1i64, CliffordMono::e(idx + m))
                    } else {
                        (1, CliffordMono::e(idx - m))
                    }
                } else if idx % 2 == 0 {
                    (-1, CliffordMono::eg(idx + 1))
                } else {
                    (1, CliffordMono::eg(idx - 1))
                };
                let mut next = Vec::new();
                for (coef, mono) in &acc {
                    for (c2, m2) in mono.mul(&gen) {
                        next.push((coef * c2 * sgn, m2));
                    }
                }
                acc = next;
            }
            for (coef, mono) in acc {
                let scaled = match coef {
                    1 => b.clone(),
                    -1 => b.neg(),
                    _ => b.scale(&Scalar::from_int(coef)),
                };
                out.insert((*g, mono), scaled);
            }
        }
        Ok(out)
    }

    /// Numeric evaluation of the bodies; Grassmann and Clifford structure is
    /// kept symbolic and coefficients become float scalars.
    pub fn eval_numeric(&self, point: &[f64]) -> Result<SuperExpr> {
        if point.len() != self.dims.p {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, space has {}",
                point.len(),
                self.dims.p
            )));
        }
        let mut out = SuperExpr::zero(self.dims);
        for (k, b) in &self.table {
            let v = b.eval(point)?;
            if v != Complex64::new(0.0, 0.0) {
                out.table
                    .insert(k.clone(), Body::constant(self.dims.p, Scalar::from_complex(v)));
            }
        }
        Ok(out)
    }

    /// Promotes all coefficients to the float payload.
    pub fn to_float(&self) -> SuperExpr {
        let mut out = SuperExpr::zero(self.dims);
        for (k, b) in &self.table {
            out.table.insert(k.clone(), b.to_float());
        }
        out
    }

    /// True when no Clifford generators occur.
    pub fn is_clifford_scalar(&self) -> bool {
        self.table.keys().all(|(_, c)| c.is_one())
    }

    /// True when every term has even Grassmann degree and no Clifford part
    /// (an even superfunction in the analytic-extension sense).
    pub fn is_even_superfunction(&self) -> bool {
        self.table
            .keys()
            .all(|(g, c)| g.degree() % 2 == 0 && c.is_one())
    }

    /// Grassmann parity involution: each term scaled by (−1)^{Grassmann degree}.
    pub fn grassmann_parity(&self) -> SuperExpr {
        let mut out = SuperExpr::zero(self.dims);
        for ((g, c), b) in &self.table {
            let body = if g.degree() % 2 == 1 { b.neg() } else { b.clone() };
            out.table.insert((*g, c.clone()), body);
        }
        out
    }

    /// Renames fermionic variables by an index shift (used to build formal
    /// parameter expressions: xg_j ↦ xg_{j+offset}).
    pub fn shift_fermionic(&self, offset: usize, dims: Dims) -> SuperExpr {
        let mut out = SuperExpr::zero(dims);
        for ((g, c), b) in &self.table {
            debug_assert!(c.symp_degree() == 0 || offset == 0);
            let mut g2 = 0u64;
            for idx in g.indices() {
                g2 |= 1 << (idx + offset);
            }
            // ascending order is preserved by a uniform shift: no sign
            let mut body = Body::zero(dims.p);
            for (bk, c2) in b.terms() {
                body = body.add(&Body::monomial(dims.p, &bk.alpha, bk.lambda, c2.clone()));
            }
            out.insert((GrassmannMono(g2), c.clone()), body);
        }
        out
    }

    /// Renames fermionic variables downward: xg_{j+offset} ↦ xg_j. All
    /// Grassmann content must live at indices ≥ offset.
    pub fn shift_fermionic_down(&self, offset: usize, dims: Dims) -> SuperExpr {
        let mut out = SuperExpr::zero(dims);
        for ((g, c), b) in &self.table {
            let mut g2 = 0u64;
            for idx in g.indices() {
                debug_assert!(idx >= offset);
                g2 |= 1 << (idx - offset);
            }
            let mut body = Body::zero(dims.p);
            for (bk, c2) in b.terms() {
                body = body.add(&Body::monomial(dims.p, &bk.alpha, bk.lambda, c2.clone()));
            }
            out.insert((GrassmannMono(g2), c.clone()), body);
        }
        out
    }

    /// Reinterprets the expression in `dims` (same bosonic dimension, larger
    /// fermionic space).
    pub fn extend_dims(&self, dims: Dims) -> SuperExpr {
        debug_assert_eq!(self.dims.p, dims.p);
        let mut out = SuperExpr::zero(dims);
        for (k, b) in &self.table {
            let mut body = Body::zero(dims.p);
            for (bk, c2) in b.terms() {
                body = body.add(&Body::monomial(dims.p, &bk.alpha, bk.lambda, c2.clone()));
            }
            out.insert(k.clone(), body);
        }
        out
    }

    /// Largest absolute value over all coefficients (numeric view).
    pub fn max_abs(&self) -> f64 {
        self.table
            .values()
            .flat_map(|b| b.terms().map(|(_, c)| c.abs()))
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for SuperExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((g, c), b) in &self.table {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = vec![format!("({b})")];
            if g.0 != 0 {
                parts.push(format!("{g}"));
            }
            if !c.is_one() {
                parts.push(format!("{c}"));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
