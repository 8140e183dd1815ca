//! Spinor representation connecting holomorphicity with sh-monogenicity.
//!
//! Elements carry an implicit global factor I_b·I_f with
//! I_b = 𝔣₁†𝔣₁···𝔣_m†𝔣_m and I_f = exp((i/2)Σ a_j²). The orthogonal Witt
//! generators act by exterior multiplication/annihilation on the subset S of
//! 𝔣_S·I_b; the symplectic generators act through the identifications
//! eg_{2j-1} → e_{2m+1}∂_{a_j}, eg_{2j} → −e_{2m+1}a_j, with the Gaussian
//! absorbed into the derivation rule ∂_{a_j}(p·I_f) = (∂_{a_j}p + i a_j p)·I_f.

use std::collections::BTreeMap;
use std::fmt;

use crate::body::Body;
use crate::dims::Dims;
use crate::error::{Error, Result};
use crate::grassmann::GrassmannMono;
use crate::scalar::{Rat64, Scalar};
use crate::superexpr::SuperExpr;

/// Key of one spinor term: body · xg_G · a^β · 𝔣_S · e_{2m+1}^ε · I_b I_f.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpinorKey {
    pub grass: GrassmannMono,
    pub avars: Vec<u16>,
    pub witt: u32,
    pub eps: bool,
}

impl SpinorKey {
    fn ground() -> Self {
        SpinorKey { grass: GrassmannMono::ONE, avars: Vec::new(), witt: 0, eps: false }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpinorElem {
    pub dims: Dims,
    table: BTreeMap<SpinorKey, Body>,
}

fn trim(mut v: Vec<u16>) -> Vec<u16> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl SpinorElem {
    pub fn zero(dims: Dims) -> Self {
        SpinorElem { dims, table: BTreeMap::new() }
    }

    /// The vacuum I_b·I_f.
    pub fn ground(dims: Dims) -> Result<Self> {
        dims.require_hermitian()?;
        let mut s = SpinorElem::zero(dims);
        s.insert(SpinorKey::ground(), Body::one(dims.p));
        Ok(s)
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SpinorKey, &Body)> {
        self.table.iter()
    }

    fn insert(&mut self, key: SpinorKey, body: Body) {
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

    pub fn add(&self, other: &SpinorElem) -> SpinorElem {
        let mut out = self.clone();
        for (k, b) in &other.table {
            out.insert(k.clone(), b.clone());
        }
        out
    }

    pub fn neg(&self) -> SpinorElem {
        let mut out = SpinorElem::zero(self.dims);
        for (k, b) in &self.table {
            out.table.insert(k.clone(), b.neg());
        }
        out
    }

    pub fn sub(&self, other: &SpinorElem) -> SpinorElem {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> SpinorElem {
        let mut out = SpinorElem::zero(self.dims);
        for (k, b) in &self.table {
            let s = b.scale(c);
            if !s.is_zero() {
                out.table.insert(k.clone(), s);
            }
        }
        out
    }

    /// ∂_{x_j}, acting on the bodies.
    pub fn derive_bosonic(&self, index0: usize) -> Result<SpinorElem> {
        if index0 >= self.dims.p {
            return Err(Error::IndexOutOfRange { index: index0 + 1, limit: self.dims.p });
        }
        let mut out = SpinorElem::zero(self.dims);
        for (k, b) in &self.table {
            out.insert(k.clone(), b.derive(index0));
        }
        Ok(out)
    }

    /// Left fermionic derivative ∂_{xg_j} on the Grassmann part.
    pub fn derive_fermionic(&self, index0: usize) -> Result<SpinorElem> {
        if index0 >= self.dims.fermionic() {
            return Err(Error::IndexOutOfRange {
                index: index0 + 1,
                limit: self.dims.fermionic(),
            });
        }
        let mut out = SpinorElem::zero(self.dims);
        for (k, b) in &self.table {
            if let Some((sign, g2)) = k.grass.derive_left(index0) {
                let body = if sign < 0 { b.neg() } else { b.clone() };
                out.insert(SpinorKey { grass: g2, ..k.clone() }, body);
            }
        }
        Ok(out)
    }
}

/// Generators acting on the spinor module (1-based Witt indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinorGen {
    /// e_j, 1 ≤ j ≤ 2m
    E(usize),
    /// eg_j, 1 ≤ j ≤ 2n
    Eg(usize),
    /// 𝔣_j
    F(usize),
    /// 𝔣_j†
    FDag(usize),
    /// 𝔣`_j
    Fg(usize),
    /// 𝔣`_j†
    FgDag(usize),
}

/// 𝔣_j·s: exterior multiplication on the Witt subset (1-based j).
fn act_f(s: &SpinorElem, j: usize) -> SpinorElem {
    let bit = 1u32 << (j - 1);
    let mut out = SpinorElem::zero(s.dims);
    for (k, b) in s.terms() {
        if k.witt & bit != 0 {
            continue;
        }
        let below = (k.witt & (bit - 1)).count_ones();
        let mut sign = if below % 2 == 0 { 1i64 } else { -1 };
        if k.eps {
            // crossing e_{2m+1} never happens: 𝔣_j lands before ε; but it
            // does cross nothing else. Sign only from the Witt word.
            let _ = &mut sign;
        }
        let body = if sign < 0 { b.neg() } else { b.clone() };
        out.insert(SpinorKey { witt: k.witt | bit, ..k.clone() }, body);
    }
    out
}

/// 𝔣_j†·s: annihilation against I_b.
fn act_fdag(s: &SpinorElem, j: usize) -> SpinorElem {
    let bit = 1u32 << (j - 1);
    let mut out = SpinorElem::zero(s.dims);
    for (k, b) in s.terms() {
        if k.witt & bit == 0 {
            continue; // 𝔣_j† slides through and kills I_b
        }
        let below = (k.witt & (bit - 1)).count_ones();
        let sign = if below % 2 == 0 { 1i64 } else { -1 };
        let body = if sign < 0 { b.neg() } else { b.clone() };
        out.insert(SpinorKey { witt: k.witt & !bit, ..k.clone() }, body);
    }
    out
}

/// Multiplication by ±e_{2m+1}·(a-operator): shared plumbing of the
/// symplectic actions. `da` applies ∂_{a_j} with the Gaussian rule, `times_a`
/// multiplies by a_j; the combined coefficient is `da_coeff·∂ + a_coeff·a`.
fn act_e_times(
    s: &SpinorElem,
    j: usize,
    da_coeff: Scalar,
    a_coeff: Scalar,
) -> SpinorElem {
    let mut out = SpinorElem::zero(s.dims);
    for (k, b) in s.terms() {
        // e_{2m+1} crosses the Witt word (all odd generators)
        let wsign = if k.witt.count_ones() % 2 == 0 { 1i64 } else { -1 };
        // and merges with the ε slot: e² = −1
        let (eps, esign) = if k.eps { (false, -1i64) } else { (true, 1) };
        let total = wsign * esign;
        let base = if total < 0 { b.neg() } else { b.clone() };

        if !da_coeff.is_zero() {
            // ∂_{a_j}(a^β I_f) = β_j a^{β-e_j} I_f + i a_j a^β I_f
            let bj = *k.avars.get(j - 1).unwrap_or(&0);
            if bj > 0 {
                let mut av = k.avars.clone();
                av[j - 1] -= 1;
                out.insert(
                    SpinorKey { avars: trim(av), eps, ..k.clone() },
                    base.scale(&(&da_coeff * &Scalar::from_int(bj as i64))),
                );
            }
            let mut av = k.avars.clone();
            if av.len() < j {
                av.resize(j, 0);
            }
            av[j - 1] += 1;
            out.insert(
                SpinorKey { avars: av, eps, ..k.clone() },
                base.scale(&(&da_coeff * &Scalar::i())),
            );
        }
        if !a_coeff.is_zero() {
            let mut av = k.avars.clone();
            if av.len() < j {
                av.resize(j, 0);
            }
            av[j - 1] += 1;
            out.insert(SpinorKey { avars: av, eps, ..k.clone() }, base.scale(&a_coeff));
        }
    }
    out
}

/// Action of a single generator on a spinor element.
pub fn act_generator(gen: SpinorGen, s: &SpinorElem) -> Result<SpinorElem> {
    let m = s.dims.require_hermitian()?;
    Ok(match gen {
        SpinorGen::F(j) => {
            if j == 0 || j > m {
                return Err(Error::IndexOutOfRange { index: j, limit: m });
            }
            act_f(s, j)
        }
        SpinorGen::FDag(j) => {
            if j == 0 || j > m {
                return Err(Error::IndexOutOfRange { index: j, limit: m });
            }
            act_fdag(s, j)
        }
        SpinorGen::E(j) => {
            if j == 0 || j > 2 * m {
                return Err(Error::IndexOutOfRange { index: j, limit: 2 * m });
            }
            if j <= m {
                // e_j = 𝔣_j − 𝔣_j†
                act_f(s, j).sub(&act_fdag(s, j))
            } else {
                // e_{m+j} = i(𝔣_j + 𝔣_j†)
                act_f(s, j - m).add(&act_fdag(s, j - m)).scale(&Scalar::i())
            }
        }
        SpinorGen::Eg(j) => {
            if j == 0 || j > s.dims.fermionic() {
                return Err(Error::IndexOutOfRange { index: j, limit: s.dims.fermionic() });
            }
            let pair = (j + 1) / 2;
            if j % 2 == 1 {
                // eg_{2k-1} → e_{2m+1} ∂_{a_k}
                act_e_times(s, pair, Scalar::one(), Scalar::zero())
            } else {
                // eg_{2k} → −e_{2m+1} a_k
                act_e_times(s, pair, Scalar::zero(), Scalar::from_int(-1))
            }
        }
        SpinorGen::Fg(j) => {
            // 𝔣`_j = ½(eg_{2j-1} − i eg_{2j}) → (e/2)(∂_{a_j} + i a_j)
            let half = Scalar::from_rat(Rat64::new(1, 2));
            act_e_times(s, j, half.clone(), &Scalar::i() * &half)
        }
        SpinorGen::FgDag(j) => {
            // 𝔣`_j† = −½(eg_{2j-1} + i eg_{2j}) → −(e/2)(∂_{a_j} − i a_j)
            let mhalf = Scalar::from_rat(Rat64::new(-1, 2));
            act_e_times(s, j, mhalf.clone(), &Scalar::i().inv().unwrap() * &mhalf)
        }
    })
}

/// F·I_b·I_f for a Clifford-scalar superfunction F.
pub fn project(f: &SuperExpr) -> Result<SpinorElem> {
    f.dims.require_hermitian()?;
    if !f.is_clifford_scalar() {
        return Err(Error::NotCliffordScalar);
    }
    let mut out = SpinorElem::zero(f.dims);
    for ((g, _), b) in f.terms() {
        out.insert(SpinorKey { grass: *g, ..SpinorKey::ground() }, b.clone());
    }
    Ok(out)
}

/// ∂_Z[s] = Σ 𝔣_j† ∂_{z_j}[s] + 2i Σ 𝔣`_j† ∂_{zg_j}[s].
pub fn dirac_z(s: &SpinorElem) -> Result<SpinorElem> {
    let m = s.dims.require_hermitian()?;
    let half = Scalar::from_rat(Rat64::new(1, 2));
    let mut out = SpinorElem::zero(s.dims);
    for j in 1..=m {
        let dz = s
            .derive_bosonic(j - 1)?
            .sub(&s.derive_bosonic(m + j - 1)?.scale(&Scalar::i()))
            .scale(&half);
        out = out.add(&act_generator(SpinorGen::FDag(j), &dz)?);
    }
    for j in 1..=s.dims.n {
        let dzg = s
            .derive_fermionic(2 * j - 2)?
            .sub(&s.derive_fermionic(2 * j - 1)?.scale(&Scalar::i()))
            .scale(&half);
        out = out.add(
            &act_generator(SpinorGen::FgDag(j), &dzg)?
                .scale(&(&Scalar::from_int(2) * &Scalar::i())),
        );
    }
    Ok(out)
}

/// ∂_{Z†}[s] = Σ 𝔣_j ∂_{z_j^c}[s] − 2i Σ 𝔣`_j ∂_{zg_j^c}[s].
pub fn dirac_z_dag(s: &SpinorElem) -> Result<SpinorElem> {
    let m = s.dims.require_hermitian()?;
    let half = Scalar::from_rat(Rat64::new(1, 2));
    let mut out = SpinorElem::zero(s.dims);
    for j in 1..=m {
        let dzc = s
            .derive_bosonic(j - 1)?
            .add(&s.derive_bosonic(m + j - 1)?.scale(&Scalar::i()))
            .scale(&half);
        out = out.add(&act_generator(SpinorGen::F(j), &dzc)?);
    }
    for j in 1..=s.dims.n {
        let dzgc = s
            .derive_fermionic(2 * j - 2)?
            .add(&s.derive_fermionic(2 * j - 1)?.scale(&Scalar::i()))
            .scale(&half);
        out = out.add(
            &act_generator(SpinorGen::Fg(j), &dzgc)?
                .scale(&(&Scalar::from_int(-2) * &Scalar::i())),
        );
    }
    Ok(out)
}

/// Simultaneous null solution of ∂_Z and ∂_{Z†} in the spinor module.
pub fn is_sh_monogenic_spinor(s: &SpinorElem) -> Result<bool> {
    Ok(dirac_z(s)?.is_zero() && dirac_z_dag(s)?.is_zero())
}

pub use crate::ops::dirac::is_holomorphic;

/// Computes both sides of the equivalence: holomorphicity of F versus
/// sh-monogenicity of F·I_b·I_f.
pub fn check_equivalence(f: &SuperExpr) -> Result<(bool, bool)> {
    let holo = is_holomorphic(f)?;
    let spin = project(f)?;
    let mono = is_sh_monogenic_spinor(&spin)?;
    Ok((holo, mono))
}

impl fmt::Display for SpinorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, b) in &self.table {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = vec![format!("({b})")];
            if k.grass.0 != 0 {
                parts.push(format!("{}", k.grass));
            }
            for (j, &e) in k.avars.iter().enumerate() {
                if e == 1 {
                    parts.push(format!("a{}", j + 1));
                } else if e > 1 {
                    parts.push(format!("a{}^{}", j + 1, e));
                }
            }
            for j in 0..32 {
                if k.witt & (1 << j) != 0 {
                    parts.push(format!("f{}", j + 1));
                }
            }
            if k.eps {
                parts.push("eX".into());
            }
            parts.push("I".into());
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
