//! Clifford-Weyl monomials in canonical normal order.
//!
//! A monomial is `e_{j_1}···e_{j_k} · eg_1^{a_1} eg_2^{b_1} ··· eg_{2n-1}^{a_n} eg_{2n}^{b_n}`
//! with ascending orthogonal indices and the symplectic generators grouped by
//! pair in ascending index order. The generators obey
//!
//! * `e_j e_k + e_k e_j = -2δ_{jk}`
//! * `e_j eg_k + eg_k e_j = 0`
//! * `eg_j eg_k - eg_k eg_j = g_{jk}` with `g_{2j-1,2j} = -g_{2j,2j-1} = 1`
//!
//! so within a pair `(eg_{2j-1}, eg_{2j})` we have a Weyl algebra
//! `[eg_{2j-1}, eg_{2j}] = 1` and generators of distinct pairs commute.

use std::fmt;


#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CliffordMono {
    /// Bitset over orthogonal generators `e_1..e_{p+1}` (bit 0 = `e_1`).
    pub ortho: u64,
    /// Exponents of `eg_1..eg_{2n}`; trailing zeros trimmed.
    pub symp: Vec<u16>,
}

impl CliffordMono {
    pub const ONE: CliffordMono = CliffordMono { ortho: 0, symp: Vec::new() };

    pub fn e(index0: usize) -> Self {
        CliffordMono { ortho: 1u64 << index0, symp: Vec::new() }
    }

    pub fn eg(index0: usize) -> Self {
        let mut symp = vec![0u16; index0 + 1];
        symp[index0] = 1;
        CliffordMono { ortho: 0, symp }
    }

    pub fn is_one(&self) -> bool {
        self.ortho == 0 && self.symp.is_empty()
    }

    pub fn symp_degree(&self) -> u32 {
        self.symp.iter().map(|&e| e as u32).sum()
    }

    pub fn ortho_degree(&self) -> u32 {
        self.ortho.count_ones()
    }

    fn trim(mut symp: Vec<u16>) -> Vec<u16> {
        while symp.last() == Some(&0) {
            symp.pop();
        }
        symp
    }

    /// Sign of the reordering that merges the ascending blade `b` into `a`,
    /// then annihilates common generators with metric −1.
    fn blade_mul(a: u64, b: u64) -> (i64, u64) {
        let mut swaps = 0u32;
        let mut bb = b;
        while bb != 0 {
            let j = bb.trailing_zeros();
            // factors of `a` strictly above j must be jumped over
            swaps += (a >> (j + 1)).count_ones();
            bb &= bb - 1;
        }
        let common = (a & b).count_ones();
        let mut sign: i64 = if swaps % 2 == 0 { 1 } else { -1 };
        if common % 2 == 1 {
            sign = -sign;
        }
        (sign, a ^ b)
    }

    /// Normal-ordered product. The Weyl part expands into a sum, so the
    /// result is a list of `(integer coefficient, monomial)` pairs.
    pub fn mul(&self, other: &CliffordMono) -> Vec<(i64, CliffordMono)> {
        // Move other's orthogonal block left across self's symplectic block.
        let cross =
            (other.ortho_degree() * self.symp_degree()) % 2 == 0;
        let cross_sign: i64 = if cross { 1 } else { -1 };
        let (osign, omask) = Self::blade_mul(self.ortho, other.ortho);
        let base = cross_sign * osign;

        // Fast path: no symplectic reordering needed.
        if self.symp.is_empty() && other.symp.is_empty() {
            return vec![(base, CliffordMono { ortho: omask, symp: Vec::new() })];
        }

        // Weyl part: per pair, (∂^{a1} t^{b1})·(∂^{a2} t^{b2}) where within a
        // pair ∂ = eg_{2j-1}, t = eg_{2j}, [∂, t] = 1. Reorder the middle
        // t^{b1} ∂^{a2} via t^b ∂^a = Σ_k (-1)^k C(a,k) C(b,k) k! ∂^{a-k} t^{b-k}.
        let pairs = (self.symp.len().max(other.symp.len()) + 1) / 2;
        let mut expansions: Vec<Vec<(i64, u16, u16)>> = Vec::with_capacity(pairs);
        for j in 0..pairs {
            let a1 = *self.symp.get(2 * j).unwrap_or(&0) as i64;
            let b1 = *self.symp.get(2 * j + 1).unwrap_or(&0) as i64;
            let a2 = *other.symp.get(2 * j).unwrap_or(&0) as i64;
            let b2 = *other.symp.get(2 * j + 1).unwrap_or(&0) as i64;
            let kmax = a2.min(b1);
            let mut terms = Vec::with_capacity(kmax as usize + 1);
            for k in 0..=kmax {
                // C(a,k) C(b,k) k! = Π_{t<k} (a-t)(b-t) / k!  (an integer)
                let mut num = 1i64;
                for t in 0..k {
                    num *= (a2 - t) * (b1 - t);
                }
                let c = num / num_factorial(k);
                let signed = if k % 2 == 0 { c } else { -c };
                terms.push((signed, (a1 + a2 - k) as u16, (b1 + b2 - k) as u16));
            }
            expansions.push(terms);
        }

        // Cartesian product over pairs.
        let mut results: Vec<(i64, Vec<u16>)> = vec![(base, vec![0u16; 2 * pairs])];
        for (j, terms) in expansions.iter().enumerate() {
            let mut next = Vec::with_capacity(results.len() * terms.len());
            for (coef, exps) in &results {
                for (c, a, b) in terms {
                    let mut e2 = exps.clone();
                    e2[2 * j] = *a;
                    e2[2 * j + 1] = *b;
                    next.push((coef * c, e2));
                }
            }
            results = next;
        }

        results
            .into_iter()
            .map(|(c, symp)| (c, CliffordMono { ortho: omask, symp: Self::trim(symp) }))
            .collect()
    }

    /// The monomial as a list of single generators in canonical order.
    /// Orthogonal generators yield `(true, index0)`, symplectic `(false, index0)`.
    pub fn factors(&self) -> Vec<(bool, usize)> {
        let mut out = Vec::new();
        for j in 0..64 {
            if self.ortho & (1 << j) != 0 {
                out.push((true, j as usize));
            }
        }
        for (j, &e) in self.symp.iter().enumerate() {
            for _ in 0..e {
                out.push((false, j));
            }
        }
        out
    }
}

fn num_factorial(k: i64) -> i64 {
    (1..=k).product::<i64>().max(1)
}

impl fmt::Display for CliffordMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        for j in 0..64 {
            if self.ortho & (1 << j) != 0 {
                parts.push(format!("e{}", j + 1));
            }
        }
        for (j, &e) in self.symp.iter().enumerate() {
            if e == 1 {
                parts.push(format!("eg{}", j + 1));
            } else if e > 1 {
                parts.push(format!("eg{}^{}", j + 1, e));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}
