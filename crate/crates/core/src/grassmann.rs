//! Grassmann monomials as bitsets with the ascending-index sign convention.

use std::fmt;

/// Product of distinct fermionic variables `xg_{j}`, stored as a bitset.
/// Bit `j` (0-based) stands for `xg_{j+1}`; the monomial is the product in
/// ascending index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GrassmannMono(pub u64);

impl GrassmannMono {
    pub const ONE: GrassmannMono = GrassmannMono(0);

    pub fn var(index0: usize) -> Self {
        GrassmannMono(1u64 << index0)
    }

    pub fn degree(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(&self, index0: usize) -> bool {
        self.0 & (1 << index0) != 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(|j| self.contains(*j))
    }

    /// Sign of moving one factor `xg_b` from the left across this monomial's
    /// factors with index strictly less than `b`... more precisely: the
    /// number of set bits strictly above `b` in `a` counts the transpositions
    /// needed to merge `b` into ascending position.
    fn merge_sign(a: u64, b: u64) -> i32 {
        // Σ_{j ∈ b} #{i ∈ a : i > j}  (parity)
        let mut swaps = 0u32;
        let mut bb = b;
        while bb != 0 {
            let j = bb.trailing_zeros();
            let above = a >> (j + 1);
            swaps += above.count_ones();
            bb &= bb - 1;
        }
        if swaps % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Product of two monomials: `None` when a variable repeats.
    pub fn mul(&self, other: &GrassmannMono) -> Option<(i32, GrassmannMono)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let sign = Self::merge_sign(self.0, other.0);
        Some((sign, GrassmannMono(self.0 | other.0)))
    }

    /// Left derivative ∂_{xg_j}: removes the variable with the sign given by
    /// its position, `None` if absent.
    pub fn derive_left(&self, index0: usize) -> Option<(i32, GrassmannMono)> {
        if !self.contains(index0) {
            return None;
        }
        let below = self.0 & ((1u64 << index0) - 1);
        let sign = if below.count_ones() % 2 == 0 { 1 } else { -1 };
        Some((sign, GrassmannMono(self.0 & !(1u64 << index0))))
    }

    /// Right derivative ·∂_{xg_j}: removes from the right.
    pub fn derive_right(&self, index0: usize) -> Option<(i32, GrassmannMono)> {
        if !self.contains(index0) {
            return None;
        }
        let above = self.0 >> (index0 + 1);
        let sign = if above.count_ones() % 2 == 0 { 1 } else { -1 };
        Some((sign, GrassmannMono(self.0 & !(1u64 << index0))))
    }

    /// Splits into the part below `cut` and the part at/above `cut`, with the
    /// sign of reordering the ascending word into (low block)(high block).
    /// The canonical ascending word already has that shape, so the sign is +1;
    /// kept for clarity of callers.
    pub fn split_at(&self, cut: usize) -> (GrassmannMono, GrassmannMono) {
        let mask = (1u64 << cut) - 1;
        (GrassmannMono(self.0 & mask), GrassmannMono(self.0 & !mask))
    }
}

impl fmt::Display for GrassmannMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().map(|j| format!("xg{}", j + 1)).collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommutation() {
        let a = GrassmannMono::var(1); // xg2
        let b = GrassmannMono::var(0); // xg1
        let (s, m) = a.mul(&b).unwrap();
        assert_eq!(s, -1);
        assert_eq!(m, GrassmannMono(0b11));
        assert!(a.mul(&a).is_none());
    }

    #[test]
    fn derivatives() {
        let m = GrassmannMono(0b11); // xg1 xg2
        let (s1, r1) = m.derive_left(0).unwrap();
        assert_eq!((s1, r1), (1, GrassmannMono::var(1)));
        let (s2, r2) = m.derive_left(1).unwrap();
        assert_eq!((s2, r2), (-1, GrassmannMono::var(0)));
        // right derivative picks from the right: (xg1 xg2)∂_2 = xg1
        let (s3, r3) = m.derive_right(1).unwrap();
        assert_eq!((s3, r3), (1, GrassmannMono::var(0)));
        let (s4, r4) = m.derive_right(0).unwrap();
        assert_eq!((s4, r4), (-1, GrassmannMono::var(1)));
    }
}
