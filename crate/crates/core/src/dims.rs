//! Superspace dimensions.

use crate::error::{Error, Result};

/// Dimensions of the ambient superspace.
///
/// `p` bosonic variables `x_1..x_p` and `2n` fermionic variables
/// `xg_1..xg_{2n}`. In the Hermitian setting `p = 2m` and the complex
/// structure pairs `x_j` with `x_{m+j}` and `xg_{2j-1}` with `xg_{2j}`.
///
/// `params` extra fermionic variables act as formal Grassmann parameters
/// (the `yg` variables of shifted kernels); they are never differentiated by
/// the Dirac operators and never integrated by the Berezin integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dims {
    pub p: usize,
    pub n: usize,
    pub params: usize,
}

impl Dims {
    pub fn new(p: usize, n: usize) -> Self {
        Dims { p, n, params: 0 }
    }

    /// Hermitian flavor: `m` bosonic pairs, `n` fermionic pairs.
    pub fn hermitian(m: usize, n: usize) -> Self {
        Dims { p: 2 * m, n, params: 0 }
    }

    pub fn with_params(self, params: usize) -> Self {
        Dims { params, ..self }
    }

    /// Number of integrated fermionic variables.
    pub fn fermionic(&self) -> usize {
        2 * self.n
    }

    /// Total count of Grassmann symbols (integrated + parameters).
    pub fn total_fermionic(&self) -> usize {
        2 * self.n + self.params
    }

    /// Superdimension M = p − 2n.
    pub fn superdim(&self) -> i64 {
        self.p as i64 - 2 * self.n as i64
    }

    /// Bosonic pair count in the Hermitian setting.
    pub fn m(&self) -> Result<usize> {
        if self.p % 2 != 0 || self.p == 0 {
            Err(Error::NotHermitian)
        } else {
            Ok(self.p / 2)
        }
    }

    pub fn require_hermitian(&self) -> Result<usize> {
        self.m()
    }

    /// Kernel constructors reject M ∈ −2ℕ+2 = {0, −2, −4, …}.
    pub fn require_valid_superdim(&self) -> Result<i64> {
        let m_dim = self.superdim();
        if m_dim % 2 == 0 && m_dim <= 0 {
            Err(Error::ExcludedSuperdimension(m_dim))
        } else {
            Ok(m_dim)
        }
    }

    pub fn same_space(&self, other: &Dims) -> Result<()> {
        if self.p == other.p && self.n == other.n && self.params == other.params {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}
