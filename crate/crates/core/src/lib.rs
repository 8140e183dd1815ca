//! Exact Clifford-Weyl algebra over superspace, with the distributional
//! calculus and integration harness needed to verify the identities the
//! algebra satisfies: fundamental solutions of the super Dirac operators,
//! Stokes/Cauchy-Pompeiu formulae, and the Bochner-Martinelli representation
//! of holomorphic superfunctions.
//!
//! The crate is organized in five layers:
//!
//! * [`scalar`], [`body`], [`grassmann`], [`clifford`], [`superexpr`] — the
//!   exact arithmetic core (module `algebra`).
//! * [`ops`] — supervector variables, Dirac/Laplace/twisted operators,
//!   Hermitian calculus and the fundamental-solution kernels.
//! * [`dist`] — finite parts, spherical means, level-set distributions and
//!   the kernel-derivative verification machinery.
//! * [`integrate`] — Berezin + quadrature evaluation of domain/surface
//!   integrals and the integral theorems.
//! * [`spinor`] — the spinor representation connecting holomorphicity with
//!   sh-monogenicity.

pub mod body;
pub mod clifford;
pub mod dims;
pub mod dist;
pub mod error;
pub mod grassmann;
pub mod integrate;
pub mod ops;
pub mod scalar;
pub mod spinor;
pub mod suites;
pub mod superexpr;

pub use body::Body;
pub use clifford::CliffordMono;
pub use dims::Dims;
pub use error::{Error, Result};
pub use grassmann::GrassmannMono;
pub use scalar::{GaussRat, Rat64, Scalar};
pub use superexpr::SuperExpr;
