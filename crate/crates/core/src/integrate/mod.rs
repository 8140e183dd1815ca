//! Domain and surface integration in superspace: Berezin reduction plus
//! deterministic bosonic quadrature, and the integral-theorem checkers.

pub mod bm;
pub mod cauchy;
pub mod measure;
pub mod quad;
pub mod stokes;
