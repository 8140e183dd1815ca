//! Superspace differential-geometric layer.

pub mod circulant;
pub mod dirac;
pub mod kernels;
pub mod vector;

pub use circulant::Circulant2;
