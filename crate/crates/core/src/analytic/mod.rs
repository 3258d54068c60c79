//! Arbitrary-precision numerics: elementary conversions, special functions
//! (Hurwitz and Barnes zeta, Bessel K0 smoothing kernels), L-functions of
//! quadratic characters with derivatives at s = 0, and the Faltings-height
//! evaluations built from them.

pub mod barnes;
pub mod classno;
pub mod eta;
pub mod faltings;
pub mod hurwitz;
pub mod jet;
pub mod kernels;
pub mod lfun;
pub mod real;

pub use real::HighPrecisionReal;

/// Default working precision in bits.
pub const DEFAULT_PREC: u32 = 192;
