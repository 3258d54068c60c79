//! Computational toolkit for CM fields of small degree.
//!
//! The crate is organised around exact arithmetic in totally real fields of
//! degree at most 3 (`nfield`, `ideals`), multiplicative congruences and ray
//! class membership (`rayclass`), construction of CM extensions with
//! prescribed ramification (`cmbuild`), quartic Galois classification
//! (`galclass`), Shintani fundamental-domain enumeration (`shintani`),
//! arbitrary-precision special functions and L-derivatives (`analytic`),
//! and two enumerative censuses (`census`).

pub mod analytic;
pub mod arith;
pub mod census;
pub mod cmbuild;
pub mod error;
pub mod galclass;
pub mod ideals;
pub mod lattice;
pub mod nfield;
pub mod poly;
pub mod rayclass;
pub mod report;
pub mod shintani;

pub use error::{Error, Result};
