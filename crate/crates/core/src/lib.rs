//! Truncation and connectivity calculus on finite models.
//!
//! * [`simplicial`]: generator-presented simplicial sets, products, joins and pushouts.
//! * [`invariants`]: normalized chains, Smith normal form, homology, `pi0` and `pi1`.
//! * [`certify`]: three-valued certificates for n-connected and n-truncated objects and maps.
//! * [`groupoid`]: finite groupoids, where every question at levels `-2..=1` is decidable.
//! * [`filter`]: filters on the naturals, level sequences and germ objects.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod certify;
pub mod error;
pub mod filter;
pub mod groupoid;
pub mod invariants;
pub mod level;
pub mod simplicial;
pub mod verdict;

pub use error::{Error, Result};
pub use level::TruncLevel;
pub use verdict::{Budgets, Tag, Verdict};
