//! Exact computation of generic Euler and Calogero-Moser families for
//! complex reflection groups.
//!
//! The crate enumerates a finite complex reflection group from generator
//! matrices over a cyclotomic field, ingests a validated character table,
//! and derives from them:
//!
//! - the Euler-element central character values omega_lambda as exact linear
//!   forms in the Cherednik parameters k_{Omega,j},
//! - the generic Euler partition of the irreducible characters and the Euler
//!   variety (a hyperplane arrangement in parameter space with its orbit
//!   decomposition under Young-subgroup coordinate permutations),
//! - supersingularity flags from fake-degree divisibility, the good/bad
//!   classification of Euler families, and - when every family is good - a
//!   certified generic Calogero-Moser partition,
//! - a mechanical comparison against ingested Rouquier-family data (generic
//!   equality, union refinement, essential-hyperplane inclusion,
//!   sharp-stability).
//!
//! All arithmetic is exact: arbitrary-precision rationals and dense
//! power-basis cyclotomics. There is no floating point in the crate.
//!
//! The `book/` directory holds a guided tour; its code snippets compile and
//! run as doctests of this crate (see `src/book.rs`).

mod book;

pub mod bundles;
pub mod chars;
pub mod error;
pub mod euler;
pub mod exact;
pub mod group;
pub mod report;
pub mod rouquier;
pub mod sampling;
pub mod supersingular;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
