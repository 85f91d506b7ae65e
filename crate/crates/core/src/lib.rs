//! Exact computer algebra for the shuffle and stuffle algebras of multiple
//! zeta values.
//!
//! The crate provides the composition algebra ℋ≥0 with its shuffle product
//! `⧢̃` and the recursively defined coproduct `Δ̃`, the locality Hopf algebra
//! of Chen fractions from which `Δ̃` descends, the stuffle product with
//! extended double shuffle generators, a truncated-sum numeric evaluator,
//! and text/JSON/LaTeX input and output.

pub mod chenfrac;
pub mod error;
pub mod hcore;
pub mod hopf;
pub mod mzvnum;
pub mod parserio;
pub mod report;
pub mod stuffle;
pub mod words;

pub use error::{Error, Result};
pub use hcore::{Composition, HTensorVector, HVector, LinComb, Rational};
