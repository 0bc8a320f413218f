//! A workbench for Stirling permutation combinatorics.
//!
//! The crate enumerates Stirling permutations and their companion families
//! (codes, ternary increasing trees, trapezoidal words, perfect matchings),
//! computes scalar and set-valued statistics under explicit boundary
//! conventions, runs exact multivariate polynomial arithmetic with formal
//! grammar derivatives, and certifies every implemented identity by brute
//! force through the [`verify`] registry.

pub mod code;
pub mod convert;
pub mod error;
pub mod families;
pub mod grammar;
pub mod parse;
pub mod poly;
pub mod stats;
pub mod trapezoid;
pub mod trees;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
