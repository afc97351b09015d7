//! Finite dual weak braces, strong semilattices of skew braces, their
//! Yang–Baxter solutions, ideals and nilpotency series.
//!
//! Every structure is a set of Cayley tables over the indices `0..n`,
//! validated once on construction.

pub mod algebra;
pub mod brace;
pub mod catalog;
pub mod compose;
pub mod format;
pub mod ideal;
pub mod nilpotency;
pub mod set;
pub mod solution;

pub use brace::{DualWeakBrace, Side, SkewBrace};
pub use set::ElementSet;
