//! Exact verification of weighted Rogers-Ramanujan partition identities.
//!
//! The crate is organised bottom-up:
//!
//! - [`polyq`]: Laurent polynomials in `a, b, c, A` and truncated q-series.
//! - [`partitions`]: partitions, Ferrers-graph statistics, chain and string
//!   decompositions, filtered enumeration.
//! - [`colored`]: colored (Type-1) partitions of the method of weighted words.
//! - [`weights`]: chain, power-of-two and Fibonacci weights.
//! - [`identities`]: both sides of every identity and the verification
//!   harness that compares them.
//!
//! With the default `parallel` feature the harness evaluates independent
//! cases on the rayon thread pool; without it everything runs sequentially
//! and produces identical reports.

pub mod colored;
pub mod error;
pub mod identities;
pub mod par;
pub mod partitions;
pub mod polyq;
pub mod weights;

pub use error::{Error, Result};
