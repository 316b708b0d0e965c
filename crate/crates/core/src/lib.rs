//! Exact recovery of Frobenius–Schur weighted character degrees of a finite
//! group from the solution counts `s(n) = #{(g₁,…,gₙ) : g₁²⋯gₙ² = 1}`.
//!
//! The pipeline is character-free: enumerate the group, compute `s(n)` by
//! repeated multiplication in the center of the group algebra, convert to
//! power sums, run Newton's identities and read off rational roots. The
//! [`oracle`] module holds the independent checks (literal tuple counting,
//! embedded character tables, the bijection behind `s(2) = |G|·k_r`).

pub mod class_algebra;
pub mod cli;
pub mod error;
pub mod group;
pub mod indicators;
pub mod oracle;
pub mod recovery;

pub use error::{Error, Result};
