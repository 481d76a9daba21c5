//! Machine verification of the inequalities behind antisymmetry of the
//! second eigenfunction of the fractional Laplacian in the 3-D unit ball.
//!
//! Layers, bottom up:
//! - [`interval`]: outward-rounded interval arithmetic and dual intervals;
//! - [`specfun`]: enclosures of ln Γ, Γ, ψ and ψ′;
//! - [`exactpoly`]: exact polynomials, Sturm isolation, rational identities;
//! - [`paperfn`]: μₙ, Λ, T, g_α, F, f, h, r, s and friends as enclosure maps;
//! - [`prover`]: bisection sign checks, monotone lifting and the claim DAG;
//! - [`report`]: the JSON/text run report;
//! - [`cli`]: argument handling for the `antisym` binary.

pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod interval;
pub mod paperfn;
pub mod prover;
pub mod report;
pub mod specfun;

pub use error::{Error, Result};
pub use interval::{BigInterval, DualInterval, Interval, PrecisionMode, Real};
