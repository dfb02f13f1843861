//! Exact Tutte polynomials of the contracted complete graphs `K_{n/r}`, the
//! derived inversion-enumerator families, and a depth-first-search
//! classifier for spanning connected subgraphs of `K_{n+1}`.
//!
//! Everything is exact: integer coefficients are arbitrary precision and
//! rational coefficients only appear in the partition-indexed harness.

pub mod dfs;
pub mod error;
pub mod graph;
pub mod harness;
pub mod parallel;
pub mod partition;
pub mod poly;
pub mod recurrence;

pub use error::Error;

/// Enumeration refuses edge counts above this even when configured higher.
pub const HARD_BIT_CAP: u32 = 40;

/// Default maximum number of edge bits (`2^30` masks).
pub const DEFAULT_BIT_LIMIT: u32 = 30;

/// Crate version, embedded in reports and cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
