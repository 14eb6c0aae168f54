//! Exact-arithmetic toolkit for difference families on cyclic groups and the
//! skew-Hadamard matrices assembled from them.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`modring`] — subsets of `Z_n` and their difference tables,
//! * [`cosets`] — coset decompositions of the unit group used to shrink
//!   search spaces,
//! * [`diffsets`] — verification, fingerprints and equivalence of
//!   supplementary difference sets,
//! * [`gsmatrix`] — circulant `±1` blocks and the Goethals–Seidel array,
//! * [`searcher`] — randomized local search for families with prescribed
//!   parameters,
//! * [`catalog`] — the shipped families over `Z_47` and `Z_97`.
//!
//! Everything is plain integer arithmetic; no verdict in this crate depends
//! on floating point. With the default `parallel` feature the heavy scans
//! (matrix certificates, equivalence searches, restart batches) run on
//! rayon; disabling the feature yields the same results sequentially.

pub mod catalog;
pub mod cosets;
pub mod diffsets;
pub mod gsmatrix;
pub mod modring;
pub mod searcher;

mod error;
mod par;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
