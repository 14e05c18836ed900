//! Exact bookkeeping for convex-surface arguments about contact structures on
//! the figure-eight knot complement: the Farey graph of torus slopes, curves
//! on the punctured torus and the monodromy, bypasses, basic slices, dividing
//! sets on the fibre, and a self-checking replay of the overtwistedness proof
//! for positive contact surgeries.

pub mod bypass;
pub mod cli;
pub mod curves;
pub mod error;
pub mod oracle;
pub mod seifert;
pub mod slices;
pub mod slopes;
pub mod trace;
pub mod verdict;

pub use error::{Error, Result};
