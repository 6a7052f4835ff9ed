//! Burning numbers of graphs, with certified bounds for Hamming graphs `H(n, q)`.
//!
//! * [`graph`] holds explicit graphs, balls, schedule verification and the
//!   exact branch-and-bound solver.
//! * [`hamming`] models `H(n, q)` implicitly with exact big-integer counting.
//! * [`construction`] builds the constant-word burning schedule and checks
//!   that it covers every word.
//! * [`bounds`] evaluates the closed-form upper and lower bounds together with
//!   exact certificates for the lower bound.
//! * [`cli`] is the command-line front end used by the `burning` binary.

pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod construction;
pub mod error;
pub mod graph;
pub mod hamming;

pub use error::{Error, Result};
