//! Exact-arithmetic verification of q-series identities and coefficient
//! positivity.
//!
//! Everything is built over integer Laurent polynomials with
//! arbitrary-precision coefficients: both sides of each finite identity are
//! constructed explicitly and compared term by term, positivity claims are
//! settled by scanning coefficients, and the infinite identities are
//! compared as truncated power series.
//!
//! Module map:
//! - [`poly`]: Laurent polynomials and truncated series (the value types).
//! - [`qcomb`]: Gaussian binomials, Pochhammer products, q-trinomials.
//! - [`bressoud`]: the G family, its admissible region, Borwein triples.
//! - [`transforms`]: the positivity-preserving kernels C, W, O.
//! - [`identities`]: the finite-identity registry and theta/multi-sum
//!   evaluators.
//! - [`series`]: truncated infinite products and pruned multi-sum limits.
//! - [`report`]: verdict records with JSON serialization.
//! - [`cli`]: the command-line driver behind the `qverify` binary.
//!
//! Values are immutable and operations are pure; the binomial and kernel
//! caches are shared process-wide and safe for concurrent use.

pub mod bressoud;
pub mod cli;
pub mod error;
pub mod identities;
pub mod poly;
pub mod qcomb;
pub mod report;
pub mod series;
pub mod transforms;

pub use error::{Error, Result};
pub use poly::{IntLaurentPoly, TruncSeries};
pub use report::{IdentityReport, RunSummary};
