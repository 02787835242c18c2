//! One-pass cut sparsification of edge streams.
//!
//! Edges arrive one at a time. Each arriving edge is kept with probability
//! `min(ρ / c_e, 1)`, where `c_e` is its strength in the sparsifier built so
//! far, and kept edges carry weight `1 / p_e`. The result approximates every
//! cut of the full graph.
//!
//! Module map:
//!
//! - [`graph`], [`mincut`], [`edgelist`]: multigraphs, cuts, Stoer-Wagner,
//!   brute-force cut enumeration and the text format.
//! - [`strength`]: exact, certificate-based and brute-force edge strength.
//! - [`offline`]: sampling with strengths computed on the whole graph, the
//!   reference the stream is compared against.
//! - [`stream`]: the one-pass sparsifier.
//! - [`streamkit`]: generators, arrival orders and unit expansion.
//! - [`harness`]: cut-error evaluation, lemma checks and Monte-Carlo runs.
//! - [`cli`]: the `cutsparsify` command line.

pub mod cli;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod harness;
pub mod mincut;
pub mod offline;
pub mod rng;
pub mod stream;
pub mod streamkit;
pub mod strength;
pub mod weight;

pub use error::{Error, Result};
pub use graph::{connected_components, cut_value, total_weight, Cut, Edge, EdgeId, Graph};
pub use mincut::{enumerate_cuts, min_cut};
pub use stream::{run_stream, SparsifierState, SparsifyConfig};
pub use strength::{StrengthMap, StrengthMode};
pub use weight::{Rational, Weight};
