//! Improper interval edge colorings of graphs.
//!
//! A k-improper interval edge coloring assigns positive integer colors to
//! edges so that the colors at every vertex form a gap-free run of integers
//! and no color repeats more than k times at a vertex. The impropriety
//! `mu_int(G)` is the least such k. This crate bundles:
//!
//! * the data model and the coloring verifier ([`graph`], [`coloring`]),
//! * classical subroutines the constructions rely on ([`subroutines`]),
//! * generators for the graph families under study ([`families`]),
//! * one executable coloring per constructive bound ([`constructions`]),
//! * certified lower bounds and the color-count machinery ([`bounds`]),
//! * an exact backtracking solver for `mu_int` and `t_hat` ([`solver`]).

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod selftest;
pub mod solver;
pub mod subroutines;

pub use coloring::{
    impropriety_of, interval_violation, is_interval, normalize, spectrum, verify, EdgeColoring,
    Spectrum,
};
pub use error::{Error, Result};
pub use graph::{Graph, MultiGraph};
