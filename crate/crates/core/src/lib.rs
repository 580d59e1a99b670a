//! Score sequences of tournaments on arbitrary simple graphs.
//!
//! A tournament on a graph `G` orients every edge towards the winner of
//! that match; its score sequence counts the wins per vertex. A random
//! tournament instead assigns each edge an exact rational win probability,
//! and its mean score sequence is the expected win count per vertex.
//!
//! This crate decides whether a rational vector is the (mean) score
//! sequence of some (random) tournament on a given graph, producing a
//! certifying witness either way, and constructs explicit realizations:
//! deterministic tournaments for integral inputs, and random tournaments
//! whose fractional edges form a forest for fractional inputs. The
//! membership test is the hyperplane description of the graphic zonotope:
//! `x` is feasible iff the entries sum to the edge count and every vertex
//! subset `A` satisfies `sum_{i in A} x_i >= phi(A)`, where `phi(A)` counts
//! the edges induced by `A`.
//!
//! All arithmetic is exact (arbitrary-precision rationals); there are no
//! tolerances anywhere. Two independent deciders (exhaustive subset scan
//! and max-flow) plus brute-force enumeration oracles cross-validate each
//! other.
//!
//! ```
//! use scoreseq_core::{check_flow, realize, Graph, ScoreVector};
//! # fn main() -> Result<(), scoreseq_core::Error> {
//! let g = Graph::complete(3)?;
//! let x = ScoreVector::parse("1/2,1,3/2")?;
//! assert!(check_flow(&g, &x)?.is_feasible());
//!
//! let r = realize(&g, &x)?;
//! assert_eq!(r.tournament.mean_score_sequence(), x); // exact
//! assert!(r.fractional_support.len() <= 2);          // forest
//! # Ok(()) }
//! ```

pub mod error;
pub mod feasibility;
mod flow;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod realization;
pub mod tournament;

pub use error::Error;
pub use feasibility::{
    check_complete_majorization, check_flow, check_subset, check_subset_with_limit,
    FeasibilityVerdict,
};
pub use graph::{CycleStep, Graph, VertexSubset};
pub use oracle::{
    enumerate_lattice_points, enumerate_score_sequences, sample_zonotope_point,
    sample_zonotope_point_with_denominator, ScoreSequenceSet, SplitMix64,
};
pub use rational::{parse_rational, Rational};
pub use realization::{
    forest_reduce, fractional_realization, realize, realize_integral, EdgePartition,
    RealizationResult,
};
pub use tournament::{RandomTournament, ScoreVector, Tournament, Winner};
