//! Membership of a rational vector in the set of (mean) score sequences
//! of a graph, with certifying witnesses.
//!
//! A vector `x` is feasible iff `sum(x) = m` and every vertex subset `A`
//! satisfies `sum_{i in A} x_i >= phi(A)`. Two independent deciders are
//! provided: an exhaustive subset scan and a max-flow reformulation. They
//! always agree on the verdict kind; witnesses may differ but every
//! witness recomputes to a genuine violation. A majorization shortcut
//! covers complete graphs.

use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::Error;
use crate::flow;
use crate::graph::{induced_edge_count, Graph, VertexSubset};
use crate::rational::{self, Rational};
use crate::tournament::ScoreVector;

/// Vertex budget for the exhaustive subset check (2^n subsets).
pub const DEFAULT_SUBSET_LIMIT: usize = 20;

/// Outcome of a feasibility check. Infeasible outcomes carry a witness
/// that can be re-verified from the graph and vector alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityVerdict {
    Feasible,
    /// The entries do not sum to the edge count.
    SumMismatch { actual: Rational, expected: u64 },
    /// A subset whose entries sum below the number of edges it induces.
    SubsetViolation {
        subset: VertexSubset,
        subset_sum: Rational,
        phi: u64,
    },
}

impl FeasibilityVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityVerdict::Feasible)
    }

    /// Recomputes the witness against `(g, x)`; true when it certifies a
    /// genuine violation (or the verdict is `Feasible`).
    pub fn verify(&self, g: &Graph, x: &ScoreVector) -> bool {
        match self {
            FeasibilityVerdict::Feasible => true,
            FeasibilityVerdict::SumMismatch { actual, expected } => {
                *expected == g.edge_count() as u64
                    && x.sum() == *actual
                    && *actual != rational::from_integer(*expected)
            }
            FeasibilityVerdict::SubsetViolation {
                subset,
                subset_sum,
                phi,
            } => match induced_edge_count(g, subset) {
                Ok(recomputed_phi) => {
                    recomputed_phi == *phi
                        && subset_sum == &subset_total(x, subset)
                        && *subset_sum < rational::from_integer(*phi)
                }
                Err(_) => false,
            },
        }
    }
}

impl fmt::Display for FeasibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeasibilityVerdict::Feasible => write!(f, "feasible"),
            FeasibilityVerdict::SumMismatch { actual, expected } => {
                write!(f, "entries sum to {actual}, expected {expected}")
            }
            FeasibilityVerdict::SubsetViolation {
                subset,
                subset_sum,
                phi,
            } => write!(
                f,
                "subset {subset} has sum {subset_sum} < {phi} induced edges"
            ),
        }
    }
}

fn subset_total(x: &ScoreVector, subset: &VertexSubset) -> Rational {
    subset.iter().map(|v| x.entry(v).clone()).sum()
}

fn check_dimensions(g: &Graph, x: &ScoreVector) -> Result<(), Error> {
    if x.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            got: x.len(),
            expected: g.vertex_count(),
        });
    }
    Ok(())
}

fn check_total(g: &Graph, x: &ScoreVector) -> Option<FeasibilityVerdict> {
    let m = g.edge_count() as u64;
    let actual = x.sum();
    if actual != rational::from_integer(m) {
        return Some(FeasibilityVerdict::SumMismatch {
            actual,
            expected: m,
        });
    }
    None
}

/// Exhaustive decider: scans all vertex subsets in a deterministic order
/// (by size, then lexicographically) and reports the first violation.
pub fn check_subset(g: &Graph, x: &ScoreVector) -> Result<FeasibilityVerdict, Error> {
    check_subset_with_limit(g, x, DEFAULT_SUBSET_LIMIT)
}

/// [`check_subset`] with an explicit vertex limit.
pub fn check_subset_with_limit(
    g: &Graph,
    x: &ScoreVector,
    limit: usize,
) -> Result<FeasibilityVerdict, Error> {
    check_dimensions(g, x)?;
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::SubsetCheckTooLarge { n, limit });
    }
    if let Some(verdict) = check_total(g, x) {
        return Ok(verdict);
    }
    for size in 0..=n {
        for members in (1..=n).combinations(size) {
            let subset = VertexSubset::new(members);
            let subset_sum = subset_total(x, &subset);
            let phi = induced_edge_count(g, &subset)?;
            if subset_sum < rational::from_integer(phi) {
                return Ok(FeasibilityVerdict::SubsetViolation {
                    subset,
                    subset_sum,
                    phi,
                });
            }
        }
    }
    Ok(FeasibilityVerdict::Feasible)
}

/// Max-flow decider: feasible iff the transportation network from the
/// source through edge nodes to the sink saturates. On failure the team
/// vertices on the source side of the residual cut form a violating
/// subset. Same verdict kind as [`check_subset`] on every input.
pub fn check_flow(g: &Graph, x: &ScoreVector) -> Result<FeasibilityVerdict, Error> {
    check_dimensions(g, x)?;
    if let Some(verdict) = check_total(g, x) {
        return Ok(verdict);
    }
    if let Some(verdict) = screen_negative(x) {
        return Ok(verdict);
    }
    let solution = flow::solve_transport(g, x);
    if solution.saturated {
        return Ok(FeasibilityVerdict::Feasible);
    }
    cut_witness(g, x, solution.source_side_vertices)
}

/// Negative entries violate the singleton inequality directly:
/// `x_i < 0 = phi({i})`.
pub(crate) fn screen_negative(x: &ScoreVector) -> Option<FeasibilityVerdict> {
    for (idx, value) in x.entries().iter().enumerate() {
        if value < &Rational::zero() {
            return Some(FeasibilityVerdict::SubsetViolation {
                subset: VertexSubset::new([idx + 1]),
                subset_sum: value.clone(),
                phi: 0,
            });
        }
    }
    None
}

/// Packages a min-cut subset as a witness. Every witness must recompute
/// to a genuine violation, so the subset is verified here; on failure
/// (unreachable by max-flow/min-cut) the exhaustive scan takes over.
fn cut_witness(
    g: &Graph,
    x: &ScoreVector,
    vertices: Vec<usize>,
) -> Result<FeasibilityVerdict, Error> {
    let subset = VertexSubset::new(vertices);
    let subset_sum = subset_total(x, &subset);
    let phi = induced_edge_count(g, &subset)?;
    if subset_sum < rational::from_integer(phi) {
        return Ok(FeasibilityVerdict::SubsetViolation {
            subset,
            subset_sum,
            phi,
        });
    }
    debug_assert!(false, "min-cut subset failed verification");
    if g.vertex_count() <= DEFAULT_SUBSET_LIMIT {
        return check_subset(g, x);
    }
    Err(Error::Internal(
        "min-cut witness failed verification".to_string(),
    ))
}

/// Complete-graph shortcut: `x` is feasible on `K_n` iff it sums to
/// `n(n-1)/2` and the `k` smallest entries sum to at least `k(k-1)/2`
/// for every `k` (majorization by `(0, 1, ..., n-1)`).
pub fn check_complete_majorization(x: &ScoreVector) -> bool {
    let n = x.len() as u64;
    if x.sum() != rational::from_integer(n * n.saturating_sub(1) / 2) {
        return false;
    }
    let mut sorted: Vec<&Rational> = x.entries().iter().collect();
    sorted.sort();
    let mut partial = Rational::zero();
    for (k, value) in sorted.iter().enumerate() {
        partial += *value;
        let k = (k + 1) as u64;
        if partial < rational::from_integer(k * (k - 1) / 2) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn k3() -> Graph {
        Graph::complete(3).unwrap()
    }

    #[test]
    fn uniform_triangle_is_feasible_both_ways() {
        let x = ScoreVector::from_integers(&[1, 1, 1]);
        assert_eq!(
            check_subset(&k3(), &x).unwrap(),
            FeasibilityVerdict::Feasible
        );
        assert_eq!(check_flow(&k3(), &x).unwrap(), FeasibilityVerdict::Feasible);
    }

    #[test]
    fn starved_pair_witness_subset_checker() {
        let x = ScoreVector::from_integers(&[0, 0, 3]);
        let verdict = check_subset(&k3(), &x).unwrap();
        assert_eq!(
            verdict,
            FeasibilityVerdict::SubsetViolation {
                subset: VertexSubset::new([1, 2]),
                subset_sum: Rational::zero(),
                phi: 1,
            }
        );
        assert!(verdict.verify(&k3(), &x));
    }

    #[test]
    fn starved_pair_witness_flow_checker() {
        let x = ScoreVector::from_integers(&[0, 0, 3]);
        let verdict = check_flow(&k3(), &x).unwrap();
        // The flow witness must verify; for this instance the residual cut
        // is in fact the same starved pair.
        assert!(verdict.verify(&k3(), &x));
        assert_eq!(
            verdict,
            FeasibilityVerdict::SubsetViolation {
                subset: VertexSubset::new([1, 2]),
                subset_sum: Rational::zero(),
                phi: 1,
            }
        );
    }

    #[test]
    fn fractional_path_is_feasible() {
        let p3 = Graph::path(3).unwrap();
        let x = ScoreVector::new(vec![ratio(1, 2), ratio(1, 1), ratio(1, 2)]);
        assert_eq!(check_subset(&p3, &x).unwrap(), FeasibilityVerdict::Feasible);
        assert_eq!(check_flow(&p3, &x).unwrap(), FeasibilityVerdict::Feasible);
    }

    #[test]
    fn sum_mismatch_reported_first() {
        let x = ScoreVector::new(vec![ratio(1, 1), ratio(1, 1), ratio(3, 2)]);
        let expected = FeasibilityVerdict::SumMismatch {
            actual: ratio(7, 2),
            expected: 3,
        };
        assert_eq!(check_subset(&k3(), &x).unwrap(), expected);
        assert_eq!(check_flow(&k3(), &x).unwrap(), expected);
        assert!(expected.verify(&k3(), &x));
    }

    #[test]
    fn star_center_wins_everything() {
        let star = Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        let x = ScoreVector::from_integers(&[3, 0, 0, 0]);
        assert_eq!(check_flow(&star, &x).unwrap(), FeasibilityVerdict::Feasible);
        assert_eq!(
            check_subset(&star, &x).unwrap(),
            FeasibilityVerdict::Feasible
        );
    }

    #[test]
    fn negative_entry_is_a_singleton_violation() {
        let x = ScoreVector::new(vec![ratio(-1, 1), ratio(2, 1), ratio(2, 1)]);
        let expected = FeasibilityVerdict::SubsetViolation {
            subset: VertexSubset::new([1]),
            subset_sum: ratio(-1, 1),
            phi: 0,
        };
        assert_eq!(check_subset(&k3(), &x).unwrap(), expected);
        assert_eq!(check_flow(&k3(), &x).unwrap(), expected);
        assert!(expected.verify(&k3(), &x));
    }

    #[test]
    fn subset_limit_directs_to_flow() {
        let g = Graph::new(21, [(1, 2)]).unwrap();
        let x = ScoreVector::from_integers(&[0; 21]);
        let err = check_subset(&g, &x).unwrap_err();
        assert_eq!(err, Error::SubsetCheckTooLarge { n: 21, limit: 20 });
        assert!(err.to_string().contains("check_flow"));
        // The flow checker has no such limit.
        let mut scores = vec![0u64; 21];
        scores[0] = 1;
        assert!(check_flow(&g, &ScoreVector::from_integers(&scores))
            .unwrap()
            .is_feasible());
    }

    #[test]
    fn majorization_examples() {
        assert!(check_complete_majorization(&ScoreVector::from_integers(&[
            0, 1, 2
        ])));
        assert!(check_complete_majorization(&ScoreVector::from_integers(&[
            1, 1, 1
        ])));
        assert!(!check_complete_majorization(&ScoreVector::new(vec![
            Rational::zero(),
            ratio(1, 2),
            ratio(5, 2),
        ])));
        // Wrong total.
        assert!(!check_complete_majorization(&ScoreVector::from_integers(
            &[1, 1, 2]
        )));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let x = ScoreVector::from_integers(&[1, 1]);
        assert!(matches!(
            check_subset(&k3(), &x),
            Err(Error::DimensionMismatch { got: 2, expected: 3 })
        ));
        assert!(matches!(
            check_flow(&k3(), &x),
            Err(Error::DimensionMismatch { got: 2, expected: 3 })
        ));
    }
}
