//! Constructing tournaments that realize a given (mean) score sequence.
//!
//! [`fractional_realization`] reads a probability per edge off a saturated
//! transportation flow, giving *some* random tournament with the requested
//! mean. [`forest_reduce`] then cancels cycles in the fractional support
//! until it is a forest, without moving the mean or disturbing edges that
//! are already deterministic. For integral inputs the reduced support is
//! necessarily empty (a leaf of a fractional forest would force a
//! fractional score on its endpoint), so [`realize_integral`] always
//! returns a deterministic tournament.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::feasibility;
use crate::flow;
use crate::graph::{find_cycle_in_edge_subset, Graph};
use crate::rational::Rational;
use crate::tournament::{RandomTournament, ScoreVector, Tournament};

/// A random tournament realizing a requested mean, with its fractional
/// support (the edges whose probability is strictly between 0 and 1)
/// guaranteed to be a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationResult {
    pub tournament: RandomTournament,
    pub fractional_support: BTreeSet<usize>,
}

impl RealizationResult {
    fn from_tournament(tournament: RandomTournament) -> Self {
        let fractional_support = fractional_support(tournament.probs());
        Self {
            tournament,
            fractional_support,
        }
    }

    /// Splits the edge set by probability: `zero` edges are always won by
    /// the upper endpoint, `one` edges by the lower endpoint, and
    /// `fractional` edges stay random.
    pub fn partition(&self) -> EdgePartition {
        let mut partition = EdgePartition::default();
        for (e, p) in self.tournament.probs().iter().enumerate() {
            if p.is_zero() {
                partition.zero.push(e);
            } else if p.is_one() {
                partition.one.push(e);
            } else {
                partition.fractional.push(e);
            }
        }
        partition
    }
}

/// Edge indices grouped by their realized probability.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgePartition {
    pub zero: Vec<usize>,
    pub one: Vec<usize>,
    pub fractional: Vec<usize>,
}

fn fractional_support(probs: &[Rational]) -> BTreeSet<usize> {
    probs
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero() && !p.is_one())
        .map(|(e, _)| e)
        .collect()
}

/// Produces *a* random tournament with mean score sequence `x` by solving
/// the transportation problem and reading each edge's probability off the
/// flow on its lower-endpoint arc. Fails with the feasibility witness when
/// `x` is not a mean score sequence.
pub fn fractional_realization(g: &Graph, x: &ScoreVector) -> Result<RandomTournament, Error> {
    let verdict = feasibility::check_flow(g, x)?;
    if !verdict.is_feasible() {
        return Err(Error::Infeasible(verdict));
    }
    let solution = flow::solve_transport(g, x);
    debug_assert!(solution.saturated, "feasible instance must saturate");
    let rt = RandomTournament::new(g.clone(), solution.lower_probs)?;
    debug_assert_eq!(&rt.mean_score_sequence(), x);
    Ok(rt)
}

/// Cancels cycles in the fractional support until it is a forest, keeping
/// the mean score sequence exactly fixed.
///
/// Each round finds the deterministic cycle in the current support and
/// shifts probabilities around it with alternating signs (a forward step
/// adds to the edge's probability, a backward step subtracts), which moves
/// no vertex mean. The shift is the largest that keeps all probabilities
/// in `[0, 1]`, so at least one edge leaves the support per round. Of the
/// two shift directions, the one that drives the cycle's lowest-indexed
/// edge to a boundary wins; ties (and rounds where neither direction pins
/// that edge) resolve toward pushing it to 0.
pub fn forest_reduce(rt: &RandomTournament) -> RealizationResult {
    let g = rt.graph();
    let mut probs = rt.probs().to_vec();
    let mean_before = rt.mean_score_sequence();

    let mut rounds = 0usize;
    loop {
        let support = fractional_support(&probs);
        let cycle = find_cycle_in_edge_subset(g, &support)
            .expect("support indices come from the probability list");
        let Some(cycle) = cycle else { break };

        rounds += 1;
        assert!(
            rounds <= g.edge_count(),
            "cycle cancellation must terminate within {} rounds",
            g.edge_count()
        );

        // Headroom of each step in the traversal direction (forward edges
        // rise toward 1, backward edges fall toward 0) and in the reverse.
        let headroom_with = |e: usize, forward: bool| -> Rational {
            if forward {
                Rational::one() - &probs[e]
            } else {
                probs[e].clone()
            }
        };
        let delta_traversal = cycle
            .iter()
            .map(|s| headroom_with(s.edge, s.forward()))
            .min()
            .expect("cycles are nonempty");
        let delta_reverse = cycle
            .iter()
            .map(|s| headroom_with(s.edge, !s.forward()))
            .min()
            .expect("cycles are nonempty");

        let lowest = cycle
            .iter()
            .min_by_key(|s| s.edge)
            .expect("cycles are nonempty");
        let pins_traversal = headroom_with(lowest.edge, lowest.forward()) == delta_traversal;
        let pins_reverse = headroom_with(lowest.edge, !lowest.forward()) == delta_reverse;
        // The reverse direction pushes a forward-traversed edge down, so
        // "toward zero" for the lowest edge means: reverse if it is
        // traversed forward, traversal otherwise.
        let zero_is_traversal = !lowest.forward();
        let use_traversal = match (pins_traversal, pins_reverse) {
            (true, false) => true,
            (false, true) => false,
            _ => zero_is_traversal,
        };
        let delta = if use_traversal {
            delta_traversal
        } else {
            delta_reverse
        };
        debug_assert!(delta > Rational::zero());

        for step in &cycle {
            if step.forward() == use_traversal {
                probs[step.edge] += &delta;
            } else {
                probs[step.edge] -= &delta;
            }
            debug_assert!(
                probs[step.edge] >= Rational::zero() && probs[step.edge] <= Rational::one()
            );
        }

        debug_assert_eq!(
            RandomTournament::new(g.clone(), probs.clone())
                .expect("shift keeps probabilities in range")
                .mean_score_sequence(),
            mean_before,
            "cycle cancellation must not move the mean"
        );
    }

    let reduced = RandomTournament::new(g.clone(), probs)
        .expect("reduction keeps probabilities in range");
    debug_assert_eq!(reduced.mean_score_sequence(), mean_before);
    RealizationResult::from_tournament(reduced)
}

/// Realizes `x` as a random tournament whose fractional support is a
/// forest: [`fractional_realization`] followed by [`forest_reduce`].
pub fn realize(g: &Graph, x: &ScoreVector) -> Result<RealizationResult, Error> {
    let rt = fractional_realization(g, x)?;
    let result = forest_reduce(&rt);
    debug_assert_eq!(&result.tournament.mean_score_sequence(), x);
    Ok(result)
}

/// Realizes an integral score sequence as a deterministic tournament.
pub fn realize_integral(g: &Graph, s: &ScoreVector) -> Result<Tournament, Error> {
    for (idx, value) in s.entries().iter().enumerate() {
        if !crate::rational::is_integer(value) {
            return Err(Error::NonIntegralScore {
                index: idx + 1,
                value: value.to_string(),
            });
        }
    }
    let result = realize(g, s)?;
    if !result.fractional_support.is_empty() {
        // A leaf of a nonempty fractional forest would have a fractional
        // mean score, contradicting integrality; reaching this branch is
        // a bug in the reduction.
        return Err(Error::Internal(format!(
            "integral input left fractional edges {:?}",
            result.fractional_support
        )));
    }
    let tournament = result.tournament.as_deterministic()?;
    debug_assert_eq!(&tournament.score_sequence(), s);
    Ok(tournament)
}
