//! Brute-force ground truth at desk scale.
//!
//! Everything here exists to cross-validate the deciders and the
//! realization pipeline: exhaustive orientation enumeration, direct
//! lattice-point enumeration of the feasible set, and seeded sampling of
//! feasible vectors by pushing a random cube point through the mean-score
//! map.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::feasibility::{check_subset, FeasibilityVerdict};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::tournament::{RandomTournament, ScoreVector, Tournament, Winner};

/// Edge budget for exhaustive orientation enumeration (2^m orientations).
pub const DEFAULT_ORIENTATION_LIMIT: usize = 20;

/// Candidate budget for lattice-point enumeration
/// (product of `degree + 1` over all vertices).
pub const DEFAULT_LATTICE_BUDGET: u128 = 10_000_000;

/// Probability denominator for [`sample_zonotope_point`]: probabilities
/// are drawn as `k / 64` with `k` uniform in `0..=64`.
pub const DEFAULT_SAMPLE_DENOMINATOR: u64 = 64;

/// SplitMix64 pseudo-random generator.
///
/// Fixed here (rather than taken from a crate) so that seeded test
/// corpora are reproducible bit-for-bit from the constants alone, in any
/// language: the state advances by `0x9E3779B97F4A7C15` per step, and the
/// output mix is `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
/// z *= 0x94D049BB133111EB; z ^= z >> 31` (all arithmetic mod 2^64).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..bound` by modulo reduction (the tiny bias
    /// is irrelevant for test-corpus generation and keeps the generator
    /// trivially portable).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// The distinct integer score sequences of all tournaments on a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreSequenceSet {
    pub graph: Graph,
    pub vectors: BTreeSet<Vec<u64>>,
}

impl ScoreSequenceSet {
    pub fn contains(&self, s: &ScoreVector) -> bool {
        s.to_integers()
            .map(|v| self.vectors.contains(&v))
            .unwrap_or(false)
    }

    pub fn score_vectors(&self) -> impl Iterator<Item = ScoreVector> + '_ {
        self.vectors.iter().map(|v| ScoreVector::from_integers(v))
    }
}

/// Enumerates all `2^m` orientations and collects the distinct score
/// sequences. Uses the default edge limit.
pub fn enumerate_score_sequences(g: &Graph) -> Result<ScoreSequenceSet, Error> {
    enumerate_score_sequences_with_limit(g, DEFAULT_ORIENTATION_LIMIT)
}

/// [`enumerate_score_sequences`] with an explicit edge limit.
pub fn enumerate_score_sequences_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<ScoreSequenceSet, Error> {
    let m = g.edge_count();
    if m > limit {
        return Err(Error::EnumerationTooLarge { m, limit });
    }
    let mut vectors = BTreeSet::new();
    for mask in 0u64..(1u64 << m) {
        let mut wins = vec![0u64; g.vertex_count()];
        for (e, &(i, j)) in g.edges().iter().enumerate() {
            let winner = if mask >> e & 1 == 1 { i } else { j };
            wins[winner - 1] += 1;
        }
        vectors.insert(wins);
    }
    Ok(ScoreSequenceSet {
        graph: g.clone(),
        vectors,
    })
}

/// Enumerates the integer vectors `0 <= x_i <= degree(i)` with total `m`
/// that pass [`check_subset`]. Uses the default candidate budget.
pub fn enumerate_lattice_points(g: &Graph) -> Result<BTreeSet<Vec<u64>>, Error> {
    enumerate_lattice_points_with_budget(g, DEFAULT_LATTICE_BUDGET)
}

/// [`enumerate_lattice_points`] with an explicit candidate budget.
pub fn enumerate_lattice_points_with_budget(
    g: &Graph,
    budget: u128,
) -> Result<BTreeSet<Vec<u64>>, Error> {
    let n = g.vertex_count();
    let required = (1..=n)
        .map(|v| g.degree(v) as u128 + 1)
        .try_fold(1u128, u128::checked_mul)
        .unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::LatticeBudgetExceeded { required, budget });
    }

    let degrees: Vec<u64> = (1..=n).map(|v| g.degree(v) as u64).collect();
    // Suffix degree sums bound how much the remaining coordinates can carry.
    let mut suffix = vec![0u64; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1] + degrees[v];
    }

    let mut points = BTreeSet::new();
    let mut current = vec![0u64; n];
    fill_coordinates(
        g,
        &degrees,
        &suffix,
        0,
        g.edge_count() as u64,
        &mut current,
        &mut points,
    )?;
    Ok(points)
}

fn fill_coordinates(
    g: &Graph,
    degrees: &[u64],
    suffix: &[u64],
    index: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    points: &mut BTreeSet<Vec<u64>>,
) -> Result<(), Error> {
    if index == degrees.len() {
        if remaining == 0 {
            let x = ScoreVector::from_integers(current);
            if check_subset(g, &x)? == FeasibilityVerdict::Feasible {
                points.insert(current.clone());
            }
        }
        return Ok(());
    }
    let tail = suffix[index + 1];
    let low = remaining.saturating_sub(tail);
    let high = degrees[index].min(remaining);
    for value in low..=high {
        current[index] = value;
        fill_coordinates(g, degrees, suffix, index + 1, remaining - value, current, points)?;
        current[index] = 0;
    }
    Ok(())
}

/// Projects a seeded random cube point through the mean-score map: every
/// output is feasible by construction. Probabilities are `k / d` with `k`
/// uniform in `0..=d` for the default denominator `d = 64`.
pub fn sample_zonotope_point(g: &Graph, seed: u64) -> ScoreVector {
    sample_zonotope_point_with_denominator(g, seed, DEFAULT_SAMPLE_DENOMINATOR)
}

/// [`sample_zonotope_point`] with an explicit probability denominator.
pub fn sample_zonotope_point_with_denominator(
    g: &Graph,
    seed: u64,
    denominator: u64,
) -> ScoreVector {
    sample_random_tournament(g, seed, denominator).mean_score_sequence()
}

/// The underlying seeded random tournament behind [`sample_zonotope_point`].
///
/// Panics when `denominator` is 0.
pub fn sample_random_tournament(g: &Graph, seed: u64, denominator: u64) -> RandomTournament {
    assert!(denominator >= 1, "sampling denominator must be at least 1");
    let mut rng = SplitMix64::new(seed);
    let probs = (0..g.edge_count())
        .map(|_| {
            let k = rng.below(denominator + 1);
            Rational::new(k.into(), denominator.into())
        })
        .collect();
    RandomTournament::new(g.clone(), probs).expect("sampled probabilities lie in [0, 1]")
}

/// All `2^m` orientations as tournaments; test-scale helper behind the
/// same edge limit as the sequence enumeration.
pub fn enumerate_tournaments(g: &Graph, limit: usize) -> Result<Vec<Tournament>, Error> {
    let m = g.edge_count();
    if m > limit {
        return Err(Error::EnumerationTooLarge { m, limit });
    }
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0u64..(1u64 << m) {
        let winners = (0..m)
            .map(|e| {
                if mask >> e & 1 == 1 {
                    Winner::Lower
                } else {
                    Winner::Upper
                }
            })
            .collect();
        out.push(Tournament::new(g.clone(), winners)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn k3() -> Graph {
        Graph::complete(3).unwrap()
    }

    #[test]
    fn splitmix_matches_reference_stream() {
        // Reference values for seeds 0 and 42, computed independently from
        // the published constants.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
        let mut rng = SplitMix64::new(42);
        assert_eq!(rng.next_u64(), 0xBDD7_3226_2FEB_6E95);
    }

    #[test]
    fn triangle_score_sequences() {
        let set = enumerate_score_sequences(&k3()).unwrap();
        let expected: BTreeSet<Vec<u64>> = [
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
            vec![1, 1, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(set.vectors, expected);
    }

    #[test]
    fn single_edge_score_sequences() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        let set = enumerate_score_sequences(&g).unwrap();
        let expected: BTreeSet<Vec<u64>> = [vec![1, 0], vec![0, 1]].into_iter().collect();
        assert_eq!(set.vectors, expected);
    }

    #[test]
    fn path_score_sequences() {
        let set = enumerate_score_sequences(&Graph::path(3).unwrap()).unwrap();
        let expected: BTreeSet<Vec<u64>> = [
            vec![1, 1, 0],
            vec![0, 2, 0],
            vec![1, 0, 1],
            vec![0, 1, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(set.vectors, expected);
    }

    #[test]
    fn lattice_points_match_sequences_on_small_complete_graphs() {
        for n in 2..=4 {
            let g = Graph::complete(n).unwrap();
            let sequences = enumerate_score_sequences(&g).unwrap();
            let lattice = enumerate_lattice_points(&g).unwrap();
            assert_eq!(sequences.vectors, lattice, "K_{n}");
        }
        assert_eq!(enumerate_lattice_points(&k3()).unwrap().len(), 7);
        let single = Graph::new(2, [(1, 2)]).unwrap();
        assert_eq!(enumerate_lattice_points(&single).unwrap().len(), 2);
    }

    #[test]
    fn sampling_is_reproducible_and_feasible() {
        let g = Graph::complete(4).unwrap();
        for seed in [0, 1, 7, 99] {
            let a = sample_zonotope_point(&g, seed);
            let b = sample_zonotope_point(&g, seed);
            assert_eq!(a, b);
            assert!(check_subset(&g, &a).unwrap().is_feasible());
        }
        assert_ne!(
            sample_zonotope_point(&g, 1),
            sample_zonotope_point(&g, 2)
        );
    }

    #[test]
    fn single_edge_sample_is_complementary() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        // Seed 85 is the first whose draw is exactly 32/64 = 1/2.
        let x = sample_zonotope_point(&g, 85);
        assert_eq!(x.entries(), &[ratio(1, 2), ratio(1, 2)]);
        for seed in 0..20 {
            let x = sample_zonotope_point(&g, seed);
            assert_eq!(x.entry(1) + x.entry(2), ratio(1, 1));
        }
    }

    #[test]
    fn enumeration_limits_are_enforced() {
        let g = Graph::complete(7).unwrap(); // m = 21
        assert_eq!(
            enumerate_score_sequences(&g).unwrap_err(),
            Error::EnumerationTooLarge { m: 21, limit: 20 }
        );
        assert!(matches!(
            enumerate_lattice_points_with_budget(&k3(), 5).unwrap_err(),
            Error::LatticeBudgetExceeded { required: 27, budget: 5 }
        ));
    }
}
