//! Deterministic and random tournaments and their score sequences.
//!
//! A deterministic tournament picks a winner per edge. A random tournament
//! assigns each edge `(i, j)` (with `i < j`) the exact rational probability
//! `p_ij` that the lower endpoint `i` wins; the upper endpoint wins with
//! probability `1 - p_ij`, which is derived and never stored. Both carry
//! their per-edge data aligned with the graph's canonical edge list.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::graph::Graph;
use crate::rational::{self, Rational};

/// Winner of a single match, named relative to the edge's endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Winner {
    /// The lower-numbered endpoint wins.
    Lower,
    /// The higher-numbered endpoint wins.
    Upper,
}

/// An orientation of every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tournament {
    graph: Graph,
    winners: Vec<Winner>,
}

impl Tournament {
    pub fn new(graph: Graph, winners: Vec<Winner>) -> Result<Self, Error> {
        if winners.len() != graph.edge_count() {
            return Err(Error::WinnerCountMismatch {
                got: winners.len(),
                expected: graph.edge_count(),
            });
        }
        Ok(Self { graph, winners })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn winners(&self) -> &[Winner] {
        &self.winners
    }

    /// The winning vertex of edge `e`.
    pub fn winning_vertex(&self, e: usize) -> usize {
        let (i, j) = self.graph.edges()[e];
        match self.winners[e] {
            Winner::Lower => i,
            Winner::Upper => j,
        }
    }

    /// Number of wins per vertex. Entries are nonnegative integers summing
    /// to the edge count.
    pub fn score_sequence(&self) -> ScoreVector {
        let mut wins = vec![0u64; self.graph.vertex_count()];
        for e in 0..self.graph.edge_count() {
            wins[self.winning_vertex(e) - 1] += 1;
        }
        ScoreVector::from_integers(&wins)
    }

    /// The degenerate random tournament with the same outcomes
    /// (`p = 1` where the lower endpoint wins, `p = 0` otherwise).
    pub fn to_random(&self) -> RandomTournament {
        let probs = self
            .winners
            .iter()
            .map(|w| match w {
                Winner::Lower => Rational::one(),
                Winner::Upper => Rational::zero(),
            })
            .collect();
        RandomTournament::new(self.graph.clone(), probs)
            .expect("0/1 probabilities are always valid")
    }
}

/// A per-edge win-probability assignment with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomTournament {
    graph: Graph,
    probs: Vec<Rational>,
}

impl RandomTournament {
    /// Validates `0 <= p <= 1` exactly for every edge and the alignment of
    /// `probs` with the canonical edge list.
    pub fn new(graph: Graph, probs: Vec<Rational>) -> Result<Self, Error> {
        if probs.len() != graph.edge_count() {
            return Err(Error::DimensionMismatch {
                got: probs.len(),
                expected: graph.edge_count(),
            });
        }
        for (e, p) in probs.iter().enumerate() {
            if p < &Rational::zero() || p > &Rational::one() {
                let (i, j) = graph.edges()[e];
                return Err(Error::ProbabilityOutOfRange {
                    i,
                    j,
                    p: p.to_string(),
                });
            }
        }
        Ok(Self { graph, probs })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    /// Expected wins per vertex: for each edge `(i, j)` with probability
    /// `p`, vertex `i` gains `p` and vertex `j` gains `1 - p`. Entries sum
    /// to the edge count exactly.
    pub fn mean_score_sequence(&self) -> ScoreVector {
        let mut x = vec![Rational::zero(); self.graph.vertex_count()];
        for (e, &(i, j)) in self.graph.edges().iter().enumerate() {
            let p = &self.probs[e];
            x[i - 1] += p;
            x[j - 1] += Rational::one() - p;
        }
        let x = ScoreVector::new(x);
        debug_assert_eq!(
            x.sum(),
            rational::from_integer(self.graph.edge_count() as u64),
            "mean scores must sum to the edge count"
        );
        x
    }

    /// Converts to a deterministic tournament; every probability must be
    /// exactly 0 or 1.
    pub fn as_deterministic(&self) -> Result<Tournament, Error> {
        let mut winners = Vec::with_capacity(self.probs.len());
        for (e, p) in self.probs.iter().enumerate() {
            if p.is_one() {
                winners.push(Winner::Lower);
            } else if p.is_zero() {
                winners.push(Winner::Upper);
            } else {
                let (i, j) = self.graph.edges()[e];
                return Err(Error::NotDeterministic {
                    i,
                    j,
                    p: p.to_string(),
                });
            }
        }
        Tournament::new(self.graph.clone(), winners)
    }
}

/// A length-`n` vector of exact rationals: a score sequence or a mean
/// score sequence. Entries are 0-based internally; vertex `v` maps to
/// entry `v - 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScoreVector(Vec<Rational>);

impl ScoreVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self(entries)
    }

    pub fn from_integers(values: &[u64]) -> Self {
        Self(values.iter().map(|&v| rational::from_integer(v)).collect())
    }

    /// Parses a comma-separated list such as `"1/2,1,3/2"` or `"0.5, 1, 1.5"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        text.split(',')
            .map(rational::parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    /// Entry for 1-based vertex `v`.
    pub fn entry(&self, v: usize) -> &Rational {
        &self.0[v - 1]
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(rational::is_integer)
    }

    /// Integer entries as `u64`, when the vector is integral and nonnegative.
    pub fn to_integers(&self) -> Option<Vec<u64>> {
        self.0
            .iter()
            .map(|r| {
                if rational::is_integer(r) {
                    u64::try_from(r.numer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }
}
