//! JSON wire formats.
//!
//! Input is lenient where it is safe (edges in any order, probabilities
//! as `"p/q"` strings, exact decimals, or plain integers) and strict
//! where exactness demands it (JSON floats are rejected; write `"3/10"`
//! or `"0.3"` as a string). Output is canonical: objects with sorted
//! keys, set-like arrays sorted, rationals printed in lowest terms, so
//! identical inputs always produce byte-identical JSON.
//!
//! Schemas:
//! - graph: `{"n": 3, "edges": [[1,2],[1,3]]}` (1-based endpoints)
//! - score vector: `["1/2", 1, "3/2"]`
//! - random tournament: `{"graph": <graph>, "probs": ["1/2", "0", ...]}`
//! - tournament: `{"graph": <graph>, "winners": [2, 1, ...]}` (winning
//!   vertex per edge)
//!
//! Per-edge arrays align with the graph's canonical edge list; when input
//! edges arrive unsorted they are canonicalized and the per-edge data is
//! permuted along with them.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::feasibility::FeasibilityVerdict;
use crate::graph::Graph;
use crate::rational::{parse_rational, Rational};
use crate::realization::RealizationResult;
use crate::tournament::{RandomTournament, ScoreVector, Tournament, Winner};

#[derive(Deserialize)]
struct GraphWire {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RandomTournamentWire {
    graph: GraphWire,
    probs: Vec<Value>,
}

#[derive(Deserialize)]
struct TournamentWire {
    graph: GraphWire,
    winners: Vec<usize>,
}

fn json_error(err: serde_json::Error) -> Error {
    Error::Json(err.to_string())
}

pub fn parse_graph(text: &str) -> Result<Graph, Error> {
    let wire: GraphWire = serde_json::from_str(text).map_err(json_error)?;
    Graph::new(wire.n, wire.edges)
}

/// Parses one rational entry: a string (`"1/2"`, `"0.3"`, `"2"`) or a
/// JSON integer. Floats are rejected to keep the pipeline exact.
pub fn rational_from_value(value: &Value) -> Result<Rational, Error> {
    match value {
        Value::String(s) => parse_rational(s),
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = num.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(Error::Json(format!(
                    "non-exact numeric entry {num}; write fractions as strings like \"1/2\""
                )))
            }
        }
        other => Err(Error::Json(format!(
            "expected a rational entry, got {other}"
        ))),
    }
}

pub fn score_vector_from_value(value: &Value) -> Result<ScoreVector, Error> {
    let entries = value
        .as_array()
        .ok_or_else(|| Error::Json("expected a JSON array of scores".to_string()))?;
    entries
        .iter()
        .map(rational_from_value)
        .collect::<Result<Vec<_>, _>>()
        .map(ScoreVector::new)
}

pub fn parse_score_vector(text: &str) -> Result<ScoreVector, Error> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    score_vector_from_value(&value)
}

pub fn parse_random_tournament(text: &str) -> Result<RandomTournament, Error> {
    let wire: RandomTournamentWire = serde_json::from_str(text).map_err(json_error)?;
    let (graph, perm) = Graph::new_with_permutation(wire.graph.n, wire.graph.edges)?;
    if wire.probs.len() != graph.edge_count() {
        return Err(Error::DimensionMismatch {
            got: wire.probs.len(),
            expected: graph.edge_count(),
        });
    }
    let probs = perm
        .iter()
        .map(|&original| rational_from_value(&wire.probs[original]))
        .collect::<Result<Vec<_>, _>>()?;
    RandomTournament::new(graph, probs)
}

pub fn parse_tournament(text: &str) -> Result<Tournament, Error> {
    let wire: TournamentWire = serde_json::from_str(text).map_err(json_error)?;
    let (graph, perm) = Graph::new_with_permutation(wire.graph.n, wire.graph.edges)?;
    if wire.winners.len() != graph.edge_count() {
        return Err(Error::WinnerCountMismatch {
            got: wire.winners.len(),
            expected: graph.edge_count(),
        });
    }
    let winners = perm
        .iter()
        .zip(graph.edges())
        .map(|(&original, &(i, j))| {
            let w = wire.winners[original];
            if w == i {
                Ok(Winner::Lower)
            } else if w == j {
                Ok(Winner::Upper)
            } else {
                Err(Error::WinnerNotEndpoint { winner: w, i, j })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Tournament::new(graph, winners)
}

pub fn graph_to_value(g: &Graph) -> Value {
    json!({
        "n": g.vertex_count(),
        "edges": g.edges().iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
    })
}

pub fn score_vector_to_value(x: &ScoreVector) -> Value {
    Value::Array(
        x.entries()
            .iter()
            .map(|r| Value::String(r.to_string()))
            .collect(),
    )
}

pub fn random_tournament_to_value(rt: &RandomTournament) -> Value {
    json!({
        "graph": graph_to_value(rt.graph()),
        "probs": rt.probs().iter().map(|p| Value::String(p.to_string())).collect::<Vec<_>>(),
    })
}

pub fn tournament_to_value(t: &Tournament) -> Value {
    json!({
        "graph": graph_to_value(t.graph()),
        "winners": (0..t.graph().edge_count())
            .map(|e| t.winning_vertex(e))
            .collect::<Vec<_>>(),
    })
}

pub fn verdict_to_value(verdict: &FeasibilityVerdict) -> Value {
    match verdict {
        FeasibilityVerdict::Feasible => json!({ "feasible": true }),
        FeasibilityVerdict::SumMismatch { actual, expected } => json!({
            "feasible": false,
            "witness": {
                "kind": "sum",
                "actual": actual.to_string(),
                "expected": expected,
            },
        }),
        FeasibilityVerdict::SubsetViolation {
            subset,
            subset_sum,
            phi,
        } => json!({
            "feasible": false,
            "witness": {
                "kind": "subset",
                "A": subset.members().iter().collect::<Vec<_>>(),
                "sum": subset_sum.to_string(),
                "phi": phi,
            },
        }),
    }
}

/// Edge indices rendered as sorted `[i, j]` endpoint pairs.
fn edge_pairs(g: &Graph, indices: impl IntoIterator<Item = usize>) -> Vec<Value> {
    indices
        .into_iter()
        .map(|e| {
            let (i, j) = g.edges()[e];
            json!([i, j])
        })
        .collect()
}

pub fn realization_to_value(result: &RealizationResult) -> Value {
    let g = result.tournament.graph();
    let partition = result.partition();
    json!({
        "probs": result
            .tournament
            .probs()
            .iter()
            .map(|p| Value::String(p.to_string()))
            .collect::<Vec<_>>(),
        "fractional_support": edge_pairs(g, result.fractional_support.iter().copied()),
        "partition": {
            "A": edge_pairs(g, partition.zero),
            "B": edge_pairs(g, partition.one),
            "F": edge_pairs(g, partition.fractional),
        },
    })
}

/// Canonical text form: compact JSON with sorted keys (the default map in
/// this configuration is ordered) plus a trailing newline.
pub fn to_canonical_string(value: &Value) -> String {
    let mut out = value.to_string();
    out.push('\n');
    out
}
