//! Shared helpers for the integration suites.
#![allow(dead_code)] // each test target compiles its own copy

use scoreseq_core::{Graph, SplitMix64};

/// Deterministic family of random graphs: `count` graphs with
/// `2 <= n <= max_n` vertices and at most `max_m` edges, each potential
/// edge tossed with probability 1/2. Same seed, same family.
pub fn random_graph_family(seed: u64, count: usize, max_n: usize, max_m: usize) -> Vec<Graph> {
    let mut rng = SplitMix64::new(seed);
    let mut graphs = Vec::new();
    while graphs.len() < count {
        let n = 2 + rng.below(max_n as u64 - 1) as usize;
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.below(2) == 1 {
                    edges.push((i, j));
                }
            }
        }
        if edges.len() > max_m {
            continue;
        }
        graphs.push(Graph::new(n, edges).expect("generated edges are valid"));
    }
    graphs
}

/// All integer vectors in the degree box (`0 <= v_i <= degree(i)`) whose
/// entries sum to the edge count: the candidate grid for feasibility
/// filtering, with no feasibility check applied.
pub fn degree_box_candidates(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let degrees: Vec<u64> = (1..=n).map(|v| g.degree(v) as u64).collect();
    let mut out = Vec::new();
    let mut current = vec![0u64; n];
    fill(&degrees, 0, g.edge_count() as u64, &mut current, &mut out);
    out
}

fn fill(degrees: &[u64], idx: usize, remaining: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if idx == degrees.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let tail: u64 = degrees[idx + 1..].iter().sum();
    let low = remaining.saturating_sub(tail);
    let high = degrees[idx].min(remaining);
    for value in low..=high {
        current[idx] = value;
        fill(degrees, idx + 1, remaining - value, current, out);
    }
    current[idx] = 0;
}
