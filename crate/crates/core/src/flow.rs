//! Internal max-flow machinery for the transportation reformulation of
//! the membership test.
//!
//! The network for a graph `G` and candidate vector `x` is
//! `source -> one node per edge -> the edge's two endpoints -> sink`,
//! with unit capacity on the edge arcs and `x_i` on the arc from vertex
//! `i` to the sink. All capacities are scaled by the least common multiple
//! of the denominators of `x`, so the flow problem is integral and solved
//! exactly with big-integer arithmetic (Edmonds-Karp). BFS visits arcs in
//! insertion order, which fixes both the resulting flow and the residual
//! cut, making witnesses reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::graph::Graph;
use crate::rational::Rational;
use crate::tournament::ScoreVector;

struct Arc {
    to: usize,
    residual: BigInt,
}

/// Residual network with paired arcs: arc `2k` and `2k + 1` are reverses.
struct Network {
    arcs: Vec<Arc>,
    adjacency: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self {
            arcs: Vec::new(),
            adjacency: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, capacity: BigInt) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, residual: capacity });
        self.arcs.push(Arc {
            to: from,
            residual: BigInt::zero(),
        });
        self.adjacency[from].push(id);
        self.adjacency[to].push(id + 1);
        id
    }

    /// Flow already pushed through forward arc `id`.
    fn flow(&self, id: usize) -> &BigInt {
        &self.arcs[id ^ 1].residual
    }

    /// Edmonds-Karp: repeated shortest augmenting paths, deterministic arc
    /// order. Returns the max-flow value.
    fn max_flow(&mut self, source: usize, sink: usize) -> BigInt {
        let mut total = BigInt::zero();
        loop {
            let mut parent: Vec<Option<usize>> = vec![None; self.adjacency.len()];
            let mut queue = std::collections::VecDeque::from([source]);
            let mut seen = vec![false; self.adjacency.len()];
            seen[source] = true;
            'bfs: while let Some(u) = queue.pop_front() {
                for &arc in &self.adjacency[u] {
                    let v = self.arcs[arc].to;
                    if !seen[v] && self.arcs[arc].residual.is_positive() {
                        seen[v] = true;
                        parent[v] = Some(arc);
                        if v == sink {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !seen[sink] {
                return total;
            }
            // Bottleneck along the path, then augment.
            let mut bottleneck: Option<BigInt> = None;
            let mut v = sink;
            while let Some(arc) = parent[v] {
                let r = &self.arcs[arc].residual;
                bottleneck = Some(match bottleneck {
                    Some(b) if &b <= r => b,
                    _ => r.clone(),
                });
                v = self.arcs[arc ^ 1].to;
            }
            let bottleneck = bottleneck.expect("augmenting path is nonempty");
            let mut v = sink;
            while let Some(arc) = parent[v] {
                self.arcs[arc].residual -= &bottleneck;
                self.arcs[arc ^ 1].residual += &bottleneck;
                v = self.arcs[arc ^ 1].to;
            }
            total += bottleneck;
        }
    }

    /// Nodes reachable from `start` through positive-residual arcs, in a
    /// fixed BFS order.
    fn residual_reachable(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adjacency.len()];
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &arc in &self.adjacency[u] {
                let v = self.arcs[arc].to;
                if !seen[v] && self.arcs[arc].residual.is_positive() {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Result of running the transportation network for `(g, x)`.
pub(crate) struct TransportSolution {
    /// `true` when the max flow saturates the source (value `m`, scaled).
    pub saturated: bool,
    /// Per-edge probability for the lower endpoint, read off the arc
    /// `edge node -> lower endpoint`; only meaningful when saturated.
    pub lower_probs: Vec<Rational>,
    /// Team vertices on the source side of the residual cut; when not
    /// saturated this set `A` satisfies `sum_{i in A} x_i < phi(A)`.
    pub source_side_vertices: Vec<usize>,
}

/// Solves the transportation problem. Requires `x` nonnegative with
/// `sum(x) = m` (callers pre-screen); those conditions make all
/// capacities valid.
pub(crate) fn solve_transport(g: &Graph, x: &ScoreVector) -> TransportSolution {
    let n = g.vertex_count();
    let m = g.edge_count();

    // Scale away denominators for an integral flow problem.
    let scale = x
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));

    // Node layout: 0 = source, 1..=m edge nodes, m+1..=m+n vertices, last = sink.
    let source = 0;
    let edge_node = |e: usize| 1 + e;
    let vertex_node = |v: usize| m + v;
    let sink = m + n + 1;

    let mut net = Network::new(m + n + 2);
    let mut lower_arcs = Vec::with_capacity(m);
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        net.add_arc(source, edge_node(e), scale.clone());
        lower_arcs.push(net.add_arc(edge_node(e), vertex_node(i), scale.clone()));
        net.add_arc(edge_node(e), vertex_node(j), scale.clone());
    }
    for v in 1..=n {
        let capacity = (x.entry(v) * Rational::from_integer(scale.clone())).to_integer();
        net.add_arc(vertex_node(v), sink, capacity);
    }

    let value = net.max_flow(source, sink);
    let target = BigInt::from(m as u64) * &scale;
    if value == target {
        let lower_probs = lower_arcs
            .iter()
            .map(|&arc| Rational::new(net.flow(arc).clone(), scale.clone()))
            .collect();
        TransportSolution {
            saturated: true,
            lower_probs,
            source_side_vertices: Vec::new(),
        }
    } else {
        let reachable = net.residual_reachable(source);
        let source_side_vertices = (1..=n).filter(|&v| reachable[vertex_node(v)]).collect();
        TransportSolution {
            saturated: false,
            lower_probs: Vec::new(),
            source_side_vertices,
        }
    }
}
