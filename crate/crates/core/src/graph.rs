//! Simple undirected graphs with a canonical ordered edge list.
//!
//! Vertices are 1-based in every public interface. Edges are stored as
//! pairs `(i, j)` with `i < j`, sorted lexicographically, so an edge index
//! has the same meaning everywhere: probabilities, winners, and flow arcs
//! all align with this list.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Edge budget for the exhaustive forest enumeration (2^m subsets visited
/// in the worst case).
pub const DEFAULT_FOREST_LIMIT: usize = 20;

/// A simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list given in any order. Edges are
    /// canonicalized to `i < j` and sorted; self-loops, duplicates, and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, Error> {
        Self::new_with_permutation(n, edges).map(|(g, _)| g)
    }

    /// Like [`Graph::new`], additionally returning the permutation that
    /// maps canonical edge positions back to input positions
    /// (`perm[k]` = input index of canonical edge `k`). Callers that carry
    /// per-edge data aligned with the input order use it to realign.
    pub fn new_with_permutation(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<(Self, Vec<usize>), Error> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut canonical: Vec<((usize, usize), usize)> = Vec::new();
        for (pos, (a, b)) in edges.into_iter().enumerate() {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            canonical.push(((a.min(b), a.max(b)), pos));
        }
        canonical.sort();
        for pair in canonical.windows(2) {
            if pair[0].0 == pair[1].0 {
                let (i, j) = pair[0].0;
                return Err(Error::DuplicateEdge(i, j));
            }
        }
        let mut degrees = vec![0usize; n + 1];
        for &((i, j), _) in &canonical {
            degrees[i] += 1;
            degrees[j] += 1;
        }
        let perm = canonical.iter().map(|&(_, pos)| pos).collect();
        let edges = canonical.into_iter().map(|(e, _)| e).collect();
        Ok((Self { n, edges, degrees }, perm))
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, Error> {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Self::new(n, edges)
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self, Error> {
        Self::new(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.degrees[vertex]
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    fn check_edge_indices<'a>(&self, subset: impl IntoIterator<Item = &'a usize>) -> Result<(), Error> {
        for &e in subset {
            if e >= self.edges.len() {
                return Err(Error::EdgeIndexOutOfRange {
                    index: e,
                    m: self.edges.len(),
                });
            }
        }
        Ok(())
    }
}

/// A set of vertices of some graph, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexSubset(BTreeSet<usize>);

impl VertexSubset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        Self(members.into_iter().collect())
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.0.contains(&vertex)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Number of edges with both endpoints in `subset` (the quantity `phi(A)`
/// from the membership conditions).
pub fn induced_edge_count(g: &Graph, subset: &VertexSubset) -> Result<u64, Error> {
    let mut member = vec![false; g.vertex_count() + 1];
    for v in subset.iter() {
        if v < 1 || v > g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.vertex_count(),
            });
        }
        member[v] = true;
    }
    Ok(g.edges()
        .iter()
        .filter(|&&(i, j)| member[i] && member[j])
        .count() as u64)
}

/// One step of a cycle traversal: `edge` is crossed from vertex `from` to
/// vertex `to`. The step is *forward* when it runs from the lower to the
/// upper endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleStep {
    pub edge: usize,
    pub from: usize,
    pub to: usize,
}

impl CycleStep {
    pub fn forward(&self) -> bool {
        self.from < self.to
    }
}

/// Finds a simple cycle inside the given edge subset, or `None` when the
/// subset is a forest.
///
/// The search is deterministic: depth-first from the lowest-numbered
/// vertex, neighbors in ascending order; the first back edge encountered
/// closes the reported cycle. The cycle is returned as consecutive steps
/// starting and ending at its lowest-discovered vertex.
pub fn find_cycle_in_edge_subset(
    g: &Graph,
    subset: &BTreeSet<usize>,
) -> Result<Option<Vec<CycleStep>>, Error> {
    g.check_edge_indices(subset.iter())?;

    let n = g.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    for &e in subset {
        let (i, j) = g.edges()[e];
        adj[i].push((j, e));
        adj[j].push((i, e));
    }
    for list in &mut adj {
        list.sort();
    }

    const NO_EDGE: usize = usize::MAX;
    let mut visited = vec![false; n + 1];
    let mut parent_vertex = vec![0usize; n + 1];
    let mut parent_edge = vec![NO_EDGE; n + 1];

    for root in 1..=n {
        if visited[root] || adj[root].is_empty() {
            continue;
        }
        visited[root] = true;
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&(u, cursor)) = stack.last() {
            if cursor >= adj[u].len() {
                stack.pop();
                continue;
            }
            stack.last_mut().unwrap().1 += 1;
            let (v, e) = adj[u][cursor];
            if e == parent_edge[u] {
                continue;
            }
            if visited[v] {
                // Undirected DFS only produces back edges, so v is an
                // ancestor of u: the tree path v..u plus this edge is a
                // simple cycle.
                let mut chain = vec![u];
                let mut w = u;
                while w != v {
                    w = parent_vertex[w];
                    chain.push(w);
                }
                chain.reverse();
                let mut steps = Vec::with_capacity(chain.len());
                for pair in chain.windows(2) {
                    steps.push(CycleStep {
                        edge: parent_edge[pair[1]],
                        from: pair[0],
                        to: pair[1],
                    });
                }
                steps.push(CycleStep {
                    edge: e,
                    from: u,
                    to: v,
                });
                return Ok(Some(steps));
            }
            visited[v] = true;
            parent_vertex[v] = u;
            parent_edge[v] = e;
            stack.push((v, 0));
        }
    }
    Ok(None)
}

/// Enumerates every acyclic edge subset of `g`, including the empty set,
/// sorted for reproducibility. Uses the default edge limit.
pub fn enumerate_forests(g: &Graph) -> Result<Vec<BTreeSet<usize>>, Error> {
    enumerate_forests_with_limit(g, DEFAULT_FOREST_LIMIT)
}

/// [`enumerate_forests`] with an explicit edge limit.
pub fn enumerate_forests_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Vec<BTreeSet<usize>>, Error> {
    let m = g.edge_count();
    if m > limit {
        return Err(Error::EnumerationTooLarge { m, limit });
    }
    let mut dsu = Dsu::new(g.vertex_count());
    let mut current = Vec::new();
    let mut out = Vec::new();
    extend_forest(g, 0, &mut current, &mut dsu, &mut out);
    out.sort();
    Ok(out)
}

fn extend_forest(
    g: &Graph,
    next_edge: usize,
    current: &mut Vec<usize>,
    dsu: &mut Dsu,
    out: &mut Vec<BTreeSet<usize>>,
) {
    if next_edge == g.edge_count() {
        out.push(current.iter().copied().collect());
        return;
    }
    let (i, j) = g.edges()[next_edge];
    // Include the edge when it joins two distinct components.
    if dsu.union(i, j) {
        current.push(next_edge);
        extend_forest(g, next_edge + 1, current, dsu, out);
        current.pop();
        dsu.undo();
    }
    extend_forest(g, next_edge + 1, current, dsu, out);
}

/// Union-find with union by size and undo; no path compression so that
/// unions can be rolled back during backtracking.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..=n).collect(),
            size: vec![1; n + 1],
            history: Vec::new(),
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] > self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[ra] = rb;
        self.size[rb] += self.size[ra];
        self.history.push(ra);
        true
    }

    fn undo(&mut self) {
        let child = self.history.pop().expect("undo without matching union");
        let root = self.parent[child];
        self.size[root] -= self.size[child];
        self.parent[child] = child;
    }
}
