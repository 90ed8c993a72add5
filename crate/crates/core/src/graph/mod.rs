//! Simple undirected graphs on dense vertex labels `0..n`, plus the structural
//! predicates the rest of the crate relies on.

mod bipartite;
mod connectivity;
mod degree;
pub mod graph6;

use std::collections::VecDeque;

pub use bipartite::{bipartition, Bipartition, Side};
pub use connectivity::{local_vertex_connectivity, vertex_connectivity};
pub use degree::{degree_sequence, DegreeSequence};

use crate::error::{Error, Result};

/// Immutable simple undirected graph.
///
/// Neighbour lists are kept sorted, so equality of two `Graph` values is
/// equality of labelled graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either
    /// orientation) are merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self { adj, m })
    }

    /// Edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.m == n * (n - 1) / 2
    }

    /// Copy with edge `uv` added; adding an existing edge is a no-op.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.modified(&[(u, v)], &[])
    }

    /// Copy with edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("edge ({u}, {v}) is absent")));
        }
        self.modified(&[], &[(u, v)])
    }

    /// Copy with edges added and removed. Removal of absent edges is ignored.
    pub fn modified(&self, add: &[(usize, usize)], remove: &[(usize, usize)]) -> Result<Self> {
        let n = self.order();
        let mut adj = self.adj.clone();
        for &(u, v) in remove {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
        }
        for &(u, v) in add {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if let Err(pos) = adj[u].binary_search(&v) {
                adj[u].insert(pos, v);
            }
            if let Err(pos) = adj[v].binary_search(&u) {
                adj[v].insert(pos, u);
            }
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self { adj, m })
    }

    /// Copy with one new vertex (label `n`) joined to `neighbors`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut adj = self.adj.clone();
        adj.push(Vec::with_capacity(neighbors.len()));
        for &w in neighbors {
            if w >= n {
                return Err(Error::VertexOutOfRange(n, w, n + 1));
            }
            if let Err(pos) = adj[w].binary_search(&n) {
                adj[w].insert(pos, n);
                adj[n].push(w);
            }
        }
        adj[n].sort_unstable();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self { adj, m })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
        }
        Self::new(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Self::new(vertices.len(), edges)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest BFS distance over all pairs, `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.order() {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Bridges as `(u, v)` with `u < v`, sorted.
    pub fn cut_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut bridges = Vec::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Frames: (vertex, parent, next neighbour index). Simple graphs
            // have no parallel edges, so skipping the parent vertex is exact.
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(frame) = stack.last_mut() {
                let (u, parent) = (frame.0, frame.1);
                if let Some(&w) = self.adj[u].get(frame.2) {
                    frame.2 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] > disc[parent] {
                            bridges.push((parent.min(u), parent.max(u)));
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix<T: num_traits::Zero + num_traits::One + Clone>(&self) -> Vec<Vec<T>> {
        let n = self.order();
        let mut a = vec![vec![T::zero(); n]; n];
        for (u, v) in self.edges() {
            a[u][v] = T::one();
            a[v][u] = T::one();
        }
        a
    }
}

/// Free-function form of [`Graph::new`].
pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}
