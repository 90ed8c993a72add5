//! Vertex connectivity through unit-capacity flows on the split-vertex
//! digraph (Menger).

use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// Maximum number of internally vertex-disjoint `s`–`t` paths, for
/// distinct non-adjacent `s` and `t`.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize) -> Result<usize> {
    let n = g.order();
    if s >= n || t >= n {
        return Err(Error::VertexOutOfRange(s, t, n));
    }
    if s == t || g.has_edge(s, t) {
        return Err(Error::InvalidParameter(format!("vertices {s} and {t} must be distinct and non-adjacent")));
    }
    Ok(SplitNetwork::new(g).max_flow(2 * s + 1, 2 * t))
}

/// Size of a minimum vertex cut: `n − 1` for complete graphs, `0` for
/// disconnected ones.
///
/// Uses the Esfahanian–Hakimi reduction: with `v` of minimum degree, only
/// pairs `(v, w)` with `w ∉ N(v)` and non-adjacent pairs inside `N(v)` need a
/// flow computation.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::TooFewVertices { op: "vertex_connectivity", n, min: 2 });
    }
    if !g.is_connected() {
        return Ok(0);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let v = (0..n).min_by_key(|&v| g.degree(v)).unwrap_or(0);
    let mut net = SplitNetwork::new(g);
    let mut best = g.degree(v);
    for w in (0..n).filter(|&w| w != v && !g.has_edge(v, w)) {
        best = best.min(net.max_flow(2 * v + 1, 2 * w));
    }
    let nbrs = g.neighbors(v);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(net.max_flow(2 * x + 1, 2 * y));
            }
        }
    }
    Ok(best)
}

/// Vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by a unit arc;
/// every edge `uv` becomes arcs `u_out → v_in` and `v_out → u_in`.
struct SplitNetwork {
    // Arc list with paired reverse arcs at index ^ 1.
    head: Vec<usize>,
    cap: Vec<u32>,
    base: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = Self { head: Vec::new(), cap: Vec::new(), base: Vec::new(), out: vec![Vec::new(); 2 * n] };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, 1);
            net.arc(2 * v + 1, 2 * u, 1);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.base.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.base.push(0);
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        self.cap.clone_from(&self.base);
        let nodes = self.out.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; nodes];
        loop {
            via.iter_mut().for_each(|a| *a = usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.out[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && y != source && via[y] == usize::MAX {
                        via[y] = a;
                        if y == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !reached {
                return flow;
            }
            let mut y = sink;
            while y != source {
                let a = via[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            flow += 1;
        }
    }
}
