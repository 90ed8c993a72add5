//! Deterministic builders for the named graph families.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Side};

/// Named family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Extremal connected subcubic bipartite graph `B_n`, `n ≥ 6`.
    Bn(usize),
    Path(usize),
    Complete(usize),
    /// `K_n` with the edge `(0, 1)` removed.
    CompleteMinusEdge(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,k}` with centre `0`.
    Star(usize),
    Cycle(usize),
    /// `Q_d` on `2^d` vertices, adjacent when labels differ in one bit.
    Hypercube(usize),
    Petersen,
}

/// Which unsaturated vertex receives the pendant at odd steps of `B_n`.
/// The two choices give isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PendantChoice {
    #[default]
    Lowest,
    Highest,
}

/// `B_n` with its bipartition, built from `K_{3,3} − e` by alternately
/// attaching a pendant to one unsaturated vertex (odd `n`) and a vertex
/// joined to both unsaturated vertices (even `n`). Vertex `i ≥ 6` is the
/// vertex added when the order reached `i + 1`.
pub fn build_bn(n: usize) -> Result<(Graph, Bipartition)> {
    build_bn_with(n, PendantChoice::Lowest)
}

pub fn build_bn_with(n: usize, choice: PendantChoice) -> Result<(Graph, Bipartition)> {
    if n < 6 {
        return Err(Error::TooFewVertices { op: "build_bn", n, min: 6 });
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut side = vec![Side::X, Side::X, Side::X, Side::Y, Side::Y, Side::Y];
    let join = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
    };
    for a in 0..3 {
        for b in 3..6 {
            if (a, b) != (2, 5) {
                join(&mut adj, a, b);
            }
        }
    }
    for v in 6..n {
        let unsaturated: Vec<usize> = (0..v).filter(|&w| adj[w].len() < 3).collect();
        let targets = if (v + 1) % 2 == 1 {
            match choice {
                PendantChoice::Lowest => vec![unsaturated[0]],
                PendantChoice::Highest => vec![unsaturated[unsaturated.len() - 1]],
            }
        } else {
            unsaturated
        };
        side.push(side[targets[0]].opposite());
        for w in targets {
            join(&mut adj, v, w);
        }
    }
    let edges: Vec<(usize, usize)> =
        adj.iter().enumerate().flat_map(|(u, l)| l.iter().filter(move |&&w| w > u).map(move |&w| (u, w))).collect();
    let g = Graph::new(n, edges)?;
    let bip = Bipartition::from_sides(&g, side)?;
    Ok((g, bip))
}

/// Vertices of degree below `delta`, sorted.
pub fn unsaturated_vertices(g: &Graph, delta: usize) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) < delta).collect()
}

pub fn build_family(family: Family) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::InvalidParameter(format!("{family:?}: {msg}")));
    match family {
        Family::Bn(n) => build_bn(n).map(|(g, _)| g),
        Family::Path(n) => {
            if n == 0 {
                return bad("needs n ≥ 1");
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Complete(n) => {
            if n == 0 {
                return bad("needs n ≥ 1");
            }
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteMinusEdge(n) => {
            if n < 2 {
                return bad("needs n ≥ 2");
            }
            build_family(Family::Complete(n))?.without_edge(0, 1)
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return bad("both sides need at least one vertex");
            }
            Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Family::Star(k) => {
            if k == 0 {
                return bad("needs k ≥ 1");
            }
            build_family(Family::CompleteBipartite(1, k))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return bad("needs n ≥ 3");
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Hypercube(d) => {
            if d == 0 || d > 20 {
                return bad("needs 1 ≤ d ≤ 20");
            }
            let n = 1usize << d;
            Graph::new(n, (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))).filter(|&(u, v)| u < v))
        }
        Family::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::new(10, outer.chain(spokes).chain(inner))
        }
    }
}
