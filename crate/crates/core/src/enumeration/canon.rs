//! Canonical labelling by colour refinement and individualisation.
//!
//! The search explores the individualisation tree of the coarsest equitable
//! ordered partition and keeps the leaf whose relabelled upper triangle,
//! read as a 120-bit integer, is largest. Automorphisms found at equal leaves
//! prune siblings that lie in one orbit of the pointwise stabiliser of the
//! current prefix.

use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// graph6 string of the canonically relabelled graph.
    pub graph6: String,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Packed upper triangle of the canonical adjacency matrix.
    pub certificate: u128,
}

impl CanonicalForm {
    /// The input graph relabelled into canonical order.
    pub fn graph(&self, g: &Graph) -> Result<Graph> {
        g.relabel(&self.labeling)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let (labeling, certificate) = canonical_labeling(g)?;
    let canon = g.relabel(&labeling)?;
    Ok(CanonicalForm { graph6: graph6::encode(&canon), labeling, certificate })
}

/// Certificate alone; equal for two graphs of one order iff isomorphic.
pub fn certificate(g: &Graph) -> Result<u128> {
    canonical_labeling(g).map(|(_, c)| c)
}

pub fn canonical_labeling(g: &Graph) -> Result<(Vec<usize>, u128)> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::ScaleCap { op: "canonical_form", n, max: CANON_MAX_ORDER });
    }
    let adj: Vec<u16> = (0..n).map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w)).collect();
    let mut search = Search { n, adj, best: None, first: None, autos: Vec::new() };
    let cells = refine(&search.adj, vec![(0..n).collect()]);
    search.descend(cells, &mut Vec::new());
    let (order, cert) = search.best.expect("the tree has at least one leaf");
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    Ok((labeling, cert))
}

type Cells = Vec<Vec<usize>>;

struct Search {
    n: usize,
    adj: Vec<u16>,
    /// Vertex order and certificate of the best leaf so far.
    best: Option<(Vec<usize>, u128)>,
    first: Option<(Vec<usize>, u128)>,
    /// Automorphisms as vertex maps.
    autos: Vec<Vec<usize>>,
}

impl Search {
    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        if cells.len() == self.n {
            self.leaf(cells.iter().map(|c| c[0]).collect());
            return;
        }
        let target = cells.iter().position(|c| c.len() > 1).expect("partition is not discrete");
        let mut done: Vec<usize> = Vec::new();
        for &w in &cells[target] {
            if !done.is_empty() {
                let orbit = self.stabiliser_orbits(prefix);
                if done.iter().any(|&d| orbit[d] == orbit[w]) {
                    continue;
                }
            }
            done.push(w);
            let mut next = cells.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&v| v != w).collect();
            next[target] = vec![w];
            next.insert(target + 1, rest);
            let next = refine(&self.adj, next);
            prefix.push(w);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = self.cert(&order);
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.1 == cert {
                // position-preserving map between the two leaves
                let mut sigma = vec![0; self.n];
                for (a, b) in known.0.iter().zip(&order) {
                    sigma[*a] = *b;
                }
                if sigma.iter().enumerate().any(|(i, &s)| i != s) && !self.autos.contains(&sigma) {
                    self.autos.push(sigma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((order.clone(), cert));
        }
        if self.best.as_ref().is_none_or(|b| cert > b.1) {
            self.best = Some((order, cert));
        }
    }

    fn cert(&self, order: &[usize]) -> u128 {
        let mut c = 0u128;
        for j in 1..order.len() {
            let row = self.adj[order[j]];
            for &vi in &order[..j] {
                c = (c << 1) | u128::from(row >> vi & 1);
            }
        }
        c
    }

    // Orbits of the group generated by the known automorphisms that fix
    // `prefix` pointwise, as union-find roots.
    fn stabiliser_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn root(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for sigma in self.autos.iter().filter(|s| prefix.iter().all(|&p| s[p] == p)) {
            for (v, &s) in sigma.iter().enumerate() {
                let (a, b) = (root(&mut parent, v), root(&mut parent, s));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| root(&mut parent, v)).collect()
    }
}

/// Coarsest equitable refinement of an ordered partition. Split cells keep
/// their position and are ordered by neighbour counts into every cell.
fn refine(adj: &[u16], mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v)).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|&m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if next.last().map(Vec::len) != Some(cell.len()) {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}
