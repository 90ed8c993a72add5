use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Self {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Two-colouring of the vertices such that every edge joins `X` to `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    /// Wraps an explicit colouring after checking it against `g`.
    pub fn from_sides(g: &Graph, side: Vec<Side>) -> Result<Self> {
        let bip = Self { side };
        bip.check(g)?;
        Ok(bip)
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn part(&self, which: Side) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == which).collect()
    }

    /// `(|X|, |Y|)`.
    pub fn sizes(&self) -> (usize, usize) {
        let x = self.side.iter().filter(|&&s| s == Side::X).count();
        (x, self.side.len() - x)
    }

    pub fn same_side(&self, u: usize, v: usize) -> bool {
        self.side[u] == self.side[v]
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.side.len() != g.order() {
            return Err(Error::InconsistentBipartition(format!(
                "{} labels for {} vertices",
                self.side.len(),
                g.order()
            )));
        }
        match g.edges().find(|&(u, v)| self.side[u] == self.side[v]) {
            Some((u, v)) => Err(Error::InconsistentBipartition(format!("edge ({u}, {v}) inside one side"))),
            None => Ok(()),
        }
    }
}

/// BFS two-colouring. Each component's smallest vertex is placed in `X`.
/// On failure the error carries an odd cycle as a vertex sequence.
pub fn bipartition(g: &Graph) -> Result<Bipartition> {
    let n = g.order();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(Side::X);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap_or(Side::X);
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(su.opposite());
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(Error::NotBipartite { cycle: odd_cycle(u, w, &parent, &depth) });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Bipartition { side: side.into_iter().map(|s| s.unwrap_or(Side::X)).collect() })
}

// A same-colour edge in a BFS forest joins two vertices of equal depth.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
