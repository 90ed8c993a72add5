use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::canon::{canonical_labeling, CANON_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::{bipartition, Graph};
use crate::spectral::{compare_lambda, dense_eigensolve, spectral_radius, DENSE_MAX_ORDER};

/// Order cap for trees and for classes with `Δ ≤ 3`.
pub const SPARSE_MAX_ORDER: usize = 12;
/// Order cap for every other class.
pub const GENERAL_MAX_ORDER: usize = 9;

/// Which members compete for the argmax of `λ₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArgmaxFilter {
    /// Every catalogue member.
    All,
    /// Irregular members whose maximum degree equals the class cap.
    #[default]
    IrregularExactDelta,
}

/// A class of connected graphs on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSpec {
    pub n: usize,
    /// Maximum degree cap; `None` for no cap.
    pub delta_max: Option<usize>,
    pub bipartite: bool,
    pub tree: bool,
    pub argmax: ArgmaxFilter,
}

impl ClassSpec {
    /// Connected bipartite graphs with `Δ ≤ delta`.
    pub fn bipartite(n: usize, delta: usize) -> Self {
        Self { n, delta_max: Some(delta), bipartite: true, tree: false, argmax: ArgmaxFilter::IrregularExactDelta }
    }

    /// All connected graphs.
    pub fn connected(n: usize) -> Self {
        Self { n, delta_max: None, bipartite: false, tree: false, argmax: ArgmaxFilter::All }
    }

    pub fn trees(n: usize) -> Self {
        Self { n, delta_max: None, bipartite: true, tree: true, argmax: ArgmaxFilter::All }
    }

    pub fn max_order(&self) -> usize {
        if self.tree || self.delta_max.is_some_and(|d| d <= 3) {
            SPARSE_MAX_ORDER
        } else {
            GENERAL_MAX_ORDER
        }
    }

    fn admits_argmax(&self, g: &Graph) -> bool {
        match (self.argmax, self.delta_max) {
            (ArgmaxFilter::All, _) => true,
            (ArgmaxFilter::IrregularExactDelta, Some(d)) => !g.is_regular() && g.max_degree() == d,
            (ArgmaxFilter::IrregularExactDelta, None) => !g.is_regular(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Argmax {
    /// Index into the catalogue.
    pub index: usize,
    pub lambda1: f64,
    pub runner_up: Option<usize>,
    /// `λ₁(argmax) − λ₁(runner-up)`.
    pub margin: Option<f64>,
    /// False when the top two could not be separated even by the dense
    /// oracle.
    pub unique: bool,
}

#[derive(Debug, Clone)]
pub struct EnumerationRun {
    pub spec: ClassSpec,
    /// Canonically labelled, pairwise non-isomorphic members.
    pub catalog: Vec<Graph>,
    pub lambdas: Vec<f64>,
    pub argmax: Option<Argmax>,
    /// Extensions examined at the last level.
    pub candidates: usize,
    pub elapsed: Duration,
}

impl EnumerationRun {
    pub fn argmax_graph(&self) -> Option<&Graph> {
        self.argmax.as_ref().map(|a| &self.catalog[a.index])
    }
}

/// Complete, duplicate-free catalogue of a class with `λ₁` for every member
/// and the argmax under the spec's filter.
pub fn enumerate_class(spec: ClassSpec) -> Result<EnumerationRun> {
    let start = Instant::now();
    let (catalog, candidates) = generate(&spec)?;
    let lambdas: Vec<f64> = catalog
        .par_iter()
        .map(|g| spectral_radius::<f64>(g, crate::spectral::DEFAULT_TOL).map(|s| s.lambda1))
        .collect::<Result<_>>()?;
    let argmax = find_argmax(&spec, &catalog, &lambdas)?;
    Ok(EnumerationRun { spec, catalog, lambdas, argmax, candidates, elapsed: start.elapsed() })
}

/// All non-isomorphic trees on `n ≤ 12` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    generate(&ClassSpec::trees(n)).map(|(c, _)| c)
}

fn find_argmax(spec: &ClassSpec, catalog: &[Graph], lambdas: &[f64]) -> Result<Option<Argmax>> {
    let mut ranked: Vec<usize> = (0..catalog.len()).filter(|&i| spec.admits_argmax(&catalog[i])).collect();
    ranked.sort_by(|&a, &b| lambdas[b].total_cmp(&lambdas[a]).then(a.cmp(&b)));
    let Some(&top) = ranked.first() else {
        return Ok(None);
    };
    let Some(&second) = ranked.get(1) else {
        return Ok(Some(Argmax { index: top, lambda1: lambdas[top], runner_up: None, margin: None, unique: true }));
    };
    let g = &catalog[top];
    let mut out = Argmax {
        index: top,
        lambda1: lambdas[top],
        runner_up: Some(second),
        margin: Some(lambdas[top] - lambdas[second]),
        unique: true,
    };
    if lambdas[top] - lambdas[second] < crate::spectral::COMPARE_MARGIN {
        // Near tie: re-rank the contenders with the dense oracle.
        if g.order() > DENSE_MAX_ORDER {
            out.unique = false;
            return Ok(Some(out));
        }
        let close: Vec<usize> =
            ranked.iter().copied().take_while(|&i| lambdas[top] - lambdas[i] < crate::spectral::COMPARE_MARGIN).collect();
        let mut dense: Vec<(usize, f64)> =
            close.iter().map(|&i| dense_eigensolve::<f64>(&catalog[i]).map(|s| (i, s.lambda1))).collect::<Result<_>>()?;
        dense.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        let (i, j) = (dense[0].0, dense[1].0);
        out.index = i;
        out.lambda1 = dense[0].1;
        out.runner_up = Some(j);
        out.margin = Some(dense[0].1 - dense[1].1);
        out.unique = compare_lambda(&catalog[i], dense[0].1, &catalog[j], dense[1].1)? == std::cmp::Ordering::Greater;
    }
    Ok(Some(out))
}

fn check_order(spec: &ClassSpec) -> Result<()> {
    if spec.n == 0 {
        return Err(Error::EmptyGraph);
    }
    let max = spec.max_order().min(CANON_MAX_ORDER);
    if spec.n > max {
        return Err(Error::ScaleCap { op: "enumerate_class", n: spec.n, max });
    }
    Ok(())
}

// Grows the class one vertex at a time. Every connected graph has a vertex
// whose removal leaves it connected (a leaf of a spanning tree), and the
// degree cap, bipartiteness and acyclicity all pass to that subgraph, so
// extending every level-k member by every admissible neighbour set reaches
// the whole class at level k + 1. Duplicates are rejected by certificate.
fn generate(spec: &ClassSpec) -> Result<(Vec<Graph>, usize)> {
    check_order(spec)?;
    let mut level = vec![Graph::empty(1)?];
    let mut candidates = 1;
    for k in 1..spec.n {
        let exts: Vec<Vec<(u128, Graph)>> =
            level.par_iter().map(|g| extensions(g, spec)).collect::<Result<_>>()?;
        candidates = exts.iter().map(Vec::len).sum();
        let mut seen = HashSet::with_capacity(candidates);
        let mut next = Vec::new();
        for (cert, g) in exts.into_iter().flatten() {
            if seen.insert(cert) {
                next.push(g);
            }
        }
        debug_assert!(next.iter().all(|g| g.order() == k + 1));
        level = next;
    }
    level.sort_by_cached_key(|g| std::cmp::Reverse(canonical_labeling(g).map(|(_, c)| c).unwrap_or(0)));
    Ok((level, candidates))
}

fn extensions(g: &Graph, spec: &ClassSpec) -> Result<Vec<(u128, Graph)>> {
    let k = g.order();
    let cap = spec.delta_max.unwrap_or(usize::MAX);
    let open: Vec<usize> = (0..k).filter(|&v| g.degree(v) < cap).collect();
    let sides = if spec.bipartite { Some(bipartition(g)?) } else { None };
    let mut out = Vec::new();
    let limit = if spec.tree { 1 } else { cap.min(open.len()) };
    for mask in 1u32..(1 << open.len()) {
        let size = mask.count_ones() as usize;
        if size > limit {
            continue;
        }
        let nbrs: Vec<usize> = (0..open.len()).filter(|&i| mask >> i & 1 == 1).map(|i| open[i]).collect();
        if let Some(b) = &sides {
            if nbrs.iter().any(|&w| !b.same_side(w, nbrs[0])) {
                continue;
            }
        }
        let h = g.with_vertex(&nbrs)?;
        let (labeling, cert) = canonical_labeling(&h)?;
        out.push((cert, h.relabel(&labeling)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        let expect = [1, 1, 2, 6, 21, 112, 853];
        for (i, &c) in expect.iter().enumerate() {
            let run = generate(&ClassSpec::connected(i + 1)).unwrap();
            assert_eq!(run.0.len(), c, "n = {}", i + 1);
        }
    }

    #[test]
    fn tree_counts() {
        let expect = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(enumerate_trees(i + 1).unwrap().len(), c, "n = {}", i + 1);
        }
    }

    #[test]
    fn brute_force_oracle_up_to_six() {
        use super::super::canon::certificate;
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let mut all = HashSet::new();
            let mut bip = HashSet::new();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::new(n, (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i])).unwrap();
                if !g.is_connected() {
                    continue;
                }
                let c = certificate(&g).unwrap();
                all.insert(c);
                if g.max_degree() <= 3 && bipartition(&g).is_ok() {
                    bip.insert(c);
                }
            }
            let got: HashSet<u128> =
                generate(&ClassSpec::connected(n)).unwrap().0.iter().map(|g| certificate(g).unwrap()).collect();
            assert_eq!(got, all, "n = {n}");
            let got: HashSet<u128> =
                generate(&ClassSpec::bipartite(n, 3)).unwrap().0.iter().map(|g| certificate(g).unwrap()).collect();
            assert_eq!(got, bip, "n = {n}");
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(enumerate_trees(13), Err(Error::ScaleCap { .. })));
        assert!(matches!(enumerate_class(ClassSpec::connected(10)), Err(Error::ScaleCap { .. })));
        assert!(matches!(enumerate_class(ClassSpec::bipartite(13, 3)), Err(Error::ScaleCap { .. })));
    }
}
