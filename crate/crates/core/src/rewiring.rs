//! Eigenvector-guided surgery: two-switches, bad pairs, neighbour shifts
//! and a hill climber built from them.
//!
//! A two-switch on distinct `u, u′, v, v′` with `uv′, u′v ∈ E` and
//! `uv, u′v′ ∉ E` replaces the first pair of edges by the second, keeping
//! every degree. When the Perron vector satisfies `x_u ≥ x_{u′}` and
//! `x_v ≥ x_{v′}` the spectral radius does not drop, and it rises unless
//! both are equalities. A *bad pair* is such a move with `x_v > x_{v′}`
//! whose result is still connected.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::scalar::RealScalar;
use crate::spectral::{dense_eigensolve, spectral_radius, SpectralResult, DENSE_MAX_ORDER};

/// Slack for eigenvector comparisons: `≥` allows `1e-10` below, `>` needs
/// `1e-10` above.
pub const ENTRY_TOL: f64 = 1e-10;
/// Minimum increase of `λ₁` for a climb step.
pub const MIN_GAIN: f64 = 1e-10;
/// Step cap for [`hill_climb`].
pub const DEFAULT_MAX_STEPS: usize = 100_000;

/// Two-switch removing `uv′, u′v` and adding `uv, u′v′`.
#[derive(Debug, Clone, PartialEq)]
pub struct SwapMove<T> {
    pub u: usize,
    pub u_prime: usize,
    pub v: usize,
    pub v_prime: usize,
    /// `(x_u, x_{u′}, x_v, x_{v′})` when the move came from an eigenvector.
    pub evidence: Option<[T; 4]>,
}

impl<T> SwapMove<T> {
    pub fn new(u: usize, u_prime: usize, v: usize, v_prime: usize) -> Self {
        Self { u, u_prime, v, v_prime, evidence: None }
    }

    pub fn removed(&self) -> [(usize, usize); 2] {
        [(self.u, self.v_prime), (self.u_prime, self.v)]
    }

    pub fn added(&self) -> [(usize, usize); 2] {
        [(self.u, self.v), (self.u_prime, self.v_prime)]
    }

    // Two labelings of the same exchange give the same key.
    fn key(&self) -> [(usize, usize); 4] {
        let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
        let mut r = self.removed().map(norm);
        let mut a = self.added().map(norm);
        r.sort_unstable();
        a.sort_unstable();
        [r[0], r[1], a[0], a[1]]
    }

    fn tuple(&self) -> (usize, usize, usize, usize) {
        (self.u, self.u_prime, self.v, self.v_prime)
    }
}

pub fn check_two_switch<T>(g: &Graph, mv: &SwapMove<T>) -> Result<()> {
    let (u, up, v, vp) = mv.tuple();
    let n = g.order();
    if [u, up, v, vp].iter().any(|&w| w >= n) {
        return Err(Error::InvalidMove(format!("vertex out of range for n = {n}")));
    }
    let distinct: HashSet<usize> = [u, up, v, vp].into_iter().collect();
    if distinct.len() != 4 {
        return Err(Error::InvalidMove("the four vertices must be distinct".into()));
    }
    for (a, b) in mv.removed() {
        if !g.has_edge(a, b) {
            return Err(Error::InvalidMove(format!("edge ({a}, {b}) to remove is absent")));
        }
    }
    for (a, b) in mv.added() {
        if g.has_edge(a, b) {
            return Err(Error::InvalidMove(format!("edge ({a}, {b}) to add is present")));
        }
    }
    Ok(())
}

/// Applies the exchange; the degree sequence is unchanged.
pub fn apply_two_switch<T>(g: &Graph, mv: &SwapMove<T>) -> Result<Graph> {
    check_two_switch(g, mv)?;
    g.modified(&mv.added(), &mv.removed())
}

/// Every bad pair of `g` under the Perron vector `x`, one move per distinct
/// exchange, in lexicographic `(u, u′, v, v′)` order.
///
/// With `keep` set, only moves that keep that bipartition proper are
/// returned (`u` and `u′` on the same side).
pub fn find_bad_pairs<T: RealScalar>(g: &Graph, x: &[T], keep: Option<&Bipartition>) -> Result<Vec<SwapMove<T>>> {
    if x.len() != g.order() {
        return Err(Error::InvalidParameter(format!("vector of length {} for {} vertices", x.len(), g.order())));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tol = T::lit(ENTRY_TOL);
    let arcs: Vec<(usize, usize)> = g.edges().flat_map(|(a, b)| [(a, b), (b, a)]).collect();
    let candidates: Vec<SwapMove<T>> = arcs
        .par_iter()
        .flat_map_iter(|&(u, vp)| {
            arcs.iter().filter_map(move |&(up, v)| {
                if u == up || u == v || vp == up || vp == v {
                    return None;
                }
                if g.has_edge(u, v) || g.has_edge(up, vp) {
                    return None;
                }
                if keep.is_some_and(|b| !b.same_side(u, up)) {
                    return None;
                }
                if !(x[u] >= x[up] - tol && x[v] > x[vp] + tol) {
                    return None;
                }
                let mv = SwapMove { u, u_prime: up, v, v_prime: vp, evidence: Some([x[u], x[up], x[v], x[vp]]) };
                let after = g.modified(&mv.added(), &mv.removed()).ok()?;
                after.is_connected().then_some(mv)
            })
        })
        .collect();
    let mut sorted = candidates;
    sorted.sort_by_key(|m| m.tuple());
    let mut seen = HashSet::new();
    sorted.retain(|m| seen.insert(m.key()));
    Ok(sorted)
}

/// `G − {wu : w ∈ S} + {wv : w ∈ S}` for non-empty `S ⊆ N(u) \ N(v)`,
/// `v ∉ S`, `u ≠ v`.
pub fn neighbor_shift(g: &Graph, u: usize, v: usize, s: &[usize]) -> Result<Graph> {
    let n = g.order();
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange(u, v, n));
    }
    if u == v {
        return Err(Error::InvalidMove("u and v must differ".into()));
    }
    if s.is_empty() {
        return Err(Error::InvalidMove("S must be non-empty".into()));
    }
    let mut seen = HashSet::new();
    for &w in s {
        if w == v || !g.has_edge(w, u) || g.has_edge(w, v) || !seen.insert(w) {
            return Err(Error::InvalidMove(format!("{w} is not in N({u}) \\ N({v}) or repeats")));
        }
    }
    let remove: Vec<_> = s.iter().map(|&w| (w, u)).collect();
    let add: Vec<_> = s.iter().map(|&w| (w, v)).collect();
    g.modified(&add, &remove)
}

/// Same-side pairs `(u, v)` with `d(u) > d(v)` but `x_u ≤ x_v`.
pub fn eigenvector_order_violations<T: RealScalar>(g: &Graph, bip: &Bipartition, x: &[T]) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if bip.same_side(u, v) && g.degree(u) > g.degree(v) && x[u] <= x[v] {
                out.push((u, v));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Policy {
    /// Largest gain, ties to the lexicographically first move.
    #[default]
    Best,
    /// First improving move in a seeded random order.
    First,
}

impl std::str::FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "best" => Ok(Policy::Best),
            "first" => Ok(Policy::First),
            other => Err(Error::InvalidParameter(format!("unknown policy {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClimbOptions {
    pub seed: u64,
    pub policy: Policy,
    /// Restrict to moves that keep this bipartition proper.
    pub keep: Option<Bipartition>,
    pub max_steps: usize,
}

impl Default for ClimbOptions {
    fn default() -> Self {
        Self { seed: 0, policy: Policy::Best, keep: None, max_steps: DEFAULT_MAX_STEPS }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClimbStep<T> {
    pub graph: Graph,
    pub lambda1: T,
    /// Move that produced this graph; `None` for the start.
    pub mv: Option<SwapMove<T>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClimbTrace<T> {
    pub steps: Vec<ClimbStep<T>>,
    /// Bad pairs at the final graph whose gain fell below [`MIN_GAIN`].
    pub stalled: usize,
}

impl<T> ClimbTrace<T> {
    pub fn last(&self) -> &ClimbStep<T> {
        self.steps.last().expect("a trace holds its start")
    }

    pub fn moves(&self) -> usize {
        self.steps.len() - 1
    }
}

fn perron<T: RealScalar>(g: &Graph) -> Result<SpectralResult<T>> {
    if g.order() <= DENSE_MAX_ORDER {
        dense_eigensolve(g)
    } else {
        spectral_radius(g, T::lit(crate::spectral::DEFAULT_TOL))
    }
}

/// Applies bad-pair switches until none raises `λ₁` by more than
/// [`MIN_GAIN`]. The trace starts with `g0`.
pub fn hill_climb<T: RealScalar>(g0: &Graph, opts: &ClimbOptions) -> Result<ClimbTrace<T>> {
    if !g0.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(b) = &opts.keep {
        b.check(g0)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let start = perron::<T>(g0)?;
    let mut steps = vec![ClimbStep { graph: g0.clone(), lambda1: start.lambda1, mv: None }];
    let mut x = start.eigenvector;
    let gain = T::lit(MIN_GAIN);
    loop {
        let current = steps.last().expect("non-empty");
        let (g, lambda) = (current.graph.clone(), current.lambda1);
        let mut moves = find_bad_pairs(&g, &x, opts.keep.as_ref())?;
        let evaluate = |mv: &SwapMove<T>| -> Result<(Graph, SpectralResult<T>)> {
            let h = apply_two_switch(&g, mv)?;
            let s = perron::<T>(&h)?;
            Ok((h, s))
        };
        let chosen = match opts.policy {
            Policy::Best => {
                let scored: Vec<(Graph, SpectralResult<T>)> = moves.par_iter().map(evaluate).collect::<Result<_>>()?;
                let mut best: Option<usize> = None;
                for (i, (_, s)) in scored.iter().enumerate() {
                    if s.lambda1 > lambda + gain && best.is_none_or(|b| s.lambda1 > scored[b].1.lambda1) {
                        best = Some(i);
                    }
                }
                best.map(|i| (moves[i].clone(), scored[i].clone()))
            }
            Policy::First => {
                moves.shuffle(&mut rng);
                let mut found = None;
                for mv in &moves {
                    let (h, s) = evaluate(mv)?;
                    if s.lambda1 > lambda + gain {
                        found = Some((mv.clone(), (h, s)));
                        break;
                    }
                }
                found
            }
        };
        match chosen {
            Some((mv, (h, s))) => {
                if steps.len() > opts.max_steps {
                    return Err(Error::NotConverged {
                        iterations: opts.max_steps,
                        estimate: lambda.to_f64().unwrap_or(f64::NAN),
                        residual: f64::NAN,
                    });
                }
                x = s.eigenvector;
                steps.push(ClimbStep { graph: h, lambda1: s.lambda1, mv: Some(mv) });
            }
            None => return Ok(ClimbTrace { steps, stalled: moves.len() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_bn, build_family, Family};
    use crate::graph::{bipartition, degree_sequence};

    fn lambda(g: &Graph) -> f64 {
        dense_eigensolve::<f64>(g).unwrap().lambda1
    }

    #[test]
    fn cycle_switch_is_a_cycle() {
        let c6 = build_family(Family::Cycle(6)).unwrap();
        let mv = SwapMove::<f64>::new(0, 4, 3, 1);
        let h = apply_two_switch(&c6, &mv).unwrap();
        assert_eq!(h.degrees(), vec![2; 6]);
        assert!(h.is_connected());
        assert!((lambda(&h) - 2.0).abs() < 1e-12);
        assert!(apply_two_switch(&h, &mv).is_err());
        assert!(apply_two_switch(&c6, &SwapMove::<f64>::new(0, 0, 3, 1)).is_err());
    }

    #[test]
    fn no_bad_pairs_in_cycle() {
        let c6 = build_family(Family::Cycle(6)).unwrap();
        let x = dense_eigensolve::<f64>(&c6).unwrap().eigenvector;
        assert!(find_bad_pairs(&c6, &x, None).unwrap().is_empty());
    }

    #[test]
    fn bn_has_no_bad_pairs() {
        for n in 6..=20 {
            let (g, bip) = build_bn(n).unwrap();
            let x = dense_eigensolve::<f64>(&g).unwrap().eigenvector;
            assert!(find_bad_pairs(&g, &x, Some(&bip)).unwrap().is_empty(), "n = {n}");
        }
    }

    #[test]
    fn shift_pendant_onto_centre() {
        let p4 = build_family(Family::Path(4)).unwrap();
        let h = neighbor_shift(&p4, 2, 1, &[3]).unwrap();
        assert_eq!(h.degrees(), vec![1, 3, 1, 1]);
        assert!((lambda(&h) - 3f64.sqrt()).abs() < 1e-12);
        assert!(lambda(&h) > 2.0 * (std::f64::consts::PI / 5.0).cos());
        assert!(neighbor_shift(&p4, 2, 1, &[]).is_err());
        assert!(neighbor_shift(&p4, 3, 1, &[2]).is_err());
        assert!(neighbor_shift(&p4, 1, 1, &[0]).is_err());
    }

    #[test]
    fn order_violations() {
        let (g, bip) = build_bn(9).unwrap();
        let x = dense_eigensolve::<f64>(&g).unwrap().eigenvector;
        assert!(eigenvector_order_violations(&g, &bip, &x).is_empty());
        let k23 = build_family(Family::CompleteBipartite(2, 3)).unwrap();
        let bip = bipartition(&k23).unwrap();
        let x = dense_eigensolve::<f64>(&k23).unwrap().eigenvector;
        assert!(eigenvector_order_violations(&k23, &bip, &x).is_empty());
    }

    #[test]
    fn climb_from_bn_is_empty() {
        let (g, bip) = build_bn(8).unwrap();
        let opts = ClimbOptions { keep: Some(bip), ..Default::default() };
        let t = hill_climb::<f64>(&g, &opts).unwrap();
        assert_eq!(t.moves(), 0);
    }

    #[test]
    fn climb_is_monotone() {
        // C_8 with chords 0-5 and 2-7
        let g = build_family(Family::Cycle(8)).unwrap().modified(&[(0, 5), (2, 7)], &[]).unwrap();
        let bip = bipartition(&g).unwrap();
        let seq = degree_sequence(&g, Some(&bip)).unwrap();
        for policy in [Policy::Best, Policy::First] {
            let opts = ClimbOptions { keep: Some(bip.clone()), policy, seed: 3, ..Default::default() };
            let t = hill_climb::<f64>(&g, &opts).unwrap();
            for w in t.steps.windows(2) {
                assert!(w[1].lambda1 > w[0].lambda1 + MIN_GAIN);
            }
            for s in &t.steps {
                assert!(s.graph.is_connected());
                assert_eq!(degree_sequence(&s.graph, Some(&bip)).unwrap(), seq);
            }
            let end = &t.last().graph;
            let x = dense_eigensolve::<f64>(end).unwrap().eigenvector;
            let left = find_bad_pairs(end, &x, Some(&bip)).unwrap();
            assert!(left.iter().all(|mv| lambda(&apply_two_switch(end, mv).unwrap()) <= lambda(end) + MIN_GAIN));
        }
    }
}
