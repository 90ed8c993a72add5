use super::{
    chen_hou_connectivity_bound, cioaba_bound, improved_connectivity_bound, improved_subgraph_bound, stevanovic_bound,
    BoundKind,
};
use crate::error::{Error, Result};
use crate::graph::{graph6, vertex_connectivity, Graph};
use crate::scalar::RealScalar;
use crate::spectral::{dense_eigensolve, spectral_radius, Method, SpectralResult, COMPARE_MARGIN, DENSE_MAX_ORDER};

/// A bound holds when `true_gap > value − HOLDS_SLACK`.
pub const HOLDS_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy)]
pub struct ReportOptions<T> {
    /// Power-iteration residual tolerance.
    pub tol: T,
    /// Emit one row per `k′ = 1..=κ` for the connectivity bounds instead of
    /// only `k′ = κ`.
    pub all_k: bool,
}

impl<T: RealScalar> Default for ReportOptions<T> {
    fn default() -> Self {
        Self { tol: T::lit(crate::spectral::DEFAULT_TOL), all_k: false }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry<T> {
    pub kind: BoundKind,
    /// Connectivity used, for the bounds that take one.
    pub k: Option<usize>,
    /// `None` when the bound's hypotheses exclude the graph.
    pub value: Option<T>,
    pub holds: Option<bool>,
    /// `true_gap − value`.
    pub margin: Option<T>,
}

impl<T> BoundEntry<T> {
    pub fn applicable(&self) -> bool {
        self.value.is_some()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T> {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub k: usize,
    pub diameter: Option<usize>,
    pub lambda1: Option<T>,
    /// `Δ − λ₁`.
    pub true_gap: Option<T>,
    pub method: Option<Method>,
    pub entries: Vec<BoundEntry<T>>,
    /// Spectral failure, if any. Bound values are still filled in.
    pub error: Option<String>,
}

impl<T: RealScalar> BoundReport<T> {
    pub fn entry(&self, kind: BoundKind) -> Option<&BoundEntry<T>> {
        self.entries.iter().filter(|e| e.kind == kind).max_by_key(|e| e.k)
    }

    /// Whether every applicable entry holds.
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds != Some(false))
    }
}

fn bound_value<T: RealScalar>(kind: BoundKind, g: &Graph, k: usize, diameter: Option<usize>) -> Option<T> {
    let (n, m, delta) = (g.order(), g.size(), g.max_degree());
    if g.is_regular() {
        return None;
    }
    match kind {
        BoundKind::Stevanovic => stevanovic_bound(n, delta),
        BoundKind::Cioaba => cioaba_bound(n, diameter),
        BoundKind::ChenHouConnectivity => chen_hou_connectivity_bound(n, m, delta, k),
        BoundKind::ImprovedConnectivity => improved_connectivity_bound(n, m, delta, k),
        BoundKind::ChenHouSubgraph | BoundKind::ImprovedSubgraph => None,
    }
}

fn judge<T: RealScalar>(entry: &mut BoundEntry<T>, gap: T) {
    if let Some(v) = entry.value {
        let margin = gap - v;
        entry.margin = Some(margin);
        entry.holds = Some(margin > -T::lit(HOLDS_SLACK));
    }
}

/// Evaluates the four irregular-graph bounds on `g` against its true gap.
///
/// `g` must be connected. A spectral failure is recorded in
/// [`BoundReport::error`] and leaves `holds` unset; it does not abort the
/// report. When any margin is within `1e-9` of zero the gap is recomputed
/// with the dense oracle (for `n ≤ 64`).
pub fn bound_report<T: RealScalar>(g: &Graph, opts: &ReportOptions<T>) -> Result<BoundReport<T>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let k = vertex_connectivity(g)?;
    let diameter = g.diameter();
    let delta = g.max_degree();
    let mut entries = Vec::new();
    for kind in BoundKind::IRREGULAR {
        let ks: Vec<usize> = match (kind.uses_connectivity(), opts.all_k) {
            (false, _) => vec![k],
            (true, false) => vec![k],
            (true, true) => (1..=k.max(1)).collect(),
        };
        for kk in ks {
            entries.push(BoundEntry {
                kind,
                k: kind.uses_connectivity().then_some(kk),
                value: bound_value(kind, g, kk, diameter),
                holds: None,
                margin: None,
            });
        }
    }
    let mut report = BoundReport {
        graph6: graph6::encode(g),
        n: g.order(),
        m: g.size(),
        delta,
        k,
        diameter,
        lambda1: None,
        true_gap: None,
        method: None,
        entries,
        error: None,
    };
    let spectrum = match spectral_radius(g, opts.tol) {
        Ok(s) => s,
        Err(e) => {
            report.error = Some(e.to_string());
            return Ok(report);
        }
    };
    report.fill(delta, spectrum.lambda1, spectrum.method);
    let close = report.entries.iter().filter_map(|e| e.margin).any(|mg| mg.abs() < T::lit(COMPARE_MARGIN));
    if close && g.order() <= DENSE_MAX_ORDER {
        match dense_eigensolve::<T>(g) {
            Ok(d) => report.fill(delta, d.lambda1, d.method),
            Err(e) => report.error = Some(e.to_string()),
        }
    }
    Ok(report)
}

impl<T: RealScalar> BoundReport<T> {
    fn fill(&mut self, delta: usize, lambda1: T, method: Method) {
        let gap = T::of_usize(delta) - lambda1;
        self.lambda1 = Some(lambda1);
        self.true_gap = Some(gap);
        self.method = Some(method);
        for e in &mut self.entries {
            judge(e, gap);
        }
    }
}

/// Outcome of comparing a proper subgraph of a regular graph with the
/// improved subgraph bound.
#[derive(Debug, Clone, PartialEq)]
pub struct SubgraphCheck<T> {
    pub delta: usize,
    /// Connectivity of the regular host.
    pub k: usize,
    pub lambda1: T,
    /// `Δ − λ₁(H)`.
    pub gap: T,
    pub bound: T,
    pub holds: bool,
    pub method: Method,
}

/// Checks `Δ − λ₁(H)` against the improved subgraph bound with `n = |G|`
/// and `k = κ(G)`.
///
/// `embedding[i]` is the host vertex of `h`'s vertex `i`; without one, `h`
/// is read on the host's own labels. `h` must differ from `g_regular`.
pub fn subgraph_gap_check<T: RealScalar>(
    g_regular: &Graph,
    h: &Graph,
    embedding: Option<&[usize]>,
    tol: T,
) -> Result<SubgraphCheck<T>> {
    let g = g_regular;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_regular() {
        return Err(Error::InvalidParameter("host graph is not regular".into()));
    }
    check_embedding(g, h, embedding)?;
    let delta = g.max_degree();
    let k = vertex_connectivity(g)?;
    let bound: T = improved_subgraph_bound(g.order(), delta, k)
        .ok_or_else(|| Error::InvalidParameter(format!("bound undefined for n = {}, Δ = {delta}, k = {k}", g.order())))?;
    let mut spec: SpectralResult<T> = spectral_radius(h, tol)?;
    let gap_of = |l: T| T::of_usize(delta) - l;
    if (gap_of(spec.lambda1) - bound).abs() < T::lit(COMPARE_MARGIN) && h.order() <= DENSE_MAX_ORDER {
        spec = dense_eigensolve(h)?;
    }
    let gap = gap_of(spec.lambda1);
    Ok(SubgraphCheck {
        delta,
        k,
        lambda1: spec.lambda1,
        gap,
        bound,
        holds: gap - bound > -T::lit(HOLDS_SLACK),
        method: spec.method,
    })
}

fn check_embedding(g: &Graph, h: &Graph, embedding: Option<&[usize]>) -> Result<()> {
    let identity: Vec<usize> = (0..h.order()).collect();
    let map = embedding.unwrap_or(&identity);
    if map.len() != h.order() {
        return Err(Error::NotSubgraph(format!("embedding has {} entries for {} vertices", map.len(), h.order())));
    }
    let mut seen = vec![false; g.order()];
    for &v in map {
        if v >= g.order() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotSubgraph(format!("embedding is not injective into {} vertices", g.order())));
        }
    }
    if let Some((u, v)) = h.edges().find(|&(u, v)| !g.has_edge(map[u], map[v])) {
        return Err(Error::NotSubgraph(format!("edge ({u}, {v}) maps to a non-edge")));
    }
    if h.order() == g.order() && h.size() == g.size() {
        return Err(Error::NotSubgraph("subgraph is not proper".into()));
    }
    Ok(())
}

/// If some vertex carrying the largest entry of the Perron vector has degree
/// below `Δ`, then `λ₁ ≤ Δ − 1`. Returns `None` when no such vertex exists,
/// otherwise whether the conclusion holds for `spectrum`.
pub fn max_entry_degree_gate<T: RealScalar>(g: &Graph, spectrum: &SpectralResult<T>) -> Option<bool> {
    let x = &spectrum.eigenvector;
    let top = x.iter().copied().fold(T::zero(), T::max);
    let delta = g.max_degree();
    let tie = T::lit(1e-12);
    let low = (0..g.order()).any(|v| top - x[v] <= tie && g.degree(v) < delta);
    low.then(|| spectrum.lambda1 <= T::of_usize(delta) - T::one() + T::lit(1e-9))
}
