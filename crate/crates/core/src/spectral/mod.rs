//! Spectral radius and principal eigenvector of the adjacency matrix.
//!
//! [`spectral_radius`] runs power iteration on `A + I`: bipartite spectra are
//! symmetric about zero, and the shift removes the period-two oscillation
//! between `λ₁` and `−λ₁`. [`dense_eigensolve`] is the independent dense
//! oracle used to cross-check it.

mod dense;

pub use dense::{dense_eigensolve, symmetric_eigen, SymmetricEigen, DENSE_MAX_ORDER};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::RealScalar;

/// Iteration cap used by [`spectral_radius`].
pub const DEFAULT_MAX_ITER: usize = 1_000_000;
/// Default residual tolerance for double precision.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Spectral radii closer than this are escalated to the dense oracle before
/// being called equal or ordered.
pub const COMPARE_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    PowerShifted,
    DenseOracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::PowerShifted => "power_shifted",
            Method::DenseOracle => "dense_oracle",
        }
    }
}

/// `λ₁` with a unit, entrywise non-negative eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult<T> {
    pub lambda1: T,
    pub eigenvector: Vec<T>,
    pub iterations: usize,
    /// `‖A·x − λ₁·x‖∞`.
    pub residual: T,
    pub method: Method,
}

#[derive(Debug, Clone, Copy)]
pub struct PowerOptions<T> {
    pub tol: T,
    pub max_iter: usize,
}

impl<T: RealScalar> PowerOptions<T> {
    pub fn new(tol: T) -> Self {
        Self { tol, max_iter: DEFAULT_MAX_ITER }
    }
}

/// Power iteration with the default iteration cap.
pub fn spectral_radius<T: RealScalar>(g: &Graph, tol: T) -> Result<SpectralResult<T>> {
    spectral_radius_with(g, &PowerOptions::new(tol))
}

/// Power iteration on `A + I` from the all-ones vector.
///
/// Iteration stops once the Rayleigh quotient `ρ = xᵗAx` satisfies
/// `‖Ax − ρx‖∞ ≤ tol`. On a disconnected graph each component is solved
/// separately and the one with the largest `λ₁` (first on ties) carries the
/// eigenvector; the other entries are zero.
pub fn spectral_radius_with<T: RealScalar>(g: &Graph, opts: &PowerOptions<T>) -> Result<SpectralResult<T>> {
    if opts.tol.partial_cmp(&T::zero()) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    per_component(g, |h| power_connected(h, opts), Method::PowerShifted)
}

// Shared component split for the power and dense solvers.
pub(crate) fn per_component<T, F>(g: &Graph, mut solve: F, method: Method) -> Result<SpectralResult<T>>
where
    T: RealScalar,
    F: FnMut(&Graph) -> Result<SpectralResult<T>>,
{
    let comps = g.components();
    if comps.len() == 1 {
        return solve(g);
    }
    let mut best: Option<(usize, SpectralResult<T>)> = None;
    let mut iterations = 0;
    for (i, comp) in comps.iter().enumerate() {
        let part = solve(&g.induced(comp)?)?;
        iterations += part.iterations;
        if best.as_ref().is_none_or(|(_, b)| part.lambda1 > b.lambda1) {
            best = Some((i, part));
        }
    }
    let (i, part) = best.expect("a graph has at least one component");
    let mut x = vec![T::zero(); g.order()];
    for (&v, &xv) in comps[i].iter().zip(&part.eigenvector) {
        x[v] = xv;
    }
    let residual = residual(g, part.lambda1, &x);
    Ok(SpectralResult { lambda1: part.lambda1, eigenvector: x, iterations, residual, method })
}

fn power_connected<T: RealScalar>(g: &Graph, opts: &PowerOptions<T>) -> Result<SpectralResult<T>> {
    let n = g.order();
    let mut x = vec![T::one() / T::of_usize(n).sqrt(); n];
    let mut ax = vec![T::zero(); n];
    let mut best = (T::zero(), T::infinity());
    for it in 1..=opts.max_iter {
        adjacency_product(g, &x, &mut ax);
        let rho = dot(&x, &ax);
        let res = x.iter().zip(&ax).fold(T::zero(), |acc, (&xi, &yi)| acc.max((yi - rho * xi).abs()));
        best = (rho, res);
        if res <= opts.tol {
            return Ok(SpectralResult { lambda1: rho, eigenvector: x, iterations: it, residual: res, method: Method::PowerShifted });
        }
        for (xi, &yi) in x.iter_mut().zip(&ax) {
            *xi = *xi + yi;
        }
        let norm = dot(&x, &x).sqrt();
        x.iter_mut().for_each(|xi| *xi = *xi / norm);
    }
    Err(Error::NotConverged {
        iterations: opts.max_iter,
        estimate: best.0.to_f64().unwrap_or(f64::NAN),
        residual: best.1.to_f64().unwrap_or(f64::NAN),
    })
}

fn adjacency_product<T: RealScalar>(g: &Graph, x: &[T], out: &mut [T]) {
    for (v, slot) in out.iter_mut().enumerate() {
        *slot = g.neighbors(v).iter().fold(T::zero(), |acc, &w| acc + x[w]);
    }
}

fn dot<T: RealScalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&p, &q)| acc + p * q)
}

/// `‖A·x − λ·x‖∞`.
pub fn residual<T: RealScalar>(g: &Graph, lambda: T, x: &[T]) -> T {
    let mut ax = vec![T::zero(); g.order()];
    adjacency_product(g, x, &mut ax);
    x.iter().zip(&ax).fold(T::zero(), |acc, (&xi, &yi)| acc.max((yi - lambda * xi).abs()))
}

/// Rayleigh quotient `yᵗAy / yᵗy`.
pub fn rayleigh<T: RealScalar>(g: &Graph, y: &[T]) -> Result<T> {
    if y.len() != g.order() {
        return Err(Error::InvalidParameter(format!("vector of length {} for {} vertices", y.len(), g.order())));
    }
    let norm2 = dot(y, y);
    if norm2 == T::zero() {
        return Err(Error::ZeroVector);
    }
    let two = T::one() + T::one();
    let quad = g.edges().fold(T::zero(), |acc, (u, v)| acc + two * y[u] * y[v]);
    Ok(quad / norm2)
}

/// `λ₁(P_n) = 2 cos(π / (n + 1))`.
pub fn path_lambda<T: RealScalar>(n: usize) -> T {
    let two = T::one() + T::one();
    two * (T::PI() / T::of_usize(n + 1)).cos()
}

/// `λ₁` of `K_n` minus one edge, `(n − 3 + √(n² + 2n − 7)) / 2`, for `n ≥ 3`.
pub fn kn_minus_edge_lambda<T: RealScalar>(n: usize) -> Result<T> {
    if n < 3 {
        return Err(Error::TooFewVertices { op: "kn_minus_edge_lambda", n, min: 3 });
    }
    let nf = T::of_usize(n);
    let disc = nf * nf + T::of_usize(2 * n) - T::of_usize(7);
    Ok((nf - T::of_usize(3) + disc.sqrt()) / T::of_usize(2))
}

/// Compares two spectral radii; pairs closer than [`COMPARE_MARGIN`] are
/// recomputed with the dense oracle when both graphs are small enough.
pub fn compare_lambda(g: &Graph, lg: f64, h: &Graph, lh: f64) -> Result<std::cmp::Ordering> {
    if (lg - lh).abs() >= COMPARE_MARGIN {
        return Ok(lg.total_cmp(&lh));
    }
    if g.order() > DENSE_MAX_ORDER || h.order() > DENSE_MAX_ORDER {
        return Ok(std::cmp::Ordering::Equal);
    }
    let dg = dense_eigensolve::<f64>(g)?.lambda1;
    let dh = dense_eigensolve::<f64>(h)?.lambda1;
    if (dg - dh).abs() < 1e-12 {
        Ok(std::cmp::Ordering::Equal)
    } else {
        Ok(dg.total_cmp(&dh))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn named_examples() {
        let p4 = spectral_radius::<f64>(&path(4), 1e-12).unwrap();
        assert!((p4.lambda1 - 1.618_033_988_749_895).abs() < 1e-10);
        let k33 = spectral_radius::<f64>(&complete_bipartite(3, 3), 1e-12).unwrap();
        assert!((k33.lambda1 - 3.0).abs() < 1e-12);
        let b6 = complete_bipartite(3, 3).without_edge(2, 5).unwrap();
        assert!((spectral_radius(&b6, 1e-12).unwrap().lambda1 - (1.0 + 3f64.sqrt())).abs() < 1e-10);
        let star = complete_bipartite(1, 3);
        assert!((spectral_radius(&star, 1e-12).unwrap().lambda1 - 3f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn eigenvector_invariants() {
        let g = complete_bipartite(2, 3).with_vertex(&[0]).unwrap();
        let r = spectral_radius(&g, 1e-12).unwrap();
        let norm: f64 = r.eigenvector.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(r.eigenvector.iter().all(|&x| x > 0.0));
        assert!(r.residual <= 1e-12);
        assert!((residual(&g, r.lambda1, &r.eigenvector) - r.residual).abs() < 1e-15);
    }

    #[test]
    fn single_precision() {
        let r = spectral_radius::<f32>(&path(4), 1e-5).unwrap();
        assert!((r.lambda1 - 1.618_034).abs() < 1e-4);
    }

    #[test]
    fn disconnected_picks_largest_component() {
        // K_{1,3} on 0..4 plus a disjoint edge 4-5 and isolated vertex 6
        let g = Graph::new(7, [(0, 1), (0, 2), (0, 3), (4, 5)]).unwrap();
        let r = spectral_radius(&g, 1e-12).unwrap();
        assert!((r.lambda1 - 3f64.sqrt()).abs() < 1e-10);
        assert!(r.eigenvector[4..].iter().all(|&x| x == 0.0));
        assert!(r.eigenvector[..4].iter().all(|&x| x > 0.0));
        let edgeless = Graph::empty(3).unwrap();
        assert_eq!(spectral_radius(&edgeless, 1e-12).unwrap().lambda1, 0.0);
    }

    #[test]
    fn non_convergence_is_reported() {
        let opts = PowerOptions { tol: 1e-12, max_iter: 3 };
        match spectral_radius_with(&path(30), &opts) {
            Err(Error::NotConverged { iterations: 3, estimate, .. }) => assert!(estimate > 1.0),
            other => panic!("{other:?}"),
        }
        assert!(spectral_radius(&path(3), 0.0).is_err());
    }

    #[test]
    fn closed_forms() {
        assert!((path_lambda::<f64>(2) - 1.0).abs() < 1e-15);
        assert!((path_lambda::<f64>(3) - 2f64.sqrt()).abs() < 1e-15);
        assert!((path_lambda::<f64>(100) - 1.999_032_6).abs() < 1e-7);
        assert!((kn_minus_edge_lambda::<f64>(3).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert!((kn_minus_edge_lambda::<f64>(4).unwrap() - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((kn_minus_edge_lambda::<f64>(5).unwrap() - (1.0 + 7f64.sqrt())).abs() < 1e-14);
        assert!(kn_minus_edge_lambda::<f64>(2).is_err());
    }

    #[test]
    fn rayleigh_examples() {
        let k33 = complete_bipartite(3, 3);
        assert!((rayleigh::<f64>(&k33, &[1.0; 6]).unwrap() - 3.0).abs() < 1e-15);
        assert!((rayleigh::<f64>(&path(3), &[1.0; 3]).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(rayleigh(&path(3), &[0.0; 3]), Err(Error::ZeroVector));
        let r = spectral_radius::<f64>(&path(7), 1e-12).unwrap();
        assert!((rayleigh(&path(7), &r.eigenvector).unwrap() - r.lambda1).abs() < 1e-12);
    }
}
