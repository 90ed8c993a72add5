//! Cyclic Jacobi eigen-decomposition for small dense symmetric matrices.

use super::{per_component, residual, Method, SpectralResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::RealScalar;

/// Largest order accepted by [`dense_eigensolve`].
pub const DENSE_MAX_ORDER: usize = 64;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order; column `j` of `vectors` pairs with
/// `values[j]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen<T> {
    pub values: Vec<T>,
    pub vectors: Vec<Vec<T>>,
    pub sweeps: usize,
}

/// Diagonalises a symmetric matrix given as rows.
pub fn symmetric_eigen<T: RealScalar>(matrix: &[Vec<T>]) -> SymmetricEigen<T> {
    let n = matrix.len();
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let mut v: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect();
    let scale = a.iter().flatten().fold(T::zero(), |acc, &x| acc + x * x).sqrt();
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS {
        let off = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).fold(T::zero(), |acc, (p, q)| acc + a[p][q] * a[p][q]);
        if off.sqrt() <= T::epsilon() * scale {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == T::zero() {
                    continue;
                }
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&i| a[i][i]).collect();
    let vectors = (0..n).map(|r| order.iter().map(|&c| v[r][c]).collect()).collect();
    SymmetricEigen { values, vectors, sweeps }
}

// Annihilates a[p][q] with the rotation from Golub & Van Loan, 8.5.2.
// rows p and q are both written, so they are indexed rather than iterated
#[allow(clippy::needless_range_loop)]
fn rotate<T: RealScalar>(a: &mut [Vec<T>], v: &mut [Vec<T>], p: usize, q: usize) {
    let n = a.len();
    let two = T::one() + T::one();
    let theta = (a[q][q] - a[p][p]) / (two * a[p][q]);
    let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
    let t = if theta == T::zero() { T::one() } else { t };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    for row in a.iter_mut() {
        let (akp, akq) = (row[p], row[q]);
        row[p] = c * akp - s * akq;
        row[q] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p][k], a[q][k]);
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    for row in v.iter_mut() {
        let (vp, vq) = (row[p], row[q]);
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

/// `λ₁` and Perron vector from a full dense decomposition of `A`, for
/// `n ≤ 64`. Disconnected graphs are handled per component as in
/// [`super::spectral_radius`].
pub fn dense_eigensolve<T: RealScalar>(g: &Graph) -> Result<SpectralResult<T>> {
    if g.order() > DENSE_MAX_ORDER {
        return Err(Error::ScaleCap { op: "dense_eigensolve", n: g.order(), max: DENSE_MAX_ORDER });
    }
    per_component(g, dense_connected, Method::DenseOracle)
}

fn dense_connected<T: RealScalar>(g: &Graph) -> Result<SpectralResult<T>> {
    let n = g.order();
    let eig = symmetric_eigen(&g.adjacency_matrix::<T>());
    let lambda1 = eig.values[n - 1];
    let mut x: Vec<T> = eig.vectors.iter().map(|row| row[n - 1]).collect();
    // Perron vector of a connected graph is single-signed; fix the sign and
    // clear rounding noise below zero.
    let sum = x.iter().fold(T::zero(), |acc, &xi| acc + xi);
    if sum < T::zero() {
        x.iter_mut().for_each(|xi| *xi = -*xi);
    }
    x.iter_mut().for_each(|xi| *xi = xi.max(T::zero()));
    let norm = x.iter().fold(T::zero(), |acc, &xi| acc + xi * xi).sqrt();
    x.iter_mut().for_each(|xi| *xi = *xi / norm);
    let residual = residual(g, lambda1, &x);
    Ok(SpectralResult { lambda1, eigenvector: x, iterations: eig.sweeps, residual, method: Method::DenseOracle })
}
