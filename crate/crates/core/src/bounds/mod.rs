//! Lower bounds on the spectral gap `Δ − λ₁`.
//!
//! Every formula takes scalar graph parameters rather than a graph, so the
//! same code evaluates single instances ([`bound_report`]) and whole
//! parameter grids ([`compare`]). A formula returns `None` when its
//! hypotheses exclude the parameters (regular input, `k` out of range, ...).
//!
//! | kind | bound |
//! |------|-------|
//! | [`BoundKind::Stevanovic`] | `1 / (2n(nΔ − 1)Δ²)` |
//! | [`BoundKind::Cioaba`] | `1 / (nD)` |
//! | [`BoundKind::ChenHouConnectivity`] | `sk² / (s(n² − 2n + 2k) + nk²)` |
//! | [`BoundKind::ImprovedConnectivity`] | `sk² / (s((n − 1)² − (n − k − 1)(Δ − k + 1)) + nk²)` |
//! | [`BoundKind::ChenHouSubgraph`] | `(k − 1)² / ((n − Δ)(n − Δ + 2k − 4) + n(k − 1)²)` |
//! | [`BoundKind::ImprovedSubgraph`] | `k² / ((n − Δ − 1)(n − Δ + 2k − 2) + nk²)` |
//!
//! with `s = nΔ − 2m` the degree deficiency. The first four bound connected
//! irregular graphs; the last two bound proper subgraphs of a connected
//! `k`-connected `Δ`-regular graph of order `n`.

pub mod compare;
mod report;

pub use report::{
    bound_report, max_entry_degree_gate, subgraph_gap_check, BoundEntry, BoundReport, ReportOptions, SubgraphCheck,
    HOLDS_SLACK,
};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    Stevanovic,
    Cioaba,
    ChenHouConnectivity,
    ImprovedConnectivity,
    ChenHouSubgraph,
    ImprovedSubgraph,
}

impl BoundKind {
    /// Bounds on connected irregular graphs, in report column order.
    pub const IRREGULAR: [BoundKind; 4] =
        [BoundKind::Stevanovic, BoundKind::Cioaba, BoundKind::ChenHouConnectivity, BoundKind::ImprovedConnectivity];

    pub fn id(self) -> &'static str {
        match self {
            BoundKind::Stevanovic => "stevanovic",
            BoundKind::Cioaba => "cioaba",
            BoundKind::ChenHouConnectivity => "chen_hou_conn",
            BoundKind::ImprovedConnectivity => "improved_conn",
            BoundKind::ChenHouSubgraph => "chen_hou_sub",
            BoundKind::ImprovedSubgraph => "improved_sub",
        }
    }

    /// Whether the bound depends on the connectivity `k`.
    pub fn uses_connectivity(self) -> bool {
        !matches!(self, BoundKind::Stevanovic | BoundKind::Cioaba)
    }
}

fn int<T: Scalar>(v: i64) -> T {
    T::of_i64(v)
}

fn positive_ratio<T: Scalar>(num: i64, den: i64) -> Option<T> {
    (num > 0 && den > 0).then(|| int::<T>(num) / int::<T>(den))
}

// Degree deficiency nΔ − 2m, positive exactly for irregular graphs.
fn deficiency(n: usize, m: usize, delta: usize) -> Option<i64> {
    let s = (n * delta) as i64 - 2 * m as i64;
    (s >= 1).then_some(s)
}

/// `1 / (2n(nΔ − 1)Δ²)`, for `n ≥ 2`, `Δ ≥ 1`.
pub fn stevanovic_bound<T: Scalar>(n: usize, delta: usize) -> Option<T> {
    if n < 2 || delta == 0 {
        return None;
    }
    let (n, d) = (n as i64, delta as i64);
    positive_ratio(1, 2 * n * (n * d - 1) * d * d)
}

/// `1 / (nD)`; `None` for infinite (disconnected) or zero diameter.
pub fn cioaba_bound<T: Scalar>(n: usize, diameter: Option<usize>) -> Option<T> {
    let d = diameter.filter(|&d| d >= 1)?;
    if n < 2 {
        return None;
    }
    positive_ratio(1, (n * d) as i64)
}

/// Connectivity bound with denominator `s(n² − 2n + 2k) + nk²`; needs
/// `nΔ − 2m ≥ 1` and `1 ≤ k ≤ n − 2`.
pub fn chen_hou_connectivity_bound<T: Scalar>(n: usize, m: usize, delta: usize, k: usize) -> Option<T> {
    let s = deficiency(n, m, delta)?;
    if k == 0 || k + 2 > n {
        return None;
    }
    let (n, k) = (n as i64, k as i64);
    let den = s * (n * n - 2 * n + 2 * k) + n * k * k;
    positive_ratio(s * k * k, den)
}

/// Connectivity bound with denominator
/// `s((n − 1)² − (n − k − 1)(Δ − k + 1)) + nk²`; same hypotheses as
/// [`chen_hou_connectivity_bound`].
pub fn improved_connectivity_bound<T: Scalar>(n: usize, m: usize, delta: usize, k: usize) -> Option<T> {
    let s = deficiency(n, m, delta)?;
    if k == 0 || k + 2 > n {
        return None;
    }
    let den = s * connectivity_core(n, delta, k) + (n * k * k) as i64;
    positive_ratio(s * (k * k) as i64, den)
}

/// `(n − 1)² − (n − k − 1)(Δ − k + 1)`, the part of the improved
/// denominator that replaces `n² − 2n + 2k`.
pub fn connectivity_core(n: usize, delta: usize, k: usize) -> i64 {
    let (n, d, k) = (n as i64, delta as i64, k as i64);
    (n - 1) * (n - 1) - (n - k - 1) * (d - k + 1)
}

/// Proper-subgraph bound `(k − 1)² / ((n − Δ)(n − Δ + 2k − 4) + n(k − 1)²)`,
/// defined only for `k ≥ 2`.
pub fn chen_hou_subgraph_bound<T: Scalar>(n: usize, delta: usize, k: usize) -> Option<T> {
    if k < 2 || delta == 0 || delta >= n {
        return None;
    }
    let (n, d, k) = (n as i64, delta as i64, k as i64);
    let den = (n - d) * (n - d + 2 * k - 4) + n * (k - 1) * (k - 1);
    positive_ratio((k - 1) * (k - 1), den)
}

/// Proper-subgraph bound `k² / ((n − Δ − 1)(n − Δ + 2k − 2) + nk²)`, for
/// every `k ≥ 1`.
pub fn improved_subgraph_bound<T: Scalar>(n: usize, delta: usize, k: usize) -> Option<T> {
    if k == 0 || delta == 0 || delta >= n {
        return None;
    }
    let (n, d, k) = (n as i64, delta as i64, k as i64);
    let den = (n - d - 1) * (n - d + 2 * k - 2) + n * k * k;
    positive_ratio(k * k, den)
}

/// `a(p − q)² + bq² − abp²/(a + b)`, which is `[ap − (a + b)q]² / (a + b)`
/// and so non-negative, vanishing exactly at `q = ap / (a + b)`.
pub fn shi_inequality_gap<T: Scalar>(a: T, b: T, p: T, q: T) -> Result<T> {
    if !(a > T::zero() && b > T::zero()) {
        return Err(Error::InvalidParameter("shi inequality needs a > 0 and b > 0".into()));
    }
    let pq = p - q;
    Ok(a * pq * pq + b * q * q - a * b * p * p / (a + b))
}
