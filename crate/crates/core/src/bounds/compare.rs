//! Comparisons between bounds: per-instance winners on trees and
//! dominance scans over parameter grids.

use super::{
    chen_hou_connectivity_bound, chen_hou_subgraph_bound, cioaba_bound, connectivity_core,
    improved_connectivity_bound, improved_subgraph_bound, stevanovic_bound, BoundKind,
};
use crate::error::{Error, Result};
use crate::graph::graph6;
use crate::scalar::Scalar;

/// Values closer than this are a tie.
pub const WINNER_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Winner {
    First,
    Second,
    Tie,
}

impl Winner {
    pub fn decide(first: f64, second: f64) -> Self {
        if first > second + WINNER_MARGIN {
            Winner::First
        } else if second > first + WINNER_MARGIN {
            Winner::Second
        } else {
            Winner::Tie
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Winner::First => "first",
            Winner::Second => "second",
            Winner::Tie => "tie",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub k: usize,
    pub diameter: usize,
    pub first: f64,
    pub second: f64,
    pub winner: Winner,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundComparison {
    pub first: BoundKind,
    pub second: BoundKind,
    pub region: String,
    pub rows: Vec<ComparisonRow>,
    pub first_wins: usize,
    pub second_wins: usize,
    pub ties: usize,
}

impl BoundComparison {
    fn new(first: BoundKind, second: BoundKind, region: String, rows: Vec<ComparisonRow>) -> Self {
        let count = |w: Winner| rows.iter().filter(|r| r.winner == w).count();
        let (first_wins, second_wins, ties) = (count(Winner::First), count(Winner::Second), count(Winner::Tie));
        Self { first, second, region, rows, first_wins, second_wins, ties }
    }
}

/// Both tree comparisons over all trees of order `n`: the diameter bound
/// against the improved connectivity bound with `k = 1`, and the improved
/// bound against the degree-only bound.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeComparison {
    pub diameter_vs_improved: BoundComparison,
    pub improved_vs_stevanovic: BoundComparison,
}

/// Largest tree order accepted by [`remark_comparison_trees`].
pub const TREE_COMPARISON_MAX: usize = 12;

pub fn remark_comparison_trees(n: usize) -> Result<TreeComparison> {
    if n > TREE_COMPARISON_MAX {
        return Err(Error::ScaleCap { op: "remark_comparison_trees", n, max: TREE_COMPARISON_MAX });
    }
    if n < 3 {
        return Err(Error::TooFewVertices { op: "remark_comparison_trees", n, min: 3 });
    }
    let trees = crate::enumeration::enumerate_trees(n)?;
    let mut diam = Vec::new();
    let mut stev = Vec::new();
    for t in &trees {
        let (m, delta) = (t.size(), t.max_degree());
        let d = t.diameter().expect("trees are connected");
        let row = |first: Option<f64>, second: Option<f64>| {
            let (first, second) = (first.unwrap_or(f64::NAN), second.unwrap_or(f64::NAN));
            ComparisonRow {
                graph6: graph6::encode(t),
                n,
                m,
                delta,
                k: 1,
                diameter: d,
                first,
                second,
                winner: Winner::decide(first, second),
            }
        };
        let improved = improved_connectivity_bound::<f64>(n, m, delta, 1);
        diam.push(row(cioaba_bound(n, Some(d)), improved));
        stev.push(row(improved, stevanovic_bound(n, delta)));
    }
    let region = format!("trees on {n} vertices, k = 1");
    Ok(TreeComparison {
        diameter_vs_improved: BoundComparison::new(
            BoundKind::Cioaba,
            BoundKind::ImprovedConnectivity,
            region.clone(),
            diam,
        ),
        improved_vs_stevanovic: BoundComparison::new(
            BoundKind::ImprovedConnectivity,
            BoundKind::Stevanovic,
            region,
            stev,
        ),
    })
}

/// Parameter tuple `(n, m, Δ, k)` of a connectivity bound.
pub type ConnTuple = (usize, usize, usize, usize);

#[derive(Debug, Clone, Default, PartialEq)]
pub struct DominanceScan {
    pub checked: usize,
    pub strict: usize,
    pub equal: Vec<ConnTuple>,
    pub violations: Vec<ConnTuple>,
}

impl DominanceScan {
    pub fn all_strict(&self) -> bool {
        self.checked > 0 && self.strict == self.checked
    }
}

/// Compares the improved connectivity bound with its predecessor on every
/// tuple `3 ≤ n ≤ n_max`, `1 ≤ k ≤ n − 2`, `Δ ∈ delta_range(n, k)` and
/// every deficiency `1 ≤ nΔ − 2m ≤ nΔ − 2(n − 1)`, evaluated in `T`.
pub fn connectivity_dominance_scan<T: Scalar>(
    n_max: usize,
    delta_range: impl Fn(usize, usize) -> std::ops::RangeInclusive<usize>,
) -> DominanceScan {
    let mut scan = DominanceScan::default();
    for n in 3..=n_max {
        for k in 1..=n - 2 {
            for delta in delta_range(n, k) {
                let top = n * delta;
                let min_m = n - 1;
                // m from the most deficient connected graph up to nΔ/2 − ½
                for m in min_m..=(top - 1) / 2 {
                    let (Some(a), Some(b)) = (
                        improved_connectivity_bound::<T>(n, m, delta, k),
                        chen_hou_connectivity_bound::<T>(n, m, delta, k),
                    ) else {
                        continue;
                    };
                    scan.checked += 1;
                    if a > b {
                        scan.strict += 1;
                    } else if a == b {
                        scan.equal.push((n, m, delta, k));
                    } else {
                        scan.violations.push((n, m, delta, k));
                    }
                }
            }
        }
    }
    scan
}

/// Degrees an irregular `k`-connected graph of order `n` can have as its
/// maximum: `κ ≤ δ < Δ ≤ n − 1`.
pub fn admissible_delta(n: usize, k: usize) -> std::ops::RangeInclusive<usize> {
    k + 1..=n - 1
}

/// Integer form of the same comparison: `n² − 2n + 2k` minus the improved
/// denominator core, which equals `2k − 1 + (n − k − 1)(Δ − k + 1)`.
pub fn connectivity_denominator_gap(n: usize, delta: usize, k: usize) -> i64 {
    let (n2, k2) = (n as i64, k as i64);
    n2 * n2 - 2 * n2 + 2 * k2 - connectivity_core(n, delta, k)
}

/// `(Φ₂ − Φ₁)` computed from its definition and from the expanded
/// polynomial, with `d = n − Δ`:
/// `Φ₂ = k²d(d + 2k − 4)`, `Φ₁ = (k − 1)²(d − 1)(d + 2k − 2)`.
pub fn phi_difference(d: i64, k: i64) -> (i64, i64) {
    let phi2 = k * k * d * (d + 2 * k - 4);
    let phi1 = (k - 1) * (k - 1) * (d - 1) * (d + 2 * k - 2);
    let expanded = (2 * k - 1) * d * d + (3 * k * k - 8 * k + 3) * d + 2 * (k - 1).pow(3);
    (phi2 - phi1, expanded)
}

/// One grid point of [`subgraph_dominance_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiPoint {
    pub d: i64,
    pub k: i64,
    pub direct: i64,
    pub expanded: i64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SubgraphDominance {
    pub points: Vec<PhiPoint>,
    /// Bound pairs evaluated in the scalar type.
    pub checked: usize,
    /// Pairs where the improved bound was not strictly larger.
    pub violations: Vec<(usize, usize, usize)>,
}

impl SubgraphDominance {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.points.iter().all(|p| p.direct == p.expanded && p.direct > 0)
    }
}

/// Checks `Φ₂ − Φ₁ > 0` on `k ∈ ks`, `n − Δ ∈ ds`, and compares the two
/// subgraph bounds in `T` at `Δ = k, …, k + extra_delta` for each point.
pub fn subgraph_dominance_scan<T: Scalar>(
    ks: std::ops::RangeInclusive<usize>,
    ds: std::ops::RangeInclusive<usize>,
    extra_delta: usize,
) -> SubgraphDominance {
    let mut out = SubgraphDominance::default();
    for k in ks {
        for d in ds.clone() {
            let (direct, expanded) = phi_difference(d as i64, k as i64);
            out.points.push(PhiPoint { d: d as i64, k: k as i64, direct, expanded });
            for delta in k..=k + extra_delta {
                let n = delta + d;
                let (Some(a), Some(b)) =
                    (improved_subgraph_bound::<T>(n, delta, k), chen_hou_subgraph_bound::<T>(n, delta, k))
                else {
                    continue;
                };
                out.checked += 1;
                if a <= b {
                    out.violations.push((n, delta, k));
                }
            }
        }
    }
    out
}
