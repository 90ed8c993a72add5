use crate::constructions::{build_bn, build_family, Family};
use crate::error::{Error, Result};
use crate::spectral::{spectral_radius, DEFAULT_TOL};

/// One order of the extremal family with its scaled gap.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureRow {
    pub n: usize,
    pub lambda1: f64,
    /// `Δ − λ₁`.
    pub gap: f64,
    /// `n²(Δ − λ₁)`.
    pub n2_gap: f64,
    /// `n²(Δ − λ₁) / (Δ − 1)`.
    pub ratio: f64,
    pub iterations: usize,
}

/// Scaled gaps for the extremal family of maximum degree `delta`: paths for
/// `Δ = 2`, `B_n` for `Δ = 3`. Each row is solved independently; a failure
/// stays in its row.
pub fn conjecture_scan(n_values: &[usize], delta: usize) -> Result<Vec<Result<ConjectureRow>>> {
    let (min, build): (usize, fn(usize) -> Result<crate::Graph>) = match delta {
        2 => (2, |n| build_family(Family::Path(n))),
        3 => (6, |n| build_bn(n).map(|(g, _)| g)),
        _ => return Err(Error::InvalidParameter(format!("no extremal family for Δ = {delta}"))),
    };
    Ok(n_values
        .iter()
        .map(|&n| {
            if n < min {
                return Err(Error::TooFewVertices { op: "conjecture_scan", n, min });
            }
            let g = build(n)?;
            let s = spectral_radius::<f64>(&g, DEFAULT_TOL)?;
            let d = delta as f64;
            let gap = d - s.lambda1;
            let n2 = (n * n) as f64;
            Ok(ConjectureRow {
                n,
                lambda1: s.lambda1,
                gap,
                n2_gap: n2 * gap,
                ratio: n2 * gap / (d - 1.0),
                iterations: s.iterations,
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b6_row() {
        let rows = conjecture_scan(&[6], 3).unwrap();
        let r = rows[0].as_ref().unwrap();
        assert!((r.lambda1 - (1.0 + 3f64.sqrt())).abs() < 1e-12);
        assert!((r.ratio - 18.0 * (2.0 - 3f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn path_rows() {
        let rows = conjecture_scan(&[10, 100], 2).unwrap();
        for r in rows {
            let r = r.unwrap();
            let exact = 2.0 * (std::f64::consts::PI / (r.n as f64 + 1.0)).cos();
            assert!((r.lambda1 - exact).abs() < 1e-10);
        }
    }

    #[test]
    fn bad_rows_stay_local() {
        let rows = conjecture_scan(&[5, 7], 3).unwrap();
        assert!(rows[0].is_err());
        assert!(rows[1].is_ok());
        assert!(conjecture_scan(&[10], 4).is_err());
    }
}
