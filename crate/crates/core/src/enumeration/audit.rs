use super::canon::certificate;
use super::generate::{enumerate_class, ClassSpec, EnumerationRun};
use crate::constructions::{build_bn, unsaturated_vertices};
use crate::error::{Error, Result};
use crate::graph::{bipartition, degree_sequence, graph6, DegreeSequence};

/// Structural checks on the λ₁-argmax of the connected irregular subcubic
/// bipartite graphs of one order.
#[derive(Debug, Clone, PartialEq)]
pub struct MaximalAudit {
    pub n: usize,
    pub graph6: String,
    pub lambda1: f64,
    /// Runner-up margin, when there is a runner-up.
    pub margin: Option<f64>,
    pub unique: bool,
    pub catalog_size: usize,
    pub degree_sequence: DegreeSequence,
    /// (a) the degree sequence has the expected shape for the parity of `n`.
    pub degree_pattern: bool,
    /// (b) exactly two vertices of degree below 3.
    pub two_unsaturated: bool,
    /// (c) no degree-2 vertex lies on a cut edge.
    pub no_degree_two_bridge: bool,
    /// (d) every cut edge separates the two unsaturated vertices.
    pub bridges_separate: bool,
    /// (e) isomorphic to `B_n`.
    pub isomorphic_to_bn: bool,
    pub cut_edges: Vec<(usize, usize)>,
}

impl MaximalAudit {
    pub fn passed(&self) -> bool {
        self.unique
            && self.degree_pattern
            && self.two_unsaturated
            && self.no_degree_two_bridge
            && self.bridges_separate
            && self.isomorphic_to_bn
    }
}

/// Degree sequence a maximal graph of order `n ≥ 6` must have.
pub fn expected_degree_sequence(n: usize) -> DegreeSequence {
    if n.is_multiple_of(2) {
        let side = [vec![3; n / 2 - 1], vec![2]].concat();
        DegreeSequence::bipartite(side.clone(), side)
    } else {
        DegreeSequence::bipartite(vec![3; (n - 1) / 2], [vec![3; (n - 3) / 2], vec![2, 1]].concat())
    }
}

/// Enumerates the class for `n` and audits its argmax.
pub fn audit_order(n: usize) -> Result<MaximalAudit> {
    if n < 6 {
        return Err(Error::TooFewVertices { op: "verify_maximal_structure", n, min: 6 });
    }
    verify_maximal_structure(&enumerate_class(ClassSpec::bipartite(n, 3))?)
}

pub fn verify_maximal_structure(run: &EnumerationRun) -> Result<MaximalAudit> {
    let n = run.spec.n;
    if n < 6 || !run.spec.bipartite || run.spec.delta_max != Some(3) {
        return Err(Error::InvalidParameter("audit needs a subcubic bipartite run with n ≥ 6".into()));
    }
    let arg = run.argmax.as_ref().ok_or_else(|| Error::InvalidParameter("run has no argmax".into()))?;
    let g = &run.catalog[arg.index];
    let bip = bipartition(g)?;
    let seq = degree_sequence(g, Some(&bip))?;
    let unsat = unsaturated_vertices(g, 3);
    let cuts = g.cut_edges();
    let no_degree_two_bridge = cuts.iter().all(|&(a, b)| g.degree(a) != 2 && g.degree(b) != 2);
    let bridges_separate = unsat.len() == 2
        && cuts.iter().all(|&(a, b)| {
            let h = g.without_edge(a, b).expect("cut edge is an edge");
            h.distances_from(unsat[0])[unsat[1]].is_none()
        });
    let (bn, _) = build_bn(n)?;
    Ok(MaximalAudit {
        n,
        graph6: graph6::encode(g),
        lambda1: arg.lambda1,
        margin: arg.margin,
        unique: arg.unique,
        catalog_size: run.catalog.len(),
        degree_pattern: seq == expected_degree_sequence(n),
        degree_sequence: seq,
        two_unsaturated: unsat.len() == 2,
        no_degree_two_bridge,
        bridges_separate,
        isomorphic_to_bn: certificate(g)? == certificate(&bn)?,
        cut_edges: cuts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_family, Family};

    #[test]
    fn four_vertices_has_only_the_star_at_degree_three() {
        let run = enumerate_class(ClassSpec::bipartite(4, 3)).unwrap();
        // P_4, K_{1,3}, C_4
        assert_eq!(run.catalog.len(), 3);
        let with3: Vec<_> = run.catalog.iter().filter(|g| g.max_degree() == 3).collect();
        assert_eq!(with3.len(), 1);
        assert_eq!(certificate(with3[0]).unwrap(), certificate(&build_family(Family::Star(3)).unwrap()).unwrap());
    }

    #[test]
    fn five_vertices_argmax_is_k23() {
        let run = enumerate_class(ClassSpec::bipartite(5, 3)).unwrap();
        let k23 = build_family(Family::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(certificate(run.argmax_graph().unwrap()).unwrap(), certificate(&k23).unwrap());
    }

    #[test]
    fn audits_six_to_nine() {
        for n in 6..=9 {
            let a = audit_order(n).unwrap();
            assert!(a.passed(), "{a:?}");
            assert!(a.margin.unwrap() > 1e-9);
        }
        let a9 = audit_order(9).unwrap();
        assert_eq!(a9.cut_edges.len(), 1);
        let a6 = audit_order(6).unwrap();
        assert_eq!(a6.degree_sequence.to_string(), "(3,3,2 | 3,3,2)");
    }
}
