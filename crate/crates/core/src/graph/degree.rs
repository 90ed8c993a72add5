use std::fmt;

use super::{Bipartition, Graph, Side};
use crate::error::Result;

/// Degree sequence, each part sorted in non-increasing order.
///
/// For bipartite graphs the two parts are ordered so that the
/// lexicographically larger one comes first, which makes the value
/// independent of which side was labelled `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DegreeSequence {
    General(Vec<usize>),
    Bipartite(Vec<usize>, Vec<usize>),
}

impl DegreeSequence {
    pub fn bipartite(mut a: Vec<usize>, mut b: Vec<usize>) -> Self {
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        if b > a {
            std::mem::swap(&mut a, &mut b);
        }
        DegreeSequence::Bipartite(a, b)
    }

    pub fn total(&self) -> usize {
        match self {
            DegreeSequence::General(d) => d.iter().sum(),
            DegreeSequence::Bipartite(a, b) => a.iter().sum::<usize>() + b.iter().sum::<usize>(),
        }
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |d: &[usize]| d.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            DegreeSequence::General(d) => write!(f, "({})", join(d)),
            DegreeSequence::Bipartite(a, b) => write!(f, "({} | {})", join(a), join(b)),
        }
    }
}

/// Degree sequence of `g`, split by `bip` when one is supplied.
pub fn degree_sequence(g: &Graph, bip: Option<&Bipartition>) -> Result<DegreeSequence> {
    match bip {
        None => {
            let mut d = g.degrees();
            d.sort_unstable_by(|x, y| y.cmp(x));
            Ok(DegreeSequence::General(d))
        }
        Some(bip) => {
            bip.check(g)?;
            let side = |s| bip.part(s).into_iter().map(|v| g.degree(v)).collect();
            Ok(DegreeSequence::bipartite(side(Side::X), side(Side::Y)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartition;

    #[test]
    fn star_sequence() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let bip = bipartition(&g).unwrap();
        let seq = degree_sequence(&g, Some(&bip)).unwrap();
        assert_eq!(seq, DegreeSequence::Bipartite(vec![3], vec![1, 1, 1]));
        assert_eq!(seq.to_string(), "(3 | 1,1,1)");
        assert_eq!(degree_sequence(&g, None).unwrap(), DegreeSequence::General(vec![3, 1, 1, 1]));
    }

    #[test]
    fn inconsistent_bipartition_rejected() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let bip = bipartition(&path).unwrap();
        let triangle = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(degree_sequence(&triangle, Some(&bip)).is_err());
    }

    #[test]
    fn sums_are_even() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert_eq!(degree_sequence(&g, None).unwrap().total() % 2, 0);
    }
}
