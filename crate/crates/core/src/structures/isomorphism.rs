use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{ColoredDigraph, FiniteLattice, FinitePoset, UndirectedGraph};

/// A bijection between the index sets of two structures: element `i` of the
/// source maps to `mapping[i]` of the target.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Isomorphism {
    mapping: Vec<usize>,
}

impl Isomorphism {
    /// Wraps `mapping` if it is a permutation of `0..len`.
    pub fn new(mapping: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; mapping.len()];
        for &m in &mapping {
            if m >= mapping.len() || std::mem::replace(&mut seen[m], true) {
                return None;
            }
        }
        Some(Isomorphism { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Isomorphism {
            mapping: (0..n).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut mapping: Vec<usize> = (0..n).collect();
        mapping.shuffle(rng);
        Isomorphism { mapping }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            inv[m] = i;
        }
        Isomorphism { mapping: inv }
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &Isomorphism) -> Self {
        Isomorphism {
            mapping: self.mapping.iter().map(|&m| then.mapping[m]).collect(),
        }
    }

    pub fn verify_digraph(&self, a: &ColoredDigraph, b: &ColoredDigraph) -> bool {
        a.node_count() == self.len()
            && b.node_count() == self.len()
            && a.arc_count() == b.arc_count()
            && a.arcs()
                .iter()
                .all(|arc| b.has_arc(self.apply(arc.src), self.apply(arc.dst), arc.color))
    }

    pub fn verify_graph(&self, a: &UndirectedGraph, b: &UndirectedGraph) -> bool {
        a.vertex_count() == self.len()
            && b.vertex_count() == self.len()
            && a.edge_count() == b.edge_count()
            && a.edges()
                .iter()
                .all(|&(u, v)| b.has_edge(self.apply(u), self.apply(v)))
    }

    /// Order-preserving in both directions.
    pub fn verify_poset(&self, a: &FinitePoset, b: &FinitePoset) -> bool {
        let n = self.len();
        a.len() == n
            && b.len() == n
            && (0..n).all(|x| (0..n).all(|y| a.leq(x, y) == b.leq(self.apply(x), self.apply(y))))
    }

    /// Transports both meet and join tables.
    pub fn verify_lattice(&self, a: &FiniteLattice, b: &FiniteLattice) -> bool {
        let n = self.len();
        a.len() == n
            && b.len() == n
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    b.meet(self.apply(x), self.apply(y)) == self.apply(a.meet(x, y))
                        && b.join(self.apply(x), self.apply(y)) == self.apply(a.join(x, y))
                })
            })
    }
}
