use std::collections::BTreeSet;

use thiserror::Error;

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("endpoint {endpoint} out of range for {n} vertices")]
    OutOfRange { endpoint: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

impl UndirectedGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for endpoint in [u, v] {
                if endpoint >= n {
                    return Err(GraphError::OutOfRange { endpoint, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(UndirectedGraph {
            n,
            edges: seen.into_iter().collect(),
        })
    }

    pub fn edgeless(n: usize) -> Self {
        UndirectedGraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        UndirectedGraph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        UndirectedGraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        UndirectedGraph { n: self.n, edges }
    }

    /// Representatives of every isomorphism class of simple graphs on `n`
    /// vertices, found by brute-force canonical forms. Only meant for tiny
    /// `n` (the number of labelled graphs is `2^(n(n-1)/2)`).
    pub fn all_up_to_iso(n: usize) -> Vec<UndirectedGraph> {
        assert!(n <= 6, "exhaustive graph enumeration is limited to n <= 6");
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let g = UndirectedGraph {
                n,
                edges: pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect(),
            };
            let canon = perms
                .iter()
                .map(|p| g.relabel(p).edges)
                .min()
                .unwrap_or_default();
            if seen.insert(canon) {
                out.push(g);
            }
        }
        out
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(
            UndirectedGraph::new(2, [(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            UndirectedGraph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            UndirectedGraph::new(2, [(0, 2)]),
            Err(GraphError::OutOfRange { endpoint: 2, n: 2 })
        ));
    }

    #[test]
    fn counts_graph_classes() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| UndirectedGraph::all_up_to_iso(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11]);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }
}
