//! Isomorphism decisions for colored digraphs and adapted structures.
//!
//! Both inputs are refined jointly as one disjoint union, so class ids are
//! shared. The search individualizes the least-index source node whose class
//! is not yet a singleton and tries target candidates in ascending order.
//! Refinement never discards a valid isomorphism, so the first mapping found
//! is the lexicographically least one.

mod refine;

pub use refine::{color_refine, RefinementPartition};

use refine::Adjacency;

use crate::groups::{group_iso, FiniteGroup};
use crate::structures::{
    Arc, ColoredDigraph, FiniteLattice, FinitePoset, Isomorphism, UndirectedGraph,
};

/// The lexicographically least color- and direction-preserving node
/// bijection `d1 -> d2`, or `None`. Labels are ignored.
pub fn digraph_iso(d1: &ColoredDigraph, d2: &ColoredDigraph) -> Option<Isomorphism> {
    if d1.node_count() != d2.node_count()
        || d1.arc_count() != d2.arc_count()
        || d1.color_counts() != d2.color_counts()
    {
        return None;
    }
    // Isolated nodes can be matched in any order; pair them up ascending.
    let (core1, iso1) = split_isolated(d1);
    let (core2, iso2) = split_isolated(d2);
    if iso1.len() != iso2.len() {
        return None;
    }
    let sub1 = induced(d1, &core1);
    let sub2 = induced(d2, &core2);
    let sub = Matcher::new(&sub1, &sub2).run()?;
    let mut mapping = vec![0; d1.node_count()];
    for (i, &v) in core1.iter().enumerate() {
        mapping[v] = core2[sub[i]];
    }
    for (&v, &w) in iso1.iter().zip(&iso2) {
        mapping[v] = w;
    }
    let phi = Isomorphism::new(mapping).expect("bijection by construction");
    phi.verify_digraph(d1, d2).then_some(phi)
}

/// Undirected edges become pairs of opposite color-1 arcs.
pub fn graph_to_digraph(g: &UndirectedGraph) -> ColoredDigraph {
    ColoredDigraph::new(
        g.vertex_count(),
        g.edges()
            .iter()
            .flat_map(|&(u, v)| [Arc::new(u, v, 1), Arc::new(v, u, 1)]),
    )
    .expect("simple graph arcs are distinct")
}

pub fn graph_iso(g1: &UndirectedGraph, g2: &UndirectedGraph) -> Option<Isomorphism> {
    let phi = digraph_iso(&graph_to_digraph(g1), &graph_to_digraph(g2))?;
    phi.verify_graph(g1, g2).then_some(phi)
}

/// Isomorphism of orders, decided on Hasse digraphs.
pub fn poset_iso(p1: &FinitePoset, p2: &FinitePoset) -> Option<Isomorphism> {
    let phi = digraph_iso(&p1.hasse_digraph(), &p2.hasse_digraph())?;
    phi.verify_poset(p1, p2).then_some(phi)
}

/// Lattice isomorphism as isomorphism of the induced orders. The result also
/// transports meet and join tables.
pub fn lattice_iso(l1: &FiniteLattice, l2: &FiniteLattice) -> Option<Isomorphism> {
    let phi = poset_iso(&l1.to_poset(), &l2.to_poset())?;
    debug_assert!(phi.verify_lattice(l1, l2));
    phi.verify_lattice(l1, l2).then_some(phi)
}

/// Structure kinds the engine can compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Graph,
    Digraph,
    Poset,
    Lattice,
    Group,
}

/// Convenience dispatcher over the structure kinds.
pub enum Structure {
    Graph(UndirectedGraph),
    Digraph(ColoredDigraph),
    Poset(FinitePoset),
    Lattice(FiniteLattice),
    Group(FiniteGroup),
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Graph(_) => Kind::Graph,
            Structure::Digraph(_) => Kind::Digraph,
            Structure::Poset(_) => Kind::Poset,
            Structure::Lattice(_) => Kind::Lattice,
            Structure::Group(_) => Kind::Group,
        }
    }
}

/// `None` for mismatched kinds.
pub fn structure_iso(a: &Structure, b: &Structure) -> Option<Option<Isomorphism>> {
    Some(match (a, b) {
        (Structure::Graph(x), Structure::Graph(y)) => graph_iso(x, y),
        (Structure::Digraph(x), Structure::Digraph(y)) => digraph_iso(x, y),
        (Structure::Poset(x), Structure::Poset(y)) => poset_iso(x, y),
        (Structure::Lattice(x), Structure::Lattice(y)) => lattice_iso(x, y),
        (Structure::Group(x), Structure::Group(y)) => group_iso(x, y),
        _ => return None,
    })
}

fn split_isolated(d: &ColoredDigraph) -> (Vec<usize>, Vec<usize>) {
    let mut touched = vec![false; d.node_count()];
    for a in d.arcs() {
        touched[a.src] = true;
        touched[a.dst] = true;
    }
    (0..d.node_count()).partition(|&v| touched[v])
}

/// Subgraph on `keep` (ascending), renumbered `0..keep.len()`.
fn induced(d: &ColoredDigraph, keep: &[usize]) -> ColoredDigraph {
    let mut index = vec![usize::MAX; d.node_count()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    ColoredDigraph::new(
        keep.len(),
        d.arcs()
            .iter()
            .filter(|a| index[a.src] != usize::MAX && index[a.dst] != usize::MAX)
            .map(|a| Arc::new(index[a.src], index[a.dst], a.color)),
    )
    .expect("induced arcs stay valid")
}

struct Matcher<'a> {
    n: usize,
    adj: Adjacency,
    d1: &'a ColoredDigraph,
    d2: &'a ColoredDigraph,
}

impl<'a> Matcher<'a> {
    fn new(d1: &'a ColoredDigraph, d2: &'a ColoredDigraph) -> Self {
        Matcher {
            n: d1.node_count(),
            adj: Adjacency::union(&[d1, d2]),
            d1,
            d2,
        }
    }

    fn run(&self) -> Option<Vec<usize>> {
        self.search(vec![0; 2 * self.n])
    }

    fn search(&self, classes: Vec<usize>) -> Option<Vec<usize>> {
        let n = self.n;
        debug_assert_eq!(self.adj.len(), 2 * n);
        let (classes, k) = self.adj.refine(&classes);
        let mut counts = vec![(0usize, 0usize); k];
        for (v, &c) in classes.iter().enumerate() {
            if v < n {
                counts[c].0 += 1;
            } else {
                counts[c].1 += 1;
            }
        }
        if counts.iter().any(|&(a, b)| a != b) {
            return None;
        }
        match (0..n).find(|&v| counts[classes[v]].0 > 1) {
            None => {
                let mut target = vec![usize::MAX; k];
                for w in n..2 * n {
                    target[classes[w]] = w - n;
                }
                let mapping: Vec<usize> = (0..n).map(|v| target[classes[v]]).collect();
                let phi = Isomorphism::new(mapping.clone())?;
                phi.verify_digraph(self.d1, self.d2).then_some(mapping)
            }
            Some(x) => {
                for y in (n..2 * n).filter(|&y| classes[y] == classes[x]) {
                    let mut next = classes.clone();
                    next[x] = k;
                    next[y] = k;
                    if let Some(m) = self.search(next) {
                        return Some(m);
                    }
                }
                None
            }
        }
    }
}
