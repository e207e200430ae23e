use crate::structures::ColoredDigraph;

/// Coarsest stable coloring reached by iterated neighbourhood signatures.
///
/// Class ids are ranks of sorted signatures, so two isomorphic digraphs
/// with corresponding initial classes receive identical ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementPartition {
    class_of: Vec<usize>,
    num_classes: usize,
}

impl RefinementPartition {
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn classes(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    /// Sorted list of class sizes.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_classes];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes.sort_unstable();
        sizes
    }

    /// Members of every class, indexed by class id.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut cells = vec![Vec::new(); self.num_classes];
        for (v, &c) in self.class_of.iter().enumerate() {
            cells[c].push(v);
        }
        cells
    }
}

const OUT: u8 = 0;
const IN: u8 = 1;

/// Direction, color and the node (or its class) at the other end.
type Edge = (u8, u32, usize);

/// Colored adjacency lists in both directions.
#[derive(Debug, Clone)]
pub(crate) struct Adjacency {
    nbrs: Vec<Vec<Edge>>,
}

impl Adjacency {
    pub(crate) fn new(d: &ColoredDigraph) -> Self {
        Self::union(&[d])
    }

    /// Disjoint union; the nodes of `parts[k]` follow those of `parts[..k]`.
    pub(crate) fn union(parts: &[&ColoredDigraph]) -> Self {
        let total: usize = parts.iter().map(|d| d.node_count()).sum();
        let mut nbrs = vec![Vec::new(); total];
        let mut offset = 0;
        for d in parts {
            for a in d.arcs() {
                nbrs[offset + a.src].push((OUT, a.color, offset + a.dst));
                nbrs[offset + a.dst].push((IN, a.color, offset + a.src));
            }
            offset += d.node_count();
        }
        Adjacency { nbrs }
    }

    pub(crate) fn len(&self) -> usize {
        self.nbrs.len()
    }

    /// Refine `initial` to the coarsest stable partition below it. Returns
    /// canonical class ids and the class count.
    pub(crate) fn refine(&self, initial: &[usize]) -> (Vec<usize>, usize) {
        let (mut classes, mut k) = rank(initial);
        let mut sig: Vec<Edge> = Vec::new();
        loop {
            let signatures: Vec<(usize, Vec<Edge>)> = self
                .nbrs
                .iter()
                .enumerate()
                .map(|(v, list)| {
                    sig.clear();
                    sig.extend(list.iter().map(|&(dir, color, w)| (dir, color, classes[w])));
                    sig.sort_unstable();
                    (classes[v], sig.clone())
                })
                .collect();
            let (next, next_k) = rank(&signatures);
            // new ids lead with the old class, so equal counts mean a fixed point
            if next_k == k {
                return (next, next_k);
            }
            classes = next;
            k = next_k;
        }
    }
}

/// Replace values by their rank among the distinct values.
fn rank<T: Ord + Clone>(values: &[T]) -> (Vec<usize>, usize) {
    let mut distinct: Vec<&T> = values.iter().collect();
    distinct.sort_unstable();
    distinct.dedup();
    let ids = values
        .iter()
        .map(|v| distinct.binary_search(&v).expect("value present"))
        .collect();
    (ids, distinct.len())
}

/// Color refinement of `d`, starting from `initial` classes (all nodes in
/// one class when absent).
pub fn color_refine(d: &ColoredDigraph, initial: Option<&[usize]>) -> RefinementPartition {
    let adj = Adjacency::new(d);
    let start = match initial {
        Some(c) => {
            assert_eq!(
                c.len(),
                d.node_count(),
                "initial classes must cover every node"
            );
            c.to_vec()
        }
        None => vec![0; d.node_count()],
    };
    let (class_of, num_classes) = adj.refine(&start);
    RefinementPartition {
        class_of,
        num_classes,
    }
}
