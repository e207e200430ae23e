use std::collections::BTreeSet;

use thiserror::Error;

/// A directed arc `src -> dst` carrying a positive integer color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub src: usize,
    pub dst: usize,
    pub color: u32,
}

impl Arc {
    pub fn new(src: usize, dst: usize, color: u32) -> Self {
        Arc { src, dst, color }
    }
}

/// Directed multigraph on nodes `0..n` whose arcs carry colors.
///
/// Two arcs may join the same ordered pair of nodes only if their colors
/// differ. Arcs are kept sorted, so structural equality is insensitive to
/// insertion order. Node labels are export metadata only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    n: usize,
    arcs: Vec<Arc>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("arc endpoint {endpoint} out of range for {n} nodes")]
    OutOfRange { endpoint: usize, n: usize },
    #[error("arc color must be positive")]
    ZeroColor,
    #[error("duplicate arc {src} -> {dst} with color {color}")]
    DuplicateArc { src: usize, dst: usize, color: u32 },
    #[error("expected {expected} node labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

impl ColoredDigraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, DigraphError>
    where
        I: IntoIterator<Item = Arc>,
    {
        let mut set = BTreeSet::new();
        for a in arcs {
            for endpoint in [a.src, a.dst] {
                if endpoint >= n {
                    return Err(DigraphError::OutOfRange { endpoint, n });
                }
            }
            if a.color == 0 {
                return Err(DigraphError::ZeroColor);
            }
            if !set.insert(a) {
                return Err(DigraphError::DuplicateArc {
                    src: a.src,
                    dst: a.dst,
                    color: a.color,
                });
            }
        }
        Ok(ColoredDigraph {
            n,
            arcs: set.into_iter().collect(),
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, DigraphError> {
        if labels.len() != self.n {
            return Err(DigraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(&self) -> Self {
        ColoredDigraph {
            n: self.n,
            arcs: self.arcs.clone(),
            labels: None,
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for a in &self.arcs {
            d[a.src] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for a in &self.arcs {
            d[a.dst] += 1;
        }
        d
    }

    /// Number of arcs of each color, sorted by color.
    pub fn color_counts(&self) -> Vec<(u32, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for a in &self.arcs {
            *counts.entry(a.color).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn has_arc(&self, src: usize, dst: usize, color: u32) -> bool {
        self.arcs.binary_search(&Arc::new(src, dst, color)).is_ok()
    }

    /// Out-neighbour lists (ignoring colors), deduplicated and sorted.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for a in &self.arcs {
            out[a.src].push(a.dst);
        }
        for l in &mut out {
            l.dedup();
        }
        out
    }

    /// Some directed cycle, as a node sequence, if one exists.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let succ = self.successors();
        let mut mark = vec![Mark::New; self.n];
        for root in 0..self.n {
            if mark[root] != Mark::New {
                continue;
            }
            // iterative DFS keeping the active path on `stack`
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            mark[root] = Mark::Active;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if let Some(&w) = succ[v].get(*next) {
                    *next += 1;
                    match mark[w] {
                        Mark::New => {
                            mark[w] = Mark::Active;
                            stack.push((w, 0));
                        }
                        Mark::Active => {
                            let start = stack.iter().position(|&(x, _)| x == w).unwrap();
                            return Some(stack[start..].iter().map(|&(x, _)| x).collect());
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[v] = Mark::Done;
                    stack.pop();
                }
            }
        }
        None
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// Relabel nodes: node `v` becomes `perm[v]`. Labels move with their nodes.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut arcs: Vec<Arc> = self
            .arcs
            .iter()
            .map(|a| Arc::new(perm[a.src], perm[a.dst], a.color))
            .collect();
        arcs.sort_unstable();
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for (v, s) in l.iter().enumerate() {
                out[perm[v]] = s.clone();
            }
            out
        });
        ColoredDigraph {
            n: self.n,
            arcs,
            labels,
        }
    }
}
