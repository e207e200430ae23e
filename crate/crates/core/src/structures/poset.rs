use thiserror::Error;

use super::{Arc, ColoredDigraph};

/// A finite partial order on `0..n`, stored as a dense `leq` table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("order table is not square")]
    NotSquare,
    #[error("not reflexive at {0}")]
    NotReflexive(usize),
    #[error("not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(usize, usize),
    #[error("not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("cover endpoint {endpoint} out of range for {n} elements")]
    OutOfRange { endpoint: usize, n: usize },
}

impl FinitePoset {
    /// Validate a square `leq` table (`table[x][y]` means `x <= y`).
    /// Violations are reported at the lexicographically least witness.
    pub fn from_table(table: &[Vec<bool>]) -> Result<Self, PosetError> {
        let n = table.len();
        if table.iter().any(|row| row.len() != n) {
            return Err(PosetError::NotSquare);
        }
        let leq: Vec<bool> = table.iter().flatten().copied().collect();
        Self::from_flat(n, leq)
    }

    pub(crate) fn from_flat(n: usize, leq: Vec<bool>) -> Result<Self, PosetError> {
        debug_assert_eq!(leq.len(), n * n);
        let at = |x: usize, y: usize| leq[x * n + y];
        for x in 0..n {
            if !at(x, x) {
                return Err(PosetError::NotReflexive(x));
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if at(x, y) && at(y, x) {
                    return Err(PosetError::NotAntisymmetric(x, y));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !at(x, y) {
                    continue;
                }
                for z in 0..n {
                    if at(y, z) && !at(x, z) {
                        return Err(PosetError::NotTransitive(x, y, z));
                    }
                }
            }
        }
        Ok(FinitePoset { n, leq })
    }

    /// The reflexive-transitive closure of a cover list (`(u, v)` meaning
    /// `u` is below `v`). Fails if the closure is not antisymmetric.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(u, v) in covers {
            for endpoint in [u, v] {
                if endpoint >= n {
                    return Err(PosetError::OutOfRange { endpoint, n });
                }
            }
            leq[u * n + v] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_flat(n, leq)
    }

    pub fn chain(n: usize) -> Self {
        let leq = (0..n * n).map(|i| i / n <= i % n).collect();
        FinitePoset { n, leq }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn table(&self) -> Vec<Vec<bool>> {
        self.leq
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    /// The cover (Hasse) relation, sorted: `(x, y)` with `x < y` and nothing
    /// strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Single-color digraph with an arc `y -> x` for every cover `x ⋖ y`,
    /// so that `x <= y` iff `y` reaches `x`.
    pub fn hasse_digraph(&self) -> ColoredDigraph {
        ColoredDigraph::new(
            self.n,
            self.covers().into_iter().map(|(x, y)| Arc::new(y, x, 1)),
        )
        .expect("covers are distinct in-range pairs")
    }

    /// Relabel: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let n = self.n;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[perm[x] * n + perm[y]] = self.leq(x, y);
            }
        }
        FinitePoset { n, leq }
    }
}
