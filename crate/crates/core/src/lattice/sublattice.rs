use serde::Serialize;

use crate::structures::FiniteLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Pattern {
    M3,
    N5,
}

impl Pattern {
    /// The pattern as a lattice, with the role order used by
    /// [`SublatticeEmbedding::elements`].
    pub fn lattice(self) -> FiniteLattice {
        match self {
            Pattern::M3 => FiniteLattice::diamond(),
            Pattern::N5 => FiniteLattice::pentagon(),
        }
    }
}

/// Five host elements forming a copy of a pattern.
///
/// For M3 the elements are `[bottom, m1, m2, m3, top]`; for N5 they are
/// `[bottom, low, high, side, top]` with `low < high`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SublatticeEmbedding {
    pub pattern: Pattern,
    pub elements: [usize; 5],
}

impl SublatticeEmbedding {
    /// Distinct, closed under the host's meet and join, and shaped like the
    /// pattern (role `i` to `elements[i]` transports both tables).
    pub fn verify(&self, host: &FiniteLattice) -> bool {
        let e = &self.elements;
        if e.iter().any(|&x| x >= host.len()) {
            return false;
        }
        let distinct = (0..5).all(|i| (i + 1..5).all(|j| e[i] != e[j]));
        let shape = self.pattern.lattice();
        distinct
            && (0..5).all(|i| {
                (0..5).all(|j| {
                    host.meet(e[i], e[j]) == e[shape.meet(i, j)]
                        && host.join(e[i], e[j]) == e[shape.join(i, j)]
                })
            })
    }

    /// The element set in ascending order.
    pub fn sorted_elements(&self) -> [usize; 5] {
        let mut s = self.elements;
        s.sort_unstable();
        s
    }
}

/// Exhaustive search for a sublattice isomorphic to `pattern`.
///
/// M3 copies are found from three middles with pairwise equal meets and
/// joins; N5 copies from a pair `low < high` and a `side` element with
/// `low ∧ side = high ∧ side` and `low ∨ side = high ∨ side`. Both
/// conditions force the five elements to be distinct and closed. Returns the
/// copy whose middles (M3) or `(low, high, side)` (N5) are lexicographically
/// least.
pub fn find_sublattice(l: &FiniteLattice, pattern: Pattern) -> Option<SublatticeEmbedding> {
    let n = l.len();
    let incomparable: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| !l.leq(x, y) && !l.leq(y, x)).collect())
        .collect();
    let found = match pattern {
        Pattern::M3 => (0..n).find_map(|x| {
            incomparable[x].iter().filter(|&&y| y > x).find_map(|&y| {
                let (b, t) = (l.meet(x, y), l.join(x, y));
                incomparable[y]
                    .iter()
                    .filter(|&&z| z > y)
                    .find(|&&z| {
                        l.meet(x, z) == b
                            && l.meet(y, z) == b
                            && l.join(x, z) == t
                            && l.join(y, z) == t
                    })
                    .map(|&z| [b, x, y, z, t])
            })
        }),
        Pattern::N5 => (0..n).find_map(|low| {
            (0..n)
                .filter(|&high| high != low && l.leq(low, high))
                .find_map(|high| {
                    incomparable[high]
                        .iter()
                        .find(|&&side| {
                            l.meet(low, side) == l.meet(high, side)
                                && l.join(low, side) == l.join(high, side)
                        })
                        .map(|&side| [l.meet(high, side), low, high, side, l.join(low, side)])
                })
        }),
    };
    let embedding = found.map(|elements| SublatticeEmbedding { pattern, elements })?;
    debug_assert!(embedding.verify(l));
    Some(embedding)
}
