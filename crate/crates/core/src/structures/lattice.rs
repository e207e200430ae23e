use thiserror::Error;

use super::poset::FinitePoset;

/// A finite lattice given by full meet and join tables on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteLattice {
    n: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("operation tables must be {0}x{0}")]
    NotSquare(usize),
    #[error("table entry {0} out of range")]
    OutOfRange(usize),
    #[error("{op} is not idempotent at {x}")]
    NotIdempotent { op: &'static str, x: usize },
    #[error("{op} is not commutative at ({x}, {y})")]
    NotCommutative {
        op: &'static str,
        x: usize,
        y: usize,
    },
    #[error("{op} is not associative at ({x}, {y}, {z})")]
    NotAssociative {
        op: &'static str,
        x: usize,
        y: usize,
        z: usize,
    },
    #[error("absorption fails at ({0}, {1})")]
    NotAbsorptive(usize, usize),
    #[error("no bottom element")]
    NoBottom,
    #[error("no top element")]
    NoTop,
    #[error("{0} and {1} have no greatest lower bound")]
    NoMeet(usize, usize),
    #[error("{0} and {1} have no least upper bound")]
    NoJoin(usize, usize),
}

impl FiniteLattice {
    /// Build from row-major meet/join tables, checking the lattice axioms.
    /// Bottom and top are located from the tables.
    pub fn from_tables(meet: &[Vec<usize>], join: &[Vec<usize>]) -> Result<Self, LatticeError> {
        let n = meet.len();
        if join.len() != n || meet.iter().chain(join).any(|r| r.len() != n) {
            return Err(LatticeError::NotSquare(n));
        }
        let meet: Vec<usize> = meet.iter().flatten().copied().collect();
        let join: Vec<usize> = join.iter().flatten().copied().collect();
        Self::from_flat(n, meet, join)
    }

    pub(crate) fn from_flat(
        n: usize,
        meet: Vec<usize>,
        join: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if let Some(&bad) = meet.iter().chain(&join).find(|&&v| v >= n) {
            return Err(LatticeError::OutOfRange(bad));
        }
        for (op, t) in [("meet", &meet), ("join", &join)] {
            let f = |x: usize, y: usize| t[x * n + y];
            for x in 0..n {
                if f(x, x) != x {
                    return Err(LatticeError::NotIdempotent { op, x });
                }
            }
            for x in 0..n {
                for y in x + 1..n {
                    if f(x, y) != f(y, x) {
                        return Err(LatticeError::NotCommutative { op, x, y });
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    let xy = f(x, y);
                    for z in 0..n {
                        if f(xy, z) != f(x, f(y, z)) {
                            return Err(LatticeError::NotAssociative { op, x, y, z });
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if meet[x * n + join[x * n + y]] != x || join[x * n + meet[x * n + y]] != x {
                    return Err(LatticeError::NotAbsorptive(x, y));
                }
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| meet[x * n + b] == b))
            .ok_or(LatticeError::NoBottom)?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| join[x * n + t] == t))
            .ok_or(LatticeError::NoTop)?;
        Ok(FiniteLattice {
            n,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Meets and joins as infima and suprema of the order. Errors name the
    /// lexicographically least pair lacking a bound.
    pub fn from_poset(p: &FinitePoset) -> Result<Self, LatticeError> {
        let n = p.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let m = greatest(n, |z| p.leq(z, x) && p.leq(z, y), |a, b| p.leq(a, b))
                    .ok_or(LatticeError::NoMeet(x, y))?;
                let j = greatest(n, |z| p.leq(x, z) && p.leq(y, z), |a, b| p.leq(b, a))
                    .ok_or(LatticeError::NoJoin(x, y))?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| p.leq(b, x)))
            .ok_or(LatticeError::NoBottom)?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| p.leq(x, t)))
            .ok_or(LatticeError::NoTop)?;
        Ok(FiniteLattice {
            n,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// The induced order `x <= y` iff `meet(x, y) == x`.
    pub fn to_poset(&self) -> FinitePoset {
        let n = self.n;
        let leq = (0..n * n).map(|i| self.meet[i] == i / n).collect();
        FinitePoset::from_flat(n, leq).expect("lattice order is a partial order")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == x
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet_table(&self) -> Vec<Vec<usize>> {
        self.meet.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn join_table(&self) -> Vec<Vec<usize>> {
        self.join.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Relabel: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let n = self.n;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                meet[perm[x] * n + perm[y]] = perm[self.meet(x, y)];
                join[perm[x] * n + perm[y]] = perm[self.join(x, y)];
            }
        }
        FiniteLattice {
            n,
            meet,
            join,
            bottom: perm[self.bottom],
            top: perm[self.top],
        }
    }

    pub fn chain(n: usize) -> Self {
        assert!(n >= 1, "chain needs at least one element");
        Self::from_poset(&FinitePoset::chain(n)).expect("chains are lattices")
    }

    /// Subsets of a `k`-element set; element `s` is the subset with bitmask `s`.
    pub fn boolean(k: u32) -> Self {
        let n = 1usize << k;
        let meet = (0..n * n).map(|i| (i / n) & (i % n)).collect();
        let join = (0..n * n).map(|i| (i / n) | (i % n)).collect();
        FiniteLattice {
            n,
            meet,
            join,
            bottom: 0,
            top: n - 1,
        }
    }

    /// The diamond M3: bottom 0, pairwise incomparable middles 1, 2, 3, top 4.
    pub fn diamond() -> Self {
        let p = FinitePoset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .expect("diamond order");
        Self::from_poset(&p).expect("diamond is a lattice")
    }

    /// The pentagon N5: bottom 0, chain 1 < 2, side element 3, top 4.
    pub fn pentagon() -> Self {
        let p = FinitePoset::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
            .expect("pentagon order");
        Self::from_poset(&p).expect("pentagon is a lattice")
    }
}

/// The unique element of `{z : member(z)}` that dominates every other member
/// under `below`, if it exists.
fn greatest(
    n: usize,
    member: impl Fn(usize) -> bool,
    below: impl Fn(usize, usize) -> bool,
) -> Option<usize> {
    let members: Vec<usize> = (0..n).filter(|&z| member(z)).collect();
    members
        .iter()
        .copied()
        .find(|&c| members.iter().all(|&z| below(z, c)))
}
