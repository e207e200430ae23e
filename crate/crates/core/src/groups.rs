//! Finite groups given by Cayley tables.

use std::collections::VecDeque;

use thiserror::Error;

use crate::structures::Isomorphism;

/// A finite group on elements `0..n` with `table[i * n + j] = i ∘ j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    identity: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableLine {
    Row(usize),
    Column(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("table must be {0}x{0}")]
    NotSquare(usize),
    #[error("table entry {0} out of range")]
    OutOfRange(usize),
    #[error("not a Latin square at {0:?}")]
    NotLatin(TableLine),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative: ({0} {1}) {2} != {0} ({1} {2})")]
    NotAssociative(usize, usize, usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid family parameter: {0}")]
    BadParameter(String),
}

/// Parameterised families of groups with known tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Integers mod `n`.
    Cyclic(usize),
    /// Symmetries of a regular `k`-gon, order `2k`.
    Dihedral(usize),
    DirectProduct(Box<FiniteGroup>, Box<FiniteGroup>),
    /// Upper unitriangular 3x3 matrices over F_p, order `p^3`.
    Heisenberg(u64),
    /// The quaternion group Q8.
    Quaternion,
    /// All permutations of `n` points.
    Symmetric(usize),
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl FiniteGroup {
    /// Validates a Cayley table: Latin square, then identity and inverses,
    /// then associativity.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if table.iter().any(|r| r.len() != n) {
            return Err(GroupError::NotSquare(n));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if let Some(&bad) = flat.iter().find(|&&v| v >= n) {
            return Err(GroupError::OutOfRange(bad));
        }
        let op = |i: usize, j: usize| flat[i * n + j];
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut row[op(i, j)], true) {
                    return Err(GroupError::NotLatin(TableLine::Row(i)));
                }
                if std::mem::replace(&mut col[op(j, i)], true) {
                    return Err(GroupError::NotLatin(TableLine::Column(i)));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| op(e, x) == x && op(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        for x in 0..n {
            if !(0..n).any(|y| op(x, y) == identity && op(y, x) == identity) {
                return Err(GroupError::NoInverse(x));
            }
        }
        for u in 0..n {
            for v in 0..n {
                let uv = op(u, v);
                for w in 0..n {
                    if op(uv, w) != op(u, op(v, w)) {
                        return Err(GroupError::NotAssociative(u, v, w));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            n,
            table: flat,
            identity,
        })
    }

    /// The permutation group generated by `generators` (each a permutation
    /// of `0..degree`), with elements numbered in order of discovery from
    /// the identity. Composition is `(a ∘ b)(x) = a(b(x))`.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<Self, GroupError> {
        let degree = generators.first().map_or(0, Vec::len);
        for g in generators {
            if g.len() != degree || Isomorphism::new(g.clone()).is_none() {
                return Err(GroupError::BadParameter(
                    "generator is not a permutation".into(),
                ));
            }
        }
        let compose =
            |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&x| a[x]).collect() };
        let mut elements: Vec<Vec<usize>> = vec![(0..degree).collect()];
        let mut index = std::collections::HashMap::new();
        index.insert(elements[0].clone(), 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let next = compose(&elements[i], g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        Self::from_table(table)
    }

    pub fn make(family: Family) -> Result<Self, GroupError> {
        match family {
            Family::Cyclic(n) => {
                if n == 0 {
                    return Err(GroupError::BadParameter("cyclic order must be >= 1".into()));
                }
                Self::from_fn(n, |i, j| (i + j) % n)
            }
            Family::Dihedral(k) => {
                if k == 0 {
                    return Err(GroupError::BadParameter("dihedral k must be >= 1".into()));
                }
                // r^i s^a  <->  i + k a
                Self::from_fn(2 * k, |x, y| {
                    let (i, a) = (x % k, x / k);
                    let (j, b) = (y % k, y / k);
                    let rot = if a == 0 { (i + j) % k } else { (i + k - j) % k };
                    rot + k * ((a + b) % 2)
                })
            }
            Family::DirectProduct(g, h) => {
                let m = h.order();
                Self::from_fn(g.order() * m, |x, y| {
                    g.op(x / m, y / m) * m + h.op(x % m, y % m)
                })
            }
            Family::Heisenberg(p) => {
                if !is_prime(p) {
                    return Err(GroupError::NotPrime(p));
                }
                let p = usize::try_from(p)
                    .map_err(|_| GroupError::BadParameter("p too large".into()))?;
                if p > 7 {
                    return Err(GroupError::BadParameter(
                        "heisenberg(p) limited to p <= 7".into(),
                    ));
                }
                // [[1,a,c],[0,1,b],[0,0,1]]  <->  a p^2 + b p + c
                let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
                Self::from_fn(p * p * p, |x, y| {
                    let (a, b, c) = split(x);
                    let (a2, b2, c2) = split(y);
                    let a3 = (a + a2) % p;
                    let b3 = (b + b2) % p;
                    let c3 = (c + c2 + a * b2) % p;
                    a3 * p * p + b3 * p + c3
                })
            }
            Family::Quaternion => {
                // units 1, i, j, k at 0..4; sign bit adds 4
                const UNIT: [[(usize, usize); 4]; 4] = [
                    [(0, 0), (0, 1), (0, 2), (0, 3)],
                    [(0, 1), (1, 0), (0, 3), (1, 2)],
                    [(0, 2), (1, 3), (1, 0), (0, 1)],
                    [(0, 3), (0, 2), (1, 1), (1, 0)],
                ];
                Self::from_fn(8, |x, y| {
                    let (sign, unit) = UNIT[x % 4][y % 4];
                    unit + 4 * ((sign + x / 4 + y / 4) % 2)
                })
            }
            Family::Symmetric(n) => {
                if n == 0 || n > 6 {
                    return Err(GroupError::BadParameter(
                        "symmetric degree must be 1..=6".into(),
                    ));
                }
                let transposition: Vec<usize> = (0..n)
                    .map(|x| match x {
                        0 if n > 1 => 1,
                        1 => 0,
                        _ => x,
                    })
                    .collect();
                let cycle: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
                Self::from_permutations(&[transposition, cycle])
            }
        }
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, GroupError> {
        Self::from_table((0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.n)
            .find(|&b| self.op(a, b) == self.identity)
            .expect("validated group has inverses")
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        (0..self.n)
            .map(|a| self.element_order(a))
            .fold(1, |l, o| l / gcd(l, o) * o)
    }

    /// Elements of the center.
    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|x| self.op(z, x) == self.op(x, z)))
            .collect()
    }

    /// Nilpotency class via the upper central series, or `None` if the
    /// series stalls before reaching the whole group.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let n = self.n;
        let mut layer = vec![false; n];
        layer[self.identity] = true;
        let mut class = 0;
        while layer.iter().any(|&b| !b) {
            // x is in the next layer iff every commutator [x, g] is in the current one
            let next: Vec<bool> = (0..n)
                .map(|x| {
                    (0..n).all(|g| {
                        let comm =
                            self.op(self.op(self.inverse(x), self.inverse(g)), self.op(x, g));
                        layer[comm]
                    })
                })
                .collect();
            if next == layer {
                return None;
            }
            layer = next;
            class += 1;
        }
        Some(class)
    }

    /// Subgroup generated by `gens`, as a membership mask.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.n];
        member[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.op(x, g);
                if !std::mem::replace(&mut member[y], true) {
                    queue.push_back(y);
                }
            }
        }
        member
    }

    /// The lexicographically least generating set of minimum size.
    pub fn generating_set(&self) -> Vec<usize> {
        fn search(g: &FiniteGroup, start: usize, k: usize, chosen: &mut Vec<usize>) -> bool {
            if chosen.len() == k {
                return g.generated_subgroup(chosen).iter().all(|&b| b);
            }
            for a in start..g.n {
                if a == g.identity {
                    continue;
                }
                chosen.push(a);
                if search(g, a + 1, k, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::new();
        for k in 0..self.n {
            if search(self, 0, k, &mut chosen) {
                return chosen;
            }
        }
        unreachable!("the whole group generates itself")
    }

    /// Relabel elements: `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let n = self.n;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.op(a, b)];
            }
        }
        FiniteGroup {
            n,
            table,
            identity: perm[self.identity],
        }
    }
}

pub fn make_group(family: Family) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::make(family)
}

pub fn validate_group(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::from_table(table)
}

/// Sorted multiset of element orders.
pub fn element_orders(g: &FiniteGroup) -> Vec<usize> {
    let mut orders: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    orders.sort_unstable();
    orders
}

/// True iff `phi(a ∘ b) = phi(a) · phi(b)` for all pairs and `phi` is a bijection.
pub fn verify_group_iso(g: &FiniteGroup, h: &FiniteGroup, phi: &Isomorphism) -> bool {
    let n = g.order();
    h.order() == n
        && phi.len() == n
        && (0..n).all(|a| (0..n).all(|b| phi.apply(g.op(a, b)) == h.op(phi.apply(a), phi.apply(b))))
}

/// The lexicographically least isomorphism `g -> h`, if any.
///
/// Only the images of [`FiniteGroup::generating_set`] are searched; each
/// assignment is extended along a spanning tree of words and then checked
/// on the full table.
pub fn group_iso(g: &FiniteGroup, h: &FiniteGroup) -> Option<Isomorphism> {
    let n = g.order();
    if h.order() != n || element_orders(g) != element_orders(h) {
        return None;
    }
    let gens = g.generating_set();
    // spanning tree: tree[x] = (parent, generator slot) with x = parent ∘ gens[slot]
    let mut tree: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut bfs = vec![g.identity()];
    let mut seen = vec![false; n];
    seen[g.identity()] = true;
    let mut head = 0;
    while head < bfs.len() {
        let x = bfs[head];
        head += 1;
        for (slot, &s) in gens.iter().enumerate() {
            let y = g.op(x, s);
            if !std::mem::replace(&mut seen[y], true) {
                tree[y] = Some((x, slot));
                bfs.push(y);
            }
        }
    }
    let h_orders: Vec<usize> = (0..n).map(|a| h.element_order(a)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            (0..n).filter(|&b| h_orders[b] == o).collect()
        })
        .collect();

    let mut best: Option<Isomorphism> = None;
    let mut images = vec![0; gens.len()];
    let mut extend = |images: &[usize]| {
        let mut phi = vec![usize::MAX; n];
        let mut hit = vec![false; n];
        for &x in &bfs {
            let y = match tree[x] {
                None => h.identity(),
                Some((parent, slot)) => h.op(phi[parent], images[slot]),
            };
            if std::mem::replace(&mut hit[y], true) {
                return;
            }
            phi[x] = y;
        }
        let Some(phi) = Isomorphism::new(phi) else {
            return;
        };
        if verify_group_iso(g, h, &phi) && best.as_ref().is_none_or(|b| phi < *b) {
            best = Some(phi);
        }
    };
    fn assign(
        slot: usize,
        images: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        extend: &mut dyn FnMut(&[usize]),
    ) {
        if slot == candidates.len() {
            extend(images);
            return;
        }
        for &c in &candidates[slot] {
            images[slot] = c;
            assign(slot + 1, images, candidates, extend);
        }
    }
    assign(0, &mut images, &candidates, &mut extend);
    best
}

/// A named test catalog: all groups of order at most 6, the five groups of
/// order 8, the Heisenberg group mod 3 and the cyclic group of order 27.
pub fn catalog() -> Vec<(String, FiniteGroup)> {
    let c = |n| FiniteGroup::make(Family::Cyclic(n)).expect("cyclic");
    let prod = |a: FiniteGroup, b: FiniteGroup| {
        FiniteGroup::make(Family::DirectProduct(Box::new(a), Box::new(b))).expect("product")
    };
    vec![
        ("C1".into(), c(1)),
        ("C2".into(), c(2)),
        ("C3".into(), c(3)),
        ("C4".into(), c(4)),
        ("C2xC2".into(), prod(c(2), c(2))),
        ("C5".into(), c(5)),
        ("C6".into(), c(6)),
        (
            "S3".into(),
            FiniteGroup::make(Family::Dihedral(3)).expect("dihedral"),
        ),
        ("C8".into(), c(8)),
        ("C4xC2".into(), prod(c(4), c(2))),
        ("C2xC2xC2".into(), prod(prod(c(2), c(2)), c(2))),
        (
            "D4".into(),
            FiniteGroup::make(Family::Dihedral(4)).expect("dihedral"),
        ),
        (
            "Q8".into(),
            FiniteGroup::make(Family::Quaternion).expect("quaternion"),
        ),
        (
            "Heis3".into(),
            FiniteGroup::make(Family::Heisenberg(3)).expect("heisenberg"),
        ),
        ("C27".into(), c(27)),
    ]
}
