//! Independent oracles shared by the integration tests. Nothing here calls
//! into the search or decision procedures under test.
#![allow(dead_code)]

use rand::Rng;
use wildclass::structures::{Arc, ColoredDigraph, FiniteLattice};
use wildclass::FiniteGroup;

/// Rearranges `p` into its lexicographic successor; false at the last one.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Visits permutations of `0..n` in lexicographic order until `f` returns true.
pub fn find_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if f(&p) {
            return Some(p);
        }
        if !next_permutation(&mut p) {
            return None;
        }
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn degree_profile(d: &ColoredDigraph) -> Vec<(usize, usize)> {
    let n = d.node_count();
    let mut deg = vec![(0, 0); n];
    for a in d.arcs() {
        deg[a.src].0 += 1;
        deg[a.dst].1 += 1;
    }
    deg.sort_unstable();
    deg
}

/// The lexicographically least isomorphism by exhaustive search.
pub fn brute_digraph_iso(d1: &ColoredDigraph, d2: &ColoredDigraph) -> Option<Vec<usize>> {
    if d1.node_count() != d2.node_count()
        || d1.arc_count() != d2.arc_count()
        || degree_profile(d1) != degree_profile(d2)
    {
        return None;
    }
    let target: std::collections::HashSet<(usize, usize, u32)> =
        d2.arcs().iter().map(|a| (a.src, a.dst, a.color)).collect();
    find_permutation(d1.node_count(), |p| {
        d1.arcs()
            .iter()
            .all(|a| target.contains(&(p[a.src], p[a.dst], a.color)))
    })
}

/// Every arc maps to an arc, both ways (the arc counts equal and the map is
/// a bijection).
pub fn is_digraph_iso(d1: &ColoredDigraph, d2: &ColoredDigraph, p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let bijective = p.len() == d1.node_count()
        && p.len() == d2.node_count()
        && p.iter()
            .all(|&v| v < p.len() && !std::mem::replace(&mut seen[v], true));
    bijective
        && d1.arc_count() == d2.arc_count()
        && d1
            .arcs()
            .iter()
            .all(|a| d2.arcs().contains(&Arc::new(p[a.src], p[a.dst], a.color)))
}

pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, arcs: usize, colors: u32) -> ColoredDigraph {
    let mut list = Vec::new();
    for _ in 0..arcs {
        let a = Arc::new(
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(1..=colors),
        );
        if !list.contains(&a) {
            list.push(a);
        }
    }
    ColoredDigraph::new(n, list).unwrap()
}

pub fn brute_group_iso(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    let n = g.order();
    n == h.order()
        && find_permutation(n, |p| {
            (0..n).all(|a| (0..n).all(|b| p[g.op(a, b)] == h.op(p[a], p[b])))
        })
        .is_some()
}

/// Orders of all elements by repeated multiplication, sorted.
pub fn element_orders_by_powers(g: &FiniteGroup) -> Vec<usize> {
    let e = g.identity();
    let mut out: Vec<usize> = (0..g.order())
        .map(|a| {
            let (mut x, mut k) = (a, 1);
            while x != e {
                x = g.op(x, a);
                k += 1;
            }
            k
        })
        .collect();
    out.sort_unstable();
    out
}

pub fn poset_axioms(t: &[Vec<bool>]) -> bool {
    let n = t.len();
    (0..n).all(|x| t[x][x])
        && (0..n).all(|x| (0..n).all(|y| x == y || !(t[x][y] && t[y][x])))
        && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(t[x][y] && t[y][z]) || t[x][z])))
}

/// Every pair has a least upper bound and a greatest lower bound.
pub fn order_is_lattice(t: &[Vec<bool>]) -> bool {
    let n = t.len();
    let least = |set: Vec<usize>, below: &dyn Fn(usize, usize) -> bool| {
        set.iter().any(|&c| set.iter().all(|&z| below(c, z)))
    };
    (0..n).all(|x| {
        (0..n).all(|y| {
            let ups: Vec<usize> = (0..n).filter(|&z| t[x][z] && t[y][z]).collect();
            let downs: Vec<usize> = (0..n).filter(|&z| t[z][x] && t[z][y]).collect();
            least(ups, &|a, b| t[a][b]) && least(downs, &|a, b| t[b][a])
        })
    })
}

/// All labelled partial orders on `0..m`, as leq tables.
pub fn labelled_posets(m: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut t = vec![vec![false; m]; m];
        for (i, row) in t.iter_mut().enumerate() {
            row[i] = true;
        }
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => t[i][j] = true,
                2 => t[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        if poset_axioms(&t) {
            out.push(t);
        }
    }
    out
}

/// Number of lattices with `k` elements up to isomorphism, by Burnside's
/// lemma over labelled middles: classes = sum |Aut(P)| / m!.
pub fn burnside_lattice_count(k: usize) -> usize {
    if k <= 2 {
        return 1;
    }
    let m = k - 2;
    let mut weighted = 0;
    for mid in labelled_posets(m) {
        let mut t = vec![vec![false; k]; k];
        t[0].fill(true);
        for row in t.iter_mut() {
            row[k - 1] = true;
        }
        for i in 0..m {
            for j in 0..m {
                t[i + 1][j + 1] = mid[i][j];
            }
        }
        if !order_is_lattice(&t) {
            continue;
        }
        let mut auts = 0;
        let mut p: Vec<usize> = (0..m).collect();
        loop {
            if (0..m).all(|i| (0..m).all(|j| mid[i][j] == mid[p[i]][p[j]])) {
                auts += 1;
            }
            if !next_permutation(&mut p) {
                break;
            }
        }
        weighted += auts;
    }
    assert_eq!(weighted % factorial(m), 0);
    weighted / factorial(m)
}

/// A bijection transporting both meet and join tables. Backtracking that
/// assigns elements in order of down-set size, pruning on down- and up-set
/// sizes and on every table entry whose operands and result are assigned.
pub fn lattice_tables_iso(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let profile = |l: &FiniteLattice, x: usize| {
        let down = (0..n).filter(|&y| l.meet(y, x) == y).count();
        let up = (0..n).filter(|&y| l.meet(x, y) == x).count();
        (down, up)
    };
    let pa: Vec<_> = (0..n).map(|x| profile(a, x)).collect();
    let pb: Vec<_> = (0..n).map(|x| profile(b, x)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| pa[x]);
    let mut image = vec![usize::MAX; n];
    let mut preimage = vec![usize::MAX; n];
    extend_lattice_map(a, b, &order, 0, &pa, &pb, &mut image, &mut preimage)
}

#[allow(clippy::too_many_arguments)]
fn extend_lattice_map(
    a: &FiniteLattice,
    b: &FiniteLattice,
    order: &[usize],
    depth: usize,
    pa: &[(usize, usize)],
    pb: &[(usize, usize)],
    image: &mut [usize],
    preimage: &mut [usize],
) -> bool {
    let Some(&x) = order.get(depth) else {
        // pruning sees only entries whose result was already placed
        let n = a.len();
        return (0..n).all(|u| {
            (0..n).all(|v| {
                image[a.meet(u, v)] == b.meet(image[u], image[v])
                    && image[a.join(u, v)] == b.join(image[u], image[v])
            })
        });
    };
    for y in 0..b.len() {
        if preimage[y] != usize::MAX || pa[x] != pb[y] {
            continue;
        }
        image[x] = y;
        preimage[y] = x;
        let consistent = order[..=depth].iter().all(|&u| {
            [
                (a.meet(x, u), b.meet(y, image[u])),
                (a.join(x, u), b.join(y, image[u])),
            ]
            .iter()
            .all(|&(r, s)| {
                (image[r] == usize::MAX || image[r] == s)
                    && (preimage[s] == usize::MAX || preimage[s] == r)
            })
        });
        if consistent && extend_lattice_map(a, b, order, depth + 1, pa, pb, image, preimage) {
            return true;
        }
        image[x] = usize::MAX;
        preimage[y] = usize::MAX;
    }
    false
}

pub fn lattice_order_table(l: &FiniteLattice) -> Vec<Vec<bool>> {
    (0..l.len())
        .map(|x| (0..l.len()).map(|y| l.meet(x, y) == x).collect())
        .collect()
}

/// Whether the 5-element subset is closed and has the given shape, checked
/// by brute force over all bijections to the pattern.
pub fn subset_matches(host: &FiniteLattice, subset: &[usize], pattern: &FiniteLattice) -> bool {
    let closed = subset.iter().all(|&x| {
        subset
            .iter()
            .all(|&y| subset.contains(&host.meet(x, y)) && subset.contains(&host.join(x, y)))
    });
    closed
        && find_permutation(5, |p| {
            (0..5).all(|i| {
                (0..5).all(|j| {
                    let (x, y) = (subset[p[i]], subset[p[j]]);
                    host.meet(x, y) == subset[p[pattern.meet(i, j)]]
                        && host.join(x, y) == subset[p[pattern.join(i, j)]]
                })
            })
        })
        .is_some()
}

/// All 5-element subsets of `0..n` in lexicographic order.
pub fn five_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        out.push(vec![a, b, c, d, e]);
                    }
                }
            }
        }
    }
    out
}

/// Plain triple-loop matrix product mod p over row vectors.
pub fn matmul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let (r, k, c) = (a.len(), b.len(), b[0].len());
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum::<u64>() % p)
                .collect()
        })
        .collect()
}
