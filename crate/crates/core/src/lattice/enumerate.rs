use std::collections::BTreeMap;

use crate::structures::{permutations, FiniteLattice, FinitePoset};

/// One representative of every isomorphism class of lattices with exactly
/// `k` elements, `1 <= k <= 7`.
///
/// Candidates are a bottom (element 0), a top (element `k - 1`) and a
/// naturally labelled poset on the `k - 2` middle elements; every finite
/// poset has a natural labelling, so all classes are reached. Candidates
/// failing the lattice test are dropped and the rest are deduplicated by a
/// brute-force canonical form over relabellings of the middle. Output is
/// ordered by that canonical form.
pub fn enumerate_lattices(k: usize) -> Vec<FiniteLattice> {
    assert!(
        (1..=7).contains(&k),
        "enumerate_lattices supports 1 <= k <= 7"
    );
    if k <= 2 {
        return vec![FiniteLattice::chain(k)];
    }
    let m = k - 2;
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let perms = permutations(m);
    let mut classes: BTreeMap<Vec<bool>, FiniteLattice> = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let less = |i: usize, j: usize| {
            i == j
                || pairs
                    .iter()
                    .position(|&p| p == (i, j))
                    .is_some_and(|b| mask >> b & 1 == 1)
        };
        let transitive = (0..m).all(|a| {
            (a + 1..m).all(|b| !less(a, b) || (b + 1..m).all(|c| !less(b, c) || less(a, c)))
        });
        if !transitive {
            continue;
        }
        let covers: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && less(i, j))
            .map(|(i, j)| (i + 1, j + 1))
            .chain((1..=m).flat_map(|x| [(0, x), (x, k - 1)]))
            .chain(std::iter::once((0, k - 1)))
            .collect();
        let poset = FinitePoset::from_covers(k, &covers).expect("bounded naturally labelled order");
        let Ok(lattice) = FiniteLattice::from_poset(&poset) else {
            continue;
        };
        let canon = perms
            .iter()
            .map(|p| {
                let full: Vec<usize> = std::iter::once(0)
                    .chain(p.iter().map(|&x| x + 1))
                    .chain(std::iter::once(k - 1))
                    .collect();
                let r = poset.relabel(&full);
                (0..k)
                    .flat_map(|x| (0..k).map(move |y| (x, y)))
                    .map(|(x, y)| r.leq(x, y))
                    .collect::<Vec<bool>>()
            })
            .min()
            .expect("at least one permutation");
        classes.entry(canon).or_insert(lattice);
    }
    classes.into_values().collect()
}
