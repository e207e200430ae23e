mod common;

use proptest::prelude::*;
use wildclass::groups::catalog;
use wildclass::lattice::enumerate_lattices;
use wildclass::reductions::{dag_to_poset, extended_incidence, gamma};
use wildclass::structures::{
    parse, serialize, validate_poset, Arc, ColoredDigraph, FiniteLattice, FinitePoset, Format,
    LatticeError, PosetError, TextFormat, UndirectedGraph,
};

fn round_trips<T: TextFormat + PartialEq + std::fmt::Debug>(x: &T) {
    for f in [Format::Native, Format::Json] {
        let back: T = parse(&serialize(x, f), f).unwrap();
        assert_eq!(&back, x, "{f:?}");
    }
}

fn catalog_lattices() -> Vec<FiniteLattice> {
    let mut out: Vec<FiniteLattice> = (1..=6).flat_map(enumerate_lattices).collect();
    out.extend([
        FiniteLattice::boolean(3),
        FiniteLattice::diamond(),
        FiniteLattice::pentagon(),
    ]);
    for n in 1..=3 {
        for g in UndirectedGraph::all_up_to_iso(n) {
            out.push(extended_incidence(&g).lattice().unwrap());
        }
    }
    out
}

#[test]
fn every_catalog_structure_round_trips() {
    for n in 0..=4 {
        for g in UndirectedGraph::all_up_to_iso(n) {
            round_trips(&g);
        }
    }
    for (_, g) in catalog().into_iter().filter(|(_, g)| g.order() <= 8) {
        round_trips(&g);
        round_trips(&gamma(&g, true).digraph().without_labels());
    }
    for l in catalog_lattices() {
        round_trips(&l);
        round_trips(&l.to_poset());
    }
}

#[test]
fn labelled_digraphs_keep_labels_in_json() {
    let d = extended_incidence(&UndirectedGraph::path(3))
        .digraph()
        .clone();
    let back: ColoredDigraph = parse(&serialize(&d, Format::Json), Format::Json).unwrap();
    assert_eq!(back, d);
    assert_eq!(back.label(back.node_count() - 1), Some("Sup"));
}

#[test]
fn dot_marks_arc_colors() {
    let d = ColoredDigraph::new(2, [Arc::new(0, 1, 1)]).unwrap();
    let dot = serialize(&d, Format::Dot);
    assert_eq!(dot.matches("->").count(), 1);
    assert!(dot.contains("color=\"1\""));
    assert!(parse::<ColoredDigraph>(&dot, Format::Dot).is_err());
}

#[test]
fn poset_examples() {
    assert!(validate_poset(&[vec![true]]).is_ok());
    assert_eq!(
        validate_poset(&[vec![true, true], vec![true, true]]),
        Err(PosetError::NotAntisymmetric(0, 1))
    );
}

#[test]
fn native_files_tolerate_comments() {
    let l: FiniteLattice = parse(
        "# pentagon\n5 5\n1 2\n2 3\n3 5\n\n1 4\n4 5\n",
        Format::Native,
    )
    .unwrap();
    assert_eq!(l, FiniteLattice::pentagon());
}

fn small_table() -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), n)
    })
}

/// Reachability tables of random DAGs on `0..n` with arcs from larger to
/// smaller indices.
fn dag() -> impl Strategy<Value = ColoredDigraph> {
    (1usize..=7).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..12).prop_map(move |pairs| {
            let arcs: std::collections::BTreeSet<_> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| Arc::new(a.max(b), a.min(b), 1))
                .collect();
            ColoredDigraph::new(n, arcs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn validate_poset_matches_triple_loop(t in small_table()) {
        // force reflexivity half the time so the other axioms get exercised
        let mut t = t;
        if t[0][0] {
            for (i, row) in t.iter_mut().enumerate() {
                row[i] = true;
            }
        }
        prop_assert_eq!(validate_poset(&t).is_ok(), common::poset_axioms(&t));
    }

    #[test]
    fn dag_reachability_is_a_poset(d in dag()) {
        let p = dag_to_poset(&d, None).unwrap();
        prop_assert!(common::poset_axioms(&p.table()));
        for a in d.arcs() {
            prop_assert!(p.leq(a.dst, a.src));
        }
        prop_assert_eq!(FinitePoset::from_table(&p.table()).unwrap(), p);
    }

    #[test]
    fn accepted_tables_are_absorptive(
        meet in proptest::collection::vec(0usize..3, 9),
        join in proptest::collection::vec(0usize..3, 9),
    ) {
        let rows = |v: &[usize]| v.chunks(3).map(<[usize]>::to_vec).collect::<Vec<_>>();
        let (m, j) = (rows(&meet), rows(&join));
        let absorptive = (0..3).all(|x| (0..3).all(|y| m[x][j[x][y]] == x && j[x][m[x][y]] == x));
        match FiniteLattice::from_tables(&m, &j) {
            Ok(l) => {
                prop_assert!(absorptive);
                prop_assert!((0..3).all(|x| l.meet(x, l.bottom()) == l.bottom() && l.join(x, l.top()) == l.top()));
            }
            Err(LatticeError::NotAbsorptive(..)) => prop_assert!(!absorptive),
            Err(_) => {}
        }
    }
}
