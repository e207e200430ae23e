//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wildclass::cli::{adjudicate, verify_graphs, verify_groups};
use wildclass::groups::{catalog, group_iso};
use wildclass::iso::{digraph_iso, graph_to_digraph, lattice_iso};
use wildclass::lattice::{birkhoff_crosscheck, enumerate_lattices, Pattern};
use wildclass::matrix::{
    conjugation_orbit, gl_enumerate, sim_similar, similarity_stabilizer, trace_word_invariants,
    MatrixPair, PrimeFieldMatrix,
};
use wildclass::reductions::{
    extended_incidence, extended_incidence_lattice, gamma, gamma_inverse, lattice_to_poset,
    poset_to_lattice,
};
use wildclass::structures::{
    ColoredDigraph, FiniteLattice, FinitePoset, Isomorphism, UndirectedGraph,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn labelled_graphs(n: usize) -> Vec<UndirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e);
            UndirectedGraph::new(n, edges).unwrap()
        })
        .collect()
}

/// Canonical edge set: the least sorted relabelled edge list over all permutations.
fn brute_canonical(g: &UndirectedGraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut best: Option<Vec<(usize, usize)>> = None;
    common::find_permutation(n, |p| {
        let mut e: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        false
    });
    best.unwrap_or_default()
}

fn theorem2_equivalence() -> Outcome {
    let start = Instant::now();
    let report = verify_groups(27);
    ensure!(
        report.disagreements.is_empty(),
        "disagreements: {:?}",
        report.disagreements
    );
    // the group verdicts themselves, against independent checks
    let groups = catalog();
    let mut pairs = 0;
    for (i, (na, a)) in groups.iter().enumerate() {
        for (nb, b) in groups[i..].iter().filter(|(_, b)| b.order() == a.order()) {
            let engine = group_iso(a, b).is_some();
            let oracle = if a.order() <= 8 {
                common::brute_group_iso(a, b)
            } else {
                let mut x = common::element_orders_by_powers(a);
                let mut y = common::element_orders_by_powers(b);
                x.sort_unstable();
                y.sort_unstable();
                x == y
            };
            ensure!(
                engine == oracle,
                "group_iso({na}, {nb}) = {engine}, oracle says {oracle}"
            );
            let digraphs =
                digraph_iso(gamma(a, false).digraph(), gamma(b, false).digraph()).is_some();
            ensure!(digraphs == engine, "gamma images of {na}, {nb} disagree");
            pairs += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    Ok(format!(
        "{} report pairs and {pairs} catalog pairs, 0 disagreements",
        report.pairs_checked
    ))
}

fn gamma_size_laws() -> Outcome {
    let mut checked = 0;
    for (name, g) in catalog() {
        let n = g.order();
        for pruned in [false, true] {
            let d = gamma(&g, pruned);
            let d = d.digraph();
            let nodes = if pruned { n + n * n } else { n + n * n * n };
            ensure!(
                d.node_count() == nodes,
                "{name} pruned={pruned}: {} nodes",
                d.node_count()
            );
            ensure!(d.arc_count() == 3 * n * n, "{name}: {} arcs", d.arc_count());
            for c in 1..=3 {
                let used = d.arcs().iter().filter(|a| a.color == c).count();
                ensure!(used == n * n, "{name}: color {c} used {used} times");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} images exact"))
}

fn gamma_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut trials = 0;
    for (name, g) in catalog() {
        for pruned in [false, true] {
            let d = gamma(&g, pruned).into_digraph();
            for _ in 0..10 {
                let perm = Isomorphism::random(d.node_count(), &mut rng);
                let back = gamma_inverse(&d.relabel(perm.mapping()))
                    .map_err(|e| format!("{name} pruned={pruned}: {e}"))?;
                ensure!(
                    group_iso(&g, &back).is_some(),
                    "{name} pruned={pruned}: not isomorphic"
                );
                trials += 1;
            }
        }
    }
    Ok(format!("{trials}/{trials} round trips"))
}

fn theorem3_equivalence() -> Outcome {
    let classes = UndirectedGraph::all_up_to_iso(4);
    let oracle: BTreeSet<_> = labelled_graphs(4).iter().map(brute_canonical).collect();
    ensure!(
        classes.len() == 11 && oracle.len() == 11,
        "{} classes, oracle {}",
        classes.len(),
        oracle.len()
    );
    let lattices: Vec<FiniteLattice> = classes
        .iter()
        .map(|g| extended_incidence_lattice(g).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for i in 0..lattices.len() {
        for j in i + 1..lattices.len() {
            ensure!(
                !common::lattice_tables_iso(&lattices[i], &lattices[j]),
                "classes {i} and {j} collide"
            );
            ensure!(
                lattice_iso(&lattices[i], &lattices[j]).is_none(),
                "engine merges {i} and {j}"
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..20 {
        let g = &classes[rng.gen_range(0..classes.len())];
        let h = g.relabel(Isomorphism::random(4, &mut rng).mapping());
        let (a, b) = (
            extended_incidence_lattice(g).unwrap(),
            extended_incidence_lattice(&h).unwrap(),
        );
        let phi = lattice_iso(&a, &b)
            .ok_or(format!("trial {trial}: relabelled lattice not isomorphic"))?;
        ensure!(phi.verify_lattice(&a, &b), "trial {trial}: witness fails");
        ensure!(
            common::lattice_tables_iso(&a, &b),
            "trial {trial}: oracle disagrees"
        );
    }
    let report = verify_graphs(4);
    ensure!(
        report.disagreements.is_empty() && report.pairwise_nonisomorphic,
        "pipeline: {:?}",
        report.disagreements
    );
    ensure!(
        report.per_vertex_count[&4].lattice_classes == 11,
        "pipeline lattice classes"
    );
    Ok("11 graph classes give 11 lattice classes; 20/20 relabel trials".into())
}

fn lattice_ness() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        for g in labelled_graphs(n) {
            let p = extended_incidence(&g).poset();
            ensure!(
                common::order_is_lattice(&p.table()),
                "oracle: {:?} is not a lattice",
                g.edges()
            );
            poset_to_lattice(&p).map_err(|e| format!("n={n} edges {:?}: {e}", g.edges()))?;
            count += 1;
        }
    }
    Ok(format!("{count} labelled graphs, all lattices"))
}

fn oracle_cross_validation() -> Outcome {
    let mut counts = Vec::new();
    let mut all = Vec::new();
    for k in 1..=6 {
        let ls = enumerate_lattices(k);
        let oracle = common::burnside_lattice_count(k);
        ensure!(
            ls.len() == oracle,
            "k={k}: {} enumerated, oracle {oracle}",
            ls.len()
        );
        counts.push(ls.len());
        all.extend(ls);
    }
    ensure!(counts == [1, 1, 1, 2, 5, 15], "counts {counts:?}");
    let enumerated = all.len();
    for n in 1..=4 {
        for g in UndirectedGraph::all_up_to_iso(n) {
            all.push(extended_incidence_lattice(&g).unwrap());
        }
    }
    for l in &all {
        let r = birkhoff_crosscheck(l).map_err(|e| e.reason)?;
        ensure!(
            !r.distributive.holds || r.modular.holds,
            "distributive but not modular"
        );
    }
    Ok(format!("counts {counts:?} match the oracle; crosscheck passes on {} lattices ({enumerated} enumerated)", all.len()))
}

fn theorem4_adjudication() -> Outcome {
    let report = adjudicate(4);
    let classes: usize = (1..=4)
        .map(|n| UndirectedGraph::all_up_to_iso(n).len())
        .sum();
    ensure!(
        report.lattices.len() == classes,
        "{} verdicts for {classes} graphs",
        report.lattices.len()
    );
    for (v, g) in report
        .lattices
        .iter()
        .zip((1..=4).flat_map(UndirectedGraph::all_up_to_iso))
    {
        let ext = extended_incidence(&g);
        let l = ext.lattice().unwrap();
        for (found, pattern) in [(&v.m3, Pattern::M3), (&v.n5, Pattern::N5)] {
            let exists = common::five_subsets(l.len())
                .iter()
                .any(|s| common::subset_matches(&l, s, &pattern.lattice()));
            ensure!(
                found.is_some() == exists,
                "{pattern:?} verdict wrong for {:?}",
                v.edges
            );
            if let Some(e) = found {
                ensure!(e.reverified, "embedding does not re-verify");
                let mut idx: Vec<usize> = e
                    .elements
                    .iter()
                    .map(|name| ext.roles().iter().position(|r| &r.label() == name).unwrap())
                    .collect();
                idx.sort_unstable();
                ensure!(
                    common::subset_matches(&l, &idx, &pattern.lattice()),
                    "oracle rejects embedding"
                );
            }
        }
    }
    let p2 = report
        .lattices
        .iter()
        .find(|v| v.vertices == 2 && v.edges.len() == 1)
        .ok_or("no single-edge graph")?;
    let n5 = p2
        .n5
        .as_ref()
        .ok_or("single-edge lattice has no pentagon")?;
    ensure!(
        n5.elements == ["Inf", "a1", "v1", "v2", "p{1,2}"],
        "pentagon {:?}",
        n5.elements
    );
    ensure!(
        report.summary.contains("DISAGREES") || report.summary.contains("claim holds"),
        "summary does not state agreement"
    );
    let doc = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/ADJUDICATION.md");
    let text = std::fs::read_to_string(&doc).map_err(|e| format!("{}: {e}", doc.display()))?;
    ensure!(
        text.contains(&report.summary),
        "adjudication document is out of date"
    );
    Ok(report.summary)
}

fn iso_engine() -> Outcome {
    let check = |a: &ColoredDigraph, b: &ColoredDigraph| -> Result<(), String> {
        let oracle = common::brute_digraph_iso(a, b);
        let engine = digraph_iso(a, b);
        ensure!(
            oracle.is_some() == engine.is_some(),
            "verdicts differ on {} nodes",
            a.node_count()
        );
        if let Some(phi) = engine {
            ensure!(
                common::is_digraph_iso(a, b, phi.mapping()),
                "mapping fails verification"
            );
        }
        Ok(())
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut compared = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let arcs = rng.gen_range(0..=2 * n);
        let a = common::random_digraph(&mut rng, n, arcs, 2);
        let b = a.relabel(Isomorphism::random(n, &mut rng).mapping());
        let c = common::random_digraph(&mut rng, n, arcs, 2);
        check(&a, &b)?;
        check(&a, &c)?;
        compared += 2;
    }
    let mut family: Vec<ColoredDigraph> = Vec::new();
    for (_, g) in catalog().into_iter().filter(|(_, g)| g.order() <= 2) {
        family.push(gamma(&g, true).into_digraph());
        family.push(gamma(&g, false).into_digraph());
    }
    for n in 1..=3 {
        for g in UndirectedGraph::all_up_to_iso(n) {
            family.push(extended_incidence(&g).digraph().without_labels());
        }
    }
    for n in 1..=5 {
        family.extend(
            UndirectedGraph::all_up_to_iso(n)
                .iter()
                .map(graph_to_digraph),
        );
    }
    for k in 1..=7 {
        family.extend(
            enumerate_lattices(k)
                .iter()
                .map(|l| l.to_poset().hasse_digraph()),
        );
    }
    family.retain(|d| d.node_count() <= 8);
    for (i, a) in family.iter().enumerate() {
        check(
            a,
            &a.relabel(Isomorphism::random(a.node_count(), &mut rng).mapping()),
        )?;
        compared += 1;
        for b in family[i + 1..]
            .iter()
            .filter(|b| b.node_count() == a.node_count())
        {
            check(a, b)?;
            compared += 1;
        }
    }
    Ok(format!("{compared} comparisons agree with brute force"))
}

fn matrix_oracle() -> Outcome {
    let start = Instant::now();
    ensure!(gl_enumerate(2, 2).unwrap().len() == 6, "|GL(2,2)|");
    ensure!(gl_enumerate(2, 3).unwrap().len() == 48, "|GL(2,3)|");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut distinguished = 0;
    for round in 0..100 {
        let p = [2, 3][round % 2];
        let a = MatrixPair::random(p, 2, &mut rng);
        let s = PrimeFieldMatrix::random_invertible(p, 2, &mut rng);
        let t = PrimeFieldMatrix::random_invertible(p, 2, &mut rng);
        let b = a.conjugate(&s).unwrap();
        let c = b.conjugate(&t).unwrap();
        let sim = |x: &MatrixPair, y: &MatrixPair| sim_similar(x, y).unwrap().is_some();
        ensure!(sim(&a, &a), "not reflexive");
        ensure!(
            sim(&a, &b) && sim(&b, &a),
            "conjugates not equivalent both ways"
        );
        ensure!(sim(&b, &c) && sim(&a, &c), "not transitive");
        let d = MatrixPair::random(p, 2, &mut rng);
        ensure!(sim(&a, &d) == sim(&d, &a), "not symmetric");
        if trace_word_invariants(&a, 3) != trace_word_invariants(&d, 3) {
            ensure!(!sim(&a, &d), "trace-distinguished pair reported equivalent");
            distinguished += 1;
        }
    }
    for round in 0..20 {
        let p = [2, 3][round % 2];
        let pair = MatrixPair::random(p, 2, &mut rng);
        let orbit = conjugation_orbit(&pair).unwrap().len();
        let stab = similarity_stabilizer(&pair).unwrap().len();
        let gl = gl_enumerate(2, p).unwrap().len();
        ensure!(
            orbit * stab == gl,
            "orbit {orbit} x stabilizer {stab} != {gl}"
        );
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!(
        "100 rounds, {distinguished} trace-distinguished pairs"
    ))
}

fn round_trip_laws() -> Outcome {
    let mut lattices = 0;
    for k in 1..=6 {
        for l in enumerate_lattices(k) {
            let back = poset_to_lattice(&lattice_to_poset(&l)).map_err(|e| e.to_string())?;
            ensure!(back == l, "k={k}: lattice changed");
            lattices += 1;
        }
    }
    let mut posets = 0;
    for n in 1..=4 {
        for t in common::labelled_posets(n) {
            let p = FinitePoset::from_table(&t).unwrap();
            let admits = common::order_is_lattice(&t);
            match poset_to_lattice(&p) {
                Ok(l) => {
                    ensure!(admits, "accepted a non-lattice");
                    ensure!(lattice_to_poset(&l) == p, "poset changed");
                    posets += 1;
                }
                Err(_) => ensure!(!admits, "rejected a lattice order"),
            }
        }
    }
    Ok(format!(
        "{lattices} lattices and {posets} labelled lattice orders"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "group and gamma-image isomorphism agree",
            theorem2_equivalence,
        ),
        ("gamma size laws", gamma_size_laws),
        ("gamma inverse round trip", gamma_round_trip),
        ("graph and lattice isomorphism agree", theorem3_equivalence),
        ("extended incidence gives lattices", lattice_ness),
        (
            "enumeration and Birkhoff crosscheck",
            oracle_cross_validation,
        ),
        ("distributivity adjudication", theorem4_adjudication),
        ("isomorphism engine against brute force", iso_engine),
        ("matrix oracle", matrix_oracle),
        ("order and lattice round trips", round_trip_laws),
    ];
    // optional criterion numbers on the command line select a subset
    let only: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    let mut ran = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!(
                "PASS {:>2} {name}: {detail} [{:.1}s]",
                i + 1,
                start.elapsed().as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {ran} criteria passed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
