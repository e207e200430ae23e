//! Color refinement and the isomorphism search on small digraphs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wildclass::iso::{color_refine, digraph_iso, graph_iso, graph_to_digraph};
use wildclass::structures::{Arc, ColoredDigraph, Isomorphism, UndirectedGraph};

fn main() {
    let cycle = ColoredDigraph::new(4, (0..4).map(|i| Arc::new(i, (i + 1) % 4, 1))).unwrap();
    println!(
        "directed 4-cycle: {} class(es)",
        color_refine(&cycle, None).num_classes()
    );

    // Refinement cannot separate C6 from two triangles; the search can.
    let c6 = UndirectedGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    let triangles =
        UndirectedGraph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    println!(
        "C6 classes: {:?}, two triangles classes: {:?}",
        color_refine(&graph_to_digraph(&c6), None).class_sizes(),
        color_refine(&graph_to_digraph(&triangles), None).class_sizes()
    );
    println!(
        "C6 ~ two triangles: {}",
        graph_iso(&c6, &triangles).is_some()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let perm = Isomorphism::random(6, &mut rng);
    let d = graph_to_digraph(&c6);
    let e = d.relabel(perm.mapping());
    let phi = digraph_iso(&d, &e).unwrap();
    println!(
        "relabel {:?} -> least isomorphism {:?}",
        perm.mapping(),
        phi.mapping()
    );
}
