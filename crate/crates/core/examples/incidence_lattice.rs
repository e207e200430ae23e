//! Turn an undirected graph into a bounded lattice.

use wildclass::reductions::{extended_incidence, IncidenceRole};
use wildclass::structures::UndirectedGraph;

fn main() {
    let p2 = UndirectedGraph::new(2, [(0, 1)]).unwrap();
    let ext = extended_incidence(&p2);
    let lattice = ext
        .lattice()
        .expect("extended incidence orders are lattices");
    let name = |x: usize| ext.roles()[x].label();

    println!(
        "{} nodes, {} arcs",
        ext.digraph().node_count(),
        ext.digraph().arc_count()
    );
    let v1 = ext.node_of(IncidenceRole::Vertex(0)).unwrap();
    let v2 = ext.node_of(IncidenceRole::Vertex(1)).unwrap();
    let a1 = ext.node_of(IncidenceRole::Atom(0)).unwrap();
    let a2 = ext.node_of(IncidenceRole::Atom(1)).unwrap();
    println!("v1 meet v2 = {}", name(lattice.meet(v1, v2)));
    println!("v1 join v2 = {}", name(lattice.join(v1, v2)));
    println!("a1 join a2 = {}", name(lattice.join(a1, a2)));

    println!("cover relation:");
    for (x, y) in lattice.to_poset().covers() {
        println!("  {} < {}", name(x), name(y));
    }
}
