//! Native, JSON and DOT encodings.

use wildclass::groups::{Family, FiniteGroup};
use wildclass::reductions::gamma;
use wildclass::structures::{parse, parse_graph, serialize, FiniteLattice, Format};

fn main() {
    let g = parse_graph("# a path\n3 2\n1 2\n2 3").unwrap();
    println!("{}\n", serialize(&g, Format::Json));

    let l = FiniteLattice::pentagon();
    let text = serialize(&l, Format::Native);
    let back: FiniteLattice = parse(&text, Format::Native).unwrap();
    assert_eq!(back, l);
    println!("{text}\n\n{}\n", serialize(&l, Format::Dot));

    let c2 = FiniteGroup::make(Family::Cyclic(2)).unwrap();
    println!("{}", serialize(gamma(&c2, true).digraph(), Format::Dot));
}
