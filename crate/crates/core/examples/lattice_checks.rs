//! Distributivity, modularity and forbidden sublattices.

use wildclass::lattice::{
    birkhoff_crosscheck, find_sublattice, is_distributive, is_modular, Pattern,
};
use wildclass::structures::FiniteLattice;

fn main() {
    let cases = [
        ("chain(4)", FiniteLattice::chain(4)),
        ("boolean(3)", FiniteLattice::boolean(3)),
        ("M3", FiniteLattice::diamond()),
        ("N5", FiniteLattice::pentagon()),
    ];
    for (name, l) in &cases {
        let d = is_distributive(l);
        let m = is_modular(l);
        println!("{name}: distributive={} modular={}", d.holds, m.holds);
        if let Some(w) = d.witness {
            println!(
                "  distributivity fails at x={} y={} z={}: {} vs {}",
                w.x, w.y, w.z, w.lhs, w.rhs
            );
        }
        if let Some(w) = m.witness {
            println!(
                "  modular law fails at x={} a={} b={}: {} vs {}",
                w.x, w.a, w.b, w.lhs, w.rhs
            );
        }
        for p in [Pattern::M3, Pattern::N5] {
            if let Some(e) = find_sublattice(l, p) {
                println!("  {p:?} at {:?}", e.elements);
            }
        }
        birkhoff_crosscheck(l).expect("checkers agree");
    }
}
