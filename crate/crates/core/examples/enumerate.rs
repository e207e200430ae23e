//! Count lattices up to isomorphism by brute force.

use wildclass::lattice::{birkhoff_crosscheck, enumerate_lattices};

fn main() {
    for k in 1..=7 {
        let ls = enumerate_lattices(k);
        let distributive = ls
            .iter()
            .filter(|l| birkhoff_crosscheck(l).unwrap().distributive.holds)
            .count();
        println!(
            "{k} elements: {} lattices, {distributive} distributive",
            ls.len()
        );
    }
}
