//! Run the four lattice checkers on every extended-incidence lattice of a
//! graph with at most four vertices.

use wildclass::cli::adjudicate;

fn main() {
    let report = adjudicate(4);
    for v in &report.lattices {
        let n5 = v.n5.as_ref().map(|e| e.elements.join(", "));
        println!(
            "n={} edges={:?}: distributive={} modular={} N5={}",
            v.vertices,
            v.edges,
            v.distributive,
            v.modular,
            n5.unwrap_or_else(|| "-".into())
        );
    }
    println!("{}", report.summary);
}
