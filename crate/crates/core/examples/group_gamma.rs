//! Encode groups as colored digraphs and read them back.
//!
//! Run with `cargo run --example group_gamma`.

use wildclass::groups::{catalog, group_iso, Family, FiniteGroup};
use wildclass::iso::digraph_iso;
use wildclass::reductions::{gamma, gamma_inverse};

fn main() {
    let s3 = FiniteGroup::make(Family::Symmetric(3)).unwrap();
    let faithful = gamma(&s3, false);
    let pruned = gamma(&s3, true);
    println!(
        "S3: faithful gamma has {} nodes, pruned {}; both have {} arcs",
        faithful.digraph().node_count(),
        pruned.digraph().node_count(),
        pruned.digraph().arc_count()
    );

    let back = gamma_inverse(pruned.digraph()).unwrap();
    println!(
        "recovered a group of order {}: isomorphic to S3? {}",
        back.order(),
        group_iso(&s3, &back).is_some()
    );

    // Group isomorphism and digraph isomorphism of the images agree.
    let groups = catalog();
    let order6: Vec<_> = groups.iter().filter(|(_, g)| g.order() == 6).collect();
    for (na, a) in &order6 {
        for (nb, b) in &order6 {
            let groups_iso = group_iso(a, b).is_some();
            let digraphs_iso =
                digraph_iso(gamma(a, false).digraph(), gamma(b, false).digraph()).is_some();
            println!("{na} vs {nb}: groups {groups_iso}, digraphs {digraphs_iso}");
        }
    }
}
