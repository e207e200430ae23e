//! Evaluate non-commutative polynomial templates and test one instance of
//! the containment condition.

use wildclass::matrix::{
    containment_check_instance, nc_eval, NCTemplate, PrimeFieldMatrix, SimultaneousSimilarity,
};

fn main() {
    let p = 3;
    let a = PrimeFieldMatrix::new(p, &[vec![1, 1], vec![0, 1]]).unwrap();
    let b = PrimeFieldMatrix::new(p, &[vec![0, 1], vec![1, 0]]).unwrap();

    let t = NCTemplate::parse(
        2,
        p,
        &[
            vec![vec!["x1·x2 + 1"]],
            vec![vec!["x1", "x2"], vec!["0", "x1·x1"]],
        ],
    )
    .unwrap();
    for (i, m) in nc_eval(&t, &[a.clone(), b.clone()])
        .unwrap()
        .iter()
        .enumerate()
    {
        println!("T_{}(A, B) =\n{m}", i + 1);
    }

    // A template that ignores its input collapses inequivalent instances.
    let constant = NCTemplate::parse(2, p, &[vec![vec!["1"]], vec![vec!["2"]]]).unwrap();
    let zero = PrimeFieldMatrix::zero(p, 2, 2);
    let report = containment_check_instance(
        &constant,
        &[a, b],
        &[zero.clone(), zero],
        &SimultaneousSimilarity,
        &SimultaneousSimilarity,
    )
    .unwrap();
    println!(
        "source equivalent: {}, images equivalent: {}, condition respected: {}",
        report.source_equivalent, report.target_equivalent, report.agrees
    );
}
