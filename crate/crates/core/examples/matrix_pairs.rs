//! Simultaneous similarity of matrix pairs over small prime fields.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wildclass::matrix::{
    conjugation_orbit, gl_enumerate, sim_similar, similarity_stabilizer, trace_word_invariants,
    MatrixPair, PrimeFieldMatrix,
};

fn main() {
    for p in [2, 3] {
        println!("|GL(2,{p})| = {}", gl_enumerate(2, p).unwrap().len());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pair = MatrixPair::random(3, 2, &mut rng);
    let s = PrimeFieldMatrix::random_invertible(3, 2, &mut rng);
    let conj = pair.conjugate(&s).unwrap();
    println!("A =\n{}\nB =\n{}", pair.a, pair.b);
    println!(
        "traces up to length 3: {:?}",
        trace_word_invariants(&pair, 3)
    );
    let found = sim_similar(&pair, &conj)
        .unwrap()
        .expect("conjugate pairs are similar");
    println!("conjugator found:\n{found}");

    let orbit = conjugation_orbit(&pair).unwrap().len();
    let stab = similarity_stabilizer(&pair).unwrap().len();
    println!("orbit {orbit} x stabilizer {stab} = {}", orbit * stab);
}
