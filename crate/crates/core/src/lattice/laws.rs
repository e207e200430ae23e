use serde::Serialize;

use crate::structures::FiniteLattice;

/// A triple at which a distributive identity fails: its two sides evaluate
/// to `lhs != rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessTriple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub lhs: usize,
    pub rhs: usize,
}

/// A failure of the modular law: `x <= b` but
/// `x ∨ (a ∧ b) = lhs != rhs = (x ∨ a) ∧ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModularWitness {
    pub x: usize,
    pub a: usize,
    pub b: usize,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    fn from_witness(witness: Option<W>) -> Self {
        Verdict {
            holds: witness.is_none(),
            witness,
        }
    }
}

fn first_triple(
    n: usize,
    mut f: impl FnMut(usize, usize, usize) -> Option<(usize, usize)>,
) -> Option<WitnessTriple> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if let Some((lhs, rhs)) = f(x, y, z) {
                    return Some(WitnessTriple { x, y, z, lhs, rhs });
                }
            }
        }
    }
    None
}

/// Least triple violating `(x ∧ y) ∨ (x ∧ z) = x ∧ (y ∨ z)`.
pub fn meet_distributivity_witness(l: &FiniteLattice) -> Option<WitnessTriple> {
    first_triple(l.len(), |x, y, z| {
        let lhs = l.join(l.meet(x, y), l.meet(x, z));
        let rhs = l.meet(x, l.join(y, z));
        (lhs != rhs).then_some((lhs, rhs))
    })
}

/// Least triple violating the dual `(x ∨ y) ∧ (x ∨ z) = x ∨ (y ∧ z)`.
pub fn join_distributivity_witness(l: &FiniteLattice) -> Option<WitnessTriple> {
    first_triple(l.len(), |x, y, z| {
        let lhs = l.meet(l.join(x, y), l.join(x, z));
        let rhs = l.join(x, l.meet(y, z));
        (lhs != rhs).then_some((lhs, rhs))
    })
}

/// Distributivity via the meet-over-join identity, with the lexicographically
/// least witness on failure. The dual identity is evaluated as well; the two
/// are equivalent in every lattice and disagreement is a bug.
pub fn is_distributive(l: &FiniteLattice) -> Verdict<WitnessTriple> {
    let primary = meet_distributivity_witness(l);
    let dual = join_distributivity_witness(l);
    assert_eq!(
        primary.is_none(),
        dual.is_none(),
        "distributive identities disagree: {primary:?} vs {dual:?}"
    );
    Verdict::from_witness(primary)
}

/// The modular law `x <= b ⇒ x ∨ (a ∧ b) = (x ∨ a) ∧ b` over all triples.
pub fn is_modular(l: &FiniteLattice) -> Verdict<ModularWitness> {
    let n = l.len();
    for x in 0..n {
        for a in 0..n {
            for b in 0..n {
                if !l.leq(x, b) {
                    continue;
                }
                let lhs = l.join(x, l.meet(a, b));
                let rhs = l.meet(l.join(x, a), b);
                if lhs != rhs {
                    return Verdict::from_witness(Some(ModularWitness { x, a, b, lhs, rhs }));
                }
            }
        }
    }
    Verdict::from_witness(None)
}
