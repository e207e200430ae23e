//! Decision procedures for lattice properties.
//!
//! The modular law is checked in its standard form
//! `x <= b ⇒ x ∨ (a ∧ b) = (x ∨ a) ∧ b`. The variant with right-hand side
//! `(x ∧ a) ∨ b` collapses to `b` whenever `x <= b` and is not equivalent to
//! excluding the pentagon, so it is not used.

mod enumerate;
mod laws;
mod sublattice;

pub use enumerate::enumerate_lattices;
pub use laws::{
    is_distributive, is_modular, join_distributivity_witness, meet_distributivity_witness,
    ModularWitness, Verdict, WitnessTriple,
};
pub use sublattice::{find_sublattice, Pattern, SublatticeEmbedding};

use serde::Serialize;
use thiserror::Error;

use crate::structures::FiniteLattice;

/// Both equational verdicts together with the pattern searches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub distributive: Verdict<WitnessTriple>,
    pub modular: Verdict<ModularWitness>,
    pub m3: Option<SublatticeEmbedding>,
    pub n5: Option<SublatticeEmbedding>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("crosscheck failed: {reason}")]
pub struct CrosscheckFailed {
    pub reason: String,
    pub report: Box<CrosscheckReport>,
}

/// Checks that distributivity agrees with excluding both M3 and N5, that
/// modularity agrees with excluding N5, and that every embedding found
/// re-verifies. A failure means an implementation bug, never a property of
/// the input.
pub fn birkhoff_crosscheck(l: &FiniteLattice) -> Result<CrosscheckReport, CrosscheckFailed> {
    let report = CrosscheckReport {
        distributive: is_distributive(l),
        modular: is_modular(l),
        m3: find_sublattice(l, Pattern::M3),
        n5: find_sublattice(l, Pattern::N5),
    };
    let fail = |reason: &str| CrosscheckFailed {
        reason: reason.to_string(),
        report: Box::new(report.clone()),
    };
    if report.m3.iter().chain(&report.n5).any(|e| !e.verify(l)) {
        return Err(fail("an embedding does not re-verify"));
    }
    if report.distributive.holds != (report.m3.is_none() && report.n5.is_none()) {
        return Err(fail("distributive differs from (no M3 and no N5)"));
    }
    if report.modular.holds != report.n5.is_none() {
        return Err(fail("modular differs from (no N5)"));
    }
    if report.distributive.holds && !report.modular.holds {
        return Err(fail("distributive lattice is not modular"));
    }
    Ok(report)
}
