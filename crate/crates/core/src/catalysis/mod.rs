//! Catalyst-theoretic predicates for pure-state LOCC transformations.
//!
//! A state `χ` is a general catalyst for `ψ → φ` when `ψ ⊗ χ ≺ φ ⊗ χ′`
//! for some residual `χ′`. Comparing the entanglement entropy of `χ` and
//! `χ′` sorts catalysts into standard, super and sub catalysts.

mod classify;
mod region;
mod theorems;

use serde::{Deserialize, Serialize};

use crate::schmidt::{precedes, tensor_spectrum, OscVector, Tolerance};

pub use classify::{classify_catalyst, is_time_reverse, CatalystClass, CatalystKind};
pub use region::{eq_sol_system, example3, mutual_region_scan, product_orderings_hold, RegionGrid};
pub use theorems::{
    example1_condition, theorem1_is_catalyst, theorem1_min_residual, theorem2_bound,
    theorem3_subcatalyst_forced, theorem4_no_go,
};

/// Source and target spectra of a transformation `ψ → φ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformQuery {
    pub psi: OscVector,
    pub phi: OscVector,
}

impl TransformQuery {
    pub fn new(psi: OscVector, phi: OscVector) -> Self {
        TransformQuery { psi, phi }
    }

    /// Common padded length of the two spectra.
    pub fn dim(&self) -> usize {
        self.psi.len().max(self.phi.len())
    }

    /// Both spectra zero-padded to [`TransformQuery::dim`].
    pub fn padded(&self) -> (OscVector, OscVector) {
        let n = self.dim();
        (
            self.psi.padded(n).expect("dim is the maximum length"),
            self.phi.padded(n).expect("dim is the maximum length"),
        )
    }
}

/// Outcome of testing a candidate catalyst.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalystReport {
    pub feasible: bool,
    pub classification: Option<CatalystClass>,
    /// Residual `χ′` used as the feasibility witness.
    pub residual: Option<OscVector>,
}

impl CatalystReport {
    pub fn infeasible() -> Self {
        CatalystReport {
            feasible: false,
            classification: None,
            residual: None,
        }
    }
}

/// Nielsen's criterion: `ψ → φ` under LOCC iff `ψ ≺ φ`.
pub fn locc_feasible(q: &TransformQuery, tol: &Tolerance) -> bool {
    precedes(&q.psi, &q.phi, tol)
}

/// Whether `chi` is a general catalyst for `q`.
///
/// Tensor monotonicity makes the fully consumed residual the weakest
/// requirement: `chi` works for some `χ′` iff `ψ ⊗ χ ≺ φ` (zero padded). The
/// report therefore carries the separable witness `(1, 0, ..., 0)`.
pub fn is_general_catalyst(q: &TransformQuery, chi: &OscVector, tol: &Tolerance) -> CatalystReport {
    let source = tensor_spectrum(&q.psi, chi);
    if !precedes(&source, &q.phi, tol) {
        return CatalystReport::infeasible();
    }
    let residual = OscVector::separable(chi.len());
    let classification = classify_catalyst(q, chi, &residual, tol)
        .expect("the separable residual satisfies the majorization just checked");
    CatalystReport {
        feasible: true,
        classification: Some(classification),
        residual: Some(residual),
    }
}
