use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schmidt::{majorizes_check, precedes, tensor_spectrum, OscVector, Relation, Tolerance};

use super::TransformQuery;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CatalystKind {
    /// Residual entropy equals the catalyst's.
    Standard,
    /// Residual entropy exceeds the catalyst's.
    Super,
    /// Some of the catalyst's entanglement is consumed.
    Sub,
    /// Product spectra coincide, so the assisted transformation is reversible.
    TimeReverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CatalystClass {
    /// Reported label; `TimeReverse` takes precedence over the entropy label.
    pub kind: CatalystKind,
    /// Label from the entropy comparison alone (never `TimeReverse`).
    pub entropy_kind: CatalystKind,
    pub time_reverse: bool,
    /// Entropy of the catalyst, in bits.
    pub entropy_before: f64,
    /// Entropy of the residual, in bits.
    pub entropy_after: f64,
}

impl CatalystClass {
    /// Entanglement consumed from the catalyst, `E(χ) - E(χ′)`.
    pub fn entropy_drop(&self) -> f64 {
        self.entropy_before - self.entropy_after
    }
}

/// Labels the tuple `(ψ, φ, χ, χ′)`, which must satisfy `ψ ⊗ χ ≺ φ ⊗ χ′`.
pub fn classify_catalyst(
    q: &TransformQuery,
    chi: &OscVector,
    chi_prime: &OscVector,
    tol: &Tolerance,
) -> Result<CatalystClass> {
    let source = tensor_spectrum(&q.psi, chi);
    let target = tensor_spectrum(&q.phi, chi_prime);
    let verdict = majorizes_check(&source, &target, tol);
    if !verdict.a_precedes_b() {
        return Err(Error::NotACatalyst);
    }
    let entropy_before = chi.entropy_bits();
    let entropy_after = chi_prime.entropy_bits();
    let entropy_kind = if (entropy_before - entropy_after).abs() <= tol.eps_entropy {
        CatalystKind::Standard
    } else if entropy_after > entropy_before {
        CatalystKind::Super
    } else {
        CatalystKind::Sub
    };
    let time_reverse = verdict.relation == Relation::Equivalent;
    Ok(CatalystClass {
        kind: if time_reverse {
            CatalystKind::TimeReverse
        } else {
            entropy_kind
        },
        entropy_kind,
        time_reverse,
        entropy_before,
        entropy_after,
    })
}

/// Whether `ψ ⊗ χ` and `φ ⊗ χ′` have the same spectrum (zero padded).
///
/// Sorted vectors majorize each other iff they are equal, so this is
/// evaluated as two-sided majorization within `tol.eps_major`, which also
/// makes both directions of the conversion feasible by construction.
pub fn is_time_reverse(
    q: &TransformQuery,
    chi: &OscVector,
    chi_prime: &OscVector,
    tol: &Tolerance,
) -> bool {
    let source = tensor_spectrum(&q.psi, chi);
    let target = tensor_spectrum(&q.phi, chi_prime);
    precedes(&source, &target, tol) && precedes(&target, &source, tol)
}
