use serde::{Deserialize, Serialize};

use super::osc::{OscVector, Tolerance};

/// How two coefficient vectors relate under majorization.
///
/// Read the variants with `a` as the subject: `MajorizedBy` means `a ≺ b`,
/// so the state with spectrum `a` converts deterministically to the one with
/// spectrum `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    MajorizedBy,
    Majorizes,
    Equivalent,
    Incomparable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MajorizationVerdict {
    pub relation: Relation,
    /// Smallest prefix length `l` (1-based) with `sum a[..l] > sum b[..l]`,
    /// i.e. where `a ≺ b` fails. Present iff `a ≺ b` does not hold.
    pub first_violation: Option<usize>,
}

impl MajorizationVerdict {
    /// `a ≺ b`, equivalence included.
    pub fn a_precedes_b(&self) -> bool {
        matches!(self.relation, Relation::MajorizedBy | Relation::Equivalent)
    }

    /// `b ≺ a`, equivalence included.
    pub fn b_precedes_a(&self) -> bool {
        matches!(self.relation, Relation::Majorizes | Relation::Equivalent)
    }
}

/// First prefix length at which `sum lhs[..l] > sum rhs[..l] + eps`.
///
/// Shorter slices are treated as zero-padded.
pub(crate) fn first_violation(lhs: &[f64], rhs: &[f64], eps: f64) -> Option<usize> {
    let n = lhs.len().max(rhs.len());
    let (mut sl, mut sr) = (0.0, 0.0);
    for l in 0..n {
        sl += lhs.get(l).copied().unwrap_or(0.0);
        sr += rhs.get(l).copied().unwrap_or(0.0);
        if sl > sr + eps {
            return Some(l + 1);
        }
    }
    None
}

/// `a ≺ b` within `tol.eps_major`.
pub fn precedes(a: &OscVector, b: &OscVector, tol: &Tolerance) -> bool {
    first_violation(a.coeffs(), b.coeffs(), tol.eps_major).is_none()
}

/// Compares `a` against `b`, zero-padding the shorter one.
pub fn majorizes_check(a: &OscVector, b: &OscVector, tol: &Tolerance) -> MajorizationVerdict {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0.0, 0.0);
    let mut a_fails: Option<usize> = None;
    let mut b_fails = false;
    for l in 0..n {
        sa += a.coeffs().get(l).copied().unwrap_or(0.0);
        sb += b.coeffs().get(l).copied().unwrap_or(0.0);
        if a_fails.is_none() && sa > sb + tol.eps_major {
            a_fails = Some(l + 1);
        }
        if sb > sa + tol.eps_major {
            b_fails = true;
        }
        if a_fails.is_some() && b_fails {
            break;
        }
    }
    let relation = match (a_fails.is_none(), !b_fails) {
        (true, true) => Relation::Equivalent,
        (true, false) => Relation::MajorizedBy,
        (false, true) => Relation::Majorizes,
        (false, false) => Relation::Incomparable,
    };
    MajorizationVerdict {
        relation,
        first_violation: a_fails,
    }
}
