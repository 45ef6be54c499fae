//! Closed-form catalyst conditions for low-dimensional transformations.

use crate::error::{domain, Error, Result};
use crate::schmidt::{majorizes_check, precedes, tensor_spectrum, OscVector, Relation, Tolerance};

use super::TransformQuery;

fn check_two_level_x(x: f64) -> Result<()> {
    if !(0.5..=1.0).contains(&x) {
        return Err(domain(format!(
            "catalyst coefficient x = {x} must lie in [0.5, 1]"
        )));
    }
    Ok(())
}

fn check_two_by_two(q: &TransformQuery, tol: &Tolerance) -> Result<()> {
    if q.psi.len() != 2 || q.phi.len() != 2 {
        return Err(domain("expected a 2 x 2 source and target"));
    }
    if precedes(&q.psi, &q.phi, tol) {
        return Err(domain(
            "the transformation is already feasible without a catalyst",
        ));
    }
    Ok(())
}

/// `(x, 1 - x)` catalyzes a 2 x 2 transformation iff `x <= β1 / α1`.
pub fn theorem1_is_catalyst(q: &TransformQuery, x: f64, tol: &Tolerance) -> Result<bool> {
    check_two_by_two(q, tol)?;
    check_two_level_x(x)?;
    let (a1, b1) = (q.psi.coeffs()[0], q.phi.coeffs()[0]);
    Ok(x <= b1 / a1 + tol.eps_major)
}

/// Smallest `x′` such that `ψ ⊗ (x, 1-x) ≺ φ ⊗ (x′, 1-x′)`.
///
/// For `x >= α1` the binding constraints are `α1 x <= β1 x′` and
/// `α1 + α2 x <= β1 + β2 x′`; for `x < α1` the second prefix adds
/// `α1 <= x′`.
pub fn theorem1_min_residual(q: &TransformQuery, x: f64, tol: &Tolerance) -> Result<f64> {
    if !theorem1_is_catalyst(q, x, tol)? {
        return Err(domain(format!(
            "(x, 1 - x) with x = {x} is not a general catalyst"
        )));
    }
    let [a1, a2] = [q.psi.coeffs()[0], q.psi.coeffs()[1]];
    let [b1, b2] = [q.phi.coeffs()[0], q.phi.coeffs()[1]];
    if b2 == 0.0 {
        return Err(Error::DegenerateTarget);
    }
    let first = a1 / b1 * x;
    let last = 1.0 - a2 / b2 * (1.0 - x);
    let bound = if x >= a1 {
        first.max(last)
    } else {
        first.max(a1).max(last)
    };
    Ok(bound.min(1.0))
}

/// Largest leading catalyst coefficient guaranteed to work for an
/// incomparable 3 x 3 pair, `min{β1/α1, (β1+β2)/(α1+α2)}`.
pub fn theorem2_bound(q: &TransformQuery, tol: &Tolerance) -> Result<f64> {
    if q.psi.len() != 3 || q.phi.len() != 3 {
        return Err(domain("expected a 3 x 3 source and target"));
    }
    if majorizes_check(&q.psi, &q.phi, tol).relation != Relation::Incomparable {
        return Err(domain("source and target are comparable"));
    }
    let (a, b) = (q.psi.coeffs(), q.phi.coeffs());
    Ok((b[0] / a[0]).min((b[0] + b[1]) / (a[0] + a[1])))
}

/// True when a 2- or 3-level catalyst for `q` is forced to be a subcatalyst:
/// `α1 > β1` and `αn < βn`, with `n` the common padded length.
///
/// The tuple must satisfy `ψ ⊗ χ ≺ φ ⊗ χ′`. When the hypothesis holds the
/// catalyst is strictly majorized by its residual.
pub fn theorem3_subcatalyst_forced(
    q: &TransformQuery,
    chi: &OscVector,
    chi_prime: &OscVector,
    tol: &Tolerance,
) -> Result<bool> {
    let k = chi.len();
    if !(k == 2 || k == 3) || chi_prime.len() != k {
        return Err(domain(
            "catalyst and residual must both have 2 or both have 3 levels",
        ));
    }
    if !precedes(
        &tensor_spectrum(&q.psi, chi),
        &tensor_spectrum(&q.phi, chi_prime),
        tol,
    ) {
        return Err(Error::NotACatalyst);
    }
    let (psi, phi) = q.padded();
    let (a, b) = (psi.coeffs(), phi.coeffs());
    let n = a.len();
    let forced = a[0] > b[0] && a[n - 1] < b[n - 1];
    if forced {
        debug_assert_eq!(
            majorizes_check(chi, chi_prime, tol).relation,
            Relation::MajorizedBy
        );
    }
    Ok(forced)
}

/// No standard catalyst or supercatalyst exists for a source of Schmidt
/// rank at most two that cannot reach its target.
///
/// Returns `Ok(true)` whenever the preconditions hold; it is meant as a
/// filter before running a catalyst search.
pub fn theorem4_no_go(q: &TransformQuery, tol: &Tolerance) -> Result<bool> {
    if q.psi.schmidt_rank() > 2 {
        return Err(domain("the source must have Schmidt rank at most 2"));
    }
    if precedes(&q.psi, &q.phi, tol) {
        return Err(domain(
            "the transformation is already feasible without a catalyst",
        ));
    }
    Ok(true)
}

/// Two-level source, three-level target: `(x, 1 - x)` is a (fully consumed)
/// subcatalyst iff `α1 <= β1 + β2` and `x <= min{β1/α1, β1 + β2}`.
pub fn example1_condition(q: &TransformQuery, x: f64, tol: &Tolerance) -> Result<bool> {
    if q.psi.len() != 2 || q.phi.len() != 3 {
        return Err(domain("expected a 2-level source and a 3-level target"));
    }
    if precedes(&q.psi, &q.phi, tol) {
        return Err(domain(
            "the transformation is already feasible without a catalyst",
        ));
    }
    check_two_level_x(x)?;
    let a1 = q.psi.coeffs()[0];
    let (b1, b2) = (q.phi.coeffs()[0], q.phi.coeffs()[1]);
    let top_two = b1 + b2;
    let eps = tol.eps_major;
    Ok(a1 <= top_two + eps && x <= (b1 / a1).min(top_two) + eps)
}
