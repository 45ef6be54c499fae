use crate::catalysis::{locc_feasible, TransformQuery};
use crate::schmidt::Tolerance;

/// Whether some `k x k` general catalyst exists for `q`.
///
/// A maximally entangled ancilla is the best possible catalyst once its
/// entanglement may be fully consumed, so the question reduces to
/// `ψ ⊗ (1/k, ..., 1/k) ≺ φ`. That always holds for `k >= n`; otherwise
/// only the first `n - 1` prefixes can fail, since the prefix sums of `φ`
/// reach one at index `n`. The sorted product is each `αi / k` repeated `k`
/// times, so each prefix is computed directly in `O(1)`.
pub fn general_catalyst_exists(q: &TransformQuery, k: usize, tol: &Tolerance) -> bool {
    assert!(k >= 1, "catalyst dimension must be positive");
    if locc_feasible(q, tol) {
        return true;
    }
    let (psi, phi) = q.padded();
    let n = psi.len();
    if k >= n {
        return true;
    }
    let (a, b) = (psi.coeffs(), phi.coeffs());
    let kf = k as f64;
    let mut whole = 0.0; // α1 + ... + α_{l / k}
    let mut target = 0.0;
    for l in 1..n {
        target += b[l - 1];
        let (q_full, rem) = ((l - 1) / k, (l - 1) % k);
        if rem == 0 && q_full > 0 {
            whole += a[q_full - 1];
        }
        let prefix = whole + (rem + 1) as f64 * a[q_full] / kf;
        if prefix > target + tol.eps_major {
            return false;
        }
    }
    true
}
