use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalysis::{locc_feasible, TransformQuery};
use crate::error::{domain, Error, Result};
use crate::schmidt::{precedes, tensor_spectrum, OscVector, Tolerance};
use crate::search::rng::{Domain, TrialStreams};
use crate::search::{sample_sorted_simplex, StandardCheck};

/// Attempts below this count are never judged by the acceptance guardrail.
const GUARD_WINDOW: u64 = 100_000;
/// Minimum acceptance rate tolerated once the window is full.
const MIN_ACCEPTANCE: f64 = 1e-4;
const BATCH: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairGenSpec {
    /// State dimension.
    pub n: usize,
    /// Catalyst dimension.
    pub k: usize,
    pub count: usize,
    pub seed: u64,
    /// Rejected attempts allowed before giving up.
    pub max_rejections: u64,
}

impl Default for PairGenSpec {
    fn default() -> Self {
        PairGenSpec {
            n: 8,
            k: 4,
            count: 5000,
            seed: 0,
            max_rejections: 50_000_000,
        }
    }
}

impl PairGenSpec {
    pub fn validate(&self) -> Result<()> {
        if self.k < 1 || self.k >= self.n {
            return Err(domain(format!(
                "catalyst dimension must satisfy 1 <= k < n, got k = {}, n = {}",
                self.k, self.n
            )));
        }
        if self.count < 1 {
            return Err(domain("pair count must be at least 1"));
        }
        Ok(())
    }
}

/// An incomparable pair together with a standard catalyst that certifies it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalyzablePair {
    /// Position in the generated sequence.
    pub index: usize,
    /// Generator attempt that produced the pair.
    pub attempt: u64,
    pub query: TransformQuery,
    pub witness: OscVector,
}

impl CatalyzablePair {
    /// Re-checks `ψ ⊀ φ` and `ψ ⊗ χ ≺ φ ⊗ χ` from scratch.
    pub fn verify(&self, tol: &Tolerance) -> bool {
        let q = &self.query;
        !locc_feasible(q, tol)
            && precedes(
                &tensor_spectrum(&q.psi, &self.witness),
                &tensor_spectrum(&q.phi, &self.witness),
                tol,
            )
    }
}

/// Draws attempt `a`: `ψ`, `φ` on the `(n-1)`-simplex and `χ` on the
/// `(k-1)`-simplex, all from stream `a`.
fn attempt(
    streams: &TrialStreams,
    spec: &PairGenSpec,
    a: u64,
    tol: &Tolerance,
) -> Option<(TransformQuery, OscVector)> {
    let mut rng = streams.stream(a);
    let psi = sample_sorted_simplex(spec.n, &mut rng);
    let phi = sample_sorted_simplex(spec.n, &mut rng);
    let chi = sample_sorted_simplex(spec.k, &mut rng);
    let q = TransformQuery::new(psi, phi);
    if locc_feasible(&q, tol) {
        return None;
    }
    let mut check = StandardCheck::new(&q, tol.eps_major);
    check.accepts(chi.coeffs()).then_some((q, chi))
}

/// Rejection sampler for certifiably catalyzable pairs.
///
/// Attempt `a` draws only from its own stream, and accepted attempts are
/// kept in attempt order, so the result is independent of the thread count.
/// Generation aborts when rejections exceed `max_rejections`, or when the
/// acceptance rate falls below `1e-4` after the first `1e5` attempts.
pub fn generate_catalyzable_pairs(
    spec: &PairGenSpec,
    tol: &Tolerance,
) -> Result<Vec<CatalyzablePair>> {
    spec.validate()?;
    tol.validate()?;
    let streams = TrialStreams::new(spec.seed, Domain::PairGeneration);
    let mut pairs = Vec::with_capacity(spec.count);
    let mut next = 0u64;
    while pairs.len() < spec.count {
        let hits: Vec<(u64, TransformQuery, OscVector)> = (next..next + BATCH)
            .into_par_iter()
            .filter_map(|a| attempt(&streams, spec, a, tol).map(|(q, chi)| (a, q, chi)))
            .collect();
        for (a, query, witness) in hits {
            if pairs.len() == spec.count {
                break;
            }
            let rejected = a - pairs.len() as u64;
            if rejected > spec.max_rejections {
                break;
            }
            pairs.push(CatalyzablePair {
                index: pairs.len(),
                attempt: a,
                query,
                witness,
            });
        }
        next += BATCH;
        if pairs.len() == spec.count {
            break;
        }
        let rejected = next - pairs.len() as u64;
        if rejected > spec.max_rejections {
            return Err(exhausted(
                next,
                pairs.len(),
                format!("more than {} rejections", spec.max_rejections),
            ));
        }
        if next >= GUARD_WINDOW && (pairs.len() as f64) < MIN_ACCEPTANCE * next as f64 {
            return Err(exhausted(
                next,
                pairs.len(),
                format!(
                    "acceptance rate {:.2e} is below {MIN_ACCEPTANCE:.0e} (n = {}, k = {})",
                    pairs.len() as f64 / next as f64,
                    spec.n,
                    spec.k
                ),
            ));
        }
    }
    Ok(pairs)
}

fn exhausted(attempts: u64, accepted: usize, reason: String) -> Error {
    Error::GenerationExhausted {
        attempts,
        accepted,
        reason,
    }
}
