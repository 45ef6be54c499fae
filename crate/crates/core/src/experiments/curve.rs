use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::schmidt::Tolerance;
use crate::search::rng::derive_seed;
use crate::search::TrialRunner;

use super::pairs::CatalyzablePair;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    /// Trial budget `M`.
    pub big_number: u64,
    /// `successes / pairs`.
    pub success_fraction: f64,
    pub successes: usize,
    pub pairs: usize,
    pub seed: u64,
}

/// Budgets used when none are given.
pub const DEFAULT_BUDGETS: [u64; 6] = [1, 5, 10, 25, 50, 100];

/// Per-pair search seed: pair `i` always runs the same trial stream.
pub fn pair_seed(seed: u64, index: usize) -> u64 {
    derive_seed(seed, index as u64)
}

/// Index of the first successful Monte Carlo trial for every pair, searched
/// up to `budget` trials. `None` means no success within the budget.
pub fn first_success_indices(
    pairs: &[CatalyzablePair],
    k: usize,
    budget: u64,
    seed: u64,
    tol: &Tolerance,
) -> Vec<Option<u64>> {
    pairs
        .par_iter()
        .map(|p| TrialRunner::new(&p.query, k, pair_seed(seed, p.index), tol).first_success(budget))
        .collect()
}

/// Monte Carlo success rate as a function of the trial budget.
///
/// Every pair runs one trial stream up to the largest budget; a pair counts
/// as a success at budget `M` when its first hit lies among the first `M`
/// trials. Shorter budgets are prefixes of longer ones, so the curve is
/// nondecreasing by construction and equals running the search once per `M`.
pub fn success_probability_curve(
    pairs: &[CatalyzablePair],
    k: usize,
    m_values: &[u64],
    seed: u64,
    tol: &Tolerance,
) -> Result<Vec<CurvePoint>> {
    if k < 1 {
        return Err(domain("catalyst dimension k must be at least 1"));
    }
    if pairs.is_empty() {
        return Err(domain("the curve needs at least one pair"));
    }
    if m_values.contains(&0) {
        return Err(domain("trial budgets must be at least 1"));
    }
    let max_m = m_values.iter().copied().max().unwrap_or(0);
    let hits = first_success_indices(pairs, k, max_m, seed, tol);
    Ok(m_values
        .iter()
        .map(|&m| {
            let successes = hits.iter().filter(|h| h.is_some_and(|t| t < m)).count();
            CurvePoint {
                big_number: m,
                success_fraction: successes as f64 / pairs.len() as f64,
                successes,
                pairs: pairs.len(),
                seed,
            }
        })
        .collect())
}
