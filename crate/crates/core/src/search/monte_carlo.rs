use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalysis::{locc_feasible, TransformQuery};
use crate::error::{domain, Result};
use crate::schmidt::{OscVector, Tolerance};

use super::rng::{Domain, TrialStreams};
use super::simplex::sample_sorted_simplex_into;
use super::trial::StandardCheck;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Catalyst dimension.
    pub k: usize,
    /// Trial budget `M`.
    pub big_number: u64,
    pub seed: u64,
    pub tol: Tolerance,
}

impl SearchConfig {
    pub fn new(k: usize, big_number: u64, seed: u64) -> Self {
        SearchConfig {
            k,
            big_number,
            seed,
            tol: Tolerance::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 1 {
            return Err(domain("catalyst dimension k must be at least 1"));
        }
        if self.big_number < 1 {
            return Err(domain("trial budget must be at least 1"));
        }
        self.tol.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStatus {
    Success,
    Failure,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub catalyst: Option<OscVector>,
    pub trials_used: u64,
    pub seed: u64,
}

impl SearchOutcome {
    pub fn is_success(&self) -> bool {
        self.status == SearchStatus::Success
    }

    pub(crate) fn success(catalyst: OscVector, trials_used: u64, seed: u64) -> Self {
        SearchOutcome {
            status: SearchStatus::Success,
            catalyst: Some(catalyst),
            trials_used,
            seed,
        }
    }

    pub(crate) fn failure(trials_used: u64, seed: u64) -> Self {
        SearchOutcome {
            status: SearchStatus::Failure,
            catalyst: None,
            trials_used,
            seed,
        }
    }
}

/// One Monte Carlo trial stream: trial `t` samples its candidate from
/// stream `t` and nothing else.
#[derive(Debug, Clone)]
pub struct TrialRunner {
    streams: TrialStreams,
    check: StandardCheck,
    k: usize,
    buf: Vec<f64>,
}

impl TrialRunner {
    pub fn new(q: &TransformQuery, k: usize, seed: u64, tol: &Tolerance) -> Self {
        TrialRunner {
            streams: TrialStreams::new(seed, Domain::CatalystTrials),
            check: StandardCheck::new(q, tol.eps_major),
            k,
            buf: Vec::with_capacity(k),
        }
    }

    /// Runs trial `t`; on success the candidate is left in [`TrialRunner::candidate`].
    pub fn run(&mut self, t: u64) -> bool {
        let mut rng = self.streams.stream(t);
        sample_sorted_simplex_into(self.k, &mut rng, &mut self.buf);
        self.check.accepts(&self.buf)
    }

    pub fn candidate(&self) -> OscVector {
        OscVector::from_sorted_unchecked(self.buf.clone())
    }

    /// Index of the first successful trial below `budget`.
    pub fn first_success(&mut self, budget: u64) -> Option<u64> {
        (0..budget).find(|&t| self.run(t))
    }
}

fn check_precondition(q: &TransformQuery, cfg: &SearchConfig) -> Result<()> {
    cfg.validate()?;
    if locc_feasible(q, &cfg.tol) {
        return Err(domain(
            "the transformation is already feasible without a catalyst",
        ));
    }
    Ok(())
}

/// Randomized search for a `k x k` standard catalyst.
///
/// Draws up to `M` sorted flat-Dirichlet candidates and returns the first
/// `χ` with `ψ ⊗ χ ≺ φ ⊗ χ`. A failure is one-sided evidence: a catalyst
/// set of small measure can be missed.
pub fn monte_carlo_standard_catalyst(
    q: &TransformQuery,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    check_precondition(q, cfg)?;
    let mut runner = TrialRunner::new(q, cfg.k, cfg.seed, &cfg.tol);
    Ok(match runner.first_success(cfg.big_number) {
        Some(t) => SearchOutcome::success(runner.candidate(), t + 1, cfg.seed),
        None => SearchOutcome::failure(cfg.big_number, cfg.seed),
    })
}

/// Same contract as [`monte_carlo_standard_catalyst`], with trials spread
/// over the ambient rayon pool. The lowest successful trial index wins, so
/// the outcome equals the sequential one for every thread count.
pub fn monte_carlo_standard_catalyst_par(
    q: &TransformQuery,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    check_precondition(q, cfg)?;
    const CHUNK: u64 = 1024;
    let template = TrialRunner::new(q, cfg.k, cfg.seed, &cfg.tol);
    let chunks = cfg.big_number.div_ceil(CHUNK);
    let hit = (0..chunks)
        .into_par_iter()
        .map_init(
            || template.clone(),
            |runner, c| {
                let end = ((c + 1) * CHUNK).min(cfg.big_number);
                (c * CHUNK..end)
                    .find(|&t| runner.run(t))
                    .map(|t| (t, runner.candidate()))
            },
        )
        .find_first(Option::is_some)
        .flatten();
    Ok(match hit {
        Some((t, chi)) => SearchOutcome::success(chi, t + 1, cfg.seed),
        None => SearchOutcome::failure(cfg.big_number, cfg.seed),
    })
}
