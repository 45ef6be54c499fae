//! Named catalyst-search strategies, selectable at runtime.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalysis::TransformQuery;
use crate::error::{domain, Error, Result};
use crate::schmidt::OscVector;

use super::exhaustive::{exhaustive_catalyst_oracle, SimplexGrid};
use super::general::general_catalyst_exists;
use super::monte_carlo::{monte_carlo_standard_catalyst_par, SearchConfig, SearchOutcome};

/// Which catalyst notion a strategy decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CatalystTarget {
    /// `ψ ⊗ χ ≺ φ ⊗ χ`.
    Standard,
    /// `ψ ⊗ χ ≺ φ ⊗ χ′` for some residual `χ′`.
    General,
}

impl fmt::Display for CatalystTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalystTarget::Standard => f.write_str("standard"),
            CatalystTarget::General => f.write_str("general"),
        }
    }
}

pub trait CatalystSearch: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn target(&self) -> CatalystTarget;

    fn search(&self, q: &TransformQuery, cfg: &SearchConfig) -> Result<SearchOutcome>;
}

/// Randomized search over flat-Dirichlet candidates.
#[derive(Debug, Default)]
pub struct MonteCarlo;

impl CatalystSearch for MonteCarlo {
    fn name(&self) -> &'static str {
        "monte-carlo"
    }

    fn description(&self) -> &'static str {
        "sample up to M sorted uniform-simplex catalysts and test each"
    }

    fn target(&self) -> CatalystTarget {
        CatalystTarget::Standard
    }

    fn search(&self, q: &TransformQuery, cfg: &SearchConfig) -> Result<SearchOutcome> {
        monte_carlo_standard_catalyst_par(q, cfg)
    }
}

/// Exhaustive enumeration of a sorted simplex grid (k = 2 or 3).
#[derive(Debug)]
pub struct Grid {
    pub step: f64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { step: 1e-3 }
    }
}

impl CatalystSearch for Grid {
    fn name(&self) -> &'static str {
        "grid"
    }

    fn description(&self) -> &'static str {
        "enumerate the sorted simplex grid (k = 2 or 3) and return the first catalyst"
    }

    fn target(&self) -> CatalystTarget {
        CatalystTarget::Standard
    }

    fn search(&self, q: &TransformQuery, cfg: &SearchConfig) -> Result<SearchOutcome> {
        cfg.validate()?;
        let points = SimplexGrid::new(cfg.k, self.step)?.len();
        Ok(
            match exhaustive_catalyst_oracle(q, cfg.k, self.step, &cfg.tol)? {
                Some(chi) => SearchOutcome::success(chi, points, cfg.seed),
                None => SearchOutcome::failure(points, cfg.seed),
            },
        )
    }
}

/// Decides general-catalyst existence with a maximally entangled ancilla.
#[derive(Debug, Default)]
pub struct UniformAncilla;

impl CatalystSearch for UniformAncilla {
    fn name(&self) -> &'static str {
        "uniform-ancilla"
    }

    fn description(&self) -> &'static str {
        "test psi (x) (1/k,...,1/k) against phi; succeeds iff a k x k general catalyst exists"
    }

    fn target(&self) -> CatalystTarget {
        CatalystTarget::General
    }

    fn search(&self, q: &TransformQuery, cfg: &SearchConfig) -> Result<SearchOutcome> {
        cfg.validate()?;
        Ok(if general_catalyst_exists(q, cfg.k, &cfg.tol) {
            SearchOutcome::success(OscVector::uniform(cfg.k), 1, cfg.seed)
        } else {
            SearchOutcome::failure(1, cfg.seed)
        })
    }
}

pub struct SearchRegistry {
    strategies: Vec<Box<dyn CatalystSearch>>,
}

impl SearchRegistry {
    pub fn empty() -> Self {
        SearchRegistry {
            strategies: Vec::new(),
        }
    }

    /// Registry with `monte-carlo`, `grid` and `uniform-ancilla`.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(MonteCarlo));
        r.register(Box::new(Grid::default()));
        r.register(Box::new(UniformAncilla));
        r
    }

    /// Adds a strategy, replacing any existing one with the same name.
    pub fn register(&mut self, strategy: Box<dyn CatalystSearch>) {
        self.strategies.retain(|s| s.name() != strategy.name());
        self.strategies.push(strategy);
    }

    pub fn get(&self, name: &str) -> Result<&dyn CatalystSearch> {
        self.strategies
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
    }

    /// Looks up `name` and checks that it decides `target`.
    pub fn get_for(&self, name: &str, target: CatalystTarget) -> Result<&dyn CatalystSearch> {
        let s = self.get(name)?;
        if s.target() != target {
            return Err(domain(format!(
                "strategy `{name}` decides {} catalysts, not {target}",
                s.target()
            )));
        }
        Ok(s)
    }

    pub fn default_name(target: CatalystTarget) -> &'static str {
        match target {
            CatalystTarget::Standard => "monte-carlo",
            CatalystTarget::General => "uniform-ancilla",
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn CatalystSearch> {
        self.strategies.iter().map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.iter().map(|s| s.name()).collect()
    }
}

impl Default for SearchRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}
