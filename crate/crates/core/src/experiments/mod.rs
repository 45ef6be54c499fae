//! Reproduction harnesses: catalyzable pair generation, Monte Carlo success
//! curves, the worked-example fixture suite and the on-disk formats.

mod curve;
mod fixtures;
pub mod io;
mod pairs;

pub use curve::{
    first_success_indices, pair_seed, success_probability_curve, CurvePoint, DEFAULT_BUDGETS,
};
pub use fixtures::{fixture_suite, FixtureReport, FixtureResult};
pub use pairs::{generate_catalyzable_pairs, CatalyzablePair, PairGenSpec};
