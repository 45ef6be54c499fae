//! Catalyst search: the Monte Carlo standard-catalyst test, the general
//! catalyst decision procedure, grid oracles and the strategy registry.

mod exhaustive;
mod general;
mod monte_carlo;
mod registry;
pub mod rng;
mod simplex;
mod trial;

pub use exhaustive::{catalyst_grid_fraction, exhaustive_catalyst_oracle, SimplexGrid};
pub use general::general_catalyst_exists;
pub use monte_carlo::{
    monte_carlo_standard_catalyst, monte_carlo_standard_catalyst_par, SearchConfig, SearchOutcome,
    SearchStatus, TrialRunner,
};
pub use registry::{
    CatalystSearch, CatalystTarget, Grid, MonteCarlo, SearchRegistry, UniformAncilla,
};
pub use simplex::{sample_sorted_simplex, sample_sorted_simplex_into};
pub use trial::StandardCheck;
