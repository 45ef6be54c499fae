//! Deterministic LOCC convertibility of bipartite pure states and the
//! calculus of entanglement catalysts built on it.
//!
//! States are described by their ordered Schmidt coefficients
//! ([`OscVector`]). `ψ → φ` is possible under LOCC iff `ψ ≺ φ`
//! (majorization); an ancilla `χ` catalyzes an otherwise impossible
//! transformation when `ψ ⊗ χ ≺ φ ⊗ χ′`.
//!
//! - [`schmidt`]: coefficient vectors, majorization, tensor spectra, entropy.
//! - [`catalysis`]: catalyst predicates, closed-form conditions and the
//!   mutual-catalysis region scan.
//! - [`search`]: Monte Carlo and exhaustive catalyst search behind a
//!   runtime strategy registry.
//! - [`experiments`]: pair generation, success-probability curves, the
//!   worked-example fixture suite and their CSV/JSONL formats.

pub mod catalysis;
pub mod error;
pub mod experiments;
pub mod schmidt;
pub mod search;

pub use catalysis::{CatalystReport, TransformQuery};
pub use error::{Error, Result};
pub use schmidt::{MajorizationVerdict, OscVector, Relation, Tolerance};
pub use search::{SearchConfig, SearchOutcome, SearchStatus};
