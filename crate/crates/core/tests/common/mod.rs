//! Independent oracles and property checks shared by the integration tests
//! and the acceptance harness.

#![allow(dead_code)]

use catalyst_core::catalysis::{
    eq_sol_system, example3, mutual_region_scan, product_orderings_hold, RegionGrid,
};
use catalyst_core::schmidt::{entropy_bits, precedes, tensor_spectrum};
use catalyst_core::search::{
    monte_carlo_standard_catalyst, monte_carlo_standard_catalyst_par, SearchConfig,
};
use catalyst_core::{OscVector, Tolerance, TransformQuery};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn osc(raw: &[f64]) -> OscVector {
    OscVector::new(raw, &Tolerance::default()).unwrap()
}

/// Every pairwise product, sorted with a comparison sort.
pub fn naive_tensor(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect();
    out.sort_by(|x, y| y.total_cmp(x));
    out
}

/// Prefix-sum majorization written from the definition, on padded copies.
pub fn naive_precedes(a: &[f64], b: &[f64], eps: f64) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0.0, 0.0);
    for l in 0..n {
        sa += a.get(l).copied().unwrap_or(0.0);
        sb += b.get(l).copied().unwrap_or(0.0);
        if sa > sb + eps {
            return false;
        }
    }
    true
}

/// Smallest `x′ ∈ [0.5, 1]` with `ψ ⊗ (x, 1-x) ≺ φ ⊗ (x′, 1-x′)`, by bisection
/// on the monotone feasibility predicate.
pub fn min_residual_bisect(q: &TransformQuery, x: f64) -> f64 {
    let lhs = naive_tensor(q.psi.coeffs(), &[x, 1.0 - x]);
    let ok = |xp: f64| naive_precedes(&lhs, &naive_tensor(q.phi.coeffs(), &[xp, 1.0 - xp]), 1e-12);
    let (mut lo, mut hi) = (0.5, 1.0);
    if ok(lo) {
        return lo;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

#[derive(Debug, Default, Clone, Copy)]
pub struct RegionCrossCheck {
    /// Cells meeting the ordering and incomparability premises.
    pub compared: usize,
    pub disagreements: usize,
    pub min_feasible_x1p: f64,
}

pub fn example3_grid(resolution: usize) -> RegionGrid {
    mutual_region_scan(
        &osc(&example3::PSI),
        &osc(&example3::PHI),
        &osc(&example3::CHI),
        resolution,
        &Tolerance::default(),
    )
}

/// Compares the raster with the closed-form system on every cell where
/// both product spectra sort in the assumed order and `χ`, `χ′` are
/// incomparable (`x1′ + x2′ < x1 + x2 = 0.92`).
pub fn region_cross_check(grid: &RegionGrid) -> RegionCrossCheck {
    let mut out = RegionCrossCheck {
        min_feasible_x1p: f64::INFINITY,
        ..RegionCrossCheck::default()
    };
    for (_, _, x1p, x2p, valid, feasible) in grid.cells() {
        if feasible {
            out.min_feasible_x1p = out.min_feasible_x1p.min(x1p);
        }
        let chi_p = [x1p, x2p, 1.0 - x1p - x2p];
        if !valid
            || x1p + x2p >= 0.92
            || !product_orderings_hold(&example3::PSI, &example3::PHI, &example3::CHI, &chi_p)
        {
            continue;
        }
        out.compared += 1;
        out.disagreements += usize::from(feasible != eq_sol_system(x1p, x2p));
    }
    out
}

/// Coefficient vectors of length 1..=8 with strictly positive raw weights.
pub fn osc_strategy() -> impl Strategy<Value = OscVector> {
    osc_strategy_len(1..=8)
}

pub fn osc_strategy_len(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = OscVector> {
    prop::collection::vec(1e-6f64..1.0, len).prop_map(|raw| {
        let s: f64 = raw.iter().sum();
        let v: Vec<f64> = raw.iter().map(|x| x / s).collect();
        OscVector::new(&v, &Tolerance::default()).unwrap()
    })
}

/// `λ v + (1 - λ) u` with `u` uniform is majorized by `v`.
pub fn mix_with_uniform(v: &OscVector, lambda: f64) -> OscVector {
    let n = v.len() as f64;
    let raw: Vec<f64> = v
        .coeffs()
        .iter()
        .map(|c| lambda * c + (1.0 - lambda) / n)
        .collect();
    OscVector::new(&raw, &Tolerance::default()).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub fn prop_preorder(
    c: &OscVector,
    l1: f64,
    l2: f64,
    other: &OscVector,
) -> Result<(), TestCaseError> {
    let tol = Tolerance::default();
    check(precedes(c, c, &tol), || "reflexivity".into())?;
    let b = mix_with_uniform(c, l1);
    let a = mix_with_uniform(&b, l2);
    check(precedes(&a, &b, &tol) && precedes(&b, c, &tol), || {
        "mixing".into()
    })?;
    check(precedes(&a, c, &tol), || "transitivity".into())?;
    // transitivity on arbitrary triples whenever the premises hold
    if precedes(other, &a, &tol) {
        check(precedes(other, c, &tol), || "transitivity (random)".into())?;
    }
    check(
        precedes(c, other, &tol) == naive_precedes(c.coeffs(), other.coeffs(), tol.eps_major),
        || "definition".into(),
    )
}

pub fn prop_extremes(v: &OscVector) -> Result<(), TestCaseError> {
    let tol = Tolerance::default();
    let n = v.len();
    check(precedes(&OscVector::uniform(n), v, &tol), || {
        "uniform is least".into()
    })?;
    check(precedes(v, &OscVector::separable(n), &tol), || {
        "separable is greatest".into()
    })
}

pub fn prop_tensor_monotone(
    b: &OscVector,
    lambda: f64,
    c: &OscVector,
) -> Result<(), TestCaseError> {
    let tol = Tolerance::default();
    let a = mix_with_uniform(b, lambda);
    check(
        precedes(&tensor_spectrum(&a, c), &tensor_spectrum(b, c), &tol),
        || format!("a ⊗ c ⊀ b ⊗ c for a = {a:?}, b = {b:?}, c = {c:?}"),
    )
}

pub fn prop_padding_neutral(
    a: &OscVector,
    b: &OscVector,
    extra: usize,
) -> Result<(), TestCaseError> {
    let tol = Tolerance::default();
    let pa = a.padded(a.len() + extra).unwrap();
    let pb = b.padded(b.len() + extra).unwrap();
    check(precedes(a, b, &tol) == precedes(&pa, b, &tol), || {
        "pad source".into()
    })?;
    check(precedes(a, b, &tol) == precedes(a, &pb, &tol), || {
        "pad target".into()
    })?;
    check(
        tensor_spectrum(&pa, b).coeffs()[..a.len() * b.len()] == *tensor_spectrum(a, b).coeffs(),
        || "pad tensor".into(),
    )
}

pub fn prop_merge_matches_sort(a: &OscVector, b: &OscVector) -> Result<(), TestCaseError> {
    check(
        tensor_spectrum(a, b).coeffs() == naive_tensor(a.coeffs(), b.coeffs()).as_slice(),
        || "merge differs from sort".into(),
    )
}

pub fn prop_entropy_additive(a: &OscVector, b: &OscVector) -> Result<(), TestCaseError> {
    let h = entropy_bits(&tensor_spectrum(a, b));
    let sum = entropy_bits(a) + entropy_bits(b);
    check((h - sum).abs() <= 1e-9, || format!("{h} vs {sum}"))
}

/// Same seed, same outcome; and the parallel search equals the sequential
/// one under the given pool.
pub fn prop_search_determinism(
    psi: &OscVector,
    phi: &OscVector,
    seed: u64,
    pool: &rayon::ThreadPool,
) -> Result<(), TestCaseError> {
    let tol = Tolerance::default();
    let q = TransformQuery::new(psi.clone(), phi.clone());
    if precedes(psi, phi, &tol) {
        return Ok(());
    }
    let cfg = SearchConfig::new(3, 64, seed);
    let first = monte_carlo_standard_catalyst(&q, &cfg).unwrap();
    let again = monte_carlo_standard_catalyst(&q, &cfg).unwrap();
    let par = pool
        .install(|| monte_carlo_standard_catalyst_par(&q, &cfg))
        .unwrap();
    check(first == again, || "repeat differs".into())?;
    check(first == par, || "parallel differs".into())
}
