//! Mutual-catalysis region for three-level states.
//!
//! Fixes `ψ`, `φ` and `χ` and rasterizes the residual `χ′ = (x1′, x2′, x3′)`
//! over the unit square of `(x1′, x2′)`, with `x3′ = 1 - x1′ - x2′`.

use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::schmidt::{first_violation, tensor_spectrum, OscVector, SpectrumMerge, Tolerance};

/// States of the worked three-level mutual-catalysis example.
pub mod example3 {
    pub const PSI: [f64; 3] = [0.5, 0.26, 0.24];
    pub const PHI: [f64; 3] = [0.49, 0.48, 0.03];
    pub const CHI: [f64; 3] = [0.62, 0.3, 0.08];
    /// A residual inside the feasible region.
    pub const CHI_PRIME: [f64; 3] = [0.81, 0.1, 0.09];
}

/// Feasibility raster over `(x1′, x2′) ∈ [0, 1]²`.
///
/// Cell `(i, j)` is the half-open square `[i/r, (i+1)/r) × [j/r, (j+1)/r)`,
/// sampled at its center. Storage is row-major in `i` (the `x1′` axis).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionGrid {
    pub resolution: usize,
    /// `x1′ >= x2′ >= x3′ >= 0` at the cell center.
    pub valid: Vec<bool>,
    pub feasible: Vec<bool>,
}

impl RegionGrid {
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.resolution + j
    }

    /// Center `(x1′, x2′)` of cell `(i, j)`.
    pub fn center(&self, i: usize, j: usize) -> (f64, f64) {
        cell_center(self.resolution, i, j)
    }

    /// Cell containing the point, if it lies in `[0, 1)²`.
    pub fn cell_of(&self, x1p: f64, x2p: f64) -> Option<(usize, usize)> {
        let r = self.resolution as f64;
        let (i, j) = ((x1p * r).floor(), (x2p * r).floor());
        if i < 0.0 || j < 0.0 || i >= r || j >= r {
            return None;
        }
        Some((i as usize, j as usize))
    }

    pub fn is_feasible_at(&self, x1p: f64, x2p: f64) -> bool {
        self.cell_of(x1p, x2p)
            .is_some_and(|(i, j)| self.feasible[self.index(i, j)])
    }

    pub fn feasible_count(&self) -> usize {
        self.feasible.iter().filter(|&&f| f).count()
    }

    pub fn valid_count(&self) -> usize {
        self.valid.iter().filter(|&&v| v).count()
    }

    /// `(i, j, x1′, x2′, valid, feasible)` for every cell, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, f64, f64, bool, bool)> + '_ {
        let r = self.resolution;
        (0..r * r).map(move |idx| {
            let (i, j) = (idx / r, idx % r);
            let (x1, x2) = cell_center(r, i, j);
            (i, j, x1, x2, self.valid[idx], self.feasible[idx])
        })
    }
}

fn cell_center(resolution: usize, i: usize, j: usize) -> (f64, f64) {
    let r = resolution as f64;
    ((i as f64 + 0.5) / r, (j as f64 + 0.5) / r)
}

/// Ordered residual `(x1′, x2′, x3′)` for a cell center, if it is one.
fn residual_at(x1p: f64, x2p: f64, tol: &Tolerance) -> Option<[f64; 3]> {
    let x3p = 1.0 - x1p - x2p;
    if x3p < -tol.eps_norm || x1p < x2p || x2p < x3p {
        return None;
    }
    Some([x1p, x2p, x3p.max(0.0)])
}

/// Rasterizes the set of residuals `χ′` with `ψ ⊗ χ ≺ φ ⊗ χ′`.
///
/// Rows are evaluated in parallel on the ambient rayon pool; the output does
/// not depend on the number of threads.
pub fn mutual_region_scan(
    psi: &OscVector,
    phi: &OscVector,
    chi: &OscVector,
    resolution: usize,
    tol: &Tolerance,
) -> RegionGrid {
    assert!(resolution >= 1, "resolution must be positive");
    let source = tensor_spectrum(psi, chi);
    let rows: Vec<(Vec<bool>, Vec<bool>)> = (0..resolution)
        .into_par_iter()
        .map(|i| {
            let mut valid = vec![false; resolution];
            let mut feasible = vec![false; resolution];
            let mut heap = BinaryHeap::new();
            let mut target = Vec::with_capacity(phi.len() * 3);
            for j in 0..resolution {
                let (x1p, x2p) = cell_center(resolution, i, j);
                let Some(chi_p) = residual_at(x1p, x2p, tol) else {
                    continue;
                };
                valid[j] = true;
                target.clear();
                let mut merge = SpectrumMerge::reusing(heap, phi.coeffs(), &chi_p);
                target.extend(merge.by_ref());
                heap = merge.into_heap();
                feasible[j] = first_violation(source.coeffs(), &target, tol.eps_major).is_none();
            }
            (valid, feasible)
        })
        .collect();
    let mut grid = RegionGrid {
        resolution,
        valid: Vec::with_capacity(resolution * resolution),
        feasible: Vec::with_capacity(resolution * resolution),
    };
    for (valid, feasible) in rows {
        grid.valid.extend(valid);
        grid.feasible.extend(feasible);
    }
    grid
}

/// Whether both product spectra sort in the interleaved order the
/// closed-form inequality system for the three-level example assumes:
///
/// `α2 x1 >= α1 x2 >= α3 x1 >= α2 x2`, `α3 x2 >= α1 x3`,
/// `β2 x1′ >= β1 x2′`, `β2 x2′ >= β1 x3′`, `β2 x3′ >= β3 x1′`.
pub fn product_orderings_hold(
    psi: &[f64; 3],
    phi: &[f64; 3],
    chi: &[f64; 3],
    chi_p: &[f64; 3],
) -> bool {
    let (a, b, x, y) = (psi, phi, chi, chi_p);
    a[1] * x[0] >= a[0] * x[1]
        && a[0] * x[1] >= a[2] * x[0]
        && a[2] * x[0] >= a[1] * x[1]
        && a[2] * x[1] >= a[0] * x[2]
        && b[1] * y[0] >= b[0] * y[1]
        && b[1] * y[1] >= b[0] * y[2]
        && b[1] * y[2] >= b[2] * y[0]
}

/// The seven closed-form inequalities that carve out the feasible residuals
/// of the three-level example (its states are hard-coded in the constants).
///
/// Non-strict inequalities are evaluated exactly as written; the final
/// incomparability condition `x1′ + x2′ < 0.92` is strict.
pub fn eq_sol_system(x1p: f64, x2p: f64) -> bool {
    x1p >= 31.0 / 49.0
        && 0.97 * x1p + 0.49 * x2p >= 0.6212
        && 0.97 * (x1p + x2p) >= 0.77
        && 0.48 * x1p >= 0.49 * x2p
        && 0.49 * x1p + 0.97 * x2p >= 0.49
        && 17.0 * x1p + 16.0 * x2p <= 16.0
        && x1p + x2p < 0.92
}
