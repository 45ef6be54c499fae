//! Grid enumeration of small standard catalysts, used as ground truth for
//! the randomized search and the closed-form predicates.

use crate::catalysis::{locc_feasible, TransformQuery};
use crate::error::{domain, Result};
use crate::schmidt::{OscVector, Tolerance};

use super::trial::StandardCheck;

/// Sorted simplex grid for `k ∈ {2, 3}` with spacing `1/m`, `m = round(1/step)`.
///
/// Points are visited in increasing order of the leading coefficient, so
/// the most entangled candidates come first.
pub struct SimplexGrid {
    k: usize,
    m: u64,
}

impl SimplexGrid {
    pub fn new(k: usize, step: f64) -> Result<Self> {
        if !(2..=3).contains(&k) {
            return Err(domain(format!(
                "grid enumeration supports k = 2 or 3, got {k}"
            )));
        }
        if !(1e-5..=0.1).contains(&step) {
            return Err(domain(format!("grid step {step} must lie in [1e-5, 0.1]")));
        }
        Ok(SimplexGrid {
            k,
            m: (1.0 / step).round() as u64,
        })
    }

    pub fn for_each<F: FnMut(&[f64]) -> bool>(&self, mut visit: F) {
        let m = self.m;
        let scale = m as f64;
        match self.k {
            2 => {
                for i in m.div_ceil(2)..=m {
                    let x = [i as f64 / scale, (m - i) as f64 / scale];
                    if !visit(&x) {
                        return;
                    }
                }
            }
            _ => {
                for i in m.div_ceil(3)..=m {
                    let rest = m - i;
                    // x2 ranges over [ceil(rest / 2), min(i, rest)]
                    for j in rest.div_ceil(2)..=i.min(rest) {
                        let x = [
                            i as f64 / scale,
                            j as f64 / scale,
                            (rest - j) as f64 / scale,
                        ];
                        if !visit(&x) {
                            return;
                        }
                    }
                }
            }
        }
    }

    pub fn len(&self) -> u64 {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            true
        });
        n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn check_infeasible(q: &TransformQuery, tol: &Tolerance) -> Result<()> {
    if locc_feasible(q, tol) {
        return Err(domain(
            "the transformation is already feasible without a catalyst",
        ));
    }
    Ok(())
}

/// First grid point that is a standard catalyst for `q`, if any.
pub fn exhaustive_catalyst_oracle(
    q: &TransformQuery,
    k: usize,
    step: f64,
    tol: &Tolerance,
) -> Result<Option<OscVector>> {
    let grid = SimplexGrid::new(k, step)?;
    check_infeasible(q, tol)?;
    let mut check = StandardCheck::new(q, tol.eps_major);
    let mut found = None;
    grid.for_each(|x| {
        if check.accepts(x) {
            found = Some(OscVector::from_sorted_unchecked(x.to_vec()));
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Fraction of grid points that are standard catalysts; estimates the
/// flat-simplex measure of the catalyst set.
pub fn catalyst_grid_fraction(
    q: &TransformQuery,
    k: usize,
    step: f64,
    tol: &Tolerance,
) -> Result<f64> {
    let grid = SimplexGrid::new(k, step)?;
    check_infeasible(q, tol)?;
    let mut check = StandardCheck::new(q, tol.eps_major);
    let (mut hits, mut total) = (0u64, 0u64);
    grid.for_each(|x| {
        total += 1;
        hits += u64::from(check.accepts(x));
        true
    });
    Ok(hits as f64 / total as f64)
}
