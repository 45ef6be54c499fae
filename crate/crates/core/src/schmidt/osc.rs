use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical slack used by every comparison in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Slack on the `<=` side of partial-sum comparisons.
    pub eps_major: f64,
    /// Allowed deviation of a coefficient sum from 1.
    pub eps_norm: f64,
    /// Entropies closer than this (in bits) are considered equal.
    pub eps_entropy: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_major: 1e-12,
            eps_norm: 1e-9,
            eps_entropy: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(eps_major: f64, eps_norm: f64, eps_entropy: f64) -> Result<Self> {
        let tol = Tolerance {
            eps_major,
            eps_norm,
            eps_entropy,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, eps) in [
            ("eps_major", self.eps_major),
            ("eps_norm", self.eps_norm),
            ("eps_entropy", self.eps_entropy),
        ] {
            if !(eps > 0.0 && eps < 1e-3) {
                return Err(Error::InvalidTolerance(format!(
                    "{name} = {eps} must lie in (0, 1e-3)"
                )));
            }
        }
        Ok(())
    }
}

/// Ordered Schmidt coefficients of a bipartite pure state.
///
/// The coefficients are probabilities (squared Schmidt amplitudes), stored
/// nonincreasing, nonnegative and summing to one within the normalization
/// slack. Trailing zeros are kept: a `(0.7, 0.3, 0, 0)` vector describes the
/// same state as `(0.7, 0.3)` embedded in a larger local dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct OscVector(Vec<f64>);

impl OscVector {
    /// Validates, clamps and sorts `raw` into an ordered coefficient vector.
    pub fn new(raw: &[f64], tol: &Tolerance) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Empty);
        }
        let mut coeffs = Vec::with_capacity(raw.len());
        for (index, &value) in raw.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
            if value < -tol.eps_norm {
                return Err(Error::NegativeEntry { index, value });
            }
            // also folds -0.0 into +0.0
            coeffs.push(if value <= 0.0 { 0.0 } else { value });
        }
        let sum: f64 = coeffs.iter().sum();
        if (sum - 1.0).abs() > tol.eps_norm {
            return Err(Error::NotNormalized { sum });
        }
        coeffs.sort_by(|a, b| b.total_cmp(a));
        Ok(OscVector(coeffs))
    }

    /// `(1/k, ..., 1/k)`, the maximally entangled `k x k` state.
    pub fn uniform(k: usize) -> Self {
        assert!(k >= 1, "uniform vector needs at least one entry");
        OscVector(vec![1.0 / k as f64; k])
    }

    /// `(1, 0, ..., 0)` of the given length, a product state.
    pub fn separable(len: usize) -> Self {
        assert!(len >= 1, "separable vector needs at least one entry");
        let mut coeffs = vec![0.0; len];
        coeffs[0] = 1.0;
        OscVector(coeffs)
    }

    /// Wraps coefficients that are already sorted and normalized up to
    /// rounding, e.g. the output of a tensor product of valid vectors.
    pub(crate) fn from_sorted_unchecked(coeffs: Vec<f64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        debug_assert!(coeffs.windows(2).all(|w| w[0] >= w[1]));
        OscVector(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest coefficient.
    pub fn largest(&self) -> f64 {
        self.0[0]
    }

    /// Number of nonzero coefficients (the Schmidt rank).
    pub fn schmidt_rank(&self) -> usize {
        self.0.iter().take_while(|&&c| c > 0.0).count()
    }

    /// Extends with zeros to `target_len`.
    pub fn padded(&self, target_len: usize) -> Result<Self> {
        if target_len < self.0.len() {
            return Err(Error::TargetTooSmall {
                len: self.0.len(),
                target: target_len,
            });
        }
        let mut coeffs = self.0.clone();
        coeffs.resize(target_len, 0.0);
        Ok(OscVector(coeffs))
    }

    /// Cumulative sums `s[l] = c[0] + ... + c[l]`.
    pub fn partial_sums(&self) -> Vec<f64> {
        self.0
            .iter()
            .scan(0.0, |acc, &c| {
                *acc += c;
                Some(*acc)
            })
            .collect()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl TryFrom<Vec<f64>> for OscVector {
    type Error = Error;

    fn try_from(raw: Vec<f64>) -> Result<Self> {
        OscVector::new(&raw, &Tolerance::default())
    }
}

impl From<OscVector> for Vec<f64> {
    fn from(v: OscVector) -> Self {
        v.0
    }
}

impl AsRef<[f64]> for OscVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

pub fn make_osc(raw: &[f64], tol: &Tolerance) -> Result<OscVector> {
    OscVector::new(raw, tol)
}

pub fn pad(v: &OscVector, target_len: usize) -> Result<OscVector> {
    v.padded(target_len)
}

pub fn partial_sums(v: &OscVector) -> Vec<f64> {
    v.partial_sums()
}
