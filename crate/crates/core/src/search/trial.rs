use std::collections::BinaryHeap;

use crate::catalysis::TransformQuery;
use crate::schmidt::{Head, SpectrumMerge};

/// Reusable evaluator for `ψ ⊗ χ ≺ φ ⊗ χ` with a fixed pair.
///
/// Both products are merged lazily and compared prefix by prefix, so a
/// failing candidate usually costs far less than the full `n k` entries.
#[derive(Debug, Clone)]
pub struct StandardCheck {
    psi: Vec<f64>,
    phi: Vec<f64>,
    eps: f64,
    heaps: Option<(BinaryHeap<Head>, BinaryHeap<Head>)>,
}

impl StandardCheck {
    pub fn new(q: &TransformQuery, eps_major: f64) -> Self {
        let (psi, phi) = q.padded();
        StandardCheck {
            psi: psi.into_inner(),
            phi: phi.into_inner(),
            eps: eps_major,
            heaps: Some((BinaryHeap::new(), BinaryHeap::new())),
        }
    }

    /// Whether `chi` (sorted nonincreasing) is a standard catalyst.
    pub fn accepts(&mut self, chi: &[f64]) -> bool {
        let (ha, hb) = self.heaps.take().unwrap_or_default();
        let mut lhs = SpectrumMerge::reusing(ha, &self.psi, chi);
        let mut rhs = SpectrumMerge::reusing(hb, &self.phi, chi);
        let (mut sl, mut sr) = (0.0, 0.0);
        let mut ok = true;
        for (a, b) in lhs.by_ref().zip(rhs.by_ref()) {
            sl += a;
            sr += b;
            if sl > sr + self.eps {
                ok = false;
                break;
            }
        }
        self.heaps = Some((lhs.into_heap(), rhs.into_heap()));
        ok
    }
}
