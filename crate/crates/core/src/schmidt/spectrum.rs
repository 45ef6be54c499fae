//! Sorted spectrum of a tensor product.
//!
//! For nonincreasing `a` and `b`, every row `a[i] * b` is itself
//! nonincreasing, so the product spectrum is a k-way merge of sorted
//! streams. The merge runs over whichever factor is shorter, keeping the
//! heap at `min(len a, len b)` entries.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::osc::OscVector;

/// Current head of one sorted stream.
#[derive(Debug, Clone, Copy)]
pub struct Head {
    value: f64,
    stream: usize,
    pos: usize,
}

impl PartialEq for Head {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Head {}

impl PartialOrd for Head {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Head {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.total_cmp(&other.value)
    }
}

/// Lazy iterator over the products `a[i] * b[j]` in nonincreasing order.
///
/// Both inputs must be nonincreasing and nonnegative. The heap allocation
/// can be recovered with [`SpectrumMerge::into_heap`] and handed to
/// [`SpectrumMerge::reusing`] so repeated merges do not allocate.
pub struct SpectrumMerge<'a> {
    scale: &'a [f64],
    walk: &'a [f64],
    heap: BinaryHeap<Head>,
}

impl<'a> SpectrumMerge<'a> {
    pub fn new(a: &'a [f64], b: &'a [f64]) -> Self {
        Self::reusing(BinaryHeap::new(), a, b)
    }

    pub fn reusing(mut heap: BinaryHeap<Head>, a: &'a [f64], b: &'a [f64]) -> Self {
        let (scale, walk) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        heap.clear();
        if !walk.is_empty() {
            heap.extend(scale.iter().enumerate().map(|(stream, &s)| Head {
                value: s * walk[0],
                stream,
                pos: 0,
            }));
        }
        SpectrumMerge { scale, walk, heap }
    }

    pub fn into_heap(self) -> BinaryHeap<Head> {
        self.heap
    }
}

impl Iterator for SpectrumMerge<'_> {
    type Item = f64;

    #[inline]
    fn next(&mut self) -> Option<f64> {
        let mut top = self.heap.peek_mut()?;
        let value = top.value;
        let pos = top.pos + 1;
        if pos < self.walk.len() {
            top.pos = pos;
            top.value = self.scale[top.stream] * self.walk[pos];
        } else {
            std::collections::binary_heap::PeekMut::pop(top);
        }
        Some(value)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let remaining: usize = self.heap.iter().map(|h| self.walk.len() - h.pos).sum();
        (remaining, Some(remaining))
    }
}

impl ExactSizeIterator for SpectrumMerge<'_> {}

/// Nonincreasing spectrum of `a ⊗ b`, of length `len a * len b`.
pub fn tensor_spectrum(a: &OscVector, b: &OscVector) -> OscVector {
    let (a, b) = (a.coeffs(), b.coeffs());
    let coeffs: Vec<f64> = if a.len() == 1 {
        b.iter().map(|&x| a[0] * x).collect()
    } else if b.len() == 1 {
        a.iter().map(|&x| x * b[0]).collect()
    } else {
        SpectrumMerge::new(a, b).collect()
    };
    OscVector::from_sorted_unchecked(coeffs)
}
