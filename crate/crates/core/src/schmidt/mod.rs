//! Ordered Schmidt-coefficient vectors and the majorization calculus on them.

mod entropy;
mod majorization;
mod osc;
mod spectrum;

pub use entropy::entropy_bits;
pub(crate) use majorization::first_violation;
pub use majorization::{majorizes_check, precedes, MajorizationVerdict, Relation};
pub use osc::{make_osc, pad, partial_sums, OscVector, Tolerance};
pub use spectrum::{tensor_spectrum, Head, SpectrumMerge};

impl OscVector {
    pub fn entropy_bits(&self) -> f64 {
        entropy_bits(self)
    }
}
