use rand::Rng;

use crate::schmidt::OscVector;

/// Uniform point on the `(k-1)`-simplex, sorted nonincreasing, written into
/// `out`.
///
/// Uses uniform spacings: the gaps between `k - 1` sorted uniforms on
/// `[0, 1]` are flat-Dirichlet distributed. Only comparisons and
/// subtractions are involved, so the output is bit-identical on every
/// platform for a given stream.
pub fn sample_sorted_simplex_into<R: Rng + ?Sized>(k: usize, rng: &mut R, out: &mut Vec<f64>) {
    assert!(k >= 1, "simplex dimension must be positive");
    out.clear();
    if k == 1 {
        out.push(1.0);
        return;
    }
    out.extend((0..k - 1).map(|_| rng.gen::<f64>()));
    out.sort_unstable_by(f64::total_cmp);
    out.push(1.0);
    let mut prev = 0.0;
    for c in out.iter_mut() {
        let cut = *c;
        *c = cut - prev;
        prev = cut;
    }
    out.sort_unstable_by(|a, b| b.total_cmp(a));
}

/// Sorted flat-Dirichlet sample of length `k`.
pub fn sample_sorted_simplex<R: Rng + ?Sized>(k: usize, rng: &mut R) -> OscVector {
    let mut out = Vec::with_capacity(k);
    sample_sorted_simplex_into(k, rng, &mut out);
    OscVector::from_sorted_unchecked(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schmidt::Tolerance;
    use crate::search::rng::{Domain, TrialStreams};

    #[test]
    fn degenerate_simplex() {
        let mut rng = TrialStreams::new(1, Domain::Properties).stream(0);
        for _ in 0..10 {
            assert_eq!(sample_sorted_simplex(1, &mut rng).coeffs(), &[1.0]);
        }
    }

    #[test]
    fn samples_are_valid_vectors() {
        let mut rng = TrialStreams::new(2, Domain::Properties).stream(0);
        for k in 2..12 {
            for _ in 0..200 {
                let v = sample_sorted_simplex(k, &mut rng);
                assert_eq!(v.len(), k);
                OscVector::new(v.coeffs(), &Tolerance::default()).unwrap();
                assert!(v.coeffs().windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn two_level_mean_of_largest() {
        // E[max(U, 1 - U)] = 3/4
        let streams = TrialStreams::new(3, Domain::Properties);
        let n = 100_000;
        let mean: f64 = (0..n)
            .map(|t| sample_sorted_simplex(2, &mut streams.stream(t)).largest())
            .sum::<f64>()
            / n as f64;
        assert!((mean - 0.75).abs() < 0.005, "mean {mean}");
    }

    #[test]
    fn fixed_seed_reproduces() {
        let a = sample_sorted_simplex(5, &mut TrialStreams::new(9, Domain::Properties).stream(4));
        let b = sample_sorted_simplex(5, &mut TrialStreams::new(9, Domain::Properties).stream(4));
        assert_eq!(a, b);
    }
}
