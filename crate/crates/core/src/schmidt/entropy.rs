use super::osc::OscVector;

/// Entanglement entropy in bits, `-Σ c log2 c` with `0 log 0 = 0`.
pub fn entropy_bits(v: &OscVector) -> f64 {
    shannon_bits(v.coeffs())
}

fn shannon_bits(p: &[f64]) -> f64 {
    let h: f64 = p.iter().filter(|&&c| c > 0.0).map(|&c| -c * c.log2()).sum();
    // a lone coefficient of 1 - ulp gives a tiny negative value
    h.max(0.0)
}
