use std::time::Instant;

use catalyst_core::experiments::{
    generate_catalyzable_pairs, success_probability_curve, PairGenSpec, DEFAULT_BUDGETS,
};
use catalyst_core::Tolerance;

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let tol = Tolerance::default();
    let spec = PairGenSpec {
        seed,
        ..PairGenSpec::default()
    };
    let t0 = Instant::now();
    let pairs = generate_catalyzable_pairs(&spec, &tol).expect("generation");
    let last = pairs.last().map_or(0, |p| p.attempt + 1);
    println!(
        "generated {} pairs in {} attempts (acceptance {:.3e}) in {:.2?}",
        pairs.len(),
        last,
        pairs.len() as f64 / last as f64,
        t0.elapsed()
    );
    let t1 = Instant::now();
    let curve =
        success_probability_curve(&pairs, spec.k, &DEFAULT_BUDGETS, seed, &tol).expect("curve");
    for p in &curve {
        println!(
            "M = {:>4}  success = {:.4} ({}/{})",
            p.big_number, p.success_fraction, p.successes, p.pairs
        );
    }
    println!("curve in {:.2?}", t1.elapsed());
}
