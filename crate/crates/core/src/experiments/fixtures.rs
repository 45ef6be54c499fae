use serde::{Deserialize, Serialize};

use crate::catalysis::{
    classify_catalyst, eq_sol_system, example3, is_general_catalyst, is_time_reverse,
    theorem2_bound, theorem3_subcatalyst_forced, CatalystKind, TransformQuery,
};
use crate::schmidt::{majorizes_check, tensor_spectrum, OscVector, Relation, Tolerance};

/// One worked example and its evaluated partial sums.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Prefix sums of the source side of the decisive comparison.
    pub lhs_partial_sums: Vec<f64>,
    /// Prefix sums of the target side.
    pub rhs_partial_sums: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub fixtures: Vec<FixtureResult>,
}

impl FixtureReport {
    pub fn all_passed(&self) -> bool {
        self.fixtures.iter().all(|f| f.passed)
    }

    pub fn failures(&self) -> usize {
        self.fixtures.iter().filter(|f| !f.passed).count()
    }
}

fn osc(raw: &[f64]) -> OscVector {
    OscVector::new(raw, &Tolerance::default()).expect("fixture vectors are valid")
}

fn result(
    name: &str,
    passed: bool,
    detail: String,
    lhs: &OscVector,
    rhs: &OscVector,
) -> FixtureResult {
    let n = lhs.len().max(rhs.len());
    FixtureResult {
        name: name.to_string(),
        passed,
        detail,
        lhs_partial_sums: lhs.padded(n).unwrap().partial_sums(),
        rhs_partial_sums: rhs.padded(n).unwrap().partial_sums(),
    }
}

fn jp_psi() -> OscVector {
    osc(&[0.4, 0.4, 0.1, 0.1])
}

fn jp_phi() -> OscVector {
    osc(&[0.5, 0.25, 0.25, 0.0])
}

fn jp_phi_prime() -> OscVector {
    osc(&[0.48, 0.27, 0.25, 0.0])
}

fn jp_incomparable(tol: &Tolerance) -> FixtureResult {
    let (psi, phi) = (jp_psi(), jp_phi());
    let v = majorizes_check(&psi, &phi, tol);
    result(
        "jp-incomparable",
        v.relation == Relation::Incomparable && v.first_violation == Some(2),
        format!(
            "relation {:?}, first violation {:?}",
            v.relation, v.first_violation
        ),
        &psi,
        &phi,
    )
}

fn jp_standard(tol: &Tolerance) -> FixtureResult {
    let q = TransformQuery::new(jp_psi(), jp_phi());
    let chi = osc(&[0.6, 0.4]);
    let lhs = tensor_spectrum(&q.psi, &chi);
    let rhs = tensor_spectrum(&q.phi, &chi);
    let class = classify_catalyst(&q, &chi, &chi, tol);
    let passed = matches!(&class, Ok(c) if c.kind == CatalystKind::Standard);
    result(
        "jp-standard-catalyst",
        passed,
        format!("{class:?}"),
        &lhs,
        &rhs,
    )
}

fn jp_subcatalyst(tol: &Tolerance) -> FixtureResult {
    let q = TransformQuery::new(jp_psi(), jp_phi_prime());
    let chi = osc(&[0.6, 0.4]);
    let chi_p = osc(&[2.0 / 3.0, 1.0 / 3.0]);
    let standard = majorizes_check(
        &tensor_spectrum(&q.psi, &chi),
        &tensor_spectrum(&q.phi, &chi),
        tol,
    );
    let class = classify_catalyst(&q, &chi, &chi_p, tol);
    let general = is_general_catalyst(&q, &chi, tol).feasible;
    let passed = !standard.a_precedes_b()
        && general
        && matches!(&class, Ok(c) if c.kind == CatalystKind::Sub);
    result(
        "jp-subcatalyst",
        passed,
        format!(
            "standard {:?}, residual (2/3, 1/3): {class:?}",
            standard.relation
        ),
        &tensor_spectrum(&q.psi, &chi),
        &tensor_spectrum(&q.phi, &chi_p),
    )
}

fn time_reverse(tol: &Tolerance) -> FixtureResult {
    let q = TransformQuery::new(
        osc(&[1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0]),
        osc(&[
            1.0 / 6.0,
            1.0 / 6.0,
            1.0 / 6.0,
            1.0 / 6.0,
            1.0 / 12.0,
            1.0 / 12.0,
            1.0 / 12.0,
            1.0 / 12.0,
        ]),
    );
    let chi = OscVector::uniform(4);
    let chi_p = OscVector::uniform(2);
    let lhs = tensor_spectrum(&q.psi, &chi);
    let rhs = tensor_spectrum(&q.phi, &chi_p);
    let class = classify_catalyst(&q, &chi, &chi_p, tol);
    let passed = is_time_reverse(&q, &chi, &chi_p, tol)
        && matches!(&class, Ok(c) if c.kind == CatalystKind::TimeReverse
            && c.entropy_kind == CatalystKind::Sub
            && (c.entropy_drop() - 1.0).abs() <= 1e-12);
    result(
        "example2-time-reverse",
        passed,
        format!("{class:?}"),
        &lhs,
        &rhs,
    )
}

fn example3_point(tol: &Tolerance) -> FixtureResult {
    let q = TransformQuery::new(osc(&example3::PSI), osc(&example3::PHI));
    let chi = osc(&example3::CHI);
    let chi_p = osc(&example3::CHI_PRIME);
    let lhs = tensor_spectrum(&q.psi, &chi);
    let rhs = tensor_spectrum(&q.phi, &chi_p);
    let direct = majorizes_check(&lhs, &rhs, tol).a_precedes_b();
    let closed = eq_sol_system(example3::CHI_PRIME[0], example3::CHI_PRIME[1]);
    result(
        "example3-residual",
        direct && closed,
        format!("direct majorization {direct}, closed-form system {closed}"),
        &lhs,
        &rhs,
    )
}

fn example3_bound(tol: &Tolerance) -> FixtureResult {
    let q = TransformQuery::new(osc(&example3::PSI), osc(&example3::PHI));
    let bound = theorem2_bound(&q, tol);
    let passed = matches!(bound, Ok(b) if (b - 0.98).abs() < 1e-12);
    result(
        "example3-leading-bound",
        passed,
        format!("bound {bound:?}"),
        &q.psi,
        &q.phi,
    )
}

fn example3_not_forced(tol: &Tolerance) -> FixtureResult {
    let q = TransformQuery::new(osc(&example3::PSI), osc(&example3::PHI));
    let forced =
        theorem3_subcatalyst_forced(&q, &osc(&example3::CHI), &osc(&example3::CHI_PRIME), tol);
    result(
        "example3-subcatalyst-not-forced",
        matches!(forced, Ok(false)),
        format!("forced {forced:?}"),
        &q.psi,
        &q.phi,
    )
}

/// Evaluates every worked example from the literature this crate follows.
pub fn fixture_suite(tol: &Tolerance) -> FixtureReport {
    FixtureReport {
        fixtures: vec![
            jp_incomparable(tol),
            jp_standard(tol),
            jp_subcatalyst(tol),
            time_reverse(tol),
            example3_point(tol),
            example3_bound(tol),
            example3_not_forced(tol),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        let report = fixture_suite(&Tolerance::default());
        for f in &report.fixtures {
            assert!(f.passed, "{}: {}", f.name, f.detail);
        }
        assert_eq!(report.failures(), 0);
    }

    #[test]
    fn jp_partial_sums() {
        let f = jp_standard(&Tolerance::default());
        let expected_lhs = [0.24, 0.48, 0.64, 0.80, 0.86, 0.92, 0.96, 1.0];
        let expected_rhs = [0.3, 0.5, 0.65, 0.8, 0.9, 1.0, 1.0, 1.0];
        for (got, want) in f.lhs_partial_sums.iter().zip(expected_lhs) {
            assert!((got - want).abs() < 1e-12);
        }
        for (got, want) in f.rhs_partial_sums.iter().zip(expected_rhs) {
            assert!((got - want).abs() < 1e-12);
        }
    }
}
