//! Cohomological non-triviality: the antisymmetric part of the multiplier
//! on the translation–boost subgroup survives every coboundary shift.

use crate::config::ScenarioConfig;
use crate::report::CheckRecord;
use crate::sample;
use crate::tolerances;
use galilei_core::{antisymmetric_defect, cocycle, shifted_cocycle, GalileiElement};
use rand::Rng;

pub fn run(config: &ScenarioConfig) -> anyhow::Result<Vec<CheckRecord>> {
    const RANGE: f64 = 10.0;
    let shifts = config.element_count()?.min(10_000).max(1000);
    let tol = |key: &str| config.tolerance(key, tolerances::GROUP_EXACT);
    let mut checks = Vec::new();

    let mut rng = sample::rng(config.seed, 11);
    let mut worst_value: f64 = 0.0;
    let mut worst_invariance: f64 = 0.0;
    for _ in 0..shifts {
        let gp = GalileiElement::<3> {
            boost: sample::vec_in(&mut rng, RANGE),
            translation: sample::vec_in(&mut rng, RANGE),
            ..GalileiElement::identity()
        };
        let g = GalileiElement::<3> {
            boost: sample::vec_in(&mut rng, RANGE),
            translation: sample::vec_in(&mut rng, RANGE),
            ..GalileiElement::identity()
        };
        let expected: f64 = gp
            .boost
            .iter()
            .zip(&g.translation)
            .map(|(v, a)| v * a)
            .sum::<f64>()
            - g.boost
                .iter()
                .zip(&gp.translation)
                .map(|(v, a)| v * a)
                .sum::<f64>();
        let scale = 1.0f64.max(expected.abs()).max(RANGE * RANGE);
        let bare =
            antisymmetric_defect::<3, fn(&GalileiElement<3>) -> f64>(&gp, &g, None)?;
        worst_value = worst_value.max((bare - expected).abs() / scale);

        // A fresh random quadratic coboundary per draw.
        let coeffs: [f64; 6] = [
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        ];
        let delta = move |h: &GalileiElement<3>| {
            coeffs[0] * h.boost[0] * h.translation[0]
                + coeffs[1] * h.boost[1] * h.translation[2]
                + coeffs[2] * h.translation[1] * h.translation[1]
                + coeffs[3] * h.boost[2] * h.boost[2]
                + coeffs[4] * h.translation[0]
                + coeffs[5] * h.boost[1]
        };
        let shifted = antisymmetric_defect(&gp, &g, Some(delta))?;
        worst_invariance = worst_invariance.max((shifted - bare).abs() / scale);
    }
    checks.push(CheckRecord::residual(
        "antisymmetric-defect-value",
        "subgroup-multiplier-antisymmetry",
        worst_value,
        tol("antisymmetric-defect-value"),
    ));
    checks.push(CheckRecord::residual(
        "coboundary-invariance",
        "non-removability",
        worst_invariance,
        tol("coboundary-invariance"),
    ));

    // A coboundary-shifted cocycle still satisfies the cocycle identity —
    // including the particular shift by ½v²b − v·a, the integration-constant
    // convention the dressed action uses.
    let mut rng = sample::rng(config.seed, 12);
    let convention = |h: &GalileiElement<3>| {
        let v2 = h.boost.iter().map(|v| v * v).sum::<f64>();
        let va = h
            .boost
            .iter()
            .zip(&h.translation)
            .map(|(v, a)| v * a)
            .sum::<f64>();
        0.5 * v2 * h.time_shift - va
    };
    let mut worst_shifted: f64 = 0.0;
    for _ in 0..shifts.min(2000) {
        let (a, b, c) = (
            sample::galilei_element::<3>(&mut rng, RANGE),
            sample::galilei_element::<3>(&mut rng, RANGE),
            sample::galilei_element::<3>(&mut rng, RANGE),
        );
        let residual = shifted_cocycle(convention, &a.compose(&b), &c)
            - shifted_cocycle(convention, &a, &b.compose(&c))
            + shifted_cocycle(convention, &a, &b)
            - shifted_cocycle(convention, &b, &c);
        let scale = 1.0f64
            .max(cocycle(&a, &b).abs())
            .max(cocycle(&b, &c).abs())
            .max(RANGE * RANGE);
        worst_shifted = worst_shifted.max(residual.abs() / scale);
    }
    checks.push(CheckRecord::residual(
        "shifted-cocycle-condition",
        "coboundary-freedom",
        worst_shifted,
        tol("shifted-cocycle-condition"),
    ));

    Ok(checks)
}
