//! Fuzzed group laws for 𝒢 and 𝒢̄ plus the cocycle identity.

use crate::config::ScenarioConfig;
use crate::report::CheckRecord;
use crate::sample;
use crate::tolerances;
use galilei_core::{
    cocycle, cocycle_condition_residual, ExtendedConfig, ExtendedElement, GalileiElement,
    SpacetimeConfig,
};
use rand::Rng;

fn element_gap<const D: usize>(a: &GalileiElement<D>, b: &GalileiElement<D>) -> (f64, f64) {
    let mut diff: f64 = (a.time_shift - b.time_shift).abs();
    let mut scale: f64 = 1.0f64.max(a.time_shift.abs()).max(b.time_shift.abs());
    for i in 0..D {
        for j in 0..D {
            diff = diff.max((a.rotation.matrix()[i][j] - b.rotation.matrix()[i][j]).abs());
        }
        diff = diff.max((a.boost[i] - b.boost[i]).abs());
        diff = diff.max((a.translation[i] - b.translation[i]).abs());
        scale = scale
            .max(a.boost[i].abs())
            .max(b.boost[i].abs())
            .max(a.translation[i].abs())
            .max(b.translation[i].abs());
    }
    (diff, scale)
}

/// θ bookkeeping cancels terms of size ‖v‖‖a‖ and ½‖v‖²|b|; the relative
/// comparison must be taken against that scale.
fn theta_scale<const D: usize>(e: &ExtendedElement<D>) -> f64 {
    let v = e.g.boost.iter().map(|x| x * x).sum::<f64>().sqrt();
    let a = e.g.translation.iter().map(|x| x * x).sum::<f64>().sqrt();
    e.theta
        .abs()
        .max(v * a)
        .max(0.5 * v * v * e.g.time_shift.abs())
}

fn extended_gap<const D: usize>(
    a: &ExtendedElement<D>,
    b: &ExtendedElement<D>,
    factors: &[&ExtendedElement<D>],
) -> f64 {
    let (mut diff, mut scale) = element_gap(&a.g, &b.g);
    diff = diff.max((a.theta - b.theta).abs());
    scale = scale.max(theta_scale(a)).max(theta_scale(b));
    for f in factors {
        scale = scale.max(theta_scale(f));
    }
    diff / scale
}

pub fn run(config: &ScenarioConfig) -> anyhow::Result<Vec<CheckRecord>> {
    const RANGE: f64 = 10.0;
    let count = config.element_count()?;
    let tol = |key: &str| config.tolerance(key, tolerances::GROUP_EXACT);
    let mut checks = Vec::new();

    let mut rng = sample::rng(config.seed, 1);
    let mut worst_assoc: f64 = 0.0;
    let mut worst_inverse: f64 = 0.0;
    for _ in 0..count {
        let (a, b, c) = (
            sample::galilei_element::<3>(&mut rng, RANGE),
            sample::galilei_element::<3>(&mut rng, RANGE),
            sample::galilei_element::<3>(&mut rng, RANGE),
        );
        let (diff, scale) = element_gap(&a.compose(&b).compose(&c), &a.compose(&b.compose(&c)));
        worst_assoc = worst_assoc.max(diff / scale);
        let e = GalileiElement::identity();
        let (d1, s1) = element_gap(&a.inverse().compose(&a), &e);
        let (d2, s2) = element_gap(&a.compose(&a.inverse()), &e);
        // Inverse cancellation happens at the scale of the element itself.
        let own = element_gap(&a, &e).1;
        worst_inverse = worst_inverse.max(d1 / s1.max(own)).max(d2 / s2.max(own));
    }
    checks.push(CheckRecord::residual(
        "associativity",
        "group-composition",
        worst_assoc,
        tol("associativity"),
    ));
    checks.push(CheckRecord::residual(
        "inverse-law",
        "group-inverse",
        worst_inverse,
        tol("inverse-law"),
    ));

    let mut rng = sample::rng(config.seed, 2);
    let mut worst_action: f64 = 0.0;
    for _ in 0..(count / 5).max(100) {
        let (gp, g) = (
            sample::galilei_element::<3>(&mut rng, RANGE),
            sample::galilei_element::<3>(&mut rng, RANGE),
        );
        let cfg = SpacetimeConfig::new(
            vec![sample::vec_in::<3>(&mut rng, RANGE), sample::vec_in::<3>(&mut rng, RANGE)],
            rng.random_range(-RANGE..RANGE),
        )
        .expect("finite configuration");
        let two = gp.act_spacetime(&g.act_spacetime(&cfg));
        let one = gp.compose(&g).act_spacetime(&cfg);
        let mut diff: f64 = (two.t - one.t).abs();
        let mut scale: f64 = 1.0;
        for (x, y) in two.positions.iter().zip(&one.positions) {
            for c in 0..3 {
                diff = diff.max((x[c] - y[c]).abs());
                scale = scale.max(x[c].abs());
            }
        }
        worst_action = worst_action.max(diff / scale);
    }
    checks.push(CheckRecord::residual(
        "spacetime-action-compatibility",
        "group-action",
        worst_action,
        tol("spacetime-action-compatibility"),
    ));

    let mut rng = sample::rng(config.seed, 3);
    let mut worst_ext_assoc: f64 = 0.0;
    let mut worst_ext_inverse: f64 = 0.0;
    for _ in 0..count {
        let (a, b, c) = (
            sample::extended_element::<3>(&mut rng, RANGE),
            sample::extended_element::<3>(&mut rng, RANGE),
            sample::extended_element::<3>(&mut rng, RANGE),
        );
        let left = a.compose(&b).compose(&c);
        let right = a.compose(&b.compose(&c));
        worst_ext_assoc = worst_ext_assoc.max(extended_gap(&left, &right, &[&a, &b, &c]));
        let e = ExtendedElement::identity();
        let product = a.inverse().compose(&a);
        worst_ext_inverse = worst_ext_inverse.max(extended_gap(&product, &e, &[&a]));
    }
    checks.push(CheckRecord::residual(
        "extended-associativity",
        "central-extension-composition",
        worst_ext_assoc,
        tol("extended-associativity"),
    ));
    checks.push(CheckRecord::residual(
        "extended-inverse-law",
        "central-extension-inverse",
        worst_ext_inverse,
        tol("extended-inverse-law"),
    ));

    let mut rng = sample::rng(config.seed, 4);
    let mut worst_ext_action: f64 = 0.0;
    for _ in 0..(count / 5).max(100) {
        let (gp, g) = (
            sample::extended_element::<3>(&mut rng, RANGE),
            sample::extended_element::<3>(&mut rng, RANGE),
        );
        let cfg = ExtendedConfig::new(
            vec![sample::vec_in::<3>(&mut rng, RANGE), sample::vec_in::<3>(&mut rng, RANGE)],
            vec![rng.random_range(-RANGE..RANGE), rng.random_range(-RANGE..RANGE)],
            rng.random_range(-RANGE..RANGE),
        )
        .expect("finite configuration");
        let two = gp.act_extended(&g.act_extended(&cfg));
        let one = gp.compose(&g).act_extended(&cfg);
        let mut diff: f64 = (two.t - one.t).abs();
        // ζ shifts accumulate v·Rx + ½v²t terms ~ range² per application.
        let mut scale: f64 = 1.0f64
            .max(theta_scale(&gp) + theta_scale(&g))
            .max(RANGE * RANGE * (1.5 + 0.5 * RANGE / 2.0));
        for (x, y) in two.positions.iter().zip(&one.positions) {
            for c in 0..3 {
                diff = diff.max((x[c] - y[c]).abs());
                scale = scale.max(x[c].abs());
            }
        }
        for (z, w) in two.zetas.iter().zip(&one.zetas) {
            diff = diff.max((z - w).abs());
            scale = scale.max(z.abs());
        }
        worst_ext_action = worst_ext_action.max(diff / scale);
    }
    checks.push(CheckRecord::residual(
        "extended-action-compatibility",
        "central-extension-action",
        worst_ext_action,
        tol("extended-action-compatibility"),
    ));

    let mut rng = sample::rng(config.seed, 5);
    let mut worst_cocycle: f64 = 0.0;
    for _ in 0..count {
        let (a, b, c) = (
            sample::galilei_element::<3>(&mut rng, RANGE),
            sample::galilei_element::<3>(&mut rng, RANGE),
            sample::galilei_element::<3>(&mut rng, RANGE),
        );
        let residual = cocycle_condition_residual(&a, &b, &c).abs();
        let scale = 1.0f64
            .max(cocycle(&a, &b).abs())
            .max(cocycle(&b, &c).abs())
            .max(cocycle(&a.compose(&b), &c).abs());
        worst_cocycle = worst_cocycle.max(residual / scale);
    }
    checks.push(CheckRecord::residual(
        "cocycle-condition",
        "two-cocycle-identity",
        worst_cocycle,
        tol("cocycle-condition"),
    ));

    Ok(checks)
}
