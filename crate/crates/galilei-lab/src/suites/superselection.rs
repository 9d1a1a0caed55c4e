//! The superselection demonstration: the boost–translation commutator is
//! the identity in 𝒢, yet branches of different total mass acquire
//! different phases, so their superposition moves to another ray.

use crate::config::ScenarioConfig;
use crate::export;
use crate::report::CheckRecord;
use crate::tolerances;
use galilei_quantum::{make_gaussian, superselection_demo, wrap_phase, GridSpec};

pub fn run(config: &ScenarioConfig) -> anyhow::Result<Vec<CheckRecord>> {
    let tol = |key: &str, default: f64| config.tolerance(key, default);
    let mut checks = Vec::new();
    let hbar = config.grid.hbar;
    let grid = GridSpec::centered(1, 1, config.grid.points.max(256), config.grid.length, hbar)?;
    let packet = |mass: f64| make_gaussian(&grid, &[mass], &[0.0], &[1.5], &[0.4 * hbar]);

    // Equal masses: the relative phase vanishes identically.
    let (boost, translation) = ([0.5], [1.0]);
    let same = superselection_demo(&packet(2.0)?, &packet(2.0)?, &boost, &translation)?;
    checks.push(CheckRecord::residual(
        "equal-mass-relative-phase",
        "same-ray",
        same.relative_measured.abs(),
        tol("equal-mass-relative-phase", tolerances::PHASE),
    ));

    // Reference gap: |Δφ| = |M − M′||v′·a|/ħ.
    let demo = superselection_demo(&packet(2.0)?, &packet(1.0)?, &boost, &translation)?;
    checks.push(CheckRecord::target(
        "relative-phase-magnitude",
        "mass-gap-phase",
        demo.relative_measured.abs(),
        (0.5f64 / hbar).abs(),
        tol("relative-phase-magnitude", tolerances::PHASE),
    ));
    checks.push(CheckRecord::at_least(
        "branch-overlaps",
        "ray-comparison-validity",
        demo.branch_heavy.overlap.min(demo.branch_light.overlap),
        1.0 - 1e-8,
    ));

    // Five-point sweep over the mass gap at fixed (v′, a): the relative
    // phase is linear in M − M′.
    let mut sweep = Vec::new();
    let mut worst_linear: f64 = 0.0;
    let mut worst_phase: f64 = 0.0;
    let light = packet(1.0)?;
    for gap in 1..=5 {
        let heavy = packet(1.0 + gap as f64)?;
        let out = superselection_demo(&heavy, &light, &boost, &translation)?;
        let predicted = wrap_phase(gap as f64 * 0.5 / hbar);
        worst_phase = worst_phase.max((out.relative_measured - out.relative_predicted).abs());
        worst_linear = worst_linear.max((out.relative_measured - predicted).abs());
        sweep.push((gap as f64, out.relative_measured, out.relative_predicted));
    }
    checks.push(CheckRecord::residual(
        "relative-phase-prediction",
        "mass-gap-phase",
        worst_phase,
        tol("relative-phase-prediction", tolerances::PHASE),
    ));
    checks.push(CheckRecord::residual(
        "relative-phase-linearity",
        "linear-in-mass-gap",
        worst_linear,
        tol("relative-phase-linearity", tolerances::PHASE),
    ));

    if let Some(dir) = &config.output_dir {
        export::write_phase_sweep_csv(
            &sweep,
            ("mass_gap", "measured_phase", "predicted_phase"),
            &dir.join("superselection-sweep.csv"),
        )?;
    }

    Ok(checks)
}
