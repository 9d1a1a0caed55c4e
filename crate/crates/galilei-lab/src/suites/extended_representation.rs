//! The central structural claim: on the mass-fiber direct sum the extension
//! acts as a true representation, the projective defect reappears exactly
//! when the θ bookkeeping is dropped, and the ζ ↔ m Fourier pair is exact.

use crate::config::ScenarioConfig;
use crate::export;
use crate::report::CheckRecord;
use crate::sample;
use crate::tolerances;
use galilei_core::{ExtendedElement, GalileiElement, ZeroPotential};
use galilei_quantum::{
    analyze_zeta, apply_ubar, central_kernel_period, make_gaussian, mass_expectation,
    projective_defect, pullback_extended, representation_residual, synthesize_zeta, GridSpec,
    MassFiberState, Wavefunction,
};
use num_complex::Complex64;
use rand::Rng;

pub fn run(config: &ScenarioConfig) -> anyhow::Result<Vec<CheckRecord>> {
    let tol = |key: &str, default: f64| config.tolerance(key, default);
    let mut checks = Vec::new();
    let hbar = config.grid.hbar;
    let zeta_length = 2.0 * std::f64::consts::PI * hbar; // integer mass lattice
    let grid = GridSpec::centered(1, 1, 256, 64.0, hbar)?;

    let slice = |mass: f64, weight: f64, center: f64| -> anyhow::Result<Wavefunction> {
        Ok(make_gaussian(&grid, &[mass], &[center], &[1.5], &[0.3 * hbar])?
            .scaled(Complex64::new(weight, 0.0)))
    };
    let state = MassFiberState::new(
        vec![slice(1.0, 1.0, 0.0)?, slice(2.0, 0.8, 0.5)?, slice(3.0, 0.6, -0.5)?],
        zeta_length,
    )?
    .normalized();

    // True representation over random pairs, without and with time shifts;
    // like the other phase measurements this runs at 1/100 of the group
    // fuzz budget.
    let pairs = (config.element_count()? / 100).clamp(50, 500);
    let free = ZeroPotential;
    let mut rng = sample::rng(config.seed, 41);
    let mut worst_b0: f64 = 0.0;
    for _ in 0..pairs {
        let mut draw = || ExtendedElement::<1> {
            theta: rng.random_range(-2.0..2.0),
            g: GalileiElement {
                boost: [rng.random_range(-0.8..0.8)],
                translation: [rng.random_range(-1.2..1.2)],
                time_shift: 0.0,
                ..GalileiElement::identity()
            },
        };
        let (gp, g) = (draw(), draw());
        worst_b0 = worst_b0.max(representation_residual(&gp, &g, &state, &free)?);
    }
    checks.push(CheckRecord::residual(
        "true-representation",
        "no-projective-phase",
        worst_b0,
        tol("true-representation", tolerances::REPRESENTATION),
    ));

    let mut rng = sample::rng(config.seed, 42);
    let mut worst_bt: f64 = 0.0;
    for _ in 0..20 {
        let mut draw = || ExtendedElement::<1> {
            theta: rng.random_range(-2.0..2.0),
            g: GalileiElement {
                boost: [rng.random_range(-0.6..0.6)],
                translation: [rng.random_range(-1.0..1.0)],
                time_shift: rng.random_range(-0.4..0.4),
                ..GalileiElement::identity()
            },
        };
        let (gp, g) = (draw(), draw());
        worst_bt = worst_bt.max(representation_residual(&gp, &g, &state, &free)?);
    }
    checks.push(CheckRecord::residual(
        "true-representation-time-shifts",
        "no-projective-phase",
        worst_bt,
        tol("true-representation-time-shifts", tolerances::REPRESENTATION_TIME),
    ));

    // Forcing θ off reproduces the per-slice multiplier (M_slice/ħ)ξ.
    let gp = GalileiElement::<1>::boost([1.0]);
    let g = GalileiElement::<1>::translation([1.0]);
    let defects = projective_defect(&gp, &g, &state, &free)?;
    let mut worst_defect: f64 = 0.0;
    let mut spread: f64 = 0.0;
    for (i, (_, pc)) in defects.iter().enumerate() {
        worst_defect = worst_defect.max(pc.phase_error());
        for (_, other) in &defects[..i] {
            spread = spread.max((pc.measured - other.measured).abs());
        }
    }
    checks.push(CheckRecord::residual(
        "projective-defect-phases",
        "per-slice-multiplier",
        worst_defect,
        tol("projective-defect-phases", tolerances::PHASE),
    ));
    checks.push(CheckRecord::at_least(
        "projective-defect-separates-masses",
        "superselection-mechanism",
        spread,
        0.5,
    ));

    // Central kernel: θ = 2πħ/M is the identity on a single-M slice.
    let single = MassFiberState::new(vec![slice(2.0, 1.0, 0.0)?], zeta_length)?.normalized();
    let period = central_kernel_period(2.0, hbar)?;
    let kernel_residual = single.distance(&apply_ubar::<1>(
        &ExtendedElement::central(period),
        &single,
        &free,
    )?)?;
    checks.push(CheckRecord::residual(
        "central-kernel-identity",
        "kernel-period",
        kernel_residual,
        tol("central-kernel-identity", tolerances::FIBER_EXACT),
    ));

    // ζ ↔ m Fourier duality: exact round trip and shift-phase equivalence.
    let field = synthesize_zeta(&state, 8)?;
    let masses: Vec<Vec<f64>> = state.slices().iter().map(|s| s.masses().to_vec()).collect();
    let (back, residual_weight) = analyze_zeta(&field, &masses, zeta_length)?;
    let round_trip = state.distance(&back)?.max(residual_weight);
    checks.push(CheckRecord::residual(
        "zeta-round-trip",
        "finite-fourier-pair",
        round_trip,
        tol("zeta-round-trip", tolerances::FIBER_EXACT),
    ));

    let s = 0.7321;
    let shifted = field.shift_zeta(s);
    let by_phase = MassFiberState::new(
        state
            .slices()
            .iter()
            .map(|sl| {
                sl.clone()
                    .scaled(Complex64::from_polar(1.0, sl.total_mass() * s / hbar))
            })
            .collect(),
        zeta_length,
    )?;
    let duality = shifted.distance(&synthesize_zeta(&by_phase, 8)?)?;
    checks.push(CheckRecord::residual(
        "zeta-shift-duality",
        "shift-equals-mass-phase",
        duality,
        tol("zeta-shift-duality", tolerances::FIBER_EXACT),
    ));

    // Configuration-space pullback against the slice-wise action.
    let gbar = ExtendedElement::<1> {
        theta: 0.6,
        g: GalileiElement {
            boost: [0.7],
            translation: [1.1],
            ..GalileiElement::identity()
        },
    };
    let via_slices = synthesize_zeta(&apply_ubar(&gbar, &state, &free)?, 8)?;
    let via_field = pullback_extended(&synthesize_zeta(&state, 8)?, &gbar)?;
    checks.push(CheckRecord::residual(
        "extended-action-duality",
        "composition-pullback",
        via_slices.distance(&via_field)?,
        tol("extended-action-duality", 1e-10),
    ));

    // Spectral weights of the mass operator are invariant under the action.
    let (_, before) = mass_expectation(&state);
    let (_, after) = mass_expectation(&apply_ubar(&gbar, &state, &free)?);
    let weight_drift = before
        .iter()
        .zip(&after)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    checks.push(CheckRecord::residual(
        "mass-weight-invariance",
        "mass-operator-commutes",
        weight_drift,
        tol("mass-weight-invariance", tolerances::FIBER_EXACT),
    ));

    if let Some(dir) = &config.output_dir {
        // Two equal slices one lattice step apart: one full fringe.
        let two = MassFiberState::new(
            vec![slice(1.0, 1.0, 0.0)?, slice(2.0, 1.0, 0.0)?],
            zeta_length,
        )?
        .normalized();
        let fringe = synthesize_zeta(&two, 64)?;
        export::write_fringe_csv(&fringe, 0, &dir.join("zeta-fringe.csv"))?;
        export::write_fiber_state(&state, config.seed, dir, "fiber-state")?;
    }

    Ok(checks)
}
