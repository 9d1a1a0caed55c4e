//! Quantum symmetry: solver oracle, solution-map residuals, multiplier and
//! commutator phases.

use crate::config::ScenarioConfig;
use crate::export;
use crate::report::CheckRecord;
use crate::sample;
use crate::tolerances;
use galilei_core::{GalileiElement, HarmonicTrap, PairwiseHarmonic, ZeroPotential};
use galilei_quantum::{
    commutator_phase, composition_phase, evolve, make_gaussian, solution_map_residual, wrap_phase,
    GridSpec, Wavefunction,
};
use num_complex::Complex64;
use rand::Rng;

/// Free 1D Gaussian closed form at time t (Fourier-integral derivation).
fn free_oracle(grid: &GridSpec, mass: f64, center: f64, width: f64, momentum: f64, t: f64) -> Wavefunction {
    let hbar = grid.hbar();
    let k0 = momentum / hbar;
    let alpha = Complex64::new(1.0, hbar * t / (2.0 * mass * width * width));
    let v0 = hbar * k0 / mass;
    let prefactor =
        (2.0 * std::f64::consts::PI * width * width).powf(-0.25) * alpha.sqrt().finv();
    Wavefunction::from_fn(grid.clone(), vec![mass], |coords| {
        let x = coords[0];
        let u = x - center - v0 * t;
        let envelope = (-Complex64::new(u * u, 0.0) / (4.0 * width * width * alpha)).exp();
        let phase =
            Complex64::from_polar(1.0, k0 * (x - center) - hbar * k0 * k0 * t / (2.0 * mass));
        prefactor * envelope * phase
    })
    .expect("finite oracle samples")
}

pub fn run(config: &ScenarioConfig) -> anyhow::Result<Vec<CheckRecord>> {
    let tol = |key: &str, default: f64| config.tolerance(key, default);
    let mut checks = Vec::new();
    let hbar = config.grid.hbar;

    // Solver oracle at the reference resolution: 1024 points, t = 1,
    // dt = 1e-3.
    let oracle_grid = GridSpec::centered(1, 1, 1024, 64.0, hbar)?;
    let psi0 = free_oracle(&oracle_grid, 1.0, -2.0, 1.0, 1.5, 0.0);
    let evolved = evolve::<1>(&psi0, &ZeroPotential, 1.0, 1e-3)?;
    let err = evolved.distance(&free_oracle(&oracle_grid, 1.0, -2.0, 1.0, 1.5, 1.0))?;
    checks.push(CheckRecord::residual(
        "free-gaussian-oracle",
        "closed-form-propagation",
        err,
        tol("free-gaussian-oracle", tolerances::SOLVER_L2),
    ));

    // Convergence order of the splitting, measured where it is not exact:
    // a coherent state over one trap period returns to −ψ₀.
    let order_grid = GridSpec::centered(1, 1, 512, 32.0, hbar)?;
    let trap = HarmonicTrap { omega: 1.0 };
    let width = (hbar / 2.0f64).sqrt();
    let coherent = make_gaussian(&order_grid, &[1.0], &[2.0], &[width], &[0.0])?;
    let period = 2.0 * std::f64::consts::PI;
    let err_at = |steps: usize| -> anyhow::Result<f64> {
        let out = evolve::<1>(&coherent, &trap, period, period / steps as f64)?;
        Ok(out.add_scaled(Complex64::new(1.0, 0.0), &coherent)?.norm())
    };
    let coarse = err_at(1024)?;
    let fine = err_at(2048)?;
    let order = (coarse / fine).log2();
    checks.push(CheckRecord::at_least(
        "splitting-order",
        "second-order-in-dt",
        order,
        tol("splitting-order", tolerances::SOLVER_ORDER_FLOOR),
    ));

    // Unitarity of the dressed action over random elements.
    let grid = GridSpec::centered(1, 1, 512, 64.0, hbar)?;
    let packet = make_gaussian(&grid, &[1.3], &[0.0], &[1.5], &[0.4 * hbar])?;
    let mut rng = sample::rng(config.seed, 31);
    let mut worst_unitarity: f64 = 0.0;
    for _ in 0..50 {
        let g = GalileiElement::<1> {
            boost: [rng.random_range(-1.0..1.0)],
            translation: [rng.random_range(-2.0..2.0)],
            time_shift: rng.random_range(-0.5..0.5),
            ..GalileiElement::identity()
        };
        let out = galilei_quantum::apply_u(&g, &packet, &ZeroPotential)?;
        worst_unitarity = worst_unitarity.max((out.norm() - 1.0).abs());
    }
    checks.push(CheckRecord::residual(
        "dressed-action-unitarity",
        "unitarity",
        worst_unitarity,
        tol("dressed-action-unitarity", tolerances::UNITARITY),
    ));

    // Solution map: translations, boosts, and the combination, free and
    // harmonic-pair.
    let elements_1d = [
        ("translation", GalileiElement::<1>::translation([1.5])),
        ("boost", GalileiElement::<1>::boost([0.6])),
        (
            "boost-translation",
            GalileiElement {
                boost: [0.5],
                translation: [1.0],
                ..GalileiElement::identity()
            },
        ),
    ];
    let mut worst_free: f64 = 0.0;
    let free_packet = make_gaussian(&oracle_grid, &[1.3], &[0.0], &[1.5], &[0.4 * hbar])?;
    for (_, g) in &elements_1d {
        worst_free =
            worst_free.max(solution_map_residual(g, &free_packet, &ZeroPotential, 1.0, 1e-3)?);
    }
    checks.push(CheckRecord::residual(
        "solution-map-free",
        "solutions-to-solutions",
        worst_free,
        tol("solution-map-free", tolerances::SOLUTION_MAP),
    ));

    let pair_grid = GridSpec::centered(2, 1, 128, 24.0, hbar)?;
    let pair = PairwiseHarmonic { k: 1.0 };
    let pair_packet = make_gaussian(
        &pair_grid,
        &[1.0, 1.5],
        &[0.7, -0.7],
        &[0.9, 0.9],
        &[0.3 * hbar, -0.2 * hbar],
    )?;
    let mut worst_pair: f64 = 0.0;
    for (_, g) in &elements_1d {
        let mut g = *g;
        g.translation[0] *= 0.6;
        worst_pair = worst_pair.max(solution_map_residual(
            &g,
            &pair_packet,
            &pair,
            0.5,
            2e-4,
        )?);
    }
    checks.push(CheckRecord::residual(
        "solution-map-harmonic-pair",
        "solutions-to-solutions",
        worst_pair,
        tol("solution-map-harmonic-pair", tolerances::SOLUTION_MAP),
    ));

    // Multiplier phases over random pairs (free potential; the multiplier
    // does not depend on the interaction).
    // The group-law suites fuzz 10⁴ elements; phase measurements carry FFT
    // work per draw, so they run at 1/100 of that budget (100 pairs at the
    // default config).
    let mut rng = sample::rng(config.seed, 32);
    let pairs = (config.element_count()? / 100).clamp(50, 1000);
    let mut worst_phase: f64 = 0.0;
    let mut worst_overlap: f64 = 1.0;
    for _ in 0..pairs {
        let mut draw = || GalileiElement::<1> {
            boost: [rng.random_range(-1.0..1.0)],
            translation: [rng.random_range(-1.5..1.5)],
            time_shift: rng.random_range(-0.4..0.4),
            ..GalileiElement::identity()
        };
        let (gp, g) = (draw(), draw());
        let pc = composition_phase(&gp, &g, &packet, &ZeroPotential)?;
        worst_phase = worst_phase.max(pc.phase_error());
        worst_overlap = worst_overlap.min(pc.overlap);
    }
    checks.push(CheckRecord::residual(
        "composition-phase",
        "multiplier-measurement",
        worst_phase,
        tol("composition-phase", tolerances::PHASE),
    ));
    checks.push(CheckRecord::at_least(
        "composition-overlap",
        "ray-comparison-validity",
        worst_overlap,
        1.0 - 1e-8,
    ));

    // Boost–translation commutator phase: magnitude against (M/ħ)v′·a and
    // linearity in M over {1, 2, 4}.
    let (vp, a) = (0.5, 1.0);
    let mut sweep = Vec::new();
    let mut worst_comm: f64 = 0.0;
    let mut phases = Vec::new();
    for mass in [1.0, 2.0, 4.0] {
        let psi = make_gaussian(&grid, &[mass], &[0.0], &[1.5], &[0.4 * hbar])?;
        let pc = commutator_phase(&[vp], &[a], &psi)?;
        worst_comm = worst_comm.max((pc.measured.abs() - pc.predicted.abs()).abs());
        phases.push(pc.measured);
        sweep.push((mass, pc.measured, pc.predicted));
    }
    checks.push(CheckRecord::residual(
        "commutator-phase-magnitude",
        "boost-translation-commutator",
        worst_comm,
        tol("commutator-phase-magnitude", tolerances::PHASE),
    ));
    let base = phases[0];
    let worst_linear = [1.0f64, 2.0, 4.0]
        .iter()
        .enumerate()
        .map(|(i, m)| (phases[i] - wrap_phase(m * base)).abs())
        .fold(0.0f64, f64::max);
    checks.push(CheckRecord::residual(
        "commutator-phase-linearity",
        "linear-in-total-mass",
        worst_linear,
        tol("commutator-phase-linearity", tolerances::PHASE),
    ));

    if let Some(dir) = &config.output_dir {
        export::write_phase_sweep_csv(
            &sweep,
            ("total_mass", "measured_phase", "predicted_phase"),
            &dir.join("commutator-phase-sweep.csv"),
        )?;
        export::write_marginal_csv(&evolved, 0, &dir.join("free-gaussian-density.csv"))?;
    }

    Ok(checks)
}
