//! Classical extension: conservation budgets, ζ quadrature consistency, and
//! 𝒢̄-covariance of trajectories.

use crate::config::ScenarioConfig;
use crate::export;
use crate::report::CheckRecord;
use crate::sample;
use crate::tolerances;
use galilei_core::{
    classical, ClassicalState, ExtendedElement, GalileiElement, PairwiseHarmonic,
    PairwisePowerLaw, Potential, ZeroPotential,
};
use rand::Rng;

fn energy_drift<const D: usize>(
    state: &ClassicalState<D>,
    v: &dyn Potential<D>,
    horizon: f64,
    dt: f64,
) -> anyhow::Result<(f64, Vec<ClassicalState<D>>)> {
    let steps = (horizon / dt).round() as usize;
    let trajectory = classical::integrate(state, v, dt, steps)?;
    let e0 = classical::hamiltonian(state, v);
    let drift = trajectory
        .iter()
        .map(|s| ((classical::hamiltonian(s, v) - e0) / e0).abs())
        .fold(0.0f64, f64::max);
    Ok((drift, trajectory))
}

pub fn run(config: &ScenarioConfig) -> anyhow::Result<Vec<CheckRecord>> {
    let tol = |key: &str, default: f64| config.tolerance(key, default);
    let mut checks = Vec::new();
    let dt = 1e-3;

    let mut rng = sample::rng(config.seed, 21);
    let state: ClassicalState<3> = sample::classical_state(&mut rng, 2);
    let harmonic = PairwiseHarmonic { k: 1.0 };
    let softened = PairwisePowerLaw::gravity_like(0.3);

    // Mass conservation is bitwise along the whole trajectory.
    let (drift_h, trajectory) = energy_drift(&state, &harmonic, 10.0, dt)?;
    let bitwise = trajectory.iter().all(|s| {
        s.m.iter()
            .zip(&state.m)
            .all(|(a, b)| a.to_bits() == b.to_bits())
    });
    checks.push(CheckRecord::target(
        "mass-conservation-bitwise",
        "mass-is-conserved",
        if bitwise { 0.0 } else { 1.0 },
        0.0,
        0.0,
    ));
    checks.push(CheckRecord::residual(
        "energy-drift-harmonic",
        "energy-conservation",
        drift_h,
        tol("energy-drift-harmonic", tolerances::ENERGY_DRIFT),
    ));

    let (drift_s, _) = energy_drift(&state, &softened, 10.0, dt)?;
    checks.push(CheckRecord::residual(
        "energy-drift-softened-power-law",
        "energy-conservation",
        drift_s,
        tol("energy-drift-softened-power-law", tolerances::ENERGY_DRIFT),
    ));

    // ζ from the integrator against the composite-Simpson quadrature.
    let quadrature = classical::zeta_quadrature(&trajectory, &harmonic)?;
    let mut worst_zeta: f64 = 0.0;
    for (sample_state, dz) in trajectory.iter().zip(&quadrature) {
        for i in 0..state.particle_count() {
            worst_zeta = worst_zeta.max(((sample_state.zeta[i] - state.zeta[i]) - dz[i]).abs());
        }
    }
    checks.push(CheckRecord::residual(
        "zeta-quadrature-consistency",
        "zeta-integral",
        worst_zeta,
        tol("zeta-quadrature-consistency", tolerances::ZETA_CONSISTENCY),
    ));

    // Free flow is polynomial in time, so RK4 reproduces it to roundoff.
    let free_state: ClassicalState<3> = sample::classical_state(&mut rng, 1);
    let free_traj = classical::integrate(&free_state, &ZeroPotential, dt, 1000)?;
    let end = free_traj.last().expect("nonempty");
    let mut free_err: f64 = 0.0;
    let t = end.t - free_state.t;
    for c in 0..3 {
        let expected = free_state.x[0][c] + free_state.p[0][c] / free_state.m[0] * t;
        free_err = free_err.max((end.x[0][c] - expected).abs());
    }
    let p2 = free_state.p[0].iter().map(|p| p * p).sum::<f64>();
    let zeta_closed = free_state.zeta[0] - p2 / (2.0 * free_state.m[0] * free_state.m[0]) * t;
    free_err = free_err.max((end.zeta[0] - zeta_closed).abs());
    checks.push(CheckRecord::residual(
        "free-flow-exactness",
        "free-motion-closed-form",
        free_err,
        tol("free-flow-exactness", tolerances::FREE_FLOW),
    ));

    // Covariance of the dynamics under random extension elements.
    let mut rng = sample::rng(config.seed, 22);
    let mut worst_b0: f64 = 0.0;
    let mut worst_bt: f64 = 0.0;
    for _ in 0..10 {
        let s: ClassicalState<3> = sample::classical_state(&mut rng, 2);
        let mut gbar: ExtendedElement<3> = ExtendedElement {
            theta: rng.random_range(-1.0..1.0),
            g: GalileiElement {
                rotation: sample::rotation(&mut rng),
                boost: sample::vec_in(&mut rng, 1.0),
                translation: sample::vec_in(&mut rng, 1.0),
                time_shift: 0.0,
            },
        };
        worst_b0 = worst_b0.max(classical::covariance_residual(&gbar, &s, &harmonic, 2.0, dt)?);
        worst_b0 = worst_b0.max(classical::covariance_residual(&gbar, &s, &softened, 2.0, dt)?);
        gbar.g.time_shift = rng.random_range(-0.5..0.5);
        worst_bt = worst_bt.max(classical::covariance_residual(&gbar, &s, &harmonic, 2.0, dt)?);
    }
    checks.push(CheckRecord::residual(
        "covariance-no-time-shift",
        "trajectory-covariance",
        worst_b0,
        tol("covariance-no-time-shift", tolerances::COVARIANCE),
    ));
    checks.push(CheckRecord::residual(
        "covariance-with-time-shift",
        "trajectory-covariance",
        worst_bt,
        tol("covariance-with-time-shift", tolerances::COVARIANCE_TIME),
    ));

    // Galilei invariance of the built-in pair potentials at fixed time.
    let mut rng = sample::rng(config.seed, 23);
    let mut worst_inv: f64 = 0.0;
    for _ in 0..200 {
        let s: ClassicalState<3> = sample::classical_state(&mut rng, 3.min(config.particles.max(2)));
        let g = GalileiElement::<3> {
            rotation: sample::rotation(&mut rng),
            translation: sample::vec_in(&mut rng, 5.0),
            ..GalileiElement::identity()
        };
        let moved: Vec<[f64; 3]> = s.x.iter().map(|x| {
            let rx = g.rotation.apply(x);
            [
                rx[0] + g.translation[0],
                rx[1] + g.translation[1],
                rx[2] + g.translation[2],
            ]
        }).collect();
        for v in [&harmonic as &dyn Potential<3>, &softened] {
            let before = v.eval(&s.x, &s.m);
            let after = v.eval(&moved, &s.m);
            worst_inv = worst_inv.max((after - before).abs() / before.abs().max(1.0));
        }
    }
    checks.push(CheckRecord::residual(
        "potential-invariance",
        "distance-only-dependence",
        worst_inv,
        tol("potential-invariance", tolerances::POTENTIAL_INVARIANCE),
    ));

    // Analytic gradients against central finite differences.
    let mut rng = sample::rng(config.seed, 24);
    let mut worst_grad: f64 = 0.0;
    let h = 1e-5;
    for _ in 0..20 {
        let s: ClassicalState<3> = sample::classical_state(&mut rng, 2);
        for v in [&harmonic as &dyn Potential<3>, &softened] {
            let grad = v.grad_x(&s.x, &s.m);
            for i in 0..2 {
                for c in 0..3 {
                    let mut xp = s.x.clone();
                    let mut xm = s.x.clone();
                    xp[i][c] += h;
                    xm[i][c] -= h;
                    let fd = (v.eval(&xp, &s.m) - v.eval(&xm, &s.m)) / (2.0 * h);
                    worst_grad = worst_grad.max((grad[i][c] - fd).abs() / fd.abs().max(1.0));
                }
            }
            let gm = v.grad_m(&s.x, &s.m);
            for i in 0..2 {
                let mut mp = s.m.clone();
                let mut mm = s.m.clone();
                mp[i] += h;
                mm[i] -= h;
                let fd = (v.eval(&s.x, &mp) - v.eval(&s.x, &mm)) / (2.0 * h);
                worst_grad = worst_grad.max((gm[i] - fd).abs() / fd.abs().max(1.0));
            }
        }
    }
    checks.push(CheckRecord::residual(
        "gradient-finite-difference",
        "analytic-gradients",
        worst_grad,
        tol("gradient-finite-difference", tolerances::GRADIENT_FD),
    ));

    if let Some(dir) = &config.output_dir {
        let every = (trajectory.len() / 1000).max(1);
        let thinned: Vec<_> = trajectory.iter().step_by(every).cloned().collect();
        export::write_trajectory_csv(&thinned, &dir.join("classical-trajectory.csv"))?;
    }

    Ok(checks)
}
