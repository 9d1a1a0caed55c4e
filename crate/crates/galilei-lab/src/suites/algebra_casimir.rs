//! Lie algebra structure constants, measured twice: once at the group level
//! by small-parameter commutators in 𝒢̄, once on Hilbert space by operator
//! brackets; plus the Casimir elements.

use crate::config::ScenarioConfig;
use crate::report::CheckRecord;
use crate::tolerances;
use galilei_core::algebra::{self, BasisLabel};
use galilei_core::{PairwiseHarmonic, Potential, ZeroPotential};
use galilei_quantum::{
    algebra_residual, casimir_commutator_residual, casimir_k, casimir_s2, make_gaussian,
    GeneratorLabel, GridSpec, Wavefunction,
};
use num_complex::Complex64;

fn worst_bracket<const D: usize>(
    psi: &Wavefunction,
    v: &dyn Potential<D>,
) -> anyhow::Result<f64> {
    let labels = GeneratorLabel::all(D);
    let mut worst: f64 = 0.0;
    for &x in &labels {
        for &y in &labels {
            worst = worst.max(algebra_residual(x, y, psi, v)?);
        }
    }
    Ok(worst)
}

pub fn run(config: &ScenarioConfig) -> anyhow::Result<Vec<CheckRecord>> {
    let tol = |key: &str, default: f64| config.tolerance(key, default);
    let mut checks = Vec::new();
    let hbar = config.grid.hbar;

    // Group-level probe: O(ε) envelope over three decades and the
    // Richardson-extrapolated estimate against the exact table.
    let labels = BasisLabel::all();
    let mut envelope: f64 = 0.0;
    let mut extrapolated: f64 = 0.0;
    for &x in &labels {
        for &y in &labels {
            let exact = algebra::bracket(x, y);
            for eps in [1e-2, 1e-3, 1e-4] {
                let err = algebra::probe_bracket(x, y, eps)?.sub(&exact).max_abs();
                envelope = envelope.max(err / eps);
            }
            let refined = algebra::probe_bracket_extrapolated(x, y, 1e-3)?;
            extrapolated = extrapolated.max(refined.sub(&exact).max_abs());
        }
    }
    checks.push(CheckRecord::residual(
        "group-probe-envelope",
        "structure-constants-first-order",
        envelope,
        tol("group-probe-envelope", tolerances::PROBE_ENVELOPE),
    ));
    checks.push(CheckRecord::residual(
        "group-probe-extrapolated",
        "structure-constants",
        extrapolated,
        tol("group-probe-extrapolated", tolerances::PROBE_EXTRAPOLATED),
    ));

    // Hilbert-space brackets across the supported layouts.
    let g1 = GridSpec::centered(1, 1, 512, 64.0, hbar)?;
    let psi1 = make_gaussian(&g1, &[1.4], &[0.5], &[1.5], &[0.3 * hbar])?;
    checks.push(CheckRecord::residual(
        "brackets-free-line",
        "lie-algebra-on-hilbert-space",
        worst_bracket::<1>(&psi1, &ZeroPotential)?,
        tol("brackets-free-line", tolerances::BRACKET),
    ));

    let g2 = GridSpec::centered(2, 1, 128, 24.0, hbar)?;
    let pair = PairwiseHarmonic { k: 0.8 };
    let psi2 = make_gaussian(
        &g2,
        &[1.0, 2.0],
        &[0.5, -0.5],
        &[0.9, 0.9],
        &[0.2 * hbar, -0.1 * hbar],
    )?;
    checks.push(CheckRecord::residual(
        "brackets-interacting-pair",
        "lie-algebra-on-hilbert-space",
        worst_bracket::<1>(&psi2, &pair)?,
        tol("brackets-interacting-pair", tolerances::BRACKET),
    ));

    let g3 = GridSpec::centered(1, 2, 128, 32.0, hbar)?;
    let psi3 = make_gaussian(
        &g3,
        &[1.2],
        &[0.6, -0.4],
        &[1.1, 1.3],
        &[0.3 * hbar, 0.2 * hbar],
    )?;
    checks.push(CheckRecord::residual(
        "brackets-planar",
        "lie-algebra-on-hilbert-space",
        worst_bracket::<2>(&psi3, &ZeroPotential)?,
        tol("brackets-planar", tolerances::BRACKET),
    ));

    let g4 = GridSpec::centered(1, 3, 64, 32.0, hbar)?;
    let psi4 = make_gaussian(
        &g4,
        &[1.0],
        &[0.4, -0.3, 0.2],
        &[1.5, 1.45, 1.4],
        &[0.2 * hbar, 0.1 * hbar, -0.15 * hbar],
    )?;
    checks.push(CheckRecord::residual(
        "brackets-full-3d-basis",
        "lie-algebra-on-hilbert-space",
        worst_bracket::<3>(&psi4, &ZeroPotential)?,
        tol("brackets-full-3d-basis", tolerances::BRACKET),
    ));

    // Casimir values on distinguished states.
    let s2 = casimir_s2::<2>(&psi3, &ZeroPotential)?;
    checks.push(CheckRecord::residual(
        "s2-single-particle",
        "internal-angular-momentum-vanishes",
        s2.norm(),
        tol("s2-single-particle", tolerances::CASIMIR),
    ));
    let k_free = casimir_k::<1>(&psi1, &ZeroPotential)?;
    checks.push(CheckRecord::residual(
        "k-single-free-particle",
        "internal-energy-vanishes",
        k_free.norm(),
        tol("k-single-free-particle", tolerances::CASIMIR),
    ));

    // Two-particle harmonic internal ground state: Kψ = (2M/ħ²)(ħω_red/2)ψ.
    let (m1, m2, spring) = (1.0, 2.0, 1.0);
    let total = m1 + m2;
    let mu = m1 * m2 / total;
    let omega_red = (spring / mu as f64).sqrt();
    let kpair = PairwiseHarmonic { k: spring };
    let ground = Wavefunction::from_fn(g2.clone(), vec![m1, m2], |x| {
        let r_cm = (m1 * x[0] + m2 * x[1]) / total;
        let rel = x[0] - x[1];
        let cm = (-(r_cm - 0.3) * (r_cm - 0.3) / 4.0).exp();
        Complex64::new(cm * (-mu * omega_red * rel * rel / (2.0 * hbar)).exp(), 0.0)
    })?
    .normalized();
    let eigenvalue = 2.0 * total / (hbar * hbar) * (hbar * omega_red / 2.0);
    let k_psi = casimir_k::<1>(&ground, &kpair)?;
    let defect = k_psi
        .add_scaled(Complex64::new(-eigenvalue, 0.0), &ground)?
        .norm()
        / eigenvalue;
    checks.push(CheckRecord::residual(
        "k-internal-ground-state",
        "internal-energy-eigenvalue",
        defect,
        tol("k-internal-ground-state", tolerances::CASIMIR),
    ));

    // Casimir centrality against every generator.
    let mut worst_comm: f64 = 0.0;
    let free = ZeroPotential;
    for x in GeneratorLabel::all(2) {
        let s2call = |w: &Wavefunction| casimir_s2::<2>(w, &free);
        worst_comm = worst_comm.max(casimir_commutator_residual::<2>(&s2call, x, &psi3, &free)?);
        let kcall = |w: &Wavefunction| casimir_k::<2>(w, &free);
        worst_comm = worst_comm.max(casimir_commutator_residual::<2>(&kcall, x, &psi3, &free)?);
    }
    for x in GeneratorLabel::all(1) {
        let kcall = |w: &Wavefunction| casimir_k::<1>(w, &kpair);
        worst_comm = worst_comm.max(casimir_commutator_residual::<1>(&kcall, x, &ground, &kpair)?);
    }
    checks.push(CheckRecord::residual(
        "casimir-centrality",
        "casimirs-commute-with-generators",
        worst_comm,
        tol("casimir-centrality", tolerances::CASIMIR_COMMUTATOR),
    ));

    Ok(checks)
}
