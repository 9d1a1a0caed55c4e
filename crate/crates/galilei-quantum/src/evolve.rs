//! Hamiltonian application and Strang split-operator evolution.
//!
//! H = −Σᵢ (ħ²/2mᵢ) Δᵢ + V with the Laplacian as a Fourier multiplier. The
//! propagator exp(−iHt/ħ) is approximated by the symmetric splitting
//! exp(−iV dt/2ħ) exp(−iT dt/ħ) exp(−iV dt/2ħ) per step, which is unitary
//! by construction and second order in dt. With V = 0 a step is exact. A
//! negative horizon runs the time-reversed splitting.

use crate::error::{QuantumError, Result};
use crate::spectral::{kinetic_grid, potential_grid};
use crate::wavefunction::Wavefunction;
use crate::fft;
use galilei_core::Potential;
use ndarray::ArrayD;
use num_complex::Complex64;

/// Hψ = −Σ (ħ²/2mᵢ)Δᵢψ + Vψ, kinetic part spectral.
pub fn apply_hamiltonian<const D: usize>(
    psi: &Wavefunction,
    v: &dyn Potential<D>,
) -> Result<Wavefunction> {
    let grid = psi.grid().clone();
    let axes: Vec<usize> = (0..grid.rank()).collect();
    let kinetic = kinetic_grid(&grid, psi.masses());
    let mut hat = psi.amplitudes().clone();
    fft::forward(&mut hat, &axes);
    for (a, t) in hat.iter_mut().zip(kinetic.iter()) {
        *a *= *t;
    }
    fft::inverse(&mut hat, &axes);
    let vgrid = potential_grid(&grid, psi.masses(), v)?;
    for ((out, vx), amp) in hat.iter_mut().zip(vgrid.iter()).zip(psi.amplitudes().iter()) {
        *out += vx * amp;
    }
    Ok(Wavefunction::from_parts(grid, psi.masses().to_vec(), hat))
}

/// Re⟨ψ, Hψ⟩ / ⟨ψ, ψ⟩.
pub fn hamiltonian_expectation<const D: usize>(
    psi: &Wavefunction,
    v: &dyn Potential<D>,
) -> Result<f64> {
    let h_psi = apply_hamiltonian(psi, v)?;
    Ok(psi.inner(&h_psi)?.re / psi.norm_sq())
}

fn phase_field(field: &ArrayD<f64>, scale: f64) -> ArrayD<Complex64> {
    field.mapv(|x| Complex64::from_polar(1.0, scale * x))
}

/// exp(−(i/ħ)Ht)ψ by Strang steps of size ~dt (|t|/dt is rounded to an
/// integer step count, with a log warning when the rounding is material).
pub fn evolve<const D: usize>(
    psi: &Wavefunction,
    v: &dyn Potential<D>,
    t: f64,
    dt: f64,
) -> Result<Wavefunction> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(QuantumError::BadTimeStep { dt });
    }
    psi.check_finite(0)?;
    if t == 0.0 {
        return Ok(psi.clone());
    }
    let steps = (t.abs() / dt).round().max(1.0);
    if ((t.abs() / dt) - steps).abs() > 1e-9 {
        log::warn!(
            "evolve horizon {} is not an integral number of steps at dt {}; using {} steps",
            t,
            dt,
            steps
        );
    }
    let steps = steps as usize;
    let dt_signed = t / steps as f64;

    let grid = psi.grid().clone();
    let hbar = grid.hbar();
    let axes: Vec<usize> = (0..grid.rank()).collect();
    let kinetic = kinetic_grid(&grid, psi.masses());
    let kinetic_full = phase_field(&kinetic, -dt_signed / hbar);
    let vgrid = potential_grid(&grid, psi.masses(), v)?;
    let potential_half = phase_field(&vgrid, -0.5 * dt_signed / hbar);
    let potential_full = phase_field(&vgrid, -dt_signed / hbar);

    let mut data = psi.amplitudes().clone();
    let mul = |data: &mut ArrayD<Complex64>, phase: &ArrayD<Complex64>| {
        for (a, p) in data.iter_mut().zip(phase.iter()) {
            *a *= *p;
        }
    };

    mul(&mut data, &potential_half);
    for step in 0..steps {
        fft::forward(&mut data, &axes);
        mul(&mut data, &kinetic_full);
        fft::inverse(&mut data, &axes);
        if step + 1 < steps {
            mul(&mut data, &potential_full);
        }
        if step % 256 == 255 && !data.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
            return Err(QuantumError::NonFinite { step });
        }
    }
    mul(&mut data, &potential_half);

    let out = Wavefunction::from_parts(grid, psi.masses().to_vec(), data);
    out.check_finite(steps)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::wavefunction::{make_gaussian, Wavefunction};
    use galilei_core::{HarmonicTrap, ZeroPotential};

    #[test]
    fn plane_wave_is_kinetic_eigenmode() {
        let g = GridSpec::centered(1, 1, 64, 16.0, 1.0).unwrap();
        let k = 2.0 * std::f64::consts::PI * 4.0 / 16.0;
        let psi = Wavefunction::from_fn(g, vec![2.0], |x| Complex64::from_polar(1.0, k * x[0]))
            .unwrap();
        let h = apply_hamiltonian::<1>(&psi, &ZeroPotential).unwrap();
        let expected = k * k / (2.0 * 2.0);
        for (a, b) in h.amplitudes().iter().zip(psi.amplitudes().iter()) {
            assert!((a - expected * b).norm() < 1e-10);
        }
    }

    #[test]
    fn oscillator_ground_state_energy() {
        // ω = 1, m = 1, ħ = 1: E₀ = ħω/2, ψ₀ ∝ exp(−x²/2) i.e. width 1/√2.
        let g = GridSpec::centered(1, 1, 512, 32.0, 1.0).unwrap();
        let trap = HarmonicTrap { omega: 1.0 };
        let psi = make_gaussian(&g, &[1.0], &[0.0], &[0.5f64.sqrt()], &[0.0]).unwrap();
        let h = apply_hamiltonian::<1>(&psi, &trap).unwrap();
        let energy = psi.inner(&h).unwrap().re;
        assert!((energy - 0.5).abs() < 1e-8, "E = {energy}");
        // Eigenstate: Hψ − Eψ vanishes pointwise, not just in expectation.
        let residual = h.distance(&psi.clone().scaled(Complex64::new(energy, 0.0))).unwrap();
        assert!(residual < 1e-8, "residual {residual}");
    }

    #[test]
    fn hermiticity() {
        let g = GridSpec::centered(1, 1, 256, 32.0, 1.0).unwrap();
        let trap = HarmonicTrap { omega: 0.7 };
        let a = make_gaussian(&g, &[1.5], &[0.4], &[1.0], &[0.5]).unwrap();
        let b = make_gaussian(&g, &[1.5], &[-1.0], &[0.8], &[-0.3]).unwrap();
        let lhs = a.inner(&apply_hamiltonian::<1>(&b, &trap).unwrap()).unwrap();
        let rhs = apply_hamiltonian::<1>(&a, &trap).unwrap().inner(&b).unwrap();
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn zero_horizon_is_identity() {
        let g = GridSpec::centered(1, 1, 64, 16.0, 1.0).unwrap();
        let psi = make_gaussian(&g, &[1.0], &[0.0], &[1.0], &[0.0]).unwrap();
        let out = evolve::<1>(&psi, &ZeroPotential, 0.0, 1e-3).unwrap();
        assert_eq!(out.distance(&psi).unwrap(), 0.0);
    }

    #[test]
    fn norm_preserved_over_unit_time() {
        let g = GridSpec::centered(1, 1, 256, 32.0, 1.0).unwrap();
        let trap = HarmonicTrap { omega: 1.0 };
        let psi = make_gaussian(&g, &[1.0], &[1.0], &[0.8], &[0.5]).unwrap();
        let out = evolve::<1>(&psi, &trap, 1.0, 1e-3).unwrap();
        assert!((out.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn forward_then_backward_returns() {
        let g = GridSpec::centered(1, 1, 256, 32.0, 1.0).unwrap();
        let trap = HarmonicTrap { omega: 1.0 };
        let psi = make_gaussian(&g, &[1.0], &[1.0], &[0.8], &[0.0]).unwrap();
        let there = evolve::<1>(&psi, &trap, 0.5, 1e-3).unwrap();
        let back = evolve::<1>(&there, &trap, -0.5, 1e-3).unwrap();
        assert!(back.distance(&psi).unwrap() < 1e-12);
    }
}
