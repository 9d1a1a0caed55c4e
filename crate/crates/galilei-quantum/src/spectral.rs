//! Spectral primitives: exact grid rolls, Fourier phase-ramp shifts,
//! derivatives, coordinate multiplication, and shear-based planar rotation.
//!
//! Shifts that land on the lattice are executed as index rolls (exact to the
//! bit); everything else is a phase ramp on the FFT modes, which is exact
//! for the band-limited interpolant and unitary either way.

use crate::error::{QuantumError, Result};
use crate::fft;
use crate::grid::GridSpec;
use crate::wavefunction::Wavefunction;
use galilei_core::Potential;
use ndarray::{ArrayD, IxDyn};
use num_complex::Complex64;

/// Relative tolerance for treating a shift as lattice-commensurate.
const LATTICE_SNAP_TOL: f64 = 1e-12;

fn roll_axis(data: &ArrayD<Complex64>, axis: usize, cells: i64) -> ArrayD<Complex64> {
    let n = data.shape()[axis] as i64;
    let cells = cells.rem_euclid(n);
    if cells == 0 {
        return data.clone();
    }
    let rank = data.ndim();
    ArrayD::from_shape_fn(IxDyn(data.shape()), |ix| {
        let mut src: Vec<usize> = (0..rank).map(|a| ix[a]).collect();
        src[axis] = ((ix[axis] as i64 - cells).rem_euclid(n)) as usize;
        data[IxDyn(&src)]
    })
}

/// ψ(x) ↦ ψ(x − offset) along every axis.
pub fn shift(psi: &Wavefunction, offsets: &[f64]) -> Result<Wavefunction> {
    assert_eq!(offsets.len(), psi.grid().rank());
    let grid = psi.grid().clone();
    let mut data = psi.amplitudes().clone();
    for (axis, &offset) in offsets.iter().enumerate() {
        if offset == 0.0 {
            continue;
        }
        let spacing = grid.axis(axis).spacing();
        let cells = offset / spacing;
        if (cells - cells.round()).abs() <= LATTICE_SNAP_TOL * cells.abs().max(1.0) {
            data = roll_axis(&data, axis, cells.round() as i64);
        } else {
            fft::forward_axis(&mut data, axis);
            let phases: Vec<Complex64> = grid
                .wavenumbers(axis)
                .iter()
                .map(|k| Complex64::from_polar(1.0, -k * offset))
                .collect();
            for (ix, v) in data.indexed_iter_mut() {
                *v *= phases[ix[axis]];
            }
            fft::inverse_axis(&mut data, axis);
        }
    }
    Ok(Wavefunction::from_parts(
        grid,
        psi.masses().to_vec(),
        data,
    ))
}

/// ∂ψ/∂x_axis via the ik multiplier.
pub fn derivative(psi: &Wavefunction, axis: usize) -> Wavefunction {
    let grid = psi.grid().clone();
    let mut data = psi.amplitudes().clone();
    fft::forward_axis(&mut data, axis);
    let k = grid.wavenumbers(axis);
    for (ix, v) in data.indexed_iter_mut() {
        *v *= Complex64::new(0.0, k[ix[axis]]);
    }
    fft::inverse_axis(&mut data, axis);
    Wavefunction::from_parts(grid, psi.masses().to_vec(), data)
}

/// x_axis · ψ in the box-centered chart. Valid only on contained states;
/// the coordinate is a sawtooth on the torus and the discontinuity must sit
/// where ψ vanishes.
pub fn multiply_coordinate(psi: &Wavefunction, axis: usize) -> Wavefunction {
    let grid = psi.grid().clone();
    let coords = grid.coordinates(axis);
    let mut data = psi.amplitudes().clone();
    for (ix, v) in data.indexed_iter_mut() {
        *v *= coords[ix[axis]];
    }
    Wavefunction::from_parts(grid, psi.masses().to_vec(), data)
}

/// exp(i Σ_axes coef_ax · x_ax) · ψ, the position-dependent phase used by
/// boosts. Same containment caveat as [`multiply_coordinate`].
pub fn multiply_linear_phase(psi: &Wavefunction, coefs: &[f64]) -> Wavefunction {
    assert_eq!(coefs.len(), psi.grid().rank());
    let grid = psi.grid().clone();
    let per_axis: Vec<Vec<f64>> = (0..grid.rank())
        .map(|ax| grid.coordinates(ax).iter().map(|x| coefs[ax] * x).collect())
        .collect();
    let mut data = psi.amplitudes().clone();
    for (ix, v) in data.indexed_iter_mut() {
        let mut phase = 0.0;
        for (ax, row) in per_axis.iter().enumerate() {
            phase += row[ix[ax]];
        }
        *v *= Complex64::from_polar(1.0, phase);
    }
    Wavefunction::from_parts(grid, psi.masses().to_vec(), data)
}

/// Pointwise multiplication by a real field.
pub fn multiply_field(psi: &Wavefunction, field: &ArrayD<f64>) -> Wavefunction {
    let mut data = psi.amplitudes().clone();
    for (v, f) in data.iter_mut().zip(field.iter()) {
        *v *= *f;
    }
    Wavefunction::from_parts(psi.grid().clone(), psi.masses().to_vec(), data)
}

fn quarter_turn(data: &ArrayD<Complex64>) -> ArrayD<Complex64> {
    // (Rot ψ)(x, y) = ψ(y, −x); on a centered square grid −x_i sits at
    // index (N − i) mod N, so this is an exact permutation.
    let n = data.shape()[0];
    ArrayD::from_shape_fn(IxDyn(data.shape()), |ix| {
        let (i, j) = (ix[0], ix[1]);
        data[IxDyn(&[j, (n - i) % n])]
    })
}

fn shear(
    data: &mut ArrayD<Complex64>,
    grid: &GridSpec,
    sheared_axis: usize,
    other_axis: usize,
    alpha: f64,
) {
    // ψ ↦ ψ(x_sheared − α·x_other): a per-line spectral shift.
    fft::forward_axis(data, sheared_axis);
    let k = grid.wavenumbers(sheared_axis);
    let other = grid.coordinates(other_axis);
    for (ix, v) in data.indexed_iter_mut() {
        let s = alpha * other[ix[other_axis]];
        *v *= Complex64::from_polar(1.0, -k[ix[sheared_axis]] * s);
    }
    fft::inverse_axis(data, sheared_axis);
}

/// ψ(x⃗) ↦ ψ(R(angle)⁻¹ x⃗) on a single-particle square d=2 grid: exact
/// quarter-turn permutations plus a three-shear pass for the residual
/// |r| ≤ π/4.
pub fn rotate_2d(psi: &Wavefunction, angle: f64) -> Result<Wavefunction> {
    let grid = psi.grid();
    if grid.particles() != 1 || grid.dim() != 2 || grid.axis(0) != grid.axis(1) {
        return Err(QuantumError::RotationNeedsSquareGrid);
    }
    let quarter = std::f64::consts::FRAC_PI_2;
    let turns = (angle / quarter).round();
    let residual = angle - turns * quarter;
    let turns = (turns.rem_euclid(4.0)) as usize;

    let mut data = psi.amplitudes().clone();
    if residual != 0.0 {
        let a = -(0.5 * residual).tan();
        let b = residual.sin();
        shear(&mut data, grid, 0, 1, a);
        shear(&mut data, grid, 1, 0, b);
        shear(&mut data, grid, 0, 1, a);
    }
    for _ in 0..turns {
        data = quarter_turn(&data);
    }
    Ok(Wavefunction::from_parts(
        grid.clone(),
        psi.masses().to_vec(),
        data,
    ))
}

/// V({x⃗ᵢ}, {mᵢ}) sampled over the grid.
pub fn potential_grid<const D: usize>(
    grid: &GridSpec,
    masses: &[f64],
    v: &dyn Potential<D>,
) -> Result<ArrayD<f64>> {
    if grid.dim() != D {
        return Err(QuantumError::DimensionMismatch {
            element: D,
            grid: grid.dim(),
        });
    }
    grid.check_masses(masses)?;
    let n = grid.particles();
    let mut positions = vec![[0.0; D]; n];
    Ok(ArrayD::from_shape_fn(IxDyn(&grid.shape()), |ix| {
        for i in 0..n {
            for a in 0..D {
                let axis = grid.axis_of(i, a);
                positions[i][a] = grid.coordinate(axis, ix[axis]);
            }
        }
        v.eval(&positions, masses)
    }))
}

/// Σ_axes ħ²k²/2m_particle(axis) over the FFT-ordered momentum grid.
pub fn kinetic_grid(grid: &GridSpec, masses: &[f64]) -> ArrayD<f64> {
    let hbar = grid.hbar();
    let per_axis: Vec<Vec<f64>> = (0..grid.rank())
        .map(|ax| {
            let m = masses[grid.particle_of_axis(ax)];
            grid.wavenumbers(ax)
                .iter()
                .map(|k| hbar * hbar * k * k / (2.0 * m))
                .collect()
        })
        .collect();
    ArrayD::from_shape_fn(IxDyn(&grid.shape()), |ix| {
        per_axis
            .iter()
            .enumerate()
            .map(|(ax, row)| row[ix[ax]])
            .sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavefunction::make_gaussian;

    fn grid() -> GridSpec {
        GridSpec::centered(1, 1, 256, 32.0, 1.0).unwrap()
    }

    #[test]
    fn lattice_shift_is_exact_roll() {
        let g = grid();
        let psi = make_gaussian(&g, &[1.0], &[0.0], &[1.0], &[0.3]).unwrap();
        let spacing = g.axis(0).spacing();
        let shifted = shift(&psi, &[4.0 * spacing]).unwrap();
        // Compare against direct resampling of the same Gaussian.
        let reference = make_gaussian(&g, &[1.0], &[4.0 * spacing], &[1.0], &[0.3]).unwrap();
        // The factory phase is anchored at the center, the roll keeps the
        // original anchor; fix the constant phase before comparing.
        let ov = reference.inner(&shifted).unwrap();
        assert!((ov.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fractional_shift_matches_analytic_gaussian() {
        let g = grid();
        let psi = make_gaussian(&g, &[1.0], &[0.0], &[1.0], &[0.0]).unwrap();
        let shifted = shift(&psi, &[0.4321]).unwrap();
        let reference = make_gaussian(&g, &[1.0], &[0.4321], &[1.0], &[0.0]).unwrap();
        assert!(shifted.distance(&reference).unwrap() < 1e-12);
        assert!((shifted.norm() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn derivative_of_plane_wave() {
        let g = grid();
        let k = 2.0 * std::f64::consts::PI * 5.0 / 32.0;
        let psi = Wavefunction::from_fn(g, vec![1.0], |x| Complex64::from_polar(1.0, k * x[0]))
            .unwrap();
        let d = derivative(&psi, 0);
        for (a, b) in d.amplitudes().iter().zip(psi.amplitudes().iter()) {
            let expected = Complex64::new(0.0, k) * b;
            assert!((a - expected).norm() < 1e-10);
        }
    }

    #[test]
    fn rotation_moves_a_displaced_gaussian() {
        let g = GridSpec::centered(1, 2, 128, 32.0, 1.0).unwrap();
        let psi = make_gaussian(&g, &[1.0], &[3.0, 0.0], &[1.2, 1.2], &[0.0, 0.0]).unwrap();
        let angle = std::f64::consts::FRAC_PI_3;
        let rotated = rotate_2d(&psi, angle).unwrap();
        // ψ(R⁻¹x) centered at c moves the packet to R·c.
        let expected = make_gaussian(
            &g,
            &[1.0],
            &[3.0 * angle.cos(), 3.0 * angle.sin()],
            &[1.2, 1.2],
            &[0.0, 0.0],
        )
        .unwrap();
        assert!(rotated.distance(&expected).unwrap() < 1e-9);
        assert!((rotated.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quarter_turn_is_exact() {
        let g = GridSpec::centered(1, 2, 64, 32.0, 1.0).unwrap();
        let psi = make_gaussian(&g, &[1.0], &[2.0, 1.0], &[1.0, 1.0], &[0.0, 0.0]).unwrap();
        let r1 = rotate_2d(&psi, std::f64::consts::FRAC_PI_2).unwrap();
        let expected = make_gaussian(&g, &[1.0], &[-1.0, 2.0], &[1.0, 1.0], &[0.0, 0.0]).unwrap();
        assert!(r1.distance(&expected).unwrap() < 1e-12);
    }

    #[test]
    fn rotation_rejects_non_square() {
        let axes = vec![
            crate::grid::Axis { points: 64, length: 32.0, origin: -16.0 },
            crate::grid::Axis { points: 64, length: 24.0, origin: -12.0 },
        ];
        let g = GridSpec::new(1, 2, axes, 1.0).unwrap();
        let psi = make_gaussian(&g, &[1.0], &[0.0, 0.0], &[1.0, 1.0], &[0.0, 0.0]).unwrap();
        assert!(matches!(
            rotate_2d(&psi, 0.3),
            Err(QuantumError::RotationNeedsSquareGrid)
        ));
    }
}
