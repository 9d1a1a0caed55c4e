//! Closed-form oracles shared by the integration tests.

use galilei_quantum::{GridSpec, Wavefunction};
use num_complex::Complex64;

/// Free 1D Gaussian evolved for time `t`, sampled over the grid:
///
///   ψ(x, t) = (2πσ²)^{-1/4} α^{-1/2}
///             exp(−(x − x₀ − v₀t)² / (4σ²α)) exp(i[k₀(x − x₀) − ħk₀²t/2m])
///
/// with α = 1 + iħt/(2mσ²), v₀ = ħk₀/m, derived by a Fourier-space Gaussian
/// integral independent of the solver. Units: `momentum` is physical, so
/// k₀ = p/ħ.
pub fn free_gaussian_oracle(
    grid: &GridSpec,
    mass: f64,
    center: f64,
    width: f64,
    momentum: f64,
    t: f64,
) -> Wavefunction {
    let hbar = grid.hbar();
    let k0 = momentum / hbar;
    let alpha = Complex64::new(1.0, hbar * t / (2.0 * mass * width * width));
    let v0 = hbar * k0 / mass;
    let prefactor = (2.0 * std::f64::consts::PI * width * width).powf(-0.25)
        * alpha.sqrt().finv();
    Wavefunction::from_fn(grid.clone(), vec![mass], |coords| {
        let x = coords[0];
        let u = x - center - v0 * t;
        let envelope = (-Complex64::new(u * u, 0.0) / (4.0 * width * width * alpha)).exp();
        let phase = Complex64::from_polar(
            1.0,
            k0 * (x - center) - hbar * k0 * k0 * t / (2.0 * mass),
        );
        prefactor * envelope * phase
    })
    .expect("finite oracle samples")
}
