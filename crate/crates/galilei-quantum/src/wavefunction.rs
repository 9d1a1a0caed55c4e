//! Wavefunctions on periodic grids, with the containment bookkeeping every
//! spectral operation relies on.
//!
//! Two containment rules apply. Construction of Gaussian test states
//! enforces the 6-width rule (each center at least six widths away from
//! every box edge) plus a momentum-space analogue, so that periodic images
//! and aliasing stay far below the acceptance tolerances. Transport
//! operations additionally run a gross-violation detector that rejects
//! states carrying visible weight in the outermost band of cells.

use crate::error::{QuantumError, Result};
use crate::fft;
use crate::grid::GridSpec;
use ndarray::{ArrayD, IxDyn};
use num_complex::Complex64;

/// Outermost band is `points / BAND_DIVISOR` cells (at least two) per side.
const BAND_DIVISOR: usize = 32;
/// Relative norm² allowed in the boundary band before a transport is
/// rejected. Gross-violation detector only: precision budgets come from the
/// 6-width construction rule.
pub const BOUNDARY_LEAK_TOL: f64 = 1e-6;

/// Complex amplitudes over a [`GridSpec`] with one mass per particle.
#[derive(Clone, Debug)]
pub struct Wavefunction {
    grid: GridSpec,
    masses: Vec<f64>,
    pub(crate) amplitudes: ArrayD<Complex64>,
}

impl Wavefunction {
    /// Builds a state by sampling `f` at every grid point. The coordinate
    /// slice passed to `f` has one entry per axis.
    pub fn from_fn<F>(grid: GridSpec, masses: Vec<f64>, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> Complex64,
    {
        grid.check_masses(&masses)?;
        let rank = grid.rank();
        let mut coords = vec![0.0; rank];
        let amplitudes = ArrayD::from_shape_fn(IxDyn(&grid.shape()), |ix| {
            for axis in 0..rank {
                coords[axis] = grid.coordinate(axis, ix[axis]);
            }
            f(&coords)
        });
        // from_shape_fn visits in row-major order; the closure above relies
        // only on the index it is handed, so this stays deterministic.
        let wf = Self {
            grid,
            masses,
            amplitudes,
        };
        wf.check_finite(0)?;
        Ok(wf)
    }

    /// Wraps externally produced amplitudes (e.g. a decoded snapshot) after
    /// validating the shape, masses, and finiteness.
    pub fn from_amplitudes(
        grid: GridSpec,
        masses: Vec<f64>,
        amplitudes: ArrayD<Complex64>,
    ) -> Result<Self> {
        grid.check_masses(&masses)?;
        if amplitudes.shape() != grid.shape().as_slice() {
            return Err(QuantumError::AxisCountMismatch {
                particles: grid.particles(),
                dim: grid.dim(),
                expected: grid.total_points(),
                got: amplitudes.len(),
            });
        }
        let wf = Self {
            grid,
            masses,
            amplitudes,
        };
        wf.check_finite(0)?;
        Ok(wf)
    }

    pub(crate) fn from_parts(
        grid: GridSpec,
        masses: Vec<f64>,
        amplitudes: ArrayD<Complex64>,
    ) -> Self {
        debug_assert_eq!(amplitudes.shape(), grid.shape().as_slice());
        Self {
            grid,
            masses,
            amplitudes,
        }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn amplitudes(&self) -> &ArrayD<Complex64> {
        &self.amplitudes
    }

    pub fn hbar(&self) -> f64 {
        self.grid.hbar()
    }

    /// Total mass M = Σ mᵢ.
    pub fn total_mass(&self) -> f64 {
        self.masses.iter().sum()
    }

    pub fn check_finite(&self, step: usize) -> Result<()> {
        if self.amplitudes.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
            Ok(())
        } else {
            Err(QuantumError::NonFinite { step })
        }
    }

    /// ⟨φ, ψ⟩ = Σ φ*ψ · cell volume, accumulated pairwise so the reduction
    /// order is fixed and rounding grows logarithmically.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.grid != other.grid {
            return Err(QuantumError::GridMismatch);
        }
        let a = self
            .amplitudes
            .as_slice()
            .expect("amplitudes are standard layout");
        let b = other
            .amplitudes
            .as_slice()
            .expect("amplitudes are standard layout");
        Ok(pairwise_map_sum(a.len(), &|i| a[i].conj() * b[i]) * self.grid.cell_volume())
    }

    pub fn norm_sq(&self) -> f64 {
        let a = self
            .amplitudes
            .as_slice()
            .expect("amplitudes are standard layout");
        pairwise_map_sum(a.len(), &|i| Complex64::new(a[i].norm_sqr(), 0.0)).re
            * self.grid.cell_volume()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Rescales to unit norm.
    pub fn normalized(mut self) -> Self {
        let n = self.norm();
        if n > 0.0 {
            let s = Complex64::new(1.0 / n, 0.0);
            self.amplitudes.mapv_inplace(|c| c * s);
        }
        self
    }

    pub fn scaled(mut self, factor: Complex64) -> Self {
        self.amplitudes.mapv_inplace(|c| c * factor);
        self
    }

    /// self + factor · other.
    pub fn add_scaled(mut self, factor: Complex64, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(QuantumError::GridMismatch);
        }
        for (a, b) in self.amplitudes.iter_mut().zip(other.amplitudes.iter()) {
            *a += factor * b;
        }
        Ok(self)
    }

    /// ‖self − other‖.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        if self.grid != other.grid {
            return Err(QuantumError::GridMismatch);
        }
        let a = self.amplitudes.as_slice().expect("standard layout");
        let b = other.amplitudes.as_slice().expect("standard layout");
        let s = pairwise_map_sum(a.len(), &|i| {
            let d = a[i] - b[i];
            Complex64::new(d.norm_sqr(), 0.0)
        });
        Ok((s.re * self.grid.cell_volume()).sqrt())
    }

    /// ⟨x_axis⟩.
    pub fn position_expectation(&self, axis: usize) -> f64 {
        let coords = self.grid.coordinates(axis);
        let mut num = 0.0;
        let mut den = 0.0;
        for (ix, c) in self.amplitudes.indexed_iter() {
            let w = c.norm_sqr();
            num += coords[ix[axis]] * w;
            den += w;
        }
        num / den
    }

    /// ⟨−iħ ∂_axis⟩ evaluated spectrally.
    pub fn momentum_expectation(&self, axis: usize) -> f64 {
        let mut hat = self.amplitudes.clone();
        fft::forward_axis(&mut hat, axis);
        let k = self.grid.wavenumbers(axis);
        let mut num = 0.0;
        let mut den = 0.0;
        for (ix, c) in hat.indexed_iter() {
            let w = c.norm_sqr();
            num += k[ix[axis]] * w;
            den += w;
        }
        self.grid.hbar() * num / den
    }

    /// |ψ|² marginal along one axis (all other axes integrated out),
    /// returned as (coordinate, density) pairs.
    pub fn marginal_density(&self, axis: usize) -> Vec<(f64, f64)> {
        let coords = self.grid.coordinates(axis);
        let mut density = vec![0.0; coords.len()];
        for (ix, c) in self.amplitudes.indexed_iter() {
            density[ix[axis]] += c.norm_sqr();
        }
        let cell = self.grid.cell_volume() / self.grid.axis(axis).spacing();
        coords
            .into_iter()
            .zip(density.into_iter().map(|d| d * cell))
            .collect()
    }

    /// Relative norm² in the outermost band of cells of any axis.
    pub fn boundary_band_weight(&self) -> f64 {
        let shape = self.grid.shape();
        let bands: Vec<usize> = shape.iter().map(|&n| (n / BAND_DIVISOR).max(2)).collect();
        let mut band_weight = 0.0;
        let mut total = 0.0;
        for (ix, c) in self.amplitudes.indexed_iter() {
            let w = c.norm_sqr();
            total += w;
            let near_edge = (0..shape.len())
                .any(|ax| ix[ax] < bands[ax] || ix[ax] >= shape[ax] - bands[ax]);
            if near_edge {
                band_weight += w;
            }
        }
        if total > 0.0 {
            band_weight / total
        } else {
            0.0
        }
    }

    pub(crate) fn ensure_contained(&self) -> Result<()> {
        let weight = self.boundary_band_weight();
        if weight > BOUNDARY_LEAK_TOL {
            return Err(QuantumError::BoundaryLeak {
                weight,
                limit: BOUNDARY_LEAK_TOL,
            });
        }
        Ok(())
    }
}

/// Normalized product Gaussian with per-axis centers, widths, and physical
/// momenta: each axis contributes exp(−(x−c)²/4σ² + i p(x−c)/ħ), so σ is
/// the position standard deviation and ⟨−iħ∂⟩ = p.
///
/// Preconditions: widths positive; every center at least 6 widths from both
/// box edges; the momentum content |p|/ħ + 3/σ must stay under the Nyquist
/// wavenumber with a 1/16 margin.
pub fn make_gaussian(
    grid: &GridSpec,
    masses: &[f64],
    centers: &[f64],
    widths: &[f64],
    momenta: &[f64],
) -> Result<Wavefunction> {
    let rank = grid.rank();
    if centers.len() != rank || widths.len() != rank || momenta.len() != rank {
        return Err(QuantumError::AxisCountMismatch {
            particles: grid.particles(),
            dim: grid.dim(),
            expected: rank,
            got: centers.len().min(widths.len()).min(momenta.len()),
        });
    }
    let hbar = grid.hbar();
    for axis in 0..rank {
        let (c, w, p) = (centers[axis], widths[axis], momenta[axis]);
        if !(w > 0.0) || !w.is_finite() {
            return Err(QuantumError::Containment {
                axis,
                detail: "width must be positive",
            });
        }
        let lo = grid.axis(axis).origin;
        let hi = lo + grid.axis(axis).length;
        if c - 6.0 * w < lo || c + 6.0 * w > hi {
            return Err(QuantumError::Containment {
                axis,
                detail: "center closer than 6 widths to a box edge",
            });
        }
        let k_nyquist = std::f64::consts::PI / grid.axis(axis).spacing();
        if p.abs() / hbar + 3.0 / w > k_nyquist * (15.0 / 16.0) {
            return Err(QuantumError::Containment {
                axis,
                detail: "momentum content too close to the Nyquist wavenumber",
            });
        }
    }
    let wf = Wavefunction::from_fn(grid.clone(), masses.to_vec(), |coords| {
        let mut log_mag = 0.0;
        let mut phase = 0.0;
        for axis in 0..rank {
            let u = coords[axis] - centers[axis];
            log_mag -= u * u / (4.0 * widths[axis] * widths[axis]);
            phase += momenta[axis] * u / hbar;
        }
        Complex64::from_polar(log_mag.exp(), phase)
    })?;
    Ok(wf.normalized())
}

/// Pairwise (cascade) summation of `f(0..len)`; deterministic and accurate.
fn pairwise_map_sum(len: usize, f: &dyn Fn(usize) -> Complex64) -> Complex64 {
    fn go(lo: usize, hi: usize, f: &dyn Fn(usize) -> Complex64) -> Complex64 {
        if hi - lo <= 64 {
            let mut s = Complex64::new(0.0, 0.0);
            for i in lo..hi {
                s += f(i);
            }
            s
        } else {
            let mid = lo + (hi - lo) / 2;
            go(lo, mid, f) + go(mid, hi, f)
        }
    }
    go(0, len, f)
}
