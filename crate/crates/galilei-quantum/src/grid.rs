//! Uniform periodic grids over n-particle configuration space.
//!
//! The configuration space of n particles in d dimensions is flattened into
//! n·d grid axes; axis `i*d + a` carries component a of particle i. Spectral
//! derivatives assume periodicity, so every state handled here must be far
//! from the box boundary (see the containment rules in [`crate::wavefunction`]).

use crate::error::{QuantumError, Result};

/// Desk-scale capacity cap on total grid points.
pub const CAPACITY_LIMIT: usize = 1 << 22;

/// One periodic grid axis: `points` samples covering `[origin, origin + length)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Axis {
    pub points: usize,
    pub length: f64,
    pub origin: f64,
}

impl Axis {
    pub fn spacing(&self) -> f64 {
        self.length / self.points as f64
    }
}

/// Grid layout plus ħ; the immutable geometry shared by wavefunctions.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    particles: usize,
    dim: usize,
    axes: Vec<Axis>,
    hbar: f64,
}

impl GridSpec {
    /// Validates the layout. Supported configurations are (n=1, d∈{1,2,3})
    /// and (n=2, d=1); anything larger is rejected with a capacity error.
    pub fn new(particles: usize, dim: usize, axes: Vec<Axis>, hbar: f64) -> Result<Self> {
        let supported = matches!((particles, dim), (1, 1) | (1, 2) | (1, 3) | (2, 1));
        if !supported {
            return Err(QuantumError::UnsupportedLayout { particles, dim });
        }
        let expected = particles * dim;
        if axes.len() != expected {
            return Err(QuantumError::AxisCountMismatch {
                particles,
                dim,
                expected,
                got: axes.len(),
            });
        }
        let mut total: usize = 1;
        for axis in &axes {
            if axis.points < 16 || !axis.points.is_power_of_two() {
                return Err(QuantumError::BadAxisPoints { points: axis.points });
            }
            if !(axis.length > 0.0) || !axis.length.is_finite() || !axis.origin.is_finite() {
                return Err(QuantumError::BadAxisLength { length: axis.length });
            }
            total = total.saturating_mul(axis.points);
        }
        if total > CAPACITY_LIMIT {
            return Err(QuantumError::CapacityExceeded {
                points: total,
                limit: CAPACITY_LIMIT,
            });
        }
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(QuantumError::BadHbar { hbar });
        }
        Ok(Self {
            particles,
            dim,
            axes,
            hbar,
        })
    }

    /// Box-centered grid with the same points and length on every axis.
    pub fn centered(particles: usize, dim: usize, points: usize, length: f64, hbar: f64) -> Result<Self> {
        let axes = (0..particles * dim)
            .map(|_| Axis {
                points,
                length,
                origin: -0.5 * length,
            })
            .collect();
        Self::new(particles, dim, axes, hbar)
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn rank(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn axis(&self, index: usize) -> &Axis {
        &self.axes[index]
    }

    /// Flat axis index of component `component` of particle `particle`.
    pub fn axis_of(&self, particle: usize, component: usize) -> usize {
        debug_assert!(particle < self.particles && component < self.dim);
        particle * self.dim + component
    }

    pub fn particle_of_axis(&self, axis: usize) -> usize {
        axis / self.dim
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.points).collect()
    }

    pub fn total_points(&self) -> usize {
        self.axes.iter().map(|a| a.points).product()
    }

    pub fn cell_volume(&self) -> f64 {
        self.axes.iter().map(Axis::spacing).product()
    }

    pub fn coordinate(&self, axis: usize, index: usize) -> f64 {
        let a = &self.axes[axis];
        a.origin + index as f64 * a.spacing()
    }

    pub fn coordinates(&self, axis: usize) -> Vec<f64> {
        (0..self.axes[axis].points)
            .map(|i| self.coordinate(axis, i))
            .collect()
    }

    /// Angular wavenumbers in FFT bin order: k_j = 2πj/L for j < N/2 and
    /// 2π(j − N)/L beyond.
    pub fn wavenumbers(&self, axis: usize) -> Vec<f64> {
        let a = &self.axes[axis];
        let n = a.points;
        let step = 2.0 * std::f64::consts::PI / a.length;
        (0..n)
            .map(|j| {
                let f = if j < n / 2 {
                    j as f64
                } else {
                    j as f64 - n as f64
                };
                f * step
            })
            .collect()
    }

    /// Validates a mass list against this grid (one nonzero finite mass per
    /// particle).
    pub fn check_masses(&self, masses: &[f64]) -> Result<()> {
        if masses.len() != self.particles {
            return Err(QuantumError::MassCountMismatch {
                expected: self.particles,
                got: masses.len(),
            });
        }
        for (index, &value) in masses.iter().enumerate() {
            if !value.is_finite() || value == 0.0 {
                return Err(QuantumError::BadMass { index, value });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_validation() {
        assert!(GridSpec::centered(1, 1, 64, 10.0, 1.0).is_ok());
        assert!(GridSpec::centered(2, 1, 64, 10.0, 1.0).is_ok());
        assert!(GridSpec::centered(1, 3, 32, 10.0, 1.0).is_ok());
        assert!(matches!(
            GridSpec::centered(2, 2, 32, 10.0, 1.0),
            Err(QuantumError::UnsupportedLayout { .. })
        ));
        assert!(matches!(
            GridSpec::centered(1, 1, 48, 10.0, 1.0),
            Err(QuantumError::BadAxisPoints { .. })
        ));
        assert!(matches!(
            GridSpec::centered(1, 1, 8, 10.0, 1.0),
            Err(QuantumError::BadAxisPoints { .. })
        ));
        assert!(matches!(
            GridSpec::centered(1, 3, 256, 10.0, 1.0),
            Err(QuantumError::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn wavenumber_convention() {
        let g = GridSpec::centered(1, 1, 16, 16.0, 1.0).unwrap();
        let k = g.wavenumbers(0);
        let step = 2.0 * std::f64::consts::PI / 16.0;
        assert!((k[0] - 0.0).abs() < 1e-15);
        assert!((k[1] - step).abs() < 1e-15);
        assert!((k[8] + 8.0 * step).abs() < 1e-15);
        assert!((k[15] + step).abs() < 1e-15);
    }

    #[test]
    fn coordinates_are_centered() {
        let g = GridSpec::centered(1, 1, 16, 32.0, 1.0).unwrap();
        assert_eq!(g.coordinate(0, 0), -16.0);
        assert_eq!(g.coordinate(0, 8), 0.0);
        assert_eq!(g.cell_volume(), 2.0);
    }
}
