//! The proper Galilei group 𝒢 in d dimensions and its action on spacetime.
//!
//! An element g = (R, v, a, b) carries a rotation R, a boost velocity v, a
//! space translation a, and a time translation b. The composition law is
//!
//! ```text
//! g′g = (R′R, v′ + R′v, a′ + R′a + v′b, b′ + b)
//! ```
//!
//! and the inverse is g⁻¹ = (R⁻¹, −R⁻¹v, −R⁻¹(a − vb), −b).

use crate::linalg;
use crate::rotation::Rotation;
use alloc::vec::Vec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupError {
    #[error("matrix is not orthogonal within tolerance (defect {defect:.3e})")]
    NotOrthogonal { defect: f64 },
    #[error("matrix is not a proper rotation (det {det:.6})")]
    NotProper { det: f64 },
    #[error("quaternion is not unit (norm {norm:.6})")]
    QuaternionNotUnit { norm: f64 },
    #[error("non-finite component")]
    NonFinite,
    #[error("rotations are only supported for dimensions 1..=3, got {dim}")]
    UnsupportedDimension { dim: usize },
    #[error("configuration must contain at least one particle")]
    EmptyConfiguration,
    #[error("positions ({positions}) and zetas ({zetas}) must have equal length")]
    LengthMismatch { positions: usize, zetas: usize },
    #[error("element lies outside the translation–boost subgroup (R = I, b = 0 required)")]
    NotInAbelianSubgroup,
    #[error("probe step must lie in (0, 1e-2], got {eps}")]
    InvalidProbeStep { eps: f64 },
}

/// A Galilei group element (R, v, a, b).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GalileiElement<const D: usize> {
    pub rotation: Rotation<D>,
    pub boost: [f64; D],
    pub translation: [f64; D],
    pub time_shift: f64,
}

impl<const D: usize> Default for GalileiElement<D> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<const D: usize> GalileiElement<D> {
    pub fn identity() -> Self {
        Self {
            rotation: Rotation::identity(),
            boost: [0.0; D],
            translation: [0.0; D],
            time_shift: 0.0,
        }
    }

    pub fn new(
        rotation: Rotation<D>,
        boost: [f64; D],
        translation: [f64; D],
        time_shift: f64,
    ) -> Result<Self, GroupError> {
        if !linalg::all_finite(&boost) || !linalg::all_finite(&translation) || !time_shift.is_finite()
        {
            return Err(GroupError::NonFinite);
        }
        Ok(Self {
            rotation,
            boost,
            translation,
            time_shift,
        })
    }

    pub fn boost(v: [f64; D]) -> Self {
        Self {
            boost: v,
            ..Self::identity()
        }
    }

    pub fn translation(a: [f64; D]) -> Self {
        Self {
            translation: a,
            ..Self::identity()
        }
    }

    pub fn time_shift(b: f64) -> Self {
        Self {
            time_shift: b,
            ..Self::identity()
        }
    }

    pub fn rotation(r: Rotation<D>) -> Self {
        Self {
            rotation: r,
            ..Self::identity()
        }
    }

    /// Group product `self · g` (`g` acts first).
    pub fn compose(&self, g: &Self) -> Self {
        let rotation = self.rotation.compose(&g.rotation);
        let boost = linalg::add(&self.boost, &self.rotation.apply(&g.boost));
        let translation = linalg::add(
            &linalg::add(&self.translation, &self.rotation.apply(&g.translation)),
            &linalg::scale(&self.boost, g.time_shift),
        );
        Self {
            rotation,
            boost,
            translation,
            time_shift: self.time_shift + g.time_shift,
        }
    }

    pub fn inverse(&self) -> Self {
        let rotation = self.rotation.inverse();
        let boost = linalg::neg(&rotation.apply(&self.boost));
        let shifted = linalg::sub(
            &self.translation,
            &linalg::scale(&self.boost, self.time_shift),
        );
        let translation = linalg::neg(&rotation.apply(&shifted));
        Self {
            rotation,
            boost,
            translation,
            time_shift: -self.time_shift,
        }
    }

    /// True when the element lies in the abelian translation–boost subgroup
    /// (trivial rotation, zero time shift) within `tol`.
    pub fn is_translation_boost(&self, tol: f64) -> bool {
        self.rotation.is_identity(tol) && self.time_shift.abs() <= tol
    }

    /// Standard spacetime action: xᵢ ↦ Rxᵢ + a + vt, t ↦ t + b.
    pub fn act_spacetime(&self, config: &SpacetimeConfig<D>) -> SpacetimeConfig<D> {
        let drift = linalg::scale(&self.boost, config.t);
        let positions = config
            .positions
            .iter()
            .map(|x| linalg::add(&linalg::add(&self.rotation.apply(x), &self.translation), &drift))
            .collect();
        SpacetimeConfig {
            positions,
            t: config.t + self.time_shift,
        }
    }
}

/// Particle positions together with a time coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct SpacetimeConfig<const D: usize> {
    pub positions: Vec<[f64; D]>,
    pub t: f64,
}

impl<const D: usize> SpacetimeConfig<D> {
    pub fn new(positions: Vec<[f64; D]>, t: f64) -> Result<Self, GroupError> {
        if positions.is_empty() {
            return Err(GroupError::EmptyConfiguration);
        }
        if positions.iter().any(|x| !linalg::all_finite(x)) || !t.is_finite() {
            return Err(GroupError::NonFinite);
        }
        Ok(Self { positions, t })
    }
}
