//! The ℝ-central extension 𝒢̄ of the Galilei group.
//!
//! An element ḡ = (θ, g) multiplies as ḡ′ḡ = (θ′ + θ + ξ(g′, g), g′g); the
//! cocycle identity makes this associative. 𝒢̄ acts on the extended
//! configuration space (positions, ζᵢ, t), where each ζᵢ is the coordinate
//! conjugate to particle i's mass:
//!
//! ```text
//! ḡ (x⃗ᵢ, ζᵢ, t) = (Rx⃗ᵢ + v⃗t + a⃗,  ζᵢ − (θ + v⃗·Rx⃗ᵢ + ½v⃗²t),  t + b)
//! ```

use crate::cocycle::cocycle;
use crate::group::{GalileiElement, GroupError};
use crate::linalg;
use alloc::vec::Vec;
#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

/// An extended group element (θ, g).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtendedElement<const D: usize> {
    pub theta: f64,
    pub g: GalileiElement<D>,
}

impl<const D: usize> Default for ExtendedElement<D> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<const D: usize> ExtendedElement<D> {
    pub fn identity() -> Self {
        Self {
            theta: 0.0,
            g: GalileiElement::identity(),
        }
    }

    pub fn new(theta: f64, g: GalileiElement<D>) -> Result<Self, GroupError> {
        if !theta.is_finite() {
            return Err(GroupError::NonFinite);
        }
        Ok(Self { theta, g })
    }

    /// A pure central element (θ, e).
    pub fn central(theta: f64) -> Self {
        Self {
            theta,
            g: GalileiElement::identity(),
        }
    }

    /// Embeds g as (0, g).
    pub fn from_galilei(g: GalileiElement<D>) -> Self {
        Self { theta: 0.0, g }
    }

    /// Twisted product ḡ′ḡ = (θ′ + θ + ξ(g′, g), g′g).
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            theta: self.theta + other.theta + cocycle(&self.g, &other.g),
            g: self.g.compose(&other.g),
        }
    }

    /// (θ, g)⁻¹ = (−θ + v⃗·a⃗ − ½v⃗²b, g⁻¹).
    pub fn inverse(&self) -> Self {
        let g = &self.g;
        let theta = -self.theta + linalg::dot(&g.boost, &g.translation)
            - 0.5 * linalg::norm_sq(&g.boost) * g.time_shift;
        Self {
            theta,
            g: g.inverse(),
        }
    }

    /// Action on the extended configuration space; positions and time
    /// transform as under g, and ζᵢ ↦ ζᵢ − (θ + v⃗·Rx⃗ᵢ + ½v⃗²t) with x⃗ᵢ and
    /// t the untransformed coordinates.
    pub fn act_extended(&self, config: &ExtendedConfig<D>) -> ExtendedConfig<D> {
        let g = &self.g;
        let half_v2_t = 0.5 * linalg::norm_sq(&g.boost) * config.t;
        let drift = linalg::scale(&g.boost, config.t);
        let mut positions = Vec::with_capacity(config.positions.len());
        let mut zetas = Vec::with_capacity(config.zetas.len());
        for (x, zeta) in config.positions.iter().zip(&config.zetas) {
            let rx = g.rotation.apply(x);
            positions.push(linalg::add(&linalg::add(&rx, &g.translation), &drift));
            zetas.push(zeta - (self.theta + linalg::dot(&g.boost, &rx) + half_v2_t));
        }
        ExtendedConfig {
            positions,
            zetas,
            t: config.t + g.time_shift,
        }
    }
}

/// Positions, mass-conjugate coordinates ζᵢ, and a time coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedConfig<const D: usize> {
    pub positions: Vec<[f64; D]>,
    pub zetas: Vec<f64>,
    pub t: f64,
}

impl<const D: usize> ExtendedConfig<D> {
    pub fn new(positions: Vec<[f64; D]>, zetas: Vec<f64>, t: f64) -> Result<Self, GroupError> {
        if positions.is_empty() {
            return Err(GroupError::EmptyConfiguration);
        }
        if positions.len() != zetas.len() {
            return Err(GroupError::LengthMismatch {
                positions: positions.len(),
                zetas: zetas.len(),
            });
        }
        if positions.iter().any(|x| !linalg::all_finite(x))
            || zetas.iter().any(|z| !z.is_finite())
            || !t.is_finite()
        {
            return Err(GroupError::NonFinite);
        }
        Ok(Self { positions, zetas, t })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    type E3 = ExtendedElement<3>;
    type G3 = GalileiElement<3>;

    #[test]
    fn identity_composes_trivially() {
        let g = E3::new(
            2.0,
            G3 {
                boost: [1.0, 0.0, -1.0],
                translation: [0.5, 2.0, 0.0],
                time_shift: 1.5,
                ..G3::identity()
            },
        )
        .unwrap();
        assert_eq!(E3::identity().compose(&g), g);
    }

    #[test]
    fn boost_translation_picks_up_cocycle() {
        // (0, boost v′) · (0, translation a) = (v′·a, (v′, a)).
        let vp = E3::from_galilei(G3::boost([1.0, 0.0, 0.0]));
        let a = E3::from_galilei(G3::translation([2.0, 0.0, 0.0]));
        let c = vp.compose(&a);
        assert_eq!(c.theta, 2.0);
        assert_eq!(c.g.boost, [1.0, 0.0, 0.0]);
        assert_eq!(c.g.translation, [2.0, 0.0, 0.0]);
    }

    #[test]
    fn inverse_theta_worked_example() {
        // θ = 1, v = (1,0,0), a = (2,0,0), b = 0: θ_inv = −1 + 2 = 1.
        let g = E3::new(
            1.0,
            G3 {
                boost: [1.0, 0.0, 0.0],
                translation: [2.0, 0.0, 0.0],
                ..G3::identity()
            },
        )
        .unwrap();
        assert_eq!(g.inverse().theta, 1.0);
        let e = g.inverse().compose(&g);
        assert!(e.theta.abs() < 1e-15);
    }

    #[test]
    fn central_shift_moves_zetas_only() {
        let config = ExtendedConfig::new(vec![[1.0, 2.0, 3.0]], vec![5.0], 0.7).unwrap();
        let out = E3::central(2.5).act_extended(&config);
        assert_eq!(out.positions, config.positions);
        assert_eq!(out.t, config.t);
        assert_eq!(out.zetas[0], 2.5);
    }
}
