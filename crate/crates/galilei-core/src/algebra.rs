//! Group-level probes of the extended Galilei Lie algebra.
//!
//! The eleven-dimensional basis is {D_a, V_a, A_a, B, Z}: rotations, boosts,
//! translations, time translation, and the central direction. The nonzero
//! brackets are
//!
//! ```text
//! [D_a, D_b] = ε_abc D_c      [D_a, V_b] = ε_abc V_c     [D_a, A_b] = ε_abc A_c
//! [V_a, A_b] = δ_ab Z         [V_a, B]   = A_a
//! ```
//!
//! `probe_bracket` estimates a bracket without any symbolic machinery: it
//! forms the group commutator ḡ_X(ε) ḡ_Y(ε) ḡ_X(ε)⁻¹ ḡ_Y(ε)⁻¹ in 𝒢̄, reads
//! off the first-order coordinates of the result, and divides by ε². The
//! estimate carries an O(ε) bias, which a two-point Richardson step removes
//! to O(ε²).

use crate::extended::ExtendedElement;
use crate::group::{GalileiElement, GroupError};
use crate::rotation::Rotation;

/// Basis label for the extended algebra (3-dimensional space).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// Rotation generator D_a, axis index 0..3.
    Rotation(usize),
    /// Boost generator V_a.
    Boost(usize),
    /// Translation generator A_a.
    Translation(usize),
    /// Time translation generator B.
    Time,
    /// Central generator Z.
    Central,
}

impl BasisLabel {
    /// All eleven basis labels in a fixed order.
    pub fn all() -> [BasisLabel; 11] {
        [
            BasisLabel::Rotation(0),
            BasisLabel::Rotation(1),
            BasisLabel::Rotation(2),
            BasisLabel::Boost(0),
            BasisLabel::Boost(1),
            BasisLabel::Boost(2),
            BasisLabel::Translation(0),
            BasisLabel::Translation(1),
            BasisLabel::Translation(2),
            BasisLabel::Time,
            BasisLabel::Central,
        ]
    }
}

/// Coordinates of an algebra element in the {D, V, A, B, Z} basis.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct AlgebraCoords {
    pub rotation: [f64; 3],
    pub boost: [f64; 3],
    pub translation: [f64; 3],
    pub time: f64,
    pub central: f64,
}

impl AlgebraCoords {
    pub fn basis(label: BasisLabel) -> Self {
        let mut c = Self::default();
        match label {
            BasisLabel::Rotation(a) => c.rotation[a] = 1.0,
            BasisLabel::Boost(a) => c.boost[a] = 1.0,
            BasisLabel::Translation(a) => c.translation[a] = 1.0,
            BasisLabel::Time => c.time = 1.0,
            BasisLabel::Central => c.central = 1.0,
        }
        c
    }

    /// Largest coordinate magnitude.
    pub fn max_abs(&self) -> f64 {
        let mut m: f64 = self.time.abs().max(self.central.abs());
        for a in 0..3 {
            m = m
                .max(self.rotation[a].abs())
                .max(self.boost[a].abs())
                .max(self.translation[a].abs());
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for a in 0..3 {
            out.rotation[a] = self.rotation[a] - other.rotation[a];
            out.boost[a] = self.boost[a] - other.boost[a];
            out.translation[a] = self.translation[a] - other.translation[a];
        }
        out.time = self.time - other.time;
        out.central = self.central - other.central;
        out
    }

    pub fn scaled(&self, s: f64) -> Self {
        self.combine(s, &Self::default(), 0.0)
    }

    fn combine(&self, cs: f64, other: &Self, co: f64) -> Self {
        let mut out = Self::default();
        for a in 0..3 {
            out.rotation[a] = cs * self.rotation[a] + co * other.rotation[a];
            out.boost[a] = cs * self.boost[a] + co * other.boost[a];
            out.translation[a] = cs * self.translation[a] + co * other.translation[a];
        }
        out.time = cs * self.time + co * other.time;
        out.central = cs * self.central + co * other.central;
        out
    }
}

fn levi_civita(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// Exact structure constants: the coordinates of [X, Y].
pub fn bracket(x: BasisLabel, y: BasisLabel) -> AlgebraCoords {
    use BasisLabel::*;
    let mut out = AlgebraCoords::default();
    match (x, y) {
        (Rotation(a), Rotation(b)) => {
            for c in 0..3 {
                out.rotation[c] += levi_civita(a, b, c);
            }
        }
        (Rotation(a), Boost(b)) => {
            for c in 0..3 {
                out.boost[c] += levi_civita(a, b, c);
            }
        }
        (Boost(b), Rotation(a)) => {
            for c in 0..3 {
                out.boost[c] -= levi_civita(a, b, c);
            }
        }
        (Rotation(a), Translation(b)) => {
            for c in 0..3 {
                out.translation[c] += levi_civita(a, b, c);
            }
        }
        (Translation(b), Rotation(a)) => {
            for c in 0..3 {
                out.translation[c] -= levi_civita(a, b, c);
            }
        }
        (Boost(a), Translation(b)) => {
            if a == b {
                out.central = 1.0;
            }
        }
        (Translation(b), Boost(a)) => {
            if a == b {
                out.central = -1.0;
            }
        }
        (Boost(a), Time) => out.translation[a] = 1.0,
        (Time, Boost(a)) => out.translation[a] = -1.0,
        _ => {}
    }
    out
}

/// The one-parameter subgroup element exp(t · X) in 𝒢̄, exact for each basis
/// direction.
pub fn one_parameter(label: BasisLabel, t: f64) -> ExtendedElement<3> {
    let mut g = GalileiElement::identity();
    let mut theta = 0.0;
    match label {
        BasisLabel::Rotation(a) => {
            let mut w = [0.0; 3];
            w[a] = t;
            g.rotation = Rotation::from_axis_angle(&w);
        }
        BasisLabel::Boost(a) => g.boost[a] = t,
        BasisLabel::Translation(a) => g.translation[a] = t,
        BasisLabel::Time => g.time_shift = t,
        BasisLabel::Central => theta = t,
    }
    ExtendedElement { theta, g }
}

/// First-order coordinate reading of an element near the identity.
///
/// For group elements whose coordinates are O(ε²) — the commutators formed
/// by the probe — this equals the exponential coordinates up to O(ε³).
pub fn log_coordinates(e: &ExtendedElement<3>) -> AlgebraCoords {
    AlgebraCoords {
        rotation: e.g.rotation.axis_angle(),
        boost: e.g.boost,
        translation: e.g.translation,
        time: e.g.time_shift,
        central: e.theta,
    }
}

/// Single-ε structure-constant estimate from the group commutator
/// ḡ_X(ε) ḡ_Y(ε) ḡ_X(ε)⁻¹ ḡ_Y(ε)⁻¹. Error is O(ε).
pub fn probe_bracket(x: BasisLabel, y: BasisLabel, eps: f64) -> Result<AlgebraCoords, GroupError> {
    if !(eps > 0.0 && eps <= 1e-2) {
        return Err(GroupError::InvalidProbeStep { eps });
    }
    let gx = one_parameter(x, eps);
    let gy = one_parameter(y, eps);
    let commutator = gx
        .compose(&gy)
        .compose(&gx.inverse())
        .compose(&gy.inverse());
    Ok(log_coordinates(&commutator).scaled(1.0 / (eps * eps)))
}

/// Richardson-extrapolated estimate from ε and ε/2; the O(ε) bias cancels,
/// leaving O(ε²).
pub fn probe_bracket_extrapolated(
    x: BasisLabel,
    y: BasisLabel,
    eps: f64,
) -> Result<AlgebraCoords, GroupError> {
    let coarse = probe_bracket(x, y, eps)?;
    let fine = probe_bracket(x, y, eps / 2.0)?;
    Ok(fine.combine(2.0, &coarse, -1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boost_translation_bracket_is_central() {
        let est = probe_bracket(BasisLabel::Boost(0), BasisLabel::Translation(0), 1e-3).unwrap();
        assert!((est.central - 1.0).abs() < 1e-8, "central = {}", est.central);
        assert!(est.sub(&bracket(BasisLabel::Boost(0), BasisLabel::Translation(0)))
            .max_abs()
            < 1e-2);
    }

    #[test]
    fn translations_commute() {
        let est =
            probe_bracket(BasisLabel::Translation(0), BasisLabel::Translation(1), 1e-3).unwrap();
        assert!(est.max_abs() < 1e-9);
    }

    #[test]
    fn boost_time_bracket_is_translation() {
        let est = probe_bracket(BasisLabel::Boost(0), BasisLabel::Time, 1e-3).unwrap();
        assert!((est.translation[0] - 1.0).abs() < 1e-2);
        let ext = probe_bracket_extrapolated(BasisLabel::Boost(0), BasisLabel::Time, 1e-3).unwrap();
        assert!((ext.translation[0] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn rotation_brackets_close() {
        let est = probe_bracket_extrapolated(BasisLabel::Rotation(0), BasisLabel::Rotation(1), 1e-3)
            .unwrap();
        let exact = bracket(BasisLabel::Rotation(0), BasisLabel::Rotation(1));
        assert!(est.sub(&exact).max_abs() < 1e-6);
        assert!((exact.rotation[2] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bracket_table_is_antisymmetric() {
        for x in BasisLabel::all() {
            for y in BasisLabel::all() {
                let xy = bracket(x, y);
                let yx = bracket(y, x);
                let mut sum = xy;
                sum = sum.combine(1.0, &yx, 1.0);
                assert!(sum.max_abs() == 0.0, "bracket not antisymmetric: {x:?},{y:?}");
            }
        }
    }

    #[test]
    fn probe_rejects_bad_eps() {
        assert!(probe_bracket(BasisLabel::Time, BasisLabel::Central, 0.5).is_err());
        assert!(probe_bracket(BasisLabel::Time, BasisLabel::Central, -1e-3).is_err());
    }
}
