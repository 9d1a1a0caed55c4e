//! The multiplier cocycle ξ on 𝒢 and its coboundary calculus.
//!
//! ξ(g′, g) = v⃗′ · R′ a⃗ + ½ v⃗′² b, built from the left factor's boost and
//! rotation and the right factor's translation and time shift. It satisfies
//! the 2-cocycle identity δξ = 0, and redefining the phase convention shifts
//! it by a coboundary, ξ ↦ ξ − δ(g′g) + δ(g′) + δ(g). On the abelian
//! translation–boost subgroup the antisymmetric part v⃗′·a⃗ − v⃗·a⃗′ survives
//! every such shift, which is the obstruction that forces the central
//! extension.

use crate::group::{GalileiElement, GroupError};
use crate::linalg;

/// ξ(g′, g) = v⃗′ · R′ a⃗ + ½ v⃗′² b.
pub fn cocycle<const D: usize>(gp: &GalileiElement<D>, g: &GalileiElement<D>) -> f64 {
    linalg::dot(&gp.boost, &gp.rotation.apply(&g.translation))
        + 0.5 * linalg::norm_sq(&gp.boost) * g.time_shift
}

/// δξ(g″, g′, g) = ξ(g″g′, g) − ξ(g″, g′g) + ξ(g″, g′) − ξ(g′, g).
///
/// Identically zero; the returned residual is pure floating-point noise and
/// is what the group-axioms suite fuzzes against.
pub fn cocycle_condition_residual<const D: usize>(
    gpp: &GalileiElement<D>,
    gp: &GalileiElement<D>,
    g: &GalileiElement<D>,
) -> f64 {
    cocycle(&gpp.compose(gp), g) - cocycle(gpp, &gp.compose(g)) + cocycle(gpp, gp) - cocycle(gp, g)
}

/// The coboundary-shifted cocycle ξ′(g′, g) = ξ(g′, g) − δ(g′g) + δ(g′) + δ(g)
/// for an arbitrary function δ of a group element.
pub fn shifted_cocycle<const D: usize, F>(
    delta: F,
    gp: &GalileiElement<D>,
    g: &GalileiElement<D>,
) -> f64
where
    F: Fn(&GalileiElement<D>) -> f64,
{
    cocycle(gp, g) - delta(&gp.compose(g)) + delta(gp) + delta(g)
}

/// Antisymmetrized (optionally coboundary-shifted) cocycle on the
/// translation–boost subgroup: ξ̃(g′, g) − ξ̃(g, g′).
///
/// Coboundary shifts enter symmetrically on an abelian subgroup, so the
/// result equals v⃗′·a⃗ − v⃗·a⃗′ no matter which `delta` is supplied. Inputs
/// with a nontrivial rotation or time shift are rejected.
pub fn antisymmetric_defect<const D: usize, F>(
    gp: &GalileiElement<D>,
    g: &GalileiElement<D>,
    delta: Option<F>,
) -> Result<f64, GroupError>
where
    F: Fn(&GalileiElement<D>) -> f64,
{
    const SUBGROUP_TOL: f64 = 1e-12;
    if !gp.is_translation_boost(SUBGROUP_TOL) || !g.is_translation_boost(SUBGROUP_TOL) {
        return Err(GroupError::NotInAbelianSubgroup);
    }
    Ok(match delta {
        Some(d) => shifted_cocycle(&d, gp, g) - shifted_cocycle(&d, g, gp),
        None => cocycle(gp, g) - cocycle(g, gp),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GalileiElement;

    type G3 = GalileiElement<3>;

    #[test]
    fn cocycle_vanishes_for_trivial_left_boost() {
        let g = G3 {
            boost: [1.0, 2.0, 3.0],
            translation: [4.0, 5.0, 6.0],
            time_shift: 7.0,
            ..G3::identity()
        };
        assert_eq!(cocycle(&G3::identity(), &g), 0.0);
    }

    #[test]
    fn cocycle_worked_example() {
        // v′ = (1,0,0), a = (2,0,0), b = 2: ξ = 2 + ½·1·2 = 3.
        let gp = G3::boost([1.0, 0.0, 0.0]);
        let g = G3 {
            translation: [2.0, 0.0, 0.0],
            time_shift: 2.0,
            ..G3::identity()
        };
        assert_eq!(cocycle(&gp, &g), 3.0);
    }

    #[test]
    fn subgroup_multiplier_is_boost_dot_translation() {
        let gp = G3 {
            boost: [0.5, -1.0, 2.0],
            translation: [1.0, 1.0, 1.0],
            ..G3::identity()
        };
        let g = G3 {
            boost: [3.0, 0.0, -1.0],
            translation: [2.0, -1.0, 4.0],
            ..G3::identity()
        };
        let expected = 0.5 * 2.0 + 1.0 + 2.0 * 4.0;
        assert!((cocycle(&gp, &g) - expected).abs() < 1e-15);
    }

    #[test]
    fn residual_zero_at_identity() {
        let e = G3::identity();
        assert_eq!(cocycle_condition_residual(&e, &e, &e), 0.0);
    }

    #[test]
    fn pure_translation_boost_triple_is_exact() {
        // On the subgroup with small integer data everything is exact in f64.
        let a = G3 {
            boost: [1.0, 0.0, 2.0],
            translation: [3.0, 1.0, 0.0],
            ..G3::identity()
        };
        let b = G3 {
            boost: [0.0, 2.0, 1.0],
            translation: [1.0, 1.0, 5.0],
            ..G3::identity()
        };
        let c = G3 {
            boost: [2.0, 2.0, 0.0],
            translation: [0.0, 4.0, 1.0],
            ..G3::identity()
        };
        assert_eq!(cocycle_condition_residual(&a, &b, &c), 0.0);
    }

    #[test]
    fn zero_delta_reduces_to_cocycle() {
        let gp = G3::boost([1.0, 2.0, 3.0]);
        let g = G3::translation([4.0, 5.0, 6.0]);
        assert_eq!(shifted_cocycle(|_| 0.0, &gp, &g), cocycle(&gp, &g));
    }

    #[test]
    fn antisymmetric_defect_examples() {
        let gp = G3::boost([1.0, 0.0, 0.0]);
        let g = G3::translation([2.0, 0.0, 0.0]);
        let d = antisymmetric_defect::<3, fn(&G3) -> f64>(&gp, &g, None).unwrap();
        assert_eq!(d, 2.0);
        let same = antisymmetric_defect::<3, fn(&G3) -> f64>(&gp, &gp, None).unwrap();
        assert_eq!(same, 0.0);
    }

    #[test]
    fn antisymmetric_defect_rejects_time_shift() {
        let gp = G3::time_shift(1.0);
        let g = G3::translation([1.0, 0.0, 0.0]);
        assert!(antisymmetric_defect::<3, fn(&G3) -> f64>(&gp, &g, None).is_err());
    }
}
