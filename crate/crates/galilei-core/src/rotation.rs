//! Proper rotations in d ∈ {1, 2, 3}, stored as explicit orthogonal matrices.
//!
//! d = 1 admits only the trivial rotation (reflections are excluded, matching
//! the proper Galilei group). For d = 3 a unit-quaternion constructor is
//! provided; the quaternion acts through its SO(3) projection, so `q` and
//! `-q` construct the same rotation.

use crate::group::GroupError;
use crate::linalg;
#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

/// Validation tolerance for orthogonality, unit determinant, and unit
/// quaternion norm.
pub const ROTATION_TOL: f64 = 1e-12;

/// A d×d proper orthogonal matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation<const D: usize> {
    matrix: [[f64; D]; D],
}

impl<const D: usize> Default for Rotation<D> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<const D: usize> Rotation<D> {
    pub fn identity() -> Self {
        let mut m = [[0.0; D]; D];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { matrix: m }
    }

    /// Validates orthogonality (‖RᵀR − I‖_F ≤ 1e-12), det R = +1, and
    /// finiteness. Dimensions outside 1..=3 are rejected.
    pub fn from_matrix(matrix: [[f64; D]; D]) -> Result<Self, GroupError> {
        if !(1..=3).contains(&D) {
            return Err(GroupError::UnsupportedDimension { dim: D });
        }
        if !matrix.iter().all(linalg::all_finite) {
            return Err(GroupError::NonFinite);
        }
        let defect = linalg::orthogonality_defect(&matrix);
        if defect > ROTATION_TOL {
            return Err(GroupError::NotOrthogonal { defect });
        }
        let det = linalg::det(&matrix);
        if (det - 1.0).abs() > ROTATION_TOL {
            return Err(GroupError::NotProper { det });
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &[[f64; D]; D] {
        &self.matrix
    }

    pub fn apply(&self, v: &[f64; D]) -> [f64; D] {
        linalg::matvec(&self.matrix, v)
    }

    /// Applies the inverse rotation without forming it: Rᵀv.
    pub fn apply_inverse(&self, v: &[f64; D]) -> [f64; D] {
        let mut out = [0.0; D];
        for j in 0..D {
            let mut s = 0.0;
            for i in 0..D {
                s += self.matrix[i][j] * v[i];
            }
            out[j] = s;
        }
        out
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            matrix: linalg::matmul(&self.matrix, &other.matrix),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            matrix: linalg::transpose(&self.matrix),
        }
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        let mut defect: f64 = 0.0;
        for i in 0..D {
            for j in 0..D {
                let target = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((self.matrix[i][j] - target).abs());
            }
        }
        defect <= tol
    }
}

impl Rotation<2> {
    pub fn from_angle(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            matrix: [[c, -s], [s, c]],
        }
    }

    /// Rotation angle in (−π, π].
    pub fn angle(&self) -> f64 {
        self.matrix[1][0].atan2(self.matrix[0][0])
    }
}

impl Rotation<3> {
    /// Rodrigues formula; a zero axis-angle vector yields the identity.
    pub fn from_axis_angle(w: &[f64; 3]) -> Self {
        let angle = linalg::norm_sq(w).sqrt();
        if angle == 0.0 {
            return Self::identity();
        }
        let k = linalg::scale(w, 1.0 / angle);
        let (s, c) = angle.sin_cos();
        let v = 1.0 - c;
        let (kx, ky, kz) = (k[0], k[1], k[2]);
        Self {
            matrix: [
                [c + kx * kx * v, kx * ky * v - kz * s, kx * kz * v + ky * s],
                [ky * kx * v + kz * s, c + ky * ky * v, ky * kz * v - kx * s],
                [kz * kx * v - ky * s, kz * ky * v + kx * s, c + kz * kz * v],
            ],
        }
    }

    /// Builds the SO(3) projection of a unit quaternion `[w, x, y, z]`.
    /// The quaternion norm must be 1 within 1e-12; `q` and `-q` project to
    /// the same rotation.
    pub fn from_unit_quaternion(q: [f64; 4]) -> Result<Self, GroupError> {
        if !q.iter().all(|x| x.is_finite()) {
            return Err(GroupError::NonFinite);
        }
        let norm = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
        if (norm - 1.0).abs() > ROTATION_TOL {
            return Err(GroupError::QuaternionNotUnit { norm });
        }
        let (w, x, y, z) = (q[0], q[1], q[2], q[3]);
        let matrix = [
            [
                1.0 - 2.0 * (y * y + z * z),
                2.0 * (x * y - w * z),
                2.0 * (x * z + w * y),
            ],
            [
                2.0 * (x * y + w * z),
                1.0 - 2.0 * (x * x + z * z),
                2.0 * (y * z - w * x),
            ],
            [
                2.0 * (x * z - w * y),
                2.0 * (y * z + w * x),
                1.0 - 2.0 * (x * x + y * y),
            ],
        ];
        Ok(Self { matrix })
    }

    /// Axis-angle vector (matrix logarithm). Accurate for |angle| < π/2,
    /// which covers the small commutator residuals the algebra probe reads.
    pub fn axis_angle(&self) -> [f64; 3] {
        let m = &self.matrix;
        let w = [
            0.5 * (m[2][1] - m[1][2]),
            0.5 * (m[0][2] - m[2][0]),
            0.5 * (m[1][0] - m[0][1]),
        ];
        let s = linalg::norm_sq(&w).sqrt();
        if s < 1e-300 {
            return [0.0; 3];
        }
        let angle = s.min(1.0).asin();
        linalg::scale(&w, angle / s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_valid() {
        let r = Rotation::<3>::identity();
        assert!(Rotation::from_matrix(*r.matrix()).is_ok());
    }

    #[test]
    fn d1_rejects_reflection() {
        assert!(matches!(
            Rotation::<1>::from_matrix([[-1.0]]),
            Err(GroupError::NotProper { .. })
        ));
    }

    #[test]
    fn quaternion_sign_ambiguity() {
        let q = [0.5f64.sqrt(), 0.0, 0.0, 0.5f64.sqrt()];
        let r1 = Rotation::from_unit_quaternion(q).unwrap();
        let r2 = Rotation::from_unit_quaternion(q.map(|x| -x)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((r1.matrix()[i][j] - r2.matrix()[i][j]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn quaternion_norm_checked() {
        assert!(matches!(
            Rotation::from_unit_quaternion([1.0, 1.0, 0.0, 0.0]),
            Err(GroupError::QuaternionNotUnit { .. })
        ));
    }

    #[test]
    fn axis_angle_round_trip() {
        let w = [0.3, -0.2, 0.11];
        let r = Rotation::from_axis_angle(&w);
        let back = r.axis_angle();
        for i in 0..3 {
            assert!((w[i] - back[i]).abs() < 1e-12, "{w:?} vs {back:?}");
        }
    }
}
