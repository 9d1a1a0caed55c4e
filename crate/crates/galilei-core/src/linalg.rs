//! Fixed-dimension vector/matrix helpers shared by the group modules.

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

pub(crate) fn dot<const D: usize>(a: &[f64; D], b: &[f64; D]) -> f64 {
    let mut s = 0.0;
    for i in 0..D {
        s += a[i] * b[i];
    }
    s
}

pub(crate) fn norm_sq<const D: usize>(a: &[f64; D]) -> f64 {
    dot(a, a)
}

pub(crate) fn add<const D: usize>(a: &[f64; D], b: &[f64; D]) -> [f64; D] {
    let mut out = [0.0; D];
    for i in 0..D {
        out[i] = a[i] + b[i];
    }
    out
}

pub(crate) fn sub<const D: usize>(a: &[f64; D], b: &[f64; D]) -> [f64; D] {
    let mut out = [0.0; D];
    for i in 0..D {
        out[i] = a[i] - b[i];
    }
    out
}

pub(crate) fn scale<const D: usize>(a: &[f64; D], s: f64) -> [f64; D] {
    let mut out = [0.0; D];
    for i in 0..D {
        out[i] = s * a[i];
    }
    out
}

pub(crate) fn neg<const D: usize>(a: &[f64; D]) -> [f64; D] {
    scale(a, -1.0)
}

pub(crate) fn matvec<const D: usize>(m: &[[f64; D]; D], v: &[f64; D]) -> [f64; D] {
    let mut out = [0.0; D];
    for i in 0..D {
        out[i] = dot(&m[i], v);
    }
    out
}

pub(crate) fn matmul<const D: usize>(a: &[[f64; D]; D], b: &[[f64; D]; D]) -> [[f64; D]; D] {
    let mut out = [[0.0; D]; D];
    for i in 0..D {
        for j in 0..D {
            let mut s = 0.0;
            for k in 0..D {
                s += a[i][k] * b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

pub(crate) fn transpose<const D: usize>(m: &[[f64; D]; D]) -> [[f64; D]; D] {
    let mut out = [[0.0; D]; D];
    for i in 0..D {
        for j in 0..D {
            out[i][j] = m[j][i];
        }
    }
    out
}

/// Determinant, hard-coded for the D ≤ 3 cases this crate supports.
pub(crate) fn det<const D: usize>(m: &[[f64; D]; D]) -> f64 {
    match D {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        3 => {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        _ => unreachable!("only dimensions 1..=3 are constructible"),
    }
}

/// Frobenius norm of MᵀM − I, the orthogonality defect.
pub(crate) fn orthogonality_defect<const D: usize>(m: &[[f64; D]; D]) -> f64 {
    let mtm = matmul(&transpose(m), m);
    let mut s = 0.0;
    for i in 0..D {
        for j in 0..D {
            let target = if i == j { 1.0 } else { 0.0 };
            let d = mtm[i][j] - target;
            s += d * d;
        }
    }
    s.sqrt()
}

pub(crate) fn all_finite<const D: usize>(v: &[f64; D]) -> bool {
    v.iter().all(|x| x.is_finite())
}
