//! Seeded random draws of group elements and classical states. Every suite
//! derives its streams from the config seed, so reports are reproducible.

use galilei_core::{ClassicalState, ExtendedElement, GalileiElement, Rotation};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn vec_in<const D: usize>(rng: &mut ChaCha8Rng, range: f64) -> [f64; D] {
    let mut out = [0.0; D];
    for v in &mut out {
        *v = rng.random_range(-range..range);
    }
    out
}

pub fn rotation<const D: usize>(rng: &mut ChaCha8Rng) -> Rotation<D> {
    match D {
        2 => {
            let angle: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
            let (s, c) = angle.sin_cos();
            let mut m = [[0.0; D]; D];
            m[0][0] = c;
            m[0][1] = -s;
            m[1][0] = s;
            m[1][1] = c;
            Rotation::from_matrix(m).expect("rotation matrix")
        }
        3 => {
            let axis: [f64; 3] = loop {
                let v = [
                    rng.random_range(-1.0..1.0f64),
                    rng.random_range(-1.0..1.0),
                    rng.random_range(-1.0..1.0),
                ];
                let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
                if n > 1e-3 {
                    break [v[0] / n, v[1] / n, v[2] / n];
                }
            };
            let angle: f64 = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
            let w3 = Rotation::<3>::from_axis_angle(&[
                axis[0] * angle,
                axis[1] * angle,
                axis[2] * angle,
            ]);
            let mut m = [[0.0; D]; D];
            for i in 0..3 {
                for j in 0..3 {
                    m[i][j] = w3.matrix()[i][j];
                }
            }
            Rotation::from_matrix(m).expect("rotation matrix")
        }
        _ => Rotation::identity(),
    }
}

pub fn galilei_element<const D: usize>(rng: &mut ChaCha8Rng, range: f64) -> GalileiElement<D> {
    GalileiElement {
        rotation: rotation(rng),
        boost: vec_in(rng, range),
        translation: vec_in(rng, range),
        time_shift: rng.random_range(-range..range),
    }
}

pub fn extended_element<const D: usize>(rng: &mut ChaCha8Rng, range: f64) -> ExtendedElement<D> {
    ExtendedElement {
        theta: rng.random_range(-range..range),
        g: galilei_element(rng, range),
    }
}

/// Random bound-ish classical state: positions and momenta of modest size,
/// masses in [0.5, 2.5].
pub fn classical_state<const D: usize>(rng: &mut ChaCha8Rng, particles: usize) -> ClassicalState<D> {
    let mut x = Vec::with_capacity(particles);
    let mut p = Vec::with_capacity(particles);
    let mut zeta = Vec::with_capacity(particles);
    let mut m = Vec::with_capacity(particles);
    for _ in 0..particles {
        x.push(vec_in::<D>(rng, 1.5));
        p.push(vec_in::<D>(rng, 0.8));
        zeta.push(rng.random_range(-1.0..1.0));
        m.push(rng.random_range(0.5..2.5));
    }
    ClassicalState::new(x, p, zeta, m, 0.0).expect("valid sampled state")
}
