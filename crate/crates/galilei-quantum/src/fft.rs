//! FFT passes along the axes of dynamic-rank complex arrays.
//!
//! Plans are cached in a process-global planner; the inverse pass carries
//! the 1/N normalization so forward ∘ inverse is the identity.

use ndarray::{ArrayD, Axis};
use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};
use std::sync::{Arc, Mutex, OnceLock};

fn plan(len: usize, direction: FftDirection) -> Arc<dyn Fft<f64>> {
    static PLANNER: OnceLock<Mutex<FftPlanner<f64>>> = OnceLock::new();
    let mut planner = PLANNER
        .get_or_init(|| Mutex::new(FftPlanner::new()))
        .lock()
        .expect("fft planner poisoned");
    match direction {
        FftDirection::Forward => planner.plan_fft_forward(len),
        FftDirection::Inverse => planner.plan_fft_inverse(len),
    }
}

fn transform_axis(data: &mut ArrayD<Complex64>, axis: usize, direction: FftDirection) {
    let len = data.shape()[axis];
    let fft = plan(len, direction);
    let mut lane_buf = vec![Complex64::new(0.0, 0.0); len];
    let mut scratch = vec![Complex64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    let norm = 1.0 / len as f64;
    for mut lane in data.lanes_mut(Axis(axis)) {
        for (dst, src) in lane_buf.iter_mut().zip(lane.iter()) {
            *dst = *src;
        }
        fft.process_with_scratch(&mut lane_buf, &mut scratch);
        if direction == FftDirection::Inverse {
            for v in lane_buf.iter_mut() {
                *v *= norm;
            }
        }
        for (dst, src) in lane.iter_mut().zip(lane_buf.iter()) {
            *dst = *src;
        }
    }
}

pub fn forward_axis(data: &mut ArrayD<Complex64>, axis: usize) {
    transform_axis(data, axis, FftDirection::Forward);
}

pub fn inverse_axis(data: &mut ArrayD<Complex64>, axis: usize) {
    transform_axis(data, axis, FftDirection::Inverse);
}

/// Forward FFT over every axis in `axes`.
pub fn forward(data: &mut ArrayD<Complex64>, axes: &[usize]) {
    for &axis in axes {
        forward_axis(data, axis);
    }
}

/// Inverse FFT over every axis in `axes`.
pub fn inverse(data: &mut ArrayD<Complex64>, axes: &[usize]) {
    for &axis in axes {
        inverse_axis(data, axis);
    }
}
