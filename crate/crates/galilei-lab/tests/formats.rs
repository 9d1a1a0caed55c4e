//! File-format contracts: snapshot layout, round trips, CSV headers, and
//! the fiber manifest.

use galilei_core::{ClassicalState, PairwiseHarmonic};
use galilei_lab::export;
use galilei_quantum::{make_gaussian, synthesize_zeta, GridSpec, MassFiberState};
use num_complex::Complex64;

#[test]
fn snapshot_layout_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let grid = GridSpec::centered(1, 1, 64, 16.0, 0.7).unwrap();
    let psi = make_gaussian(&grid, &[1.5], &[0.3], &[1.0], &[0.4]).unwrap();
    let path = dir.path().join("state.bgmn");
    export::write_wavefunction(&psi, &path).unwrap();

    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(&bytes[..5], b"BGMN1");
    assert_eq!(u32::from_le_bytes(bytes[5..9].try_into().unwrap()), 1); // rank
    assert_eq!(u32::from_le_bytes(bytes[9..13].try_into().unwrap()), 64); // points
    assert_eq!(f64::from_le_bytes(bytes[13..21].try_into().unwrap()), 16.0); // length
    assert_eq!(f64::from_le_bytes(bytes[21..29].try_into().unwrap()), 0.7); // ħ
    assert_eq!(u32::from_le_bytes(bytes[29..33].try_into().unwrap()), 1); // n
    assert_eq!(f64::from_le_bytes(bytes[33..41].try_into().unwrap()), 1.5); // mass
    assert_eq!(bytes.len(), 41 + 64 * 16); // interleaved re/im f64

    let back = export::read_wavefunction(&path).unwrap();
    assert_eq!(back.grid(), psi.grid());
    assert_eq!(back.masses(), psi.masses());
    assert_eq!(back.distance(&psi).unwrap(), 0.0);
}

#[test]
fn snapshot_rejects_bad_magic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.bgmn");
    std::fs::write(&path, b"NOTBG123456").unwrap();
    assert!(export::read_wavefunction(&path).is_err());
}

#[test]
fn trajectory_csv_has_documented_header() {
    let dir = tempfile::tempdir().unwrap();
    let state = ClassicalState::<2>::new(
        vec![[0.5, 0.0], [-0.5, 0.2]],
        vec![[0.1, 0.0], [-0.1, 0.0]],
        vec![0.0, 0.0],
        vec![1.0, 2.0],
        0.0,
    )
    .unwrap();
    let trajectory =
        galilei_core::classical::integrate(&state, &PairwiseHarmonic { k: 1.0 }, 1e-2, 10).unwrap();
    let path = dir.path().join("trajectory.csv");
    export::write_trajectory_csv(&trajectory, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "t,x0_0,x0_1,x1_0,x1_1,p0_0,p0_1,p1_0,p1_1,zeta0,zeta1,m0,m1"
    );
    assert_eq!(lines.count(), 11); // initial state + 10 steps
}

#[test]
fn fiber_manifest_lists_slices_and_snapshots_decode() {
    let dir = tempfile::tempdir().unwrap();
    let grid = GridSpec::centered(1, 1, 64, 32.0, 1.0).unwrap();
    let zeta_length = 2.0 * std::f64::consts::PI;
    let state = MassFiberState::new(
        vec![
            make_gaussian(&grid, &[1.0], &[0.0], &[1.2], &[0.0]).unwrap(),
            make_gaussian(&grid, &[2.0], &[0.5], &[1.2], &[0.0])
                .unwrap()
                .scaled(Complex64::new(0.5, 0.0)),
        ],
        zeta_length,
    )
    .unwrap()
    .normalized();
    export::write_fiber_state(&state, 42, dir.path(), "fiber").unwrap();

    let manifest: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("fiber-manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(manifest["seed"], 42);
    assert_eq!(manifest["zeta_length"], zeta_length);
    let slices = manifest["slices"].as_array().unwrap();
    assert_eq!(slices.len(), 2);
    assert_eq!(slices[0]["lattice_indices"][0], 1);
    assert_eq!(slices[1]["lattice_indices"][0], 2);
    let total: f64 = slices
        .iter()
        .map(|s| s["weight"].as_f64().unwrap())
        .sum();
    assert!((total - 1.0).abs() < 1e-12);

    for (i, slice) in state.slices().iter().enumerate() {
        let file = slices[i]["file"].as_str().unwrap();
        let back = export::read_wavefunction(&dir.path().join(file)).unwrap();
        assert_eq!(back.distance(slice).unwrap(), 0.0);
    }
}

#[test]
fn fringe_csv_covers_one_zeta_box() {
    let dir = tempfile::tempdir().unwrap();
    let grid = GridSpec::centered(1, 1, 64, 32.0, 1.0).unwrap();
    let zeta_length = 2.0 * std::f64::consts::PI;
    let half = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let state = MassFiberState::new(
        vec![
            make_gaussian(&grid, &[1.0], &[0.0], &[1.2], &[0.0]).unwrap().scaled(half),
            make_gaussian(&grid, &[2.0], &[0.0], &[1.2], &[0.0]).unwrap().scaled(half),
        ],
        zeta_length,
    )
    .unwrap();
    let field = synthesize_zeta(&state, 32).unwrap();
    let path = dir.path().join("fringe.csv");
    export::write_fringe_csv(&field, 0, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "zeta,density");
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let mut it = l.split(',');
            (
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    assert_eq!(rows.len(), 32);
    assert!((rows[0].0 - 0.0).abs() < 1e-15);
    assert!(rows.last().unwrap().0 < zeta_length);
    // One full interference fringe: integrated density is the total norm².
    let step = zeta_length / 32.0;
    let mass: f64 = rows.iter().map(|(_, d)| d * step).sum();
    assert!((mass - state.total_norm_sq()).abs() < 1e-10);
}
