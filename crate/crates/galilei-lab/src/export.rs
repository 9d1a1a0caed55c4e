//! File formats: wavefunction snapshots, CSV series, and mass-fiber
//! manifests.
//!
//! Snapshot layout (all integers and floats little-endian):
//!
//! ```text
//! "BGMN1"  magic, 5 bytes
//! u32      rank
//! u32 × rank   points per axis
//! f64 × rank   box length per axis
//! f64      ħ
//! u32      n (particle count)
//! f64 × n  masses
//! f64 × 2 × points   interleaved re/im amplitudes, row-major
//! ```
//!
//! Axes are box-centered (origin −L/2); the grid chart is part of the
//! format contract, not the header.

use anyhow::{bail, Context};
use galilei_core::ClassicalState;
use galilei_quantum::{Axis, GridSpec, MassFiberState, Wavefunction, ZetaField};
use num_complex::Complex64;
use serde::Serialize;
use std::io::{Read, Write};
use std::path::Path;

pub const SNAPSHOT_MAGIC: &[u8; 5] = b"BGMN1";

pub fn write_wavefunction(psi: &Wavefunction, path: &Path) -> anyhow::Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let grid = psi.grid();
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    out.write_all(SNAPSHOT_MAGIC)?;
    out.write_all(&(grid.rank() as u32).to_le_bytes())?;
    for axis in grid.axes() {
        out.write_all(&(axis.points as u32).to_le_bytes())?;
    }
    for axis in grid.axes() {
        out.write_all(&axis.length.to_le_bytes())?;
    }
    out.write_all(&grid.hbar().to_le_bytes())?;
    out.write_all(&(grid.particles() as u32).to_le_bytes())?;
    for m in psi.masses() {
        out.write_all(&m.to_le_bytes())?;
    }
    for amp in psi.amplitudes().iter() {
        out.write_all(&amp.re.to_le_bytes())?;
        out.write_all(&amp.im.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_wavefunction(path: &Path) -> anyhow::Result<Wavefunction> {
    let mut input = std::io::BufReader::new(
        std::fs::File::open(path).with_context(|| format!("open {}", path.display()))?,
    );
    let mut magic = [0u8; 5];
    input.read_exact(&mut magic)?;
    if &magic != SNAPSHOT_MAGIC {
        bail!("not a wavefunction snapshot: bad magic {magic:?}");
    }
    let mut u32_buf = [0u8; 4];
    let mut f64_buf = [0u8; 8];
    let mut read_u32 = |input: &mut dyn Read| -> anyhow::Result<u32> {
        input.read_exact(&mut u32_buf)?;
        Ok(u32::from_le_bytes(u32_buf))
    };
    let rank = read_u32(&mut input)? as usize;
    if rank == 0 || rank > 4 {
        bail!("snapshot rank {rank} out of range");
    }
    let mut points = Vec::with_capacity(rank);
    for _ in 0..rank {
        input.read_exact(&mut u32_buf)?;
        points.push(u32::from_le_bytes(u32_buf) as usize);
    }
    let mut lengths = Vec::with_capacity(rank);
    for _ in 0..rank {
        input.read_exact(&mut f64_buf)?;
        lengths.push(f64::from_le_bytes(f64_buf));
    }
    input.read_exact(&mut f64_buf)?;
    let hbar = f64::from_le_bytes(f64_buf);
    input.read_exact(&mut u32_buf)?;
    let particles = u32::from_le_bytes(u32_buf) as usize;
    let mut masses = Vec::with_capacity(particles);
    for _ in 0..particles {
        input.read_exact(&mut f64_buf)?;
        masses.push(f64::from_le_bytes(f64_buf));
    }
    if particles == 0 || rank % particles != 0 {
        bail!("snapshot particle count {particles} does not divide rank {rank}");
    }
    let axes: Vec<Axis> = points
        .iter()
        .zip(&lengths)
        .map(|(&points, &length)| Axis {
            points,
            length,
            origin: -0.5 * length,
        })
        .collect();
    let grid = GridSpec::new(particles, rank / particles, axes, hbar)
        .map_err(|e| anyhow::anyhow!("snapshot grid invalid: {e}"))?;
    let total: usize = points.iter().product();
    let mut amplitudes = Vec::with_capacity(total);
    for _ in 0..total {
        input.read_exact(&mut f64_buf)?;
        let re = f64::from_le_bytes(f64_buf);
        input.read_exact(&mut f64_buf)?;
        let im = f64::from_le_bytes(f64_buf);
        amplitudes.push(Complex64::new(re, im));
    }
    let array = ndarray::ArrayD::from_shape_vec(ndarray::IxDyn(&points), amplitudes)?;
    Wavefunction::from_amplitudes(grid, masses, array)
        .map_err(|e| anyhow::anyhow!("snapshot state invalid: {e}"))
}

fn open_csv(path: &Path) -> anyhow::Result<std::io::BufWriter<std::fs::File>> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    Ok(std::io::BufWriter::new(std::fs::File::create(path)?))
}

/// Trajectory CSV: header `t,x0_0,...,p0_0,...,zeta0,...,m0,...`, one row
/// per step.
pub fn write_trajectory_csv<const D: usize>(
    trajectory: &[ClassicalState<D>],
    path: &Path,
) -> anyhow::Result<()> {
    let mut out = open_csv(path)?;
    let n = trajectory.first().map(|s| s.particle_count()).unwrap_or(0);
    let mut header = vec!["t".to_string()];
    for i in 0..n {
        for a in 0..D {
            header.push(format!("x{i}_{a}"));
        }
    }
    for i in 0..n {
        for a in 0..D {
            header.push(format!("p{i}_{a}"));
        }
    }
    for i in 0..n {
        header.push(format!("zeta{i}"));
    }
    for i in 0..n {
        header.push(format!("m{i}"));
    }
    writeln!(out, "{}", header.join(","))?;
    for s in trajectory {
        let mut row = vec![format!("{:.17e}", s.t)];
        for x in &s.x {
            for a in 0..D {
                row.push(format!("{:.17e}", x[a]));
            }
        }
        for p in &s.p {
            for a in 0..D {
                row.push(format!("{:.17e}", p[a]));
            }
        }
        for z in &s.zeta {
            row.push(format!("{:.17e}", z));
        }
        for m in &s.m {
            row.push(format!("{:.17e}", m));
        }
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

/// |ψ|² marginal along one axis: `coordinate,density`.
pub fn write_marginal_csv(psi: &Wavefunction, axis: usize, path: &Path) -> anyhow::Result<()> {
    let mut out = open_csv(path)?;
    writeln!(out, "coordinate,density")?;
    for (x, d) in psi.marginal_density(axis) {
        writeln!(out, "{x:.17e},{d:.17e}")?;
    }
    Ok(())
}

/// ζ interference fringe of one particle: `zeta,density`.
pub fn write_fringe_csv(field: &ZetaField, particle: usize, path: &Path) -> anyhow::Result<()> {
    let mut out = open_csv(path)?;
    writeln!(out, "zeta,density")?;
    for (z, d) in field.zeta_marginal(particle) {
        writeln!(out, "{z:.17e},{d:.17e}")?;
    }
    Ok(())
}

/// Generic labelled series: `label,measured,predicted` rows.
pub fn write_phase_sweep_csv(
    rows: &[(f64, f64, f64)],
    labels: (&str, &str, &str),
    path: &Path,
) -> anyhow::Result<()> {
    let mut out = open_csv(path)?;
    writeln!(out, "{},{},{}", labels.0, labels.1, labels.2)?;
    for (a, b, c) in rows {
        writeln!(out, "{a:.17e},{b:.17e},{c:.17e}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct FiberManifest<'a> {
    zeta_length: f64,
    hbar: f64,
    mass_spacing: f64,
    seed: u64,
    slices: Vec<FiberSlice<'a>>,
}

#[derive(Serialize)]
struct FiberSlice<'a> {
    masses: &'a [f64],
    lattice_indices: Vec<i64>,
    weight: f64,
    file: String,
}

/// JSON manifest plus one snapshot per slice.
pub fn write_fiber_state(
    state: &MassFiberState,
    seed: u64,
    dir: &Path,
    stem: &str,
) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut slices = Vec::new();
    for (i, slice) in state.slices().iter().enumerate() {
        let file = format!("{stem}-slice{i}.bgmn");
        write_wavefunction(slice, &dir.join(&file))?;
        slices.push(FiberSlice {
            masses: slice.masses(),
            lattice_indices: state.lattice_indices(i),
            weight: slice.norm_sq(),
            file,
        });
    }
    let manifest = FiberManifest {
        zeta_length: state.zeta_length(),
        hbar: state.hbar(),
        mass_spacing: state.mass_spacing(),
        seed,
        slices,
    };
    std::fs::write(
        dir.join(format!("{stem}-manifest.json")),
        serde_json::to_string_pretty(&manifest)?,
    )?;
    Ok(())
}
