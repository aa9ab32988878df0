//! Deterministic CSV/JSON writers. All floats are written with fixed
//! formatting so identical runs produce identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::complexity::ComplexityReport;
use crate::experiments::{CrbRow, RmseTable};
use vsarray::music::SpectrumGrid;

fn fmt_f(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else {
        format!("{x:.6}")
    }
}

fn fmt_e(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else {
        format!("{x:.9e}")
    }
}

/// One row per (snr, method, geometry, source, parameter); angles in degrees,
/// SNR in dB.
pub fn rmse_to_csv(table: &RmseTable) -> String {
    let mut s = String::from(
        "snr_db,method,geometry,source,parameter,rmse_deg,crb_sqrt_deg,trials_ok,\
         trials_failed,snapshots,grid_step_doa_deg,grid_step_pol_deg,refine,seed\n",
    );
    for r in &table.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            fmt_f(r.snr_db),
            r.method,
            r.geometry,
            r.source,
            r.param,
            fmt_f(r.rmse_deg),
            r.crb_sqrt_deg.map(fmt_f).unwrap_or_else(|| "nan".into()),
            r.trials_ok,
            r.trials_failed,
            table.snapshots,
            fmt_f(table.grid_step_doa),
            fmt_f(table.grid_step_pol),
            table.refine,
            table.seed,
        );
    }
    s
}

/// `axis1,axis2,value` triples; values clipped at the grid cap.
pub fn spectrum_to_csv(grid: &SpectrumGrid) -> String {
    assert_eq!(grid.axes.len(), 2, "spectrum export is 2-D");
    let mut s = format!(
        "{},{},value\n",
        grid.axes[0].name, grid.axes[1].name
    );
    for i in 0..grid.axes[0].count {
        for j in 0..grid.axes[1].count {
            let _ = writeln!(
                s,
                "{},{},{}",
                fmt_f(grid.axes[0].value(i)),
                fmt_f(grid.axes[1].value(j)),
                fmt_e(grid.value(&[i, j]))
            );
        }
    }
    s
}

#[derive(Serialize)]
struct AxisMeta {
    name: String,
    start_deg: f64,
    step_deg: f64,
    count: usize,
    periodic: bool,
}

#[derive(Serialize)]
struct SpectrumMeta<'a> {
    axes: Vec<AxisMeta>,
    cap: f64,
    geometry: &'a str,
    sources_deg: &'a [[f64; 4]],
    noise_free: bool,
    snr_db: Option<f64>,
    snapshots: usize,
    seed: u64,
    method: &'a str,
}

/// JSON sidecar describing the grid axes and the scenario that produced it.
pub fn spectrum_sidecar_json(
    grid: &SpectrumGrid,
    geometry: &str,
    sources_deg: &[[f64; 4]],
    noise_free: bool,
    snr_db: Option<f64>,
    snapshots: usize,
    seed: u64,
    method: &str,
) -> String {
    let meta = SpectrumMeta {
        axes: grid
            .axes
            .iter()
            .map(|a| AxisMeta {
                name: a.name.clone(),
                start_deg: a.start_deg,
                step_deg: a.step_deg,
                count: a.count,
                periodic: a.periodic,
            })
            .collect(),
        cap: grid.cap,
        geometry,
        sources_deg,
        noise_free,
        snr_db,
        snapshots,
        seed,
        method,
    };
    serde_json::to_string_pretty(&meta).expect("sidecar serialisation cannot fail")
}

pub fn crb_to_csv(rows: &[CrbRow]) -> String {
    let mut s = String::from("snr_db,source,parameter,crb_rad2,crb_sqrt_deg\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            fmt_f(r.snr_db),
            r.source,
            r.param,
            fmt_e(r.crb_rad2),
            fmt_f(r.crb_sqrt_deg)
        );
    }
    s
}

pub fn complexity_to_csv(reports: &[ComplexityReport]) -> String {
    let mut s = String::from("sensors,sources,grid_points,music4d_mults,det2d_mults,mineig2d_mults\n");
    for r in reports {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            r.sensors, r.sources, r.grid_points, r.music4d, r.det2d, r.mineig2d
        );
    }
    s
}

/// Write with the I/O error surfaced alongside the path.
pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)
                .with_context(|| format!("creating directory {}", parent.display()))?;
        }
    }
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use vsarray::music::GridAxis;

    #[test]
    fn csv_headers_name_columns_and_units() {
        let table = RmseTable {
            rows: vec![],
            snapshots: 100,
            trials: 5,
            seed: 1,
            grid_step_doa: 1.0,
            grid_step_pol: 1.0,
            refine: true,
        };
        assert!(rmse_to_csv(&table).starts_with("snr_db,method,geometry,"));
        assert!(crb_to_csv(&[]).starts_with("snr_db,source,parameter,crb_rad2,crb_sqrt_deg"));
    }

    #[test]
    fn spectrum_csv_row_count_matches_grid() {
        let axes = vec![
            GridAxis::inclusive("theta_deg", 0.0, 2.0, 1.0),
            GridAxis::inclusive("phi_deg", 0.0, 1.0, 1.0),
        ];
        let g = vsarray::array::ArrayGeometry::linear(
            vsarray::array::SensorKind::Tripole,
            3,
        )
        .unwrap();
        let r = vsarray::signal::ideal_covariance(
            &g,
            &[vsarray::array::SourceParams::from_degrees(10.0, 20.0, 30.0, 40.0).unwrap()],
            &[1.0],
            0.5,
        )
        .unwrap();
        let dec = vsarray::music::decompose(&r, 1).unwrap();
        let spec = vsarray::music::doa_spectrum_det(&dec.noise_basis, &g, &axes[0], &axes[1]);
        let csv = spectrum_to_csv(&spec);
        assert_eq!(csv.lines().count(), 1 + 3 * 2);
        let sidecar = spectrum_sidecar_json(
            &spec,
            "tripole-linear-3",
            &[[10.0, 20.0, 30.0, 40.0]],
            true,
            None,
            0,
            1,
            "det2d",
        );
        assert!(sidecar.contains("\"cap\""));
        assert!(sidecar.contains("theta_deg"));
    }
}
