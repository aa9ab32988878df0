//! Experiment runners: Monte-Carlo RMSE sweeps against the CRB, spectrum
//! exports, the geometry comparison and the ambiguity certification report.
//!
//! Determinism contract: trial t of SNR point i draws from the substream
//! seeded with `seed + i·trials + t`; trials run in parallel but results are
//! collected in index order and aggregated sequentially, so output bytes do
//! not depend on the worker count.

use anyhow::{anyhow, bail, Result};
use rayon::prelude::*;

use vsarray::ambiguity::{
    ambiguity_scan, classify_pair, crossed_dipole_partner, doa_parallel_direction, is_parallel,
    ScanConfig, PARALLEL_TOL,
};
use vsarray::array::{joint_steering, ArrayGeometry, ArrayLayout, SensorKind, SourceParams};
use vsarray::crb::{crb_bounds, CrbReport, Scenario, PARAM_NAMES};
use vsarray::music::{
    decompose, doa_spectrum_det, doa_spectrum_mineig, estimate_with_subspaces, GridAxis, Method,
    SearchGrid, SourceEstimate, SpectrumGrid,
};
use vsarray::signal::{
    generate_snapshots, ideal_covariance, sample_covariance, CovarianceMatrix, SimulationConfig,
};

use crate::config::ExperimentConfig;

/// Half-width of the per-source window used by the desk-scale 4-D search.
pub const MUSIC4D_WINDOW_DEG: f64 = 5.0;

/// Wrap a degree difference into (−180°, 180°].
pub fn wrap_error_deg(x: f64) -> f64 {
    let mut r = x % 360.0;
    if r <= -180.0 {
        r += 360.0;
    }
    if r > 180.0 {
        r -= 360.0;
    }
    r
}

/// Signed per-parameter estimation errors in degrees; φ and η wrapped.
pub fn estimate_errors_deg(estimate: &SourceEstimate, truth_deg: &[f64; 4]) -> [f64; 4] {
    [
        estimate.theta_deg - truth_deg[0],
        wrap_error_deg(estimate.phi_deg - truth_deg[1]),
        estimate.gamma_deg - truth_deg[2],
        wrap_error_deg(estimate.eta_deg - truth_deg[3]),
    ]
}

/// Wrapped angular distance over (θ, φ) used to associate estimates with
/// ground-truth sources.
fn doa_distance_deg(estimate: &SourceEstimate, truth_deg: &[f64; 4]) -> f64 {
    let dt = estimate.theta_deg - truth_deg[0];
    let dp = wrap_error_deg(estimate.phi_deg - truth_deg[1]);
    (dt * dt + dp * dp).sqrt()
}

/// Assign each estimate to its nearest ground-truth source; a source keeps
/// its closest assigned estimate and reports a failure when it receives none.
fn match_estimates(
    estimates: &[SourceEstimate],
    truths_deg: &[[f64; 4]],
) -> Vec<Option<SourceEstimate>> {
    let mut per_source: Vec<Option<(f64, SourceEstimate)>> = vec![None; truths_deg.len()];
    for est in estimates {
        let mut best = 0usize;
        let mut best_d = f64::INFINITY;
        for (i, truth) in truths_deg.iter().enumerate() {
            let d = doa_distance_deg(est, truth);
            if d < best_d {
                best_d = d;
                best = i;
            }
        }
        match &per_source[best] {
            Some((d, _)) if *d <= best_d => {}
            _ => per_source[best] = Some((best_d, *est)),
        }
    }
    per_source.into_iter().map(|o| o.map(|(_, e)| e)).collect()
}

/// Short geometry label used in output tables.
pub fn geometry_label(g: &ArrayGeometry) -> String {
    let kind = match g.kind {
        SensorKind::Tripole => "tripole",
        SensorKind::CrossedDipole => "crossed-dipole",
    };
    match g.layout {
        ArrayLayout::Linear { sensors } => format!("{kind}-linear-{sensors}"),
        ArrayLayout::Planar { rows, cols } => format!("{kind}-planar-{rows}x{cols}"),
    }
}

/// One aggregated RMSE table row.
#[derive(Debug, Clone)]
pub struct RmseRow {
    pub snr_db: f64,
    pub method: &'static str,
    pub geometry: String,
    /// 1-based source index.
    pub source: usize,
    pub param: &'static str,
    pub rmse_deg: f64,
    pub crb_sqrt_deg: Option<f64>,
    pub trials_ok: usize,
    pub trials_failed: usize,
}

/// RMSE sweep results plus the audit metadata recorded alongside every table.
#[derive(Debug, Clone)]
pub struct RmseTable {
    pub rows: Vec<RmseRow>,
    pub snapshots: usize,
    pub trials: usize,
    pub seed: u64,
    pub grid_step_doa: f64,
    pub grid_step_pol: f64,
    pub refine: bool,
}

impl RmseTable {
    pub fn rmse(&self, method: Method, snr_db: f64, source: usize, param: usize) -> Option<f64> {
        self.find(method, snr_db, source, param).map(|r| r.rmse_deg)
    }

    pub fn crb_sqrt(&self, method: Method, snr_db: f64, source: usize, param: usize) -> Option<f64> {
        self.find(method, snr_db, source, param)
            .and_then(|r| r.crb_sqrt_deg)
    }

    pub fn find(&self, method: Method, snr_db: f64, source: usize, param: usize) -> Option<&RmseRow> {
        self.rows.iter().find(|r| {
            r.method == method.label()
                && (r.snr_db - snr_db).abs() < 1e-9
                && r.source == source + 1
                && r.param == PARAM_NAMES[param]
        })
    }
}

/// Per-trial, per-method, per-source signed errors (None = failed).
type TrialErrors = Vec<Vec<Option<[f64; 4]>>>;

fn run_single_trial(
    cfg: &ExperimentConfig,
    geometry: &ArrayGeometry,
    truths: &[SourceParams],
    power: f64,
    noise_power: f64,
    seed: u64,
    grid: &SearchGrid,
) -> TrialErrors {
    let m = truths.len();
    let failed_all = || vec![vec![None; m]; cfg.methods.len()];

    let sim = SimulationConfig {
        sources: truths.to_vec(),
        source_powers: vec![power; m],
        noise_power,
        snapshots: cfg.snapshots,
        seed,
    };
    let Ok(snapshots) = generate_snapshots(&sim, geometry) else {
        return failed_all();
    };
    let r = sample_covariance(&snapshots);
    let Ok(dec) = decompose(&r, m) else {
        return failed_all();
    };

    cfg.methods
        .iter()
        .map(|&method| match method {
            Method::Music4D => (0..m)
                .map(|i| {
                    let window = SearchGrid::windowed(
                        cfg.sources_deg[i],
                        MUSIC4D_WINDOW_DEG,
                        cfg.grid_step_doa,
                        cfg.refine,
                    );
                    estimate_with_subspaces(&dec, geometry, 1, method, &window)
                        .ok()
                        .map(|set| estimate_errors_deg(&set.estimates[0], &cfg.sources_deg[i]))
                })
                .collect(),
            _ => match estimate_with_subspaces(&dec, geometry, m, method, grid) {
                Ok(set) => match_estimates(&set.estimates, &cfg.sources_deg)
                    .iter()
                    .enumerate()
                    .map(|(i, matched)| {
                        matched
                            .as_ref()
                            .map(|e| estimate_errors_deg(e, &cfg.sources_deg[i]))
                    })
                    .collect(),
                Err(_) => vec![None; m],
            },
        })
        .collect()
}

/// Monte-Carlo RMSE sweep over the config's SNR points for every configured
/// method, with √CRB attached per SNR point.
pub fn run_rmse_sweep(cfg: &ExperimentConfig) -> Result<RmseTable> {
    run_rmse_sweep_on(cfg, &cfg.geometry)
}

fn run_rmse_sweep_on(cfg: &ExperimentConfig, geometry: &ArrayGeometry) -> Result<RmseTable> {
    cfg.validate()?;
    let truths = cfg.sources()?;
    let m = truths.len();
    let grid = SearchGrid::full(cfg.grid_step_doa, cfg.grid_step_pol, cfg.refine);
    let label = geometry_label(geometry);

    let mut rows = Vec::new();
    for (snr_idx, &snr_db) in cfg.snr_db.iter().enumerate() {
        let power = 10f64.powf(snr_db / 10.0);
        let trial_results: Vec<TrialErrors> = (0..cfg.trials)
            .into_par_iter()
            .map(|t| {
                let seed = cfg
                    .seed
                    .wrapping_add((snr_idx * cfg.trials + t) as u64);
                run_single_trial(cfg, geometry, &truths, power, 1.0, seed, &grid)
            })
            .collect();

        let crb = crb_for_snr(geometry, &truths, power, cfg.snapshots).ok();

        for (mi, &method) in cfg.methods.iter().enumerate() {
            for source in 0..m {
                let mut sums = [0.0f64; 4];
                let mut ok = 0usize;
                for trial in &trial_results {
                    if let Some(err) = trial[mi][source] {
                        for p in 0..4 {
                            sums[p] += err[p] * err[p];
                        }
                        ok += 1;
                    }
                }
                for (p, name) in PARAM_NAMES.iter().enumerate() {
                    let rmse = if ok > 0 {
                        (sums[p] / ok as f64).sqrt()
                    } else {
                        f64::NAN
                    };
                    rows.push(RmseRow {
                        snr_db,
                        method: method.label(),
                        geometry: label.clone(),
                        source: source + 1,
                        param: name,
                        rmse_deg: rmse,
                        crb_sqrt_deg: crb.as_ref().map(|c| c.sqrt_deg(source, p)),
                        trials_ok: ok,
                        trials_failed: cfg.trials - ok,
                    });
                }
            }
        }
    }
    Ok(RmseTable {
        rows,
        snapshots: cfg.snapshots,
        trials: cfg.trials,
        seed: cfg.seed,
        grid_step_doa: cfg.grid_step_doa,
        grid_step_pol: cfg.grid_step_pol,
        refine: cfg.refine,
    })
}

fn crb_for_snr(
    geometry: &ArrayGeometry,
    truths: &[SourceParams],
    power: f64,
    snapshots: usize,
) -> Result<CrbReport> {
    let scenario = Scenario::new(
        *geometry,
        truths.to_vec(),
        vec![power; truths.len()],
        1.0,
    )
    .map_err(|e| anyhow!("{e}"))?;
    crb_bounds(&scenario, snapshots).map_err(|e| anyhow!("{e}"))
}

/// Determinant vs minimum-eigenvalue estimators on identical per-trial data.
pub fn run_estimator_comparison(cfg: &ExperimentConfig) -> Result<RmseTable> {
    let mut cfg = cfg.clone();
    cfg.methods = vec![Method::Reduced2DDet, Method::Reduced2DEig];
    run_rmse_sweep(&cfg)
}

/// 4×1 linear tripole vs 2×3 planar crossed-dipole with equal dipole counts;
/// rows carry the geometry label.
pub fn run_geometry_comparison(cfg: &ExperimentConfig) -> Result<RmseTable> {
    let tripole = ArrayGeometry::linear(SensorKind::Tripole, 4).map_err(|e| anyhow!("{e}"))?;
    let planar =
        ArrayGeometry::planar(SensorKind::CrossedDipole, 2, 3).map_err(|e| anyhow!("{e}"))?;
    if tripole.dof() != planar.dof() {
        bail!(
            "geometry comparison needs equal dipole counts, got {} vs {}",
            tripole.dof(),
            planar.dof()
        );
    }
    let mut cfg = cfg.clone();
    cfg.methods = vec![Method::Reduced2DDet];
    let mut table = run_rmse_sweep_on(&cfg, &tripole)?;
    let planar_table = run_rmse_sweep_on(&cfg, &planar)?;
    table.rows.extend(planar_table.rows);
    Ok(table)
}

/// CRB sweep rows (no Monte-Carlo).
#[derive(Debug, Clone)]
pub struct CrbRow {
    pub snr_db: f64,
    pub source: usize,
    pub param: &'static str,
    pub crb_rad2: f64,
    pub crb_sqrt_deg: f64,
}

pub fn run_crb_sweep(cfg: &ExperimentConfig) -> Result<Vec<CrbRow>> {
    cfg.validate()?;
    let truths = cfg.sources()?;
    let mut rows = Vec::new();
    for &snr_db in &cfg.snr_db {
        let power = 10f64.powf(snr_db / 10.0);
        let crb = crb_for_snr(&cfg.geometry, &truths, power, cfg.snapshots)
            .map_err(|e| anyhow!("CRB at {snr_db} dB: {e}"))?;
        for source in 0..truths.len() {
            for (p, name) in PARAM_NAMES.iter().enumerate() {
                rows.push(CrbRow {
                    snr_db,
                    source: source + 1,
                    param: name,
                    crb_rad2: crb.bound_rad2(source, p),
                    crb_sqrt_deg: crb.sqrt_deg(source, p),
                });
            }
        }
    }
    Ok(rows)
}

/// DOA spectrum for the configured scenario: noise-free ideal covariance by
/// default, or a sample covariance at the first SNR point.
pub fn run_spectrum_export(cfg: &ExperimentConfig) -> Result<SpectrumGrid> {
    cfg.validate()?;
    let truths = cfg.sources()?;
    let r: CovarianceMatrix = if cfg.noise_free {
        ideal_covariance(&cfg.geometry, &truths, &vec![1.0; truths.len()], 0.0)
            .map_err(|e| anyhow!("{e}"))?
    } else {
        let snr_db = *cfg
            .snr_db
            .first()
            .ok_or_else(|| anyhow!("spectrum export needs noise-free or an SNR point"))?;
        let sim = SimulationConfig {
            sources: truths.clone(),
            source_powers: vec![10f64.powf(snr_db / 10.0); truths.len()],
            noise_power: 1.0,
            snapshots: cfg.snapshots,
            seed: cfg.seed,
        };
        sample_covariance(&generate_snapshots(&sim, &cfg.geometry).map_err(|e| anyhow!("{e}"))?)
    };
    let dec = decompose(&r, truths.len()).map_err(|e| anyhow!("{e}"))?;
    let theta = GridAxis::inclusive("theta_deg", 0.0, 90.0, cfg.grid_step_doa);
    let phi = GridAxis::periodic("phi_deg", 0.0, 360.0, cfg.grid_step_doa);
    match cfg.methods.first().copied().unwrap_or(Method::Reduced2DDet) {
        Method::Reduced2DDet => Ok(doa_spectrum_det(&dec.noise_basis, &cfg.geometry, &theta, &phi)),
        Method::Reduced2DEig => Ok(doa_spectrum_mineig(
            &dec.noise_basis,
            &cfg.geometry,
            &theta,
            &phi,
        )),
        Method::Music4D => bail!("spectrum export supports the 2-D DOA estimators (det, eig)"),
    }
}

/// Ambiguity certification report: crossed-dipole partner table, tripole scan
/// certificate and the linear-polarisation taxonomy checks.
pub fn run_ambiguity_report(cfg: &ExperimentConfig) -> Result<String> {
    let truths = cfg.sources()?;
    let alpha1 = *truths
        .first()
        .ok_or_else(|| anyhow!("ambiguity report needs one source"))?;
    if alpha1.is_linearly_polarised() {
        bail!("ambiguity report needs a nonlinearly polarised source");
    }
    let sensors = match cfg.geometry.layout {
        ArrayLayout::Linear { sensors } => sensors,
        ArrayLayout::Planar { .. } => 5,
    };
    let crossed = ArrayGeometry::linear(SensorKind::CrossedDipole, sensors)
        .map_err(|e| anyhow!("{e}"))?;
    let tripole = ArrayGeometry::linear(SensorKind::Tripole, sensors).map_err(|e| anyhow!("{e}"))?;
    let a1 = alpha1.to_degrees();

    let mut out = String::new();
    out.push_str("vector-sensor steering ambiguity report\n");
    out.push_str(&format!(
        "source: ({:.4}, {:.4}, {:.4}, {:.4}) deg, {} sensors per linear array\n\n",
        a1[0], a1[1], a1[2], a1[3], sensors
    ));

    out.push_str("[1] crossed-dipole parallel partners (exact construction)\n");
    out.push_str("    theta2_deg  phi2_deg    gamma2_deg  eta2_deg    cosine(w1,w2)\n");
    let w1 = joint_steering(&crossed, &alpha1);
    for theta2_deg in [25.0f64, 35.0, 45.0, 60.0, 75.0, 85.0] {
        let theta2 = theta2_deg.to_radians();
        let roots = doa_parallel_direction(alpha1.theta, alpha1.phi, theta2)
            .map_err(|e| anyhow!("{e}"))?;
        for phi2 in roots {
            let partner = match crossed_dipole_partner(&alpha1, theta2, phi2) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let w2 = joint_steering(&crossed, &partner);
            let verdict = is_parallel(&w1, &w2, PARALLEL_TOL).map_err(|e| anyhow!("{e}"))?;
            let d = partner.to_degrees();
            out.push_str(&format!(
                "    {:>10.4}  {:>10.4}  {:>10.4}  {:>10.4}  {:.12}\n",
                d[0], d[1], d[2], d[3], verdict.cosine
            ));
        }
    }

    out.push_str("\n[2] tripole no-ambiguity scan (2 deg grid, 2 deg exclusion ball)\n");
    let report = ambiguity_scan(&tripole, &alpha1, &ScanConfig::default())
        .map_err(|e| anyhow!("{e}"))?;
    let loc = report.location.to_degrees();
    out.push_str(&format!(
        "    max off-source cosine {:.10} at ({:.1}, {:.1}, {:.1}, {:.1}) deg over {} cells\n",
        report.max_cosine, loc[0], loc[1], loc[2], loc[3], report.doa_cells
    ));
    out.push_str(&format!(
        "    certified (cosine < 1 - 1e-3): {}\n",
        if report.certified { "YES" } else { "NO" }
    ));

    out.push_str("\n[3] linear-polarisation taxonomy (worked pairs)\n");
    let pairs: [([f64; 4], [f64; 4], u8, bool); 5] = [
        ([30.0, 60.0, 90.0, 20.0], [30.0, 60.0, 90.0, 50.0], 1, true),
        ([0.0, 90.0, 90.0, 20.0], [50.0, 0.0, 0.0, 50.0], 2, true),
        ([30.0, 0.0, 0.0, 30.0], [0.0, 30.0, 30.0, 0.0], 5, true),
        ([30.0, 80.0, 90.0, 50.0], [60.0, 34.6512, 40.0, 0.0], 3, false),
        ([30.0, 80.0, 40.0, 0.0], [60.0, 34.6512, 50.0, 0.0], 6, false),
    ];
    for (p1, p2, expected_case, expected_parallel) in pairs {
        let s1 = SourceParams::from_degrees(p1[0], p1[1], p1[2], p1[3])
            .map_err(|e| anyhow!("{e}"))?;
        let s2 = SourceParams::from_degrees(p2[0], p2[1], p2[2], p2[3])
            .map_err(|e| anyhow!("{e}"))?;
        let (case, verdict) = classify_pair(&s1, &s2).map_err(|e| anyhow!("{e}"))?;
        let ok = case.id == expected_case && verdict.parallel == expected_parallel;
        out.push_str(&format!(
            "    case {}{}: ({:.0},{:.0},{:.0},{:.0}) vs ({:.0},{:.1},{:.0},{:.0}) \
             cosine {:.10} parallel {} -> {}\n",
            case.id,
            if case.swapped { "s" } else { "" },
            p1[0], p1[1], p1[2], p1[3],
            p2[0], p2[1], p2[2], p2[3],
            verdict.cosine,
            verdict.parallel,
            if ok { "PASS" } else { "FAIL" }
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_error_covers_closed_interval() {
        assert_eq!(wrap_error_deg(180.0), 180.0);
        assert_eq!(wrap_error_deg(-180.0), 180.0);
        assert_eq!(wrap_error_deg(190.0), -170.0);
        assert_eq!(wrap_error_deg(-190.0), 170.0);
        assert!(wrap_error_deg(359.0) + 1.0 < 1e-12);
    }

    #[test]
    fn estimates_match_nearest_source_with_wrapping() {
        let truths = [[10.0, 359.0, 15.0, 30.0], [60.0, 70.0, 60.0, 80.0]];
        let ests = vec![
            SourceEstimate {
                theta_deg: 61.0,
                phi_deg: 71.0,
                gamma_deg: 59.0,
                eta_deg: 79.0,
            },
            SourceEstimate {
                theta_deg: 11.0,
                phi_deg: 1.0,
                gamma_deg: 16.0,
                eta_deg: 29.0,
            },
        ];
        let matched = match_estimates(&ests, &truths);
        assert!((matched[0].unwrap().theta_deg - 11.0).abs() < 1e-12);
        assert!((matched[1].unwrap().theta_deg - 61.0).abs() < 1e-12);
    }

    #[test]
    fn unmatched_source_reports_failure() {
        let truths = [[10.0, 20.0, 15.0, 30.0], [60.0, 70.0, 60.0, 80.0]];
        let ests = vec![
            SourceEstimate {
                theta_deg: 10.0,
                phi_deg: 20.0,
                gamma_deg: 15.0,
                eta_deg: 30.0,
            },
            SourceEstimate {
                theta_deg: 12.0,
                phi_deg: 21.0,
                gamma_deg: 15.0,
                eta_deg: 30.0,
            },
        ];
        let matched = match_estimates(&ests, &truths);
        assert!(matched[0].is_some());
        assert!(matched[1].is_none());
    }

    #[test]
    fn small_rmse_sweep_runs_and_attaches_crb() {
        let cfg = ExperimentConfig {
            snr_db: vec![20.0],
            trials: 3,
            snapshots: 200,
            grid_step_doa: 2.0,
            grid_step_pol: 2.0,
            refine: false,
            ..Default::default()
        };
        let table = run_rmse_sweep(&cfg).unwrap();
        assert_eq!(table.rows.len(), 8); // 1 method × 2 sources × 4 params
        for row in &table.rows {
            assert!(row.rmse_deg.is_finite());
            assert!(row.rmse_deg >= 0.0);
            assert!(row.crb_sqrt_deg.unwrap() > 0.0);
            assert_eq!(row.trials_ok + row.trials_failed, 3);
        }
    }

    #[test]
    fn geometry_comparison_has_both_labels() {
        let cfg = ExperimentConfig {
            snr_db: vec![25.0],
            trials: 2,
            snapshots: 200,
            grid_step_doa: 2.0,
            grid_step_pol: 2.0,
            refine: false,
            ..Default::default()
        };
        let table = run_geometry_comparison(&cfg).unwrap();
        let labels: std::collections::BTreeSet<&str> =
            table.rows.iter().map(|r| r.geometry.as_str()).collect();
        assert!(labels.contains("tripole-linear-4"));
        assert!(labels.contains("crossed-dipole-planar-2x3"));
    }

    #[test]
    fn spectrum_export_noise_free_peaks_at_source() {
        let cfg = ExperimentConfig {
            out: None,
            ..ExperimentConfig::spectrum_default()
        };
        let grid = run_spectrum_export(&cfg).unwrap();
        let peak = vsarray::music::find_peaks(&grid, 1).unwrap();
        assert_eq!(grid.angles_deg(&peak[0]), vec![30.0, 80.0]);
    }

    #[test]
    fn spectrum_export_noise_only_has_no_spurious_peaks() {
        // statistical control: the 0-source spectrum stays within 100× its median
        let cfg = ExperimentConfig {
            sources_deg: vec![],
            noise_free: false,
            snr_db: vec![0.0],
            snapshots: 1000,
            grid_step_doa: 2.0,
            seed: 7,
            ..ExperimentConfig::spectrum_default()
        };
        let grid = run_spectrum_export(&cfg).unwrap();
        let mut values: Vec<f64> = (0..grid.len()).map(|i| grid.value_flat(i)).collect();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = values[values.len() / 2];
        assert!(
            values[values.len() - 1] < 100.0 * median,
            "max {} vs median {}",
            values[values.len() - 1],
            median
        );
    }

    #[test]
    fn ambiguity_report_sections_present_and_passing() {
        let cfg = ExperimentConfig::spectrum_default();
        let report = run_ambiguity_report(&cfg).unwrap();
        assert!(report.contains("[1] crossed-dipole parallel partners"));
        assert!(report.contains("[2] tripole no-ambiguity scan"));
        assert!(report.contains("[3] linear-polarisation taxonomy"));
        assert!(!report.contains("FAIL"), "report:\n{report}");
        // every partner row certifies at 1e-10
        for line in report.lines().skip_while(|l| !l.starts_with("[1]")).skip(2) {
            if !line.starts_with("    ") {
                break;
            }
            let cosine: f64 = line.split_whitespace().last().unwrap().parse().unwrap();
            assert!(cosine >= 1.0 - 1e-10);
        }
    }
}
