//! `vsarray` — experiment CLI for vector-sensor array DOA/polarisation
//! estimation: spectrum exports, Monte-Carlo RMSE sweeps with CRB reference,
//! estimator/geometry comparisons, ambiguity certification and search
//! complexity tables.

use std::path::PathBuf;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};

use vsarray_cli::complexity::complexity_report;
use vsarray_cli::config::{parse_methods, parse_sweep, ExperimentConfig};
use vsarray_cli::experiments::{
    geometry_label, run_ambiguity_report, run_crb_sweep, run_estimator_comparison,
    run_geometry_comparison, run_rmse_sweep, run_spectrum_export,
};
use vsarray_cli::output::{
    complexity_to_csv, crb_to_csv, rmse_to_csv, spectrum_sidecar_json, spectrum_to_csv, write_file,
};

#[derive(Parser)]
#[command(name = "vsarray", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every experiment subcommand; each overrides the
/// corresponding config-file key.
#[derive(Args, Clone, Default)]
struct CommonArgs {
    /// Flat key = value config file (see crates/cli/src/config.rs for keys).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Base RNG seed; per-trial substreams are seed + trial index.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// DOA grid step in degrees.
    #[arg(long)]
    grid_step_doa: Option<f64>,
    /// Polarisation grid step in degrees.
    #[arg(long)]
    grid_step_pol: Option<f64>,
    /// Monte-Carlo trial count.
    #[arg(long)]
    trials: Option<usize>,
    /// Snapshot count K.
    #[arg(long)]
    snapshots: Option<usize>,
    /// Comma list of estimators: det, eig, music4d.
    #[arg(long)]
    method: Option<String>,
    /// SNR sweep, start:step:stop in dB or a comma list.
    #[arg(long)]
    snr_db: Option<String>,
    /// Use the noise-free ideal covariance (spectrum/ambiguity scenarios).
    #[arg(long)]
    noise_free: Option<bool>,
    /// Geometry name: tripole-linear, crossed-dipole-linear,
    /// crossed-dipole-planar, tripole-planar.
    #[arg(long)]
    geometry: Option<String>,
    /// Sensor count for linear layouts.
    #[arg(long)]
    sensors: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Export a 2-D DOA spectrum (CSV grid + JSON sidecar).
    Spectrum(CommonArgs),
    /// Monte-Carlo RMSE vs SNR sweep with √CRB columns.
    Rmse(CommonArgs),
    /// Determinant vs minimum-eigenvalue estimators on shared per-trial data.
    CompareEstimators(CommonArgs),
    /// 4×1 linear tripole vs 2×3 planar crossed-dipole (equal dipole counts).
    CompareGeometry(CommonArgs),
    /// Cramér-Rao bounds across the SNR sweep.
    Crb(CommonArgs),
    /// Steering-vector ambiguity certification report.
    Ambiguity(CommonArgs),
    /// Exact multiplication counts of the three search algorithms.
    Complexity {
        /// Sensor count N.
        #[arg(long)]
        sensors: u64,
        /// Source count M (1 ≤ M < 3N).
        #[arg(long)]
        sources: u64,
        /// Search points per axis L (≥ 2).
        #[arg(long)]
        grid_points: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn resolve_config(base: ExperimentConfig, args: &CommonArgs) -> Result<ExperimentConfig> {
    let mut cfg = base;
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| anyhow!("reading config {}: {e}", path.display()))?;
        cfg.apply_file(&text)?;
    }
    if args.geometry.is_some() || args.sensors.is_some() {
        cfg.geometry = vsarray_cli::config::build_geometry(
            args.geometry.as_deref().unwrap_or("tripole-linear"),
            args.sensors,
            None,
            None,
            None,
        )?;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if let Some(out) = &args.out {
        cfg.out = Some(out.clone());
    }
    if let Some(step) = args.grid_step_doa {
        cfg.grid_step_doa = step;
    }
    if let Some(step) = args.grid_step_pol {
        cfg.grid_step_pol = step;
    }
    if let Some(trials) = args.trials {
        cfg.trials = trials;
    }
    if let Some(snapshots) = args.snapshots {
        cfg.snapshots = snapshots;
    }
    if let Some(method) = &args.method {
        cfg.methods = parse_methods(method)?;
    }
    if let Some(sweep) = &args.snr_db {
        cfg.snr_db = parse_sweep(sweep)?;
    }
    if let Some(noise_free) = args.noise_free {
        cfg.noise_free = noise_free;
    }
    Ok(cfg)
}

fn out_path(cfg: &ExperimentConfig, default: &str) -> PathBuf {
    cfg.out.clone().unwrap_or_else(|| PathBuf::from(default))
}

fn run() -> Result<()> {
    match Cli::parse().command {
        Command::Spectrum(args) => {
            let cfg = resolve_config(ExperimentConfig::spectrum_default(), &args)?;
            let grid = run_spectrum_export(&cfg)?;
            let csv_path = out_path(&cfg, "spectrum.csv");
            write_file(&csv_path, &spectrum_to_csv(&grid))?;
            let sidecar = spectrum_sidecar_json(
                &grid,
                &geometry_label(&cfg.geometry),
                &cfg.sources_deg,
                cfg.noise_free,
                if cfg.noise_free {
                    None
                } else {
                    cfg.snr_db.first().copied()
                },
                if cfg.noise_free { 0 } else { cfg.snapshots },
                cfg.seed,
                cfg.methods
                    .first()
                    .copied()
                    .unwrap_or(vsarray::music::Method::Reduced2DDet)
                    .label(),
            );
            let json_path = csv_path.with_extension("json");
            write_file(&json_path, &sidecar)?;
            println!(
                "wrote {} ({} cells) and {}",
                csv_path.display(),
                grid.len(),
                json_path.display()
            );
        }
        Command::Rmse(args) => {
            let base = ExperimentConfig {
                methods: vec![
                    vsarray::music::Method::Reduced2DDet,
                    vsarray::music::Method::Music4D,
                ],
                ..ExperimentConfig::default()
            };
            let cfg = resolve_config(base, &args)?;
            let table = run_rmse_sweep(&cfg)?;
            let path = out_path(&cfg, "rmse.csv");
            write_file(&path, &rmse_to_csv(&table))?;
            println!("wrote {} ({} rows)", path.display(), table.rows.len());
        }
        Command::CompareEstimators(args) => {
            let base = ExperimentConfig {
                sources_deg: vec![[10.0, 20.0, 15.0, 30.0]],
                ..ExperimentConfig::default()
            };
            let cfg = resolve_config(base, &args)?;
            let table = run_estimator_comparison(&cfg)?;
            let path = out_path(&cfg, "estimator_comparison.csv");
            write_file(&path, &rmse_to_csv(&table))?;
            println!("wrote {} ({} rows)", path.display(), table.rows.len());
        }
        Command::CompareGeometry(args) => {
            let cfg = resolve_config(ExperimentConfig::default(), &args)?;
            let table = run_geometry_comparison(&cfg)?;
            let path = out_path(&cfg, "geometry_comparison.csv");
            write_file(&path, &rmse_to_csv(&table))?;
            println!("wrote {} ({} rows)", path.display(), table.rows.len());
        }
        Command::Crb(args) => {
            let cfg = resolve_config(ExperimentConfig::default(), &args)?;
            let rows = run_crb_sweep(&cfg)?;
            let path = out_path(&cfg, "crb.csv");
            write_file(&path, &crb_to_csv(&rows))?;
            println!("wrote {} ({} rows)", path.display(), rows.len());
        }
        Command::Ambiguity(args) => {
            let cfg = resolve_config(ExperimentConfig::spectrum_default(), &args)?;
            let report = run_ambiguity_report(&cfg)?;
            let path = out_path(&cfg, "ambiguity_report.txt");
            write_file(&path, &report)?;
            print!("{report}");
            println!("wrote {}", path.display());
        }
        Command::Complexity {
            sensors,
            sources,
            grid_points,
            out,
        } => {
            let report = complexity_report(sensors, sources, grid_points)?;
            let csv = complexity_to_csv(&[report]);
            if let Some(path) = out {
                write_file(&path, &csv)?;
                println!("wrote {}", path.display());
            } else {
                print!("{csv}");
            }
        }
    }
    Ok(())
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
