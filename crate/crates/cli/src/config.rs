//! Experiment configuration: a flat `key = value` text format plus the
//! built-in scenario defaults. CLI flags override file values.
//!
//! Recognised keys (all optional; unknown keys are rejected):
//!
//! ```text
//! geometry      = tripole-linear   # tripole-linear | crossed-dipole-linear |
//!                                  # crossed-dipole-planar | tripole-planar
//! sensors       = 4                # linear layouts
//! rows          = 2                # planar layouts
//! cols          = 3
//! spacing       = 0.5              # wavelengths
//! sources       = 10,20,15,30 ; 60,70,60,80   # theta,phi,gamma,eta in degrees
//! snr-db        = 0:5:30           # start:step:stop, or a comma list
//! noise-free    = false
//! snapshots     = 1000
//! trials        = 50
//! seed          = 12345
//! grid-step-doa = 1.0              # degrees
//! grid-step-pol = 1.0
//! refine        = true
//! method        = det              # comma list of det | eig | music4d
//! out           = results.csv
//! ```

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use vsarray::array::{ArrayGeometry, SensorKind, SourceParams};
use vsarray::music::Method;

/// Fully resolved experiment parameters.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub geometry: ArrayGeometry,
    /// (θ, φ, γ, η) per source, degrees.
    pub sources_deg: Vec<[f64; 4]>,
    /// SNR sweep in dB (σ_n² = 1, σ_s² = 10^(SNR/10), equal across sources).
    pub snr_db: Vec<f64>,
    pub noise_free: bool,
    pub snapshots: usize,
    pub trials: usize,
    pub seed: u64,
    pub grid_step_doa: f64,
    pub grid_step_pol: f64,
    pub refine: bool,
    pub methods: Vec<Method>,
    pub out: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    /// Desk-scale defaults on the two-source four-tripole scenario.
    fn default() -> Self {
        Self {
            geometry: ArrayGeometry::linear(SensorKind::Tripole, 4).unwrap(),
            sources_deg: vec![[10.0, 20.0, 15.0, 30.0], [60.0, 70.0, 60.0, 80.0]],
            snr_db: (0..=6).map(|i| 5.0 * i as f64).collect(),
            noise_free: false,
            snapshots: 1000,
            trials: 50,
            seed: 12345,
            grid_step_doa: 1.0,
            grid_step_pol: 1.0,
            refine: true,
            methods: vec![Method::Reduced2DDet],
            out: None,
        }
    }
}

impl ExperimentConfig {
    /// Single-source five-tripole/crossed-dipole spectrum scenario.
    pub fn spectrum_default() -> Self {
        Self {
            geometry: ArrayGeometry::linear(SensorKind::Tripole, 5).unwrap(),
            sources_deg: vec![[30.0, 80.0, 20.0, 50.0]],
            noise_free: true,
            ..Self::default()
        }
    }

    pub fn sources(&self) -> Result<Vec<SourceParams>> {
        self.sources_deg
            .iter()
            .map(|s| {
                SourceParams::from_degrees(s[0], s[1], s[2], s[3])
                    .map_err(|e| anyhow!("bad source {s:?}: {e}"))
            })
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            bail!("trials must be >= 1");
        }
        if self.snr_db.is_empty() && !self.noise_free {
            bail!("snr sweep is empty and noise-free is not set");
        }
        if self.grid_step_doa <= 0.0 || self.grid_step_pol <= 0.0 {
            bail!("grid steps must be positive");
        }
        self.sources()?;
        Ok(())
    }

    /// Apply `key = value` lines from a config file on top of the defaults.
    pub fn apply_file(&mut self, text: &str) -> Result<()> {
        let mut geometry_name: Option<String> = None;
        let mut sensors: Option<usize> = None;
        let mut rows: Option<usize> = None;
        let mut cols: Option<usize> = None;
        let mut spacing: Option<f64> = None;

        for (lineno, raw_line) in text.lines().enumerate() {
            let line = match raw_line.find('#') {
                Some(i) => &raw_line[..i],
                None => raw_line,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {}: expected 'key = value'", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let ctx = || format!("line {} ({key})", lineno + 1);
            match key {
                "geometry" => geometry_name = Some(value.to_string()),
                "sensors" => sensors = Some(value.parse().with_context(ctx)?),
                "rows" => rows = Some(value.parse().with_context(ctx)?),
                "cols" => cols = Some(value.parse().with_context(ctx)?),
                "spacing" => spacing = Some(value.parse().with_context(ctx)?),
                "sources" => self.sources_deg = parse_sources(value).with_context(ctx)?,
                "snr-db" => self.snr_db = parse_sweep(value).with_context(ctx)?,
                "noise-free" => self.noise_free = value.parse().with_context(ctx)?,
                "snapshots" => self.snapshots = value.parse().with_context(ctx)?,
                "trials" => self.trials = value.parse().with_context(ctx)?,
                "seed" => self.seed = value.parse().with_context(ctx)?,
                "grid-step-doa" => self.grid_step_doa = value.parse().with_context(ctx)?,
                "grid-step-pol" => self.grid_step_pol = value.parse().with_context(ctx)?,
                "refine" => self.refine = value.parse().with_context(ctx)?,
                "method" => self.methods = parse_methods(value)?,
                "out" => self.out = Some(PathBuf::from(value)),
                other => bail!("line {}: unknown key '{other}'", lineno + 1),
            }
        }

        if geometry_name.is_some()
            || sensors.is_some()
            || rows.is_some()
            || cols.is_some()
            || spacing.is_some()
        {
            self.geometry = build_geometry(
                geometry_name.as_deref().unwrap_or("tripole-linear"),
                sensors,
                rows,
                cols,
                spacing,
            )?;
        }
        Ok(())
    }
}

pub fn build_geometry(
    name: &str,
    sensors: Option<usize>,
    rows: Option<usize>,
    cols: Option<usize>,
    spacing: Option<f64>,
) -> Result<ArrayGeometry> {
    use vsarray::array::ArrayLayout;
    let (kind, planar) = match name {
        "tripole-linear" | "tripole" => (SensorKind::Tripole, false),
        "crossed-dipole-linear" | "crossed-dipole" => (SensorKind::CrossedDipole, false),
        "crossed-dipole-planar" => (SensorKind::CrossedDipole, true),
        "tripole-planar" => (SensorKind::Tripole, true),
        other => bail!(
            "unknown geometry '{other}' (expected tripole-linear, crossed-dipole-linear, \
             crossed-dipole-planar or tripole-planar)"
        ),
    };
    let layout = if planar {
        ArrayLayout::Planar {
            rows: rows.unwrap_or(2),
            cols: cols.unwrap_or(3),
        }
    } else {
        ArrayLayout::Linear {
            sensors: sensors.unwrap_or(4),
        }
    };
    ArrayGeometry::new(kind, layout, spacing.unwrap_or(0.5)).map_err(|e| anyhow!("{e}"))
}

fn parse_sources(value: &str) -> Result<Vec<[f64; 4]>> {
    value
        .split(';')
        .map(|tuple| {
            let parts: Vec<f64> = tuple
                .split(',')
                .map(|p| p.trim().parse::<f64>().map_err(|e| anyhow!("{e}: '{p}'")))
                .collect::<Result<_>>()?;
            if parts.len() != 4 {
                bail!("source must be a theta,phi,gamma,eta 4-tuple, got '{tuple}'");
            }
            Ok([parts[0], parts[1], parts[2], parts[3]])
        })
        .collect()
}

/// `start:step:stop` (inclusive stop) or a comma list of dB values.
pub fn parse_sweep(value: &str) -> Result<Vec<f64>> {
    if value.contains(':') {
        let parts: Vec<f64> = value
            .split(':')
            .map(|p| p.trim().parse::<f64>().map_err(|e| anyhow!("{e}: '{p}'")))
            .collect::<Result<_>>()?;
        if parts.len() != 3 || parts[1] <= 0.0 || parts[2] < parts[0] {
            bail!("sweep must be start:step:stop with positive step, got '{value}'");
        }
        let n = ((parts[2] - parts[0]) / parts[1]).round() as usize;
        Ok((0..=n).map(|i| parts[0] + parts[1] * i as f64).collect())
    } else {
        value
            .split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|e| anyhow!("{e}: '{p}'")))
            .collect()
    }
}

pub fn parse_methods(value: &str) -> Result<Vec<Method>> {
    value
        .split(',')
        .map(|m| match m.trim() {
            "det" | "det2d" => Ok(Method::Reduced2DDet),
            "eig" | "mineig" | "mineig2d" => Ok(Method::Reduced2DEig),
            "music4d" | "4d" => Ok(Method::Music4D),
            other => bail!("unknown method '{other}' (expected det, eig or music4d)"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_config() {
        let mut cfg = ExperimentConfig::default();
        cfg.apply_file(
            "# comment\n\
             geometry = crossed-dipole-planar\n\
             rows = 2\n\
             cols = 3\n\
             sources = 30,80,20,50\n\
             snr-db = 0:10:30\n\
             snapshots = 500\n\
             trials = 7\n\
             seed = 99\n\
             grid-step-doa = 2.0\n\
             refine = false\n\
             method = det,music4d\n\
             out = x.csv\n",
        )
        .unwrap();
        assert_eq!(cfg.geometry.dof(), 12);
        assert_eq!(cfg.sources_deg, vec![[30.0, 80.0, 20.0, 50.0]]);
        assert_eq!(cfg.snr_db, vec![0.0, 10.0, 20.0, 30.0]);
        assert_eq!(cfg.snapshots, 500);
        assert_eq!(cfg.trials, 7);
        assert_eq!(cfg.seed, 99);
        assert_eq!(cfg.grid_step_doa, 2.0);
        assert!(!cfg.refine);
        assert_eq!(cfg.methods, vec![Method::Reduced2DDet, Method::Music4D]);
        assert_eq!(cfg.out, Some(PathBuf::from("x.csv")));
        cfg.validate().unwrap();
    }

    #[test]
    fn rejects_unknown_keys_and_bad_tuples() {
        let mut cfg = ExperimentConfig::default();
        assert!(cfg.apply_file("no-such-key = 1").is_err());
        assert!(cfg.apply_file("sources = 1,2,3").is_err());
        assert!(cfg.apply_file("snr-db = 10:0:20").is_err());
        assert!(cfg.apply_file("method = banana").is_err());
    }

    #[test]
    fn sweep_comma_list() {
        assert_eq!(parse_sweep("0, 10, 25").unwrap(), vec![0.0, 10.0, 25.0]);
        assert_eq!(parse_sweep("0:5:30").unwrap().len(), 7);
    }
}
