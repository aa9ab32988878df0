//! Snapshot simulation under the narrowband vector-sensor model and the
//! sample/ideal covariance matrices.
//!
//! Source samples and noise are i.i.d. circular complex Gaussian. Generation
//! is fully determined by the config seed (ChaCha8); per-trial substreams are
//! obtained by seeding with `seed + trial_index`, so trials are reproducible
//! independently of execution order.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::array::{joint_steering, ArrayGeometry, SourceParams};
use crate::{C64, Error, Result};

/// Scenario + sampling parameters for one simulation run.
#[derive(Debug, Clone)]
pub struct SimulationConfig {
    pub sources: Vec<SourceParams>,
    /// Per-source signal power σ_s² (linear scale).
    pub source_powers: Vec<f64>,
    /// Noise variance σ_n² per scalar output component (linear scale).
    pub noise_power: f64,
    /// Snapshot count K.
    pub snapshots: usize,
    pub seed: u64,
}

impl SimulationConfig {
    /// Per-source SNR in dB, 10·log₁₀(σ_s²/σ_n²).
    pub fn snr_db(&self, source: usize) -> f64 {
        10.0 * (self.source_powers[source] / self.noise_power).log10()
    }

    fn validate(&self) -> Result<()> {
        if self.snapshots == 0 {
            return Err(Error::InvalidParameter("snapshots must be >= 1".into()));
        }
        if self.sources.len() != self.source_powers.len() {
            return Err(Error::InvalidParameter(format!(
                "{} sources but {} powers",
                self.sources.len(),
                self.source_powers.len()
            )));
        }
        if self.source_powers.iter().any(|&p| !(p > 0.0)) {
            return Err(Error::InvalidParameter("source powers must be positive".into()));
        }
        if self.noise_power < 0.0 {
            return Err(Error::InvalidParameter("noise power must be >= 0".into()));
        }
        if self.sources.is_empty() && self.noise_power == 0.0 {
            return Err(Error::DegenerateScenario(
                "no sources and no noise: data would be identically zero".into(),
            ));
        }
        for i in 0..self.sources.len() {
            for j in (i + 1)..self.sources.len() {
                if self.sources[i] == self.sources[j] {
                    return Err(Error::InvalidParameter(format!(
                        "sources {i} and {j} are identical"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Complex data matrix, one column per snapshot; rows = 3N or 2N components.
#[derive(Debug, Clone)]
pub struct SnapshotMatrix {
    pub data: DMatrix<C64>,
    pub geometry: ArrayGeometry,
}

impl SnapshotMatrix {
    pub fn snapshots(&self) -> usize {
        self.data.ncols()
    }
}

/// Hermitian positive semidefinite covariance matrix (3N or 2N square).
#[derive(Debug, Clone)]
pub struct CovarianceMatrix {
    data: DMatrix<C64>,
}

impl CovarianceMatrix {
    /// Validates Hermitian symmetry (to 1e−12, scaled) and positive
    /// semidefiniteness (min eigenvalue ≥ −1e−10·trace), then stores the
    /// exactly symmetrised matrix.
    pub fn new(data: DMatrix<C64>) -> Result<Self> {
        if data.nrows() != data.ncols() {
            return Err(Error::MatrixInvariant("covariance must be square".into()));
        }
        let scale = data.norm().max(1.0);
        let asym = (&data - data.adjoint()).norm();
        if asym > 1e-12 * scale {
            return Err(Error::MatrixInvariant(format!(
                "matrix is not Hermitian: |R - R^H| = {asym:e}"
            )));
        }
        let sym = (&data + data.adjoint()) * C64::new(0.5, 0.0);
        let trace = sym.trace().re;
        let min_eig = nalgebra::SymmetricEigen::new(sym.clone())
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -1e-10 * trace.abs().max(1.0) {
            return Err(Error::MatrixInvariant(format!(
                "matrix is not PSD: min eigenvalue {min_eig:e}"
            )));
        }
        Ok(Self { data: sym })
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.data
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }
}

fn circular_gaussian(rng: &mut ChaCha8Rng, variance: f64) -> C64 {
    let s = (variance / 2.0).sqrt();
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    C64::new(re * s, im * s)
}

/// Simulate K snapshots x[k] = Σ_m v_m·s_m[k] + n[k].
///
/// Draw order is fixed (per snapshot: source samples in order, then noise
/// components in order), so output is bit-identical for a given seed.
pub fn generate_snapshots(
    config: &SimulationConfig,
    geometry: &ArrayGeometry,
) -> Result<SnapshotMatrix> {
    config.validate()?;
    let dof = geometry.dof();
    let steering: Vec<DVector<C64>> = config
        .sources
        .iter()
        .map(|s| joint_steering(geometry, s))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut data = DMatrix::from_element(dof, config.snapshots, C64::new(0.0, 0.0));
    for k in 0..config.snapshots {
        for (m, v) in steering.iter().enumerate() {
            let s = circular_gaussian(&mut rng, config.source_powers[m]);
            for i in 0..dof {
                data[(i, k)] += v[i] * s;
            }
        }
        if config.noise_power > 0.0 {
            for i in 0..dof {
                data[(i, k)] += circular_gaussian(&mut rng, config.noise_power);
            }
        }
    }
    Ok(SnapshotMatrix {
        data,
        geometry: *geometry,
    })
}

/// Sample covariance R̂ = (1/K)·Σ_k x[k]x[k]ᴴ.
pub fn sample_covariance(snapshots: &SnapshotMatrix) -> CovarianceMatrix {
    let k = snapshots.snapshots() as f64;
    let r = (&snapshots.data * snapshots.data.adjoint()) / C64::new(k, 0.0);
    CovarianceMatrix::new(r).expect("X·Xᴴ/K is Hermitian PSD by construction")
}

/// Ideal (ensemble) covariance R = Σ_m σ_m²·v_m v_mᴴ + σ_n²·I.
pub fn ideal_covariance(
    geometry: &ArrayGeometry,
    sources: &[SourceParams],
    powers: &[f64],
    noise_power: f64,
) -> Result<CovarianceMatrix> {
    if sources.len() != powers.len() {
        return Err(Error::InvalidParameter(format!(
            "{} sources but {} powers",
            sources.len(),
            powers.len()
        )));
    }
    if noise_power < 0.0 {
        return Err(Error::InvalidParameter("noise power must be >= 0".into()));
    }
    let dof = geometry.dof();
    let mut r = DMatrix::from_diagonal_element(dof, dof, C64::new(noise_power, 0.0));
    for (source, &power) in sources.iter().zip(powers) {
        let v = joint_steering(geometry, source);
        for i in 0..dof {
            for j in 0..dof {
                r[(i, j)] += v[i] * v[j].conj() * power;
            }
        }
    }
    CovarianceMatrix::new(r)
}
