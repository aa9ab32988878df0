//! Fisher information and Cramér-Rao bounds for the unconditional
//! (stochastic-signal) model.
//!
//! The data model is zero-mean circular complex Gaussian with covariance
//! R(α) = Σ_m σ_m²·v_m v_mᴴ + σ_n²·I, so the single-snapshot Fisher entries
//! are tr(R⁻¹ ∂R/∂α_i R⁻¹ ∂R/∂α_j); K independent snapshots multiply the
//! information by K. Source powers and the noise power are treated as known;
//! the parameter vector is (θ₁, φ₁, γ₁, η₁, …, θ_M, φ_M, γ_M, η_M).

use nalgebra::{DMatrix, DVector, Matrix3x2, SymmetricEigen, Vector2};

use crate::array::{
    doa_matrix, polarisation_phasor, spatial_steering, ArrayGeometry, ArrayLayout, SourceParams,
};
use crate::signal::ideal_covariance;
use crate::{C64, Error, Result};

/// Parameter names in Fisher/CRB ordering.
pub const PARAM_NAMES: [&str; 4] = ["theta", "phi", "gamma", "eta"];

/// Geometry, sources and powers describing one estimation problem.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub geometry: ArrayGeometry,
    pub sources: Vec<SourceParams>,
    /// Per-source σ_s² (linear).
    pub powers: Vec<f64>,
    /// σ_n² per scalar component (linear).
    pub noise_power: f64,
}

impl Scenario {
    pub fn new(
        geometry: ArrayGeometry,
        sources: Vec<SourceParams>,
        powers: Vec<f64>,
        noise_power: f64,
    ) -> Result<Self> {
        if sources.is_empty() || sources.len() != powers.len() {
            return Err(Error::InvalidParameter(
                "scenario needs at least one source with a matching power".into(),
            ));
        }
        Ok(Self {
            geometry,
            sources,
            powers,
            noise_power,
        })
    }

    pub fn num_params(&self) -> usize {
        4 * self.sources.len()
    }
}

/// ∂a/∂θ and ∂a/∂φ for the spatial steering vector.
fn spatial_steering_derivatives(
    geometry: &ArrayGeometry,
    theta: f64,
    phi: f64,
) -> (DVector<C64>, DVector<C64>) {
    use std::f64::consts::TAU;
    let a = spatial_steering(geometry, theta, phi);
    let (st, ct) = (theta.sin(), theta.cos());
    let (sp, cp) = (phi.sin(), phi.cos());
    let d = geometry.spacing;
    match geometry.layout {
        ArrayLayout::Linear { sensors } => {
            let dth = DVector::from_fn(sensors, |n, _| {
                a[n] * C64::new(0.0, -TAU * d * n as f64 * ct * sp)
            });
            let dph = DVector::from_fn(sensors, |n, _| {
                a[n] * C64::new(0.0, -TAU * d * n as f64 * st * cp)
            });
            (dth, dph)
        }
        ArrayLayout::Planar { rows, cols } => {
            let n = rows * cols;
            let dth = DVector::from_fn(n, |i, _| {
                let (p, q) = ((i / cols) as f64, (i % cols) as f64);
                a[i] * C64::new(0.0, -TAU * d * ct * (p * cp + q * sp))
            });
            let dph = DVector::from_fn(n, |i, _| {
                let (p, q) = ((i / cols) as f64, (i % cols) as f64);
                a[i] * C64::new(0.0, -TAU * d * st * (-p * sp + q * cp))
            });
            (dth, dph)
        }
    }
}

fn omega_theta_derivative(theta: f64, phi: f64) -> Matrix3x2<f64> {
    let (st, ct) = (theta.sin(), theta.cos());
    let (sp, cp) = (phi.sin(), phi.cos());
    Matrix3x2::new(-st * cp, 0.0, -st * sp, 0.0, -ct, 0.0)
}

fn omega_phi_derivative(theta: f64, phi: f64) -> Matrix3x2<f64> {
    let ct = theta.cos();
    let (sp, cp) = (phi.sin(), phi.cos());
    Matrix3x2::new(-ct * sp, -cp, ct * cp, -sp, 0.0, 0.0)
}

fn real_mat_times_phasor(m: &Matrix3x2<f64>, g: &Vector2<C64>, components: usize) -> DVector<C64> {
    DVector::from_fn(components, |r, _| {
        C64::new(m[(r, 0)], 0.0) * g[0] + C64::new(m[(r, 1)], 0.0) * g[1]
    })
}

/// Analytic derivatives of the joint steering vector:
/// [∂v/∂θ, ∂v/∂φ, ∂v/∂γ, ∂v/∂η].
pub fn steering_derivatives(
    source: &SourceParams,
    geometry: &ArrayGeometry,
) -> [DVector<C64>; 4] {
    let comps = geometry.components_per_sensor();
    let a = spatial_steering(geometry, source.theta, source.phi);
    let (da_dth, da_dph) = spatial_steering_derivatives(geometry, source.theta, source.phi);
    let omega = doa_matrix(source.theta, source.phi).omega;
    let g = polarisation_phasor(source.gamma, source.eta);

    let p = real_mat_times_phasor(&omega, &g, comps);
    let dp_dth = real_mat_times_phasor(
        &omega_theta_derivative(source.theta, source.phi),
        &g,
        comps,
    );
    let dp_dph = real_mat_times_phasor(&omega_phi_derivative(source.theta, source.phi), &g, comps);

    let dg_dgamma = Vector2::new(
        C64::from_polar(source.gamma.cos(), source.eta),
        C64::new(-source.gamma.sin(), 0.0),
    );
    let dg_deta = Vector2::new(
        C64::new(0.0, 1.0) * C64::from_polar(source.gamma.sin(), source.eta),
        C64::new(0.0, 0.0),
    );
    let dp_dgamma = real_mat_times_phasor(&omega, &dg_dgamma, comps);
    let dp_deta = real_mat_times_phasor(&omega, &dg_deta, comps);

    let kron = crate::array::kron_vec;
    [
        kron(&da_dth, &p) + kron(&a, &dp_dth),
        kron(&da_dph, &p) + kron(&a, &dp_dph),
        kron(&a, &dp_dgamma),
        kron(&a, &dp_deta),
    ]
}

/// The 4M Hermitian derivatives ∂R/∂α, α ordered per source as (θ, φ, γ, η).
///
/// For the unconditional model, ∂R/∂α_{m,i} = σ_m²·(d_i v_mᴴ + v_m d_iᴴ).
pub fn covariance_derivatives(scenario: &Scenario) -> Vec<DMatrix<C64>> {
    let dof = scenario.geometry.dof();
    let mut out = Vec::with_capacity(scenario.num_params());
    for (source, &power) in scenario.sources.iter().zip(&scenario.powers) {
        let v = crate::array::joint_steering(&scenario.geometry, source);
        let derivs = steering_derivatives(source, &scenario.geometry);
        for d in derivs.iter() {
            let mut m = DMatrix::from_element(dof, dof, C64::new(0.0, 0.0));
            for r in 0..dof {
                for c in 0..dof {
                    m[(r, c)] = (d[r] * v[c].conj() + v[r] * d[c].conj()) * power;
                }
            }
            out.push(m);
        }
    }
    out
}

/// Real symmetric 4M×4M Fisher information matrix for K snapshots.
#[derive(Debug, Clone)]
pub struct FisherMatrix {
    pub data: DMatrix<f64>,
}

/// F_ij = K·tr(R⁻¹ ∂R/∂α_i R⁻¹ ∂R/∂α_j); requires σ_n² > 0 so R is invertible.
pub fn fisher_matrix(scenario: &Scenario, snapshots: usize) -> Result<FisherMatrix> {
    if !(scenario.noise_power > 0.0) {
        return Err(Error::Singular(
            "Fisher matrix needs sigma_n^2 > 0 (noise-free covariance is singular)".into(),
        ));
    }
    let r = ideal_covariance(
        &scenario.geometry,
        &scenario.sources,
        &scenario.powers,
        scenario.noise_power,
    )?;
    let r_inv = r
        .matrix()
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Singular("ideal covariance is not invertible".into()))?;

    let derivs = covariance_derivatives(scenario);
    let whitened: Vec<DMatrix<C64>> = derivs.iter().map(|d| &r_inv * d).collect();

    let n = scenario.num_params();
    let k = snapshots as f64;
    let mut f = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            // tr(E_i E_j) with E = R⁻¹·∂R; real for Hermitian ∂R and R.
            let mut tr = C64::new(0.0, 0.0);
            let (ei, ej) = (&whitened[i], &whitened[j]);
            for r_ in 0..ei.nrows() {
                for c in 0..ei.ncols() {
                    tr += ei[(r_, c)] * ej[(c, r_)];
                }
            }
            f[(i, j)] = k * tr.re;
            f[(j, i)] = f[(i, j)];
        }
    }
    Ok(FisherMatrix { data: f })
}

/// Per-source, per-parameter variance bounds.
#[derive(Debug, Clone)]
pub struct CrbReport {
    /// diag(F⁻¹) in radians², ordered per source as (θ, φ, γ, η).
    pub bounds_rad2: Vec<f64>,
    /// Condition number of the Fisher matrix.
    pub condition: f64,
}

impl CrbReport {
    pub fn bound_rad2(&self, source: usize, param: usize) -> f64 {
        self.bounds_rad2[4 * source + param]
    }

    /// √CRB in degrees, comparable with RMSE plots.
    pub fn sqrt_deg(&self, source: usize, param: usize) -> f64 {
        self.bound_rad2(source, param).sqrt().to_degrees()
    }
}

/// Maximum Fisher condition number before the bound is refused.
pub const MAX_CONDITION: f64 = 1e12;

/// Invert the Fisher matrix and report its diagonal.
pub fn crb_bounds(scenario: &Scenario, snapshots: usize) -> Result<CrbReport> {
    let f = fisher_matrix(scenario, snapshots)?;
    let n = f.data.nrows();
    let eig = SymmetricEigen::new(f.data.clone());
    let mut min_eig = f64::INFINITY;
    let mut max_eig = f64::NEG_INFINITY;
    let mut min_idx = 0;
    for (i, &e) in eig.eigenvalues.iter().enumerate() {
        if e < min_eig {
            min_eig = e;
            min_idx = i;
        }
        max_eig = max_eig.max(e);
    }
    let condition = if min_eig > 0.0 {
        max_eig / min_eig
    } else {
        f64::INFINITY
    };
    if min_eig <= 0.0 || condition > MAX_CONDITION {
        // name the parameter combination that is (nearly) unidentifiable
        let null = eig.eigenvectors.column(min_idx);
        let mut worst = 0;
        for i in 0..n {
            if null[i].abs() > null[worst].abs() {
                worst = i;
            }
        }
        return Err(Error::Singular(format!(
            "Fisher matrix is singular or ill-conditioned (condition {condition:.3e}); \
             the degenerate combination is dominated by {} of source {}",
            PARAM_NAMES[worst % 4],
            worst / 4 + 1
        )));
    }
    let mut bounds = vec![0.0; n];
    for (i, b) in bounds.iter_mut().enumerate() {
        let mut acc = 0.0;
        for k in 0..n {
            let vik = eig.eigenvectors[(i, k)];
            acc += vik * vik / eig.eigenvalues[k];
        }
        *b = acc;
    }
    Ok(CrbReport {
        bounds_rad2: bounds,
        condition,
    })
}
