//! Subspace decomposition and the MUSIC-type estimators: the joint 4-D
//! spectrum and the dimension-reduced 2-D DOA + 2-D polarisation searches.
//!
//! All spectra share one algebraic core. With B(θ, φ) the DOA basis (a ⊗ Ω for
//! tripoles, a ⊗ Ψ for crossed-dipoles) and G = Bᴴ·U_n·U_nᴴ·B the 2×2 noise
//! Gram matrix,
//!
//! * 4-D MUSIC:        F(θ, φ, γ, η) = 1 / gᴴGg          (since v = B·g)
//! * reduced min-eig:  f₁(θ, φ)      = 1 / λ_min(G)
//! * reduced det:      f₂(θ, φ)      = 1 / det(G)
//! * polarisation:     f₂(γ, η)      = 1 / gᴴGg  at fixed (θ̂, φ̂)
//!
//! det and λ_min of the 2×2 Hermitian G are evaluated in closed form.
//! Grid evaluation is parallel and deterministic (pure per-cell work, results
//! written by index).

use nalgebra::{DMatrix, SymmetricEigen};
use rayon::prelude::*;

use crate::array::{doa_basis_matrix, polarisation_phasor, ArrayGeometry};
use crate::signal::CovarianceMatrix;
use crate::{C64, Error, Result};

/// Default clip value for 1/x spectra.
pub const SPECTRUM_CAP: f64 = 1e12;

/// Eigenstructure of a covariance matrix split into signal and noise parts.
#[derive(Debug, Clone)]
pub struct SubspaceDecomposition {
    /// All eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    /// dof × M basis of the signal subspace.
    pub signal_basis: DMatrix<C64>,
    /// dof × (dof − M) basis of the noise subspace.
    pub noise_basis: DMatrix<C64>,
}

/// Eigendecompose R and split by the M largest eigenvalues.
pub fn decompose(r: &CovarianceMatrix, num_sources: usize) -> Result<SubspaceDecomposition> {
    let dof = r.dim();
    if num_sources >= dof {
        return Err(Error::TooManySources {
            sources: num_sources,
            dof,
        });
    }
    let eig = SymmetricEigen::new(r.matrix().clone());
    let mut order: Vec<usize> = (0..dof).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());

    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let signal_basis = DMatrix::from_fn(dof, num_sources, |r_, c| eig.eigenvectors[(r_, order[c])]);
    let noise_basis = DMatrix::from_fn(dof, dof - num_sources, |r_, c| {
        eig.eigenvectors[(r_, order[num_sources + c])]
    });
    Ok(SubspaceDecomposition {
        eigenvalues,
        signal_basis,
        noise_basis,
    })
}

/// One sampled search axis, degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct GridAxis {
    pub name: String,
    pub start_deg: f64,
    pub step_deg: f64,
    pub count: usize,
    /// Periodic axes (φ, η) have no hard bounds; refinement may cross the seam.
    pub periodic: bool,
}

impl GridAxis {
    /// Axis covering [start, stop] inclusive.
    pub fn inclusive(name: &str, start: f64, stop: f64, step: f64) -> Self {
        assert!(step > 0.0 && stop >= start);
        let count = ((stop - start) / step).round() as usize + 1;
        Self {
            name: name.into(),
            start_deg: start,
            step_deg: step,
            count,
            periodic: false,
        }
    }

    /// Periodic axis covering [start, stop) with stop − start one period.
    pub fn periodic(name: &str, start: f64, stop: f64, step: f64) -> Self {
        assert!(step > 0.0 && stop > start);
        let count = ((stop - start) / step).round() as usize;
        Self {
            name: name.into(),
            start_deg: start,
            step_deg: step,
            count,
            periodic: true,
        }
    }

    pub fn value(&self, index: usize) -> f64 {
        self.start_deg + self.step_deg * index as f64
    }

    pub fn end_deg(&self) -> f64 {
        self.value(self.count - 1)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.value(i))
    }
}

/// Sampled estimator values over a parameter grid, with the raw (pre-clip)
/// values kept for peak ordering and clipped values exposed for export.
#[derive(Debug, Clone)]
pub struct SpectrumGrid {
    pub axes: Vec<GridAxis>,
    raw: Vec<f64>,
    pub cap: f64,
}

impl SpectrumGrid {
    fn new(axes: Vec<GridAxis>, raw: Vec<f64>, cap: f64) -> Self {
        debug_assert_eq!(axes.iter().map(|a| a.count).product::<usize>(), raw.len());
        Self { axes, raw, cap }
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.count).collect()
    }

    /// Clipped (finite) value at a flat index.
    pub fn value_flat(&self, flat: usize) -> f64 {
        self.raw[flat].min(self.cap)
    }

    /// Pre-clip value at a flat index (may be +inf at exact nulls).
    pub fn raw_flat(&self, flat: usize) -> f64 {
        self.raw[flat]
    }

    pub fn value(&self, index: &[usize]) -> f64 {
        self.value_flat(self.flatten(index))
    }

    pub fn flatten(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.axes.len());
        let mut flat = 0;
        for (i, ax) in index.iter().zip(&self.axes) {
            debug_assert!(*i < ax.count);
            flat = flat * ax.count + i;
        }
        flat
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.axes.len()];
        for d in (0..self.axes.len()).rev() {
            idx[d] = flat % self.axes[d].count;
            flat /= self.axes[d].count;
        }
        idx
    }

    /// Axis values (degrees) at a multi-index.
    pub fn angles_deg(&self, index: &[usize]) -> Vec<f64> {
        index
            .iter()
            .zip(&self.axes)
            .map(|(&i, ax)| ax.value(i))
            .collect()
    }
}

/// 2×2 Hermitian noise Gram matrix G = Bᴴ·U_n·U_nᴴ·B together with the
/// candidate-basis Gram S = BᴴB.
///
/// The reduced spectra use basis-normalised denominators — det(G)/det(S), the
/// generalised minimum eigenvalue of (G, S) and the Rayleigh-style ratio
/// gᴴGg/gᴴSg. For tripoles Ω is orthonormal, so S = N·I and these equal the
/// plain det(G), λ_min(G) and gᴴGg up to the constant N; for crossed-dipoles
/// the normalisation removes the spurious horizon degeneracy (det Ψ = cosθ
/// vanishes at θ = 90°, where the candidate manifold collapses to rank one
/// and the unnormalised denominators go to zero without a source).
#[derive(Debug, Clone, Copy)]
struct NoiseGram {
    g00: f64,
    g11: f64,
    g01: C64,
    s00: f64,
    s11: f64,
    s01: f64,
}

/// Basis Grams below this are treated as degenerate (no valid candidate).
const BASIS_GRAM_FLOOR: f64 = 1e-12;

impl NoiseGram {
    fn compute(noise_basis: &DMatrix<C64>, geometry: &ArrayGeometry, theta: f64, phi: f64) -> Self {
        let b = doa_basis_matrix(geometry, theta, phi);
        let t = noise_basis.adjoint() * &b;
        let c0 = t.column(0);
        let c1 = t.column(1);
        let b0 = b.column(0);
        let b1 = b.column(1);
        NoiseGram {
            g00: c0.norm_squared(),
            g11: c1.norm_squared(),
            g01: c0.dotc(&c1),
            s00: b0.norm_squared(),
            s11: b1.norm_squared(),
            // S is real: the basis columns share the spatial factor a, whose
            // phases cancel, leaving ‖a‖²·(ωᵢᵀωⱼ)
            s01: b0.dotc(&b1).re,
        }
    }

    /// det(G), clamped to zero if rounding makes it negative.
    fn det(&self) -> f64 {
        (self.g00 * self.g11 - self.g01.norm_sqr()).max(0.0)
    }

    /// Smallest eigenvalue of G via the closed 2×2 Hermitian form.
    fn min_eigenvalue(&self) -> f64 {
        let half_tr = 0.5 * (self.g00 + self.g11);
        let half_diff = 0.5 * (self.g00 - self.g11);
        (half_tr - (half_diff * half_diff + self.g01.norm_sqr()).sqrt()).max(0.0)
    }

    #[cfg(test)]
    fn max_eigenvalue(&self) -> f64 {
        let half_tr = 0.5 * (self.g00 + self.g11);
        let half_diff = 0.5 * (self.g00 - self.g11);
        half_tr + (half_diff * half_diff + self.g01.norm_sqr()).sqrt()
    }

    fn det_s(&self) -> f64 {
        self.s00 * self.s11 - self.s01 * self.s01
    }

    /// Basis-normalised determinant denominator det(G)/det(S); infinite when
    /// the basis itself is degenerate so the cell cannot become a peak.
    fn det_normalised(&self) -> f64 {
        let ds = self.det_s();
        if ds < BASIS_GRAM_FLOOR {
            return f64::INFINITY;
        }
        self.det() / ds
    }

    /// Generalised minimum eigenvalue of (G, S): the smaller root of
    /// det(G − λS) = 0.
    fn min_eigenvalue_normalised(&self) -> f64 {
        let a = self.det_s();
        if a < BASIS_GRAM_FLOOR {
            return f64::INFINITY;
        }
        let b = self.g00 * self.s11 + self.g11 * self.s00 - 2.0 * self.s01 * self.g01.re;
        let c = self.det();
        let disc = (b * b - 4.0 * a * c).max(0.0);
        ((b - disc.sqrt()) / (2.0 * a)).max(0.0)
    }

    /// Rayleigh-style ratio gᴴGg / gᴴSg for a polarisation phasor g.
    fn quad_form(&self, gamma: f64, eta: f64) -> f64 {
        let g = polarisation_phasor(gamma, eta);
        let cross = (g[0].conj() * self.g01 * g[1]).re;
        let num = (self.g00 * g[0].norm_sqr() + self.g11 * g[1].norm_sqr() + 2.0 * cross).max(0.0);
        let den = self.s00 * g[0].norm_sqr()
            + self.s11 * g[1].norm_sqr()
            + 2.0 * self.s01 * (g[0].conj() * g[1]).re;
        if den < BASIS_GRAM_FLOOR {
            return f64::INFINITY;
        }
        num / den
    }
}

fn invert_denominator(den: f64) -> f64 {
    if den == f64::INFINITY {
        0.0
    } else if den > 0.0 {
        1.0 / den
    } else {
        f64::INFINITY
    }
}

fn doa_spectrum_with(
    noise_basis: &DMatrix<C64>,
    geometry: &ArrayGeometry,
    theta_axis: &GridAxis,
    phi_axis: &GridAxis,
    f: impl Fn(&NoiseGram) -> f64 + Sync + Send,
) -> SpectrumGrid {
    let f = &f;
    let raw: Vec<f64> = (0..theta_axis.count)
        .into_par_iter()
        .flat_map_iter(move |ti| {
            let theta = theta_axis.value(ti).to_radians();
            (0..phi_axis.count).map(move |pi| {
                let phi = phi_axis.value(pi).to_radians();
                let gram = NoiseGram::compute(noise_basis, geometry, theta, phi);
                invert_denominator(f(&gram))
            })
        })
        .collect();
    SpectrumGrid::new(vec![theta_axis.clone(), phi_axis.clone()], raw, SPECTRUM_CAP)
}

/// Determinant-based 2-D DOA spectrum f₂(θ, φ) = 1/det(G).
pub fn doa_spectrum_det(
    noise_basis: &DMatrix<C64>,
    geometry: &ArrayGeometry,
    theta_axis: &GridAxis,
    phi_axis: &GridAxis,
) -> SpectrumGrid {
    doa_spectrum_with(
        noise_basis,
        geometry,
        theta_axis,
        phi_axis,
        NoiseGram::det_normalised,
    )
}

/// Minimum-eigenvalue 2-D DOA spectrum f₁(θ, φ) = 1/λ_min(G).
pub fn doa_spectrum_mineig(
    noise_basis: &DMatrix<C64>,
    geometry: &ArrayGeometry,
    theta_axis: &GridAxis,
    phi_axis: &GridAxis,
) -> SpectrumGrid {
    doa_spectrum_with(
        noise_basis,
        geometry,
        theta_axis,
        phi_axis,
        NoiseGram::min_eigenvalue_normalised,
    )
}

/// Polarisation spectrum f₂(γ, η) = 1/(gᴴGg) with G fixed at (θ̂, φ̂);
/// the DOA basis is computed once and reused across the grid.
pub fn polarisation_spectrum(
    noise_basis: &DMatrix<C64>,
    geometry: &ArrayGeometry,
    theta_hat: f64,
    phi_hat: f64,
    gamma_axis: &GridAxis,
    eta_axis: &GridAxis,
) -> SpectrumGrid {
    let gram = NoiseGram::compute(noise_basis, geometry, theta_hat, phi_hat);
    let raw: Vec<f64> = (0..gamma_axis.count)
        .into_par_iter()
        .flat_map_iter(|gi| {
            let gamma = gamma_axis.value(gi).to_radians();
            let gram = gram;
            (0..eta_axis.count).map(move |ei| {
                let eta = eta_axis.value(ei).to_radians();
                invert_denominator(gram.quad_form(gamma, eta))
            })
        })
        .collect();
    SpectrumGrid::new(
        vec![gamma_axis.clone(), eta_axis.clone()],
        raw,
        SPECTRUM_CAP,
    )
}

/// Joint 4-D MUSIC spectrum F(θ, φ, γ, η) = 1/(vᴴU_nU_nᴴv).
pub fn music_spectrum_4d(
    noise_basis: &DMatrix<C64>,
    geometry: &ArrayGeometry,
    axes: &[GridAxis; 4],
) -> SpectrumGrid {
    let [theta_axis, phi_axis, gamma_axis, eta_axis] = axes;
    let pol_count = gamma_axis.count * eta_axis.count;
    let raw: Vec<f64> = (0..theta_axis.count)
        .into_par_iter()
        .flat_map_iter(|ti| {
            let theta = theta_axis.value(ti).to_radians();
            (0..phi_axis.count).flat_map(move |pi| {
                let phi = phi_axis.value(pi).to_radians();
                let gram = NoiseGram::compute(noise_basis, geometry, theta, phi);
                (0..pol_count).map(move |k| {
                    let gamma = gamma_axis.value(k / eta_axis.count).to_radians();
                    let eta = eta_axis.value(k % eta_axis.count).to_radians();
                    invert_denominator(gram.quad_form(gamma, eta))
                })
            })
        })
        .collect();
    SpectrumGrid::new(
        vec![
            theta_axis.clone(),
            phi_axis.clone(),
            gamma_axis.clone(),
            eta_axis.clone(),
        ],
        raw,
        SPECTRUM_CAP,
    )
}

/// The `m` highest regional maxima of the grid, each reported as the
/// lexicographically smallest cell of its plateau.
///
/// A regional maximum is a connected set of equal-valued cells (full Moore
/// neighbourhood: 8 neighbours in 2-D, 80 in 4-D) all of whose outside
/// neighbours have strictly smaller values. Ordering is by value descending
/// (pre-clip), ties by smallest flat index.
pub fn find_peaks(spectrum: &SpectrumGrid, m: usize) -> Result<Vec<Vec<usize>>> {
    let candidates = regional_maxima(spectrum);
    if candidates.len() < m {
        let listed: Vec<String> = candidates
            .iter()
            .map(|(v, flat)| format!("{:?}={v:.3e}", spectrum.unflatten(*flat)))
            .collect();
        return Err(Error::NotEnoughPeaks {
            found: candidates.len(),
            requested: m,
            detail: format!(": found [{}]", listed.join(", ")),
        });
    }
    Ok(candidates[..m]
        .iter()
        .map(|(_, flat)| spectrum.unflatten(*flat))
        .collect())
}

/// All regional maxima of the grid, ordered by value descending with ties by
/// smallest flat index. Shared machinery behind [`find_peaks`] and
/// [`select_peaks`].
fn regional_maxima(spectrum: &SpectrumGrid) -> Vec<(f64, usize)> {
    let shape = spectrum.shape();
    let ndim = shape.len();
    let total = spectrum.len();
    let mut visited = vec![false; total];
    let mut candidates: Vec<(f64, usize)> = Vec::new();

    let neighbours = |flat: usize, out: &mut Vec<usize>| {
        out.clear();
        let idx = spectrum.unflatten(flat);
        let mut offset = vec![-1isize; ndim];
        'outer: loop {
            if offset.iter().any(|&o| o != 0) {
                let mut ok = true;
                let mut nflat = 0usize;
                for d in 0..ndim {
                    let v = idx[d] as isize + offset[d];
                    if v < 0 || v >= shape[d] as isize {
                        ok = false;
                        break;
                    }
                    nflat = nflat * shape[d] + v as usize;
                }
                if ok {
                    out.push(nflat);
                }
            }
            for d in (0..ndim).rev() {
                offset[d] += 1;
                if offset[d] <= 1 {
                    continue 'outer;
                }
                offset[d] = -1;
            }
            break;
        }
    };

    let mut nbuf = Vec::with_capacity(3usize.pow(ndim as u32));
    for start in 0..total {
        if visited[start] {
            continue;
        }
        let val = spectrum.raw_flat(start);
        visited[start] = true;
        let mut stack = vec![start];
        let mut is_max = true;
        while let Some(cell) = stack.pop() {
            neighbours(cell, &mut nbuf);
            for &nb in &nbuf {
                let nv = spectrum.raw_flat(nb);
                if nv > val {
                    is_max = false;
                } else if nv == val && !visited[nb] {
                    visited[nb] = true;
                    stack.push(nb);
                }
            }
        }
        if is_max {
            candidates.push((val, start));
        }
    }
    candidates.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
    candidates
}

/// The `m` highest regional maxima separated by at least `separation_deg`
/// (Euclidean over the axes in degrees, wrapped on periodic axes). Greedy by
/// value: candidates closer than the separation to an already selected peak
/// are treated as part of that peak. This is the selection rule the
/// estimation pipeline uses — under noise one physical peak shatters into
/// several nearby regional maxima which must not crowd out weaker sources.
pub fn select_peaks(
    spectrum: &SpectrumGrid,
    m: usize,
    separation_deg: f64,
) -> Result<Vec<Vec<usize>>> {
    let candidates = regional_maxima(spectrum);
    let mut selected: Vec<Vec<usize>> = Vec::with_capacity(m);
    for (_, flat) in &candidates {
        if selected.len() == m {
            break;
        }
        let idx = spectrum.unflatten(*flat);
        let far_enough = selected.iter().all(|other| {
            let mut d2 = 0.0;
            for (dim, ax) in spectrum.axes.iter().enumerate() {
                let mut diff =
                    (idx[dim] as f64 - other[dim] as f64).abs() * ax.step_deg;
                if ax.periodic {
                    let period = ax.step_deg * ax.count as f64;
                    diff = diff.min(period - diff);
                }
                d2 += diff * diff;
            }
            d2.sqrt() >= separation_deg
        });
        if far_enough {
            selected.push(idx);
        }
    }
    if selected.len() < m {
        return Err(Error::NotEnoughPeaks {
            found: selected.len(),
            requested: m,
            detail: format!(
                " after {separation_deg} deg separation ({} raw maxima)",
                candidates.len()
            ),
        });
    }
    Ok(selected)
}

/// Estimator selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Direct joint search over (θ, φ, γ, η).
    Music4D,
    /// Determinant-based 2-D DOA search + 2-D polarisation search.
    Reduced2DDet,
    /// Minimum-eigenvalue 2-D DOA search + 2-D polarisation search.
    Reduced2DEig,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Method::Music4D => "music4d",
            Method::Reduced2DDet => "det2d",
            Method::Reduced2DEig => "mineig2d",
        }
    }
}

/// Search axes for all four parameters plus the refinement switch.
#[derive(Debug, Clone)]
pub struct SearchGrid {
    pub theta: GridAxis,
    pub phi: GridAxis,
    pub gamma: GridAxis,
    pub eta: GridAxis,
    /// One extra pass on a 10× finer grid spanning ±1 coarse cell per peak.
    pub refine: bool,
    /// Minimum separation between selected DOA peaks, degrees (sources closer
    /// than this are not resolved).
    pub peak_separation_deg: f64,
}

impl SearchGrid {
    /// Full-range axes: θ ∈ [0°, 90°], φ ∈ [0°, 360°), γ ∈ [0°, 90°],
    /// η ∈ [−180°, 180°).
    pub fn full(doa_step_deg: f64, pol_step_deg: f64, refine: bool) -> Self {
        Self {
            theta: GridAxis::inclusive("theta_deg", 0.0, 90.0, doa_step_deg),
            phi: GridAxis::periodic("phi_deg", 0.0, 360.0, doa_step_deg),
            gamma: GridAxis::inclusive("gamma_deg", 0.0, 90.0, pol_step_deg),
            eta: GridAxis::periodic("eta_deg", -180.0, 180.0, pol_step_deg),
            refine,
            peak_separation_deg: DEFAULT_PEAK_SEPARATION_DEG,
        }
    }

    /// Axes restricted to ±window around a centre point (degrees), clamped to
    /// the physical θ/γ ranges. Used for desk-scale 4-D searches.
    pub fn windowed(centre_deg: [f64; 4], window_deg: f64, step_deg: f64, refine: bool) -> Self {
        let clamped = |c: f64, lo: f64, hi: f64| {
            let start = (c - window_deg).max(lo);
            let stop = (c + window_deg).min(hi);
            (start, stop)
        };
        let (t0, t1) = clamped(centre_deg[0], 0.0, 90.0);
        let (g0, g1) = clamped(centre_deg[2], 0.0, 90.0);
        Self {
            theta: GridAxis::inclusive("theta_deg", t0, t1, step_deg),
            phi: GridAxis::inclusive(
                "phi_deg",
                centre_deg[1] - window_deg,
                centre_deg[1] + window_deg,
                step_deg,
            ),
            gamma: GridAxis::inclusive("gamma_deg", g0, g1, step_deg),
            eta: GridAxis::inclusive(
                "eta_deg",
                centre_deg[3] - window_deg,
                centre_deg[3] + window_deg,
                step_deg,
            ),
            refine,
            peak_separation_deg: DEFAULT_PEAK_SEPARATION_DEG,
        }
    }
}

/// Default minimum separation between selected peaks.
pub const DEFAULT_PEAK_SEPARATION_DEG: f64 = 5.0;

/// One source's estimated parameters, degrees, canonical ranges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SourceEstimate {
    pub theta_deg: f64,
    pub phi_deg: f64,
    pub gamma_deg: f64,
    pub eta_deg: f64,
}

/// Estimates for all sources plus the method that produced them.
#[derive(Debug, Clone)]
pub struct EstimateSet {
    pub estimates: Vec<SourceEstimate>,
    pub method: Method,
}

fn wrap_deg_360(x: f64) -> f64 {
    let mut r = x % 360.0;
    if r < 0.0 {
        r += 360.0;
    }
    if r >= 360.0 {
        r = 0.0;
    }
    r
}

fn wrap_deg_180(x: f64) -> f64 {
    let mut r = x % 360.0;
    if r < -180.0 {
        r += 360.0;
    }
    if r >= 180.0 {
        r -= 360.0;
    }
    r
}

/// Argmax of a scalar function over a small 2-D degree grid; ties resolved by
/// scan order (lexicographic).
fn argmax_2d(
    xs: &[f64],
    ys: &[f64],
    mut f: impl FnMut(f64, f64) -> f64,
) -> (f64, f64) {
    let mut best = f64::NEG_INFINITY;
    let (mut bx, mut by) = (xs[0], ys[0]);
    for &x in xs {
        for &y in ys {
            let v = f(x, y);
            if v > best {
                best = v;
                bx = x;
                by = y;
            }
        }
    }
    (bx, by)
}

fn refined_steps(axis: &GridAxis, centre: f64) -> Vec<f64> {
    let fine = axis.step_deg / 10.0;
    let mut lo = centre - axis.step_deg;
    let mut hi = centre + axis.step_deg;
    if !axis.periodic {
        lo = lo.max(axis.start_deg);
        hi = hi.min(axis.end_deg());
    }
    let n = ((hi - lo) / fine).round() as usize;
    (0..=n).map(|i| lo + fine * i as f64).collect()
}

/// Full estimation pipeline from a covariance matrix.
///
/// Reduced methods: DOA spectrum → M peaks → per-peak polarisation spectrum.
/// `Music4D`: a single joint search over the grid's four axes (use
/// [`SearchGrid::windowed`] for desk-scale runs; the full 1° 4-D grid does not
/// fit in memory).
pub fn estimate(
    r: &CovarianceMatrix,
    geometry: &ArrayGeometry,
    num_sources: usize,
    method: Method,
    grid: &SearchGrid,
) -> Result<EstimateSet> {
    let dec = decompose(r, num_sources)?;
    estimate_with_subspaces(&dec, geometry, num_sources, method, grid)
}

/// Estimation from an existing decomposition, searching for `num_peaks`
/// sources on the given grid. Separating this from [`estimate`] lets a
/// windowed search reuse one full-order decomposition across several
/// per-source windows (the noise subspace must always be taken at the true
/// source count).
pub fn estimate_with_subspaces(
    dec: &SubspaceDecomposition,
    geometry: &ArrayGeometry,
    num_peaks: usize,
    method: Method,
    grid: &SearchGrid,
) -> Result<EstimateSet> {
    let un = &dec.noise_basis;
    let mut estimates = Vec::with_capacity(num_peaks);

    match method {
        Method::Music4D => {
            let axes = [
                grid.theta.clone(),
                grid.phi.clone(),
                grid.gamma.clone(),
                grid.eta.clone(),
            ];
            let spectrum = music_spectrum_4d(un, geometry, &axes);
            let peaks = select_peaks(&spectrum, num_peaks, grid.peak_separation_deg)?;
            for peak in peaks {
                let at = spectrum.angles_deg(&peak);
                let (mut th, mut ph, mut ga, mut et) = (at[0], at[1], at[2], at[3]);
                if grid.refine {
                    // refine DOA with polarisation fixed, then polarisation.
                    let (t2, p2) = argmax_2d(
                        &refined_steps(&grid.theta, th),
                        &refined_steps(&grid.phi, ph),
                        |t, p| {
                            let gram =
                                NoiseGram::compute(un, geometry, t.to_radians(), p.to_radians());
                            invert_denominator(
                                gram.quad_form(ga.to_radians(), et.to_radians()),
                            )
                        },
                    );
                    th = t2;
                    ph = p2;
                    let gram =
                        NoiseGram::compute(un, geometry, th.to_radians(), ph.to_radians());
                    let (g2, e2) = argmax_2d(
                        &refined_steps(&grid.gamma, ga),
                        &refined_steps(&grid.eta, et),
                        |gm, e| invert_denominator(
                            gram.quad_form(gm.to_radians(), e.to_radians()),
                        ),
                    );
                    ga = g2;
                    et = e2;
                }
                estimates.push(SourceEstimate {
                    theta_deg: th.clamp(0.0, 90.0),
                    phi_deg: wrap_deg_360(ph),
                    gamma_deg: ga.clamp(0.0, 90.0),
                    eta_deg: wrap_deg_180(et),
                });
            }
        }
        Method::Reduced2DDet | Method::Reduced2DEig => {
            let doa_spec = match method {
                Method::Reduced2DDet => doa_spectrum_det(un, geometry, &grid.theta, &grid.phi),
                _ => doa_spectrum_mineig(un, geometry, &grid.theta, &grid.phi),
            };
            let peaks = select_peaks(&doa_spec, num_peaks, grid.peak_separation_deg)?;
            for peak in peaks {
                let at = doa_spec.angles_deg(&peak);
                let (mut th, mut ph) = (at[0], at[1]);
                if grid.refine {
                    let (t2, p2) = argmax_2d(
                        &refined_steps(&grid.theta, th),
                        &refined_steps(&grid.phi, ph),
                        |t, p| {
                            let gram =
                                NoiseGram::compute(un, geometry, t.to_radians(), p.to_radians());
                            invert_denominator(match method {
                                Method::Reduced2DDet => gram.det(),
                                _ => gram.min_eigenvalue(),
                            })
                        },
                    );
                    th = t2;
                    ph = p2;
                }
                let pol_spec = polarisation_spectrum(
                    un,
                    geometry,
                    th.to_radians(),
                    ph.to_radians(),
                    &grid.gamma,
                    &grid.eta,
                );
                let pol_peak = find_peaks(&pol_spec, 1)?;
                let pat = pol_spec.angles_deg(&pol_peak[0]);
                let (mut ga, mut et) = (pat[0], pat[1]);
                if grid.refine {
                    let gram =
                        NoiseGram::compute(un, geometry, th.to_radians(), ph.to_radians());
                    let (g2, e2) = argmax_2d(
                        &refined_steps(&grid.gamma, ga),
                        &refined_steps(&grid.eta, et),
                        |gm, e| invert_denominator(
                            gram.quad_form(gm.to_radians(), e.to_radians()),
                        ),
                    );
                    ga = g2;
                    et = e2;
                }
                estimates.push(SourceEstimate {
                    theta_deg: th.clamp(0.0, 90.0),
                    phi_deg: wrap_deg_360(ph),
                    gamma_deg: ga.clamp(0.0, 90.0),
                    eta_deg: wrap_deg_180(et),
                });
            }
        }
    }
    Ok(EstimateSet { estimates, method })
}
