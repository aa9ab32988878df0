//! Array response model: steering vectors, polarisation vectors and joint
//! steering vectors for linear/planar arrays of tripoles or crossed-dipoles.
//!
//! Conventions:
//! * θ is elevation measured from the z axis (0 = zenith), φ azimuth from the
//!   x axis; signals arrive from the upper hemisphere (θ ∈ [0, π/2]).
//! * The linear array lies along the y axis, so its phase depends on sinθ·sinφ
//!   only. A planar array sits in the x–y plane, rows stepping along x and
//!   columns along y, flattened row-major.
//! * Joint steering vectors are Kronecker products a ⊗ p with the sensor index
//!   outer and the field component index inner (v[3n+c] = aₙ·p_c).

use nalgebra::{DMatrix, DVector, Matrix2, Matrix3x2, Vector2};
use std::f64::consts::{PI, TAU};

use crate::{C64, Error, Result};

/// Tolerance used by the linear-polarisation predicate (radians).
pub const LINEAR_POL_TOL: f64 = 1e-9;

/// Kind of co-located dipole bundle at each array position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SensorKind {
    /// Three mutually orthogonal dipoles along x, y, z.
    Tripole,
    /// Two orthogonal dipoles along x, y.
    CrossedDipole,
}

impl SensorKind {
    pub fn components_per_sensor(self) -> usize {
        match self {
            SensorKind::Tripole => 3,
            SensorKind::CrossedDipole => 2,
        }
    }
}

/// Physical arrangement of the sensor positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrayLayout {
    /// Uniform linear array along the y axis.
    Linear { sensors: usize },
    /// Uniform rectangular array in the x–y plane; rows step along x,
    /// columns along y, flattened row-major.
    Planar { rows: usize, cols: usize },
}

impl ArrayLayout {
    pub fn sensor_count(&self) -> usize {
        match *self {
            ArrayLayout::Linear { sensors } => sensors,
            ArrayLayout::Planar { rows, cols } => rows * cols,
        }
    }
}

/// A uniform array of identical vector sensors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayGeometry {
    pub kind: SensorKind,
    pub layout: ArrayLayout,
    /// Inter-element spacing in wavelengths.
    pub spacing: f64,
}

/// Default inter-element spacing (half a wavelength).
pub const DEFAULT_SPACING: f64 = 0.5;

impl ArrayGeometry {
    pub fn new(kind: SensorKind, layout: ArrayLayout, spacing: f64) -> Result<Self> {
        if layout.sensor_count() == 0 {
            return Err(Error::InvalidParameter(
                "array must contain at least one sensor".into(),
            ));
        }
        if !(spacing > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "spacing must be positive, got {spacing}"
            )));
        }
        Ok(Self { kind, layout, spacing })
    }

    /// Uniform linear array with λ/2 spacing.
    pub fn linear(kind: SensorKind, sensors: usize) -> Result<Self> {
        Self::new(kind, ArrayLayout::Linear { sensors }, DEFAULT_SPACING)
    }

    /// Uniform rectangular array with λ/2 spacing.
    pub fn planar(kind: SensorKind, rows: usize, cols: usize) -> Result<Self> {
        Self::new(kind, ArrayLayout::Planar { rows, cols }, DEFAULT_SPACING)
    }

    pub fn sensor_count(&self) -> usize {
        self.layout.sensor_count()
    }

    pub fn components_per_sensor(&self) -> usize {
        self.kind.components_per_sensor()
    }

    /// Total dipole count = output dimension of the array (3N or 2N).
    pub fn dof(&self) -> usize {
        self.sensor_count() * self.components_per_sensor()
    }
}

/// DOA and polarisation of one impinging signal, radians.
///
/// θ ∈ [0, π/2], φ ∈ [0, 2π), γ ∈ [0, π/2], η ∈ [−π, π). φ and η are wrapped
/// into range on construction; θ and γ outside their closed intervals are
/// rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SourceParams {
    pub theta: f64,
    pub phi: f64,
    pub gamma: f64,
    pub eta: f64,
}

impl SourceParams {
    pub fn new(theta: f64, phi: f64, gamma: f64, eta: f64) -> Result<Self> {
        const EPS: f64 = 1e-12;
        if !(0.0 - EPS..=PI / 2.0 + EPS).contains(&theta) || !theta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "theta must lie in [0, pi/2], got {theta}"
            )));
        }
        if !(0.0 - EPS..=PI / 2.0 + EPS).contains(&gamma) || !gamma.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "gamma must lie in [0, pi/2], got {gamma}"
            )));
        }
        if !phi.is_finite() || !eta.is_finite() {
            return Err(Error::InvalidParameter("phi/eta must be finite".into()));
        }
        Ok(Self {
            theta: theta.clamp(0.0, PI / 2.0),
            phi: wrap_to_2pi(phi),
            gamma: gamma.clamp(0.0, PI / 2.0),
            eta: wrap_to_pi(eta),
        })
    }

    pub fn from_degrees(theta: f64, phi: f64, gamma: f64, eta: f64) -> Result<Self> {
        Self::new(
            theta.to_radians(),
            phi.to_radians(),
            gamma.to_radians(),
            eta.to_radians(),
        )
    }

    /// (θ, φ, γ, η) in degrees.
    pub fn to_degrees(&self) -> [f64; 4] {
        [
            self.theta.to_degrees(),
            self.phi.to_degrees(),
            self.gamma.to_degrees(),
            self.eta.to_degrees(),
        ]
    }

    /// True iff γ = 0, γ = π/2 or η = 0 within [`LINEAR_POL_TOL`].
    pub fn is_linearly_polarised(&self) -> bool {
        self.gamma.abs() <= LINEAR_POL_TOL
            || (self.gamma - PI / 2.0).abs() <= LINEAR_POL_TOL
            || self.eta.abs() <= LINEAR_POL_TOL
    }
}

/// Wrap an angle into [0, 2π).
pub fn wrap_to_2pi(x: f64) -> f64 {
    let mut r = x % TAU;
    if r < 0.0 {
        r += TAU;
    }
    if r >= TAU {
        r = 0.0;
    }
    r
}

/// Wrap an angle into [−π, π).
pub fn wrap_to_pi(x: f64) -> f64 {
    let mut r = x % TAU;
    if r < -PI {
        r += TAU;
    }
    if r >= PI {
        r -= TAU;
    }
    r
}

/// The DOA component Ω (3×2) and its top 2×2 block Ψ.
///
/// Ω's columns are the two unit vectors orthogonal to the arrival direction;
/// det Ψ = cos θ.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarisationBasis {
    pub omega: Matrix3x2<f64>,
    pub psi: Matrix2<f64>,
}

/// Spatial phase steering vector a(θ, φ), one entry per sensor.
///
/// Linear: aₙ = exp(−j·2π·d·n·sinθ·sinφ). Planar (row p, column q):
/// exp(−j·2π·d·(p·sinθ·cosφ + q·sinθ·sinφ)), row-major flattening.
pub fn spatial_steering(geometry: &ArrayGeometry, theta: f64, phi: f64) -> DVector<C64> {
    let st = theta.sin();
    match geometry.layout {
        ArrayLayout::Linear { sensors } => {
            let k = -TAU * geometry.spacing * st * phi.sin();
            DVector::from_fn(sensors, |n, _| C64::from_polar(1.0, k * n as f64))
        }
        ArrayLayout::Planar { rows, cols } => {
            let kx = -TAU * geometry.spacing * st * phi.cos();
            let ky = -TAU * geometry.spacing * st * phi.sin();
            DVector::from_fn(rows * cols, |i, _| {
                let (p, q) = (i / cols, i % cols);
                C64::from_polar(1.0, kx * p as f64 + ky * q as f64)
            })
        }
    }
}

/// The DOA component matrix Ω(θ, φ) and its 2×2 block Ψ.
pub fn doa_matrix(theta: f64, phi: f64) -> PolarisationBasis {
    let (st, ct) = (theta.sin(), theta.cos());
    let (sp, cp) = (phi.sin(), phi.cos());
    let omega = Matrix3x2::new(ct * cp, -sp, ct * sp, cp, -st, 0.0);
    let psi = Matrix2::new(ct * cp, -sp, ct * sp, cp);
    PolarisationBasis { omega, psi }
}

/// Polarisation phasor g(γ, η) = [sinγ·e^{jη}, cosγ]; always unit norm.
pub fn polarisation_phasor(gamma: f64, eta: f64) -> Vector2<C64> {
    Vector2::new(
        C64::from_polar(gamma.sin(), eta),
        C64::new(gamma.cos(), 0.0),
    )
}

/// Per-sensor complex response p = Ω·g (tripole, unit norm) or its first two
/// components q = Ψ·g (crossed-dipole).
pub fn polarisation_vector(source: &SourceParams, kind: SensorKind) -> DVector<C64> {
    let basis = doa_matrix(source.theta, source.phi);
    let g = polarisation_phasor(source.gamma, source.eta);
    let n = kind.components_per_sensor();
    DVector::from_fn(n, |c, _| {
        C64::new(basis.omega[(c, 0)], 0.0) * g[0] + C64::new(basis.omega[(c, 1)], 0.0) * g[1]
    })
}

/// Joint steering vector v = a ⊗ p (tripole, ‖v‖ = √N) or w = a ⊗ q
/// (crossed-dipole); length 3N or 2N.
pub fn joint_steering(geometry: &ArrayGeometry, source: &SourceParams) -> DVector<C64> {
    let a = spatial_steering(geometry, source.theta, source.phi);
    let p = polarisation_vector(source, geometry.kind);
    kron_vec(&a, &p)
}

/// Kronecker product of two complex vectors, first index outer.
pub fn kron_vec(a: &DVector<C64>, b: &DVector<C64>) -> DVector<C64> {
    let mut out = DVector::from_element(a.len() * b.len(), C64::new(0.0, 0.0));
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i * b.len() + j] = ai * bj;
        }
    }
    out
}

/// DOA steering matrix B = a ⊗ Ω (3N×2); satisfies B·g = v for every g.
///
/// Defined for tripole geometries only; the crossed-dipole reduction loses the
/// z component and is rejected.
pub fn doa_steering_matrix(
    geometry: &ArrayGeometry,
    theta: f64,
    phi: f64,
) -> Result<DMatrix<C64>> {
    if geometry.kind != SensorKind::Tripole {
        return Err(Error::UnsupportedGeometry(
            "doa_steering_matrix is defined for tripole arrays".into(),
        ));
    }
    Ok(doa_basis_matrix(geometry, theta, phi))
}

/// Geometry-generic DOA basis: a ⊗ Ω for tripoles (3N×2), a ⊗ Ψ for
/// crossed-dipoles (2N×2). Internal building block for the reduced estimators.
pub(crate) fn doa_basis_matrix(geometry: &ArrayGeometry, theta: f64, phi: f64) -> DMatrix<C64> {
    let a = spatial_steering(geometry, theta, phi);
    let basis = doa_matrix(theta, phi);
    let c = geometry.components_per_sensor();
    let mut out = DMatrix::from_element(a.len() * c, 2, C64::new(0.0, 0.0));
    for (n, an) in a.iter().enumerate() {
        for row in 0..c {
            for col in 0..2 {
                out[(n * c + row, col)] = an * basis.omega[(row, col)];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_c64_close(a: C64, b: C64, tol: f64) {
        assert!(
            (a - b).norm() <= tol,
            "expected {b}, got {a} (|diff| = {})",
            (a - b).norm()
        );
    }

    #[test]
    fn steering_broadside_is_all_ones() {
        let g = ArrayGeometry::linear(SensorKind::Tripole, 5).unwrap();
        let a = spatial_steering(&g, 0.0, 1.0);
        for e in a.iter() {
            assert_c64_close(*e, C64::new(1.0, 0.0), 1e-15);
        }
    }

    #[test]
    fn steering_endfire_alternates_sign() {
        let g = ArrayGeometry::linear(SensorKind::Tripole, 2).unwrap();
        let a = spatial_steering(&g, PI / 2.0, PI / 2.0);
        assert_c64_close(a[0], C64::new(1.0, 0.0), 1e-15);
        assert_c64_close(a[1], C64::new(-1.0, 0.0), 1e-12);
    }

    #[test]
    fn steering_matches_direct_phase_evaluation() {
        // sin30°·sin80° = 0.49240387650610395
        let g = ArrayGeometry::linear(SensorKind::Tripole, 5).unwrap();
        let a = spatial_steering(&g, 30f64.to_radians(), 80f64.to_radians());
        for n in 0..5 {
            let expected = C64::from_polar(1.0, -PI * 0.49240387650610395 * n as f64);
            assert_c64_close(a[n], expected, 1e-12);
        }
    }

    #[test]
    fn planar_steering_row_major_phases() {
        let g = ArrayGeometry::planar(SensorKind::CrossedDipole, 2, 3).unwrap();
        let (theta, phi) = (40f64.to_radians(), 25f64.to_radians());
        let a = spatial_steering(&g, theta, phi);
        assert_eq!(a.len(), 6);
        for p in 0..2 {
            for q in 0..3 {
                let phase = -TAU
                    * 0.5
                    * (p as f64 * theta.sin() * phi.cos() + q as f64 * theta.sin() * phi.sin());
                assert_c64_close(a[p * 3 + q], C64::from_polar(1.0, phase), 1e-12);
            }
        }
    }

    #[test]
    fn doa_matrix_axis_cases() {
        let b = doa_matrix(0.0, 0.0);
        let expect = Matrix3x2::new(1.0, 0.0, 0.0, 1.0, 0.0, 0.0);
        assert!((b.omega - expect).norm() < 1e-15);

        let b = doa_matrix(PI / 2.0, 0.0);
        let expect = Matrix3x2::new(0.0, 0.0, 0.0, 1.0, -1.0, 0.0);
        assert!((b.omega - expect).norm() < 1e-12);
    }

    #[test]
    fn doa_matrix_worked_example() {
        let b = doa_matrix(30f64.to_radians(), 80f64.to_radians());
        let expect = Matrix3x2::new(
            0.15038373, -0.98480775, 0.85286853, 0.17364818, -0.5, 0.0,
        );
        assert!((b.omega - expect).norm() < 1e-7, "{}", b.omega);
        assert!((b.psi - b.omega.fixed_view::<2, 2>(0, 0).into_owned()).norm() < 1e-15);
    }

    #[test]
    fn psi_determinant_is_cos_theta() {
        for (t, p) in [(0.3, 1.2), (1.1, 4.0), (0.0, 0.7), (PI / 2.0, 2.2)] {
            let b = doa_matrix(t, p);
            assert!((b.psi.determinant() - t.cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn phasor_limit_cases() {
        let g = polarisation_phasor(0.0, 2.3);
        assert_c64_close(g[0], C64::new(0.0, 0.0), 1e-15);
        assert_c64_close(g[1], C64::new(1.0, 0.0), 1e-15);

        let g = polarisation_phasor(PI / 2.0, 0.0);
        assert_c64_close(g[0], C64::new(1.0, 0.0), 1e-15);
        assert_c64_close(g[1], C64::new(0.0, 0.0), 1e-15);
    }

    #[test]
    fn phasor_worked_example() {
        let g = polarisation_phasor(20f64.to_radians(), 50f64.to_radians());
        assert_c64_close(g[0], C64::from_polar(0.34202014, 50f64.to_radians()), 1e-7);
        assert_c64_close(g[1], C64::new(0.93969262, 0.0), 1e-7);
    }

    #[test]
    fn polarisation_vector_gamma_zero() {
        let s = SourceParams::new(0.7, 1.9, 0.0, 1.1).unwrap();
        let p = polarisation_vector(&s, SensorKind::Tripole);
        assert_c64_close(p[0], C64::new(-1.9f64.sin(), 0.0), 1e-12);
        assert_c64_close(p[1], C64::new(1.9f64.cos(), 0.0), 1e-12);
        assert_c64_close(p[2], C64::new(0.0, 0.0), 1e-15);
    }

    #[test]
    fn polarisation_vector_gamma_quarter() {
        // γ = π/2 gives p = e^{jη}·(cosθcosφ, cosθsinφ, −sinθ)
        let (t, ph, e) = (0.5, 2.0, 0.8);
        let s = SourceParams::new(t, ph, PI / 2.0, e).unwrap();
        let p = polarisation_vector(&s, SensorKind::Tripole);
        let phase = C64::from_polar(1.0, e);
        assert_c64_close(p[0], phase * (t.cos() * ph.cos()), 1e-12);
        assert_c64_close(p[1], phase * (t.cos() * ph.sin()), 1e-12);
        assert_c64_close(p[2], phase * (-t.sin()), 1e-12);
    }

    #[test]
    fn polarisation_vector_matches_componentwise_formula() {
        // Independent route: the expanded x/y/z component expressions.
        let s = SourceParams::from_degrees(30.0, 80.0, 20.0, 50.0).unwrap();
        let p = polarisation_vector(&s, SensorKind::Tripole);
        let (st, ct) = (s.theta.sin(), s.theta.cos());
        let (sp, cp) = (s.phi.sin(), s.phi.cos());
        let sg = C64::from_polar(s.gamma.sin(), s.eta);
        let cg = s.gamma.cos();
        assert_c64_close(p[0], sg * (ct * cp) - C64::new(sp * cg, 0.0), 1e-14);
        assert_c64_close(p[1], sg * (ct * sp) + C64::new(cp * cg, 0.0), 1e-14);
        assert_c64_close(p[2], sg * (-st), 1e-14);
        // crossed-dipole output is the first two components
        let q = polarisation_vector(&s, SensorKind::CrossedDipole);
        assert_c64_close(q[0], p[0], 0.0);
        assert_c64_close(q[1], p[1], 0.0);
    }

    #[test]
    fn joint_steering_single_sensor_is_polarisation_vector() {
        let g = ArrayGeometry::linear(SensorKind::Tripole, 1).unwrap();
        let s = SourceParams::from_degrees(30.0, 80.0, 20.0, 50.0).unwrap();
        let v = joint_steering(&g, &s);
        let p = polarisation_vector(&s, SensorKind::Tripole);
        assert_eq!(v.len(), 3);
        for i in 0..3 {
            assert_c64_close(v[i], p[i], 0.0);
        }
    }

    #[test]
    fn joint_steering_norm_is_sqrt_n() {
        let g = ArrayGeometry::linear(SensorKind::Tripole, 4).unwrap();
        let s = SourceParams::from_degrees(61.0, 213.0, 37.0, -119.0).unwrap();
        let v = joint_steering(&g, &s);
        assert!((v.norm() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn joint_steering_matches_explicit_kronecker_expansion() {
        let g = ArrayGeometry::linear(SensorKind::CrossedDipole, 5).unwrap();
        let s = SourceParams::from_degrees(30.0, 80.0, 20.0, 50.0).unwrap();
        let w = joint_steering(&g, &s);
        let a = spatial_steering(&g, s.theta, s.phi);
        let q = polarisation_vector(&s, SensorKind::CrossedDipole);
        assert_eq!(w.len(), 10);
        for n in 0..5 {
            assert_c64_close(w[2 * n], a[n] * q[0], 1e-15);
            assert_c64_close(w[2 * n + 1], a[n] * q[1], 1e-15);
        }
    }

    #[test]
    fn doa_steering_matrix_single_sensor_is_omega() {
        let g = ArrayGeometry::linear(SensorKind::Tripole, 1).unwrap();
        let b = doa_steering_matrix(&g, 0.4, 1.3).unwrap();
        let omega = doa_matrix(0.4, 1.3).omega;
        for r in 0..3 {
            for c in 0..2 {
                assert_c64_close(b[(r, c)], C64::new(omega[(r, c)], 0.0), 1e-15);
            }
        }
    }

    #[test]
    fn doa_steering_matrix_block_structure() {
        let g = ArrayGeometry::linear(SensorKind::Tripole, 4).unwrap();
        let (t, p) = (10f64.to_radians(), 20f64.to_radians());
        let b = doa_steering_matrix(&g, t, p).unwrap();
        assert_eq!((b.nrows(), b.ncols()), (12, 2));
        let a = spatial_steering(&g, t, p);
        let omega = doa_matrix(t, p).omega;
        for n in 0..4 {
            for r in 0..3 {
                for c in 0..2 {
                    assert_c64_close(b[(3 * n + r, c)], a[n] * omega[(r, c)], 1e-15);
                }
            }
        }
    }

    #[test]
    fn doa_steering_matrix_rejects_crossed_dipole() {
        let g = ArrayGeometry::linear(SensorKind::CrossedDipole, 4).unwrap();
        assert!(matches!(
            doa_steering_matrix(&g, 0.4, 1.3),
            Err(Error::UnsupportedGeometry(_))
        ));
    }

    #[test]
    fn geometry_validation() {
        assert!(ArrayGeometry::linear(SensorKind::Tripole, 0).is_err());
        assert!(ArrayGeometry::new(
            SensorKind::Tripole,
            ArrayLayout::Linear { sensors: 3 },
            0.0
        )
        .is_err());
        let g = ArrayGeometry::planar(SensorKind::CrossedDipole, 2, 3).unwrap();
        assert_eq!(g.dof(), 12);
        assert_eq!(g.sensor_count(), 6);
    }

    #[test]
    fn source_params_validation_and_wrapping() {
        assert!(SourceParams::from_degrees(91.0, 0.0, 10.0, 0.0).is_err());
        assert!(SourceParams::from_degrees(10.0, 0.0, -5.0, 0.0).is_err());
        let s = SourceParams::from_degrees(10.0, 370.0, 10.0, 190.0).unwrap();
        assert!((s.phi.to_degrees() - 10.0).abs() < 1e-10);
        assert!((s.eta.to_degrees() + 170.0).abs() < 1e-10);
    }

    #[test]
    fn linear_polarisation_predicate() {
        assert!(SourceParams::from_degrees(30.0, 60.0, 0.0, 20.0)
            .unwrap()
            .is_linearly_polarised());
        assert!(SourceParams::from_degrees(30.0, 60.0, 90.0, 20.0)
            .unwrap()
            .is_linearly_polarised());
        assert!(SourceParams::from_degrees(30.0, 60.0, 45.0, 0.0)
            .unwrap()
            .is_linearly_polarised());
        assert!(!SourceParams::from_degrees(30.0, 60.0, 45.0, 20.0)
            .unwrap()
            .is_linearly_polarised());
    }

    fn arb_source() -> impl Strategy<Value = SourceParams> {
        (
            0.0..std::f64::consts::FRAC_PI_2,
            0.0..TAU,
            0.0..std::f64::consts::FRAC_PI_2,
            -PI..PI,
        )
            .prop_map(|(t, p, g, e)| SourceParams::new(t, p, g, e).unwrap())
    }

    proptest! {
        #[test]
        fn omega_columns_orthonormal(t in 0.0..PI/2.0, p in 0.0..TAU) {
            let b = doa_matrix(t, p);
            let c0 = b.omega.column(0);
            let c1 = b.omega.column(1);
            prop_assert!((c0.norm() - 1.0).abs() < 1e-12);
            prop_assert!((c1.norm() - 1.0).abs() < 1e-12);
            prop_assert!(c0.dot(&c1).abs() < 1e-12);
        }

        #[test]
        fn tripole_polarisation_vector_is_unit(s in arb_source()) {
            let p = polarisation_vector(&s, SensorKind::Tripole);
            prop_assert!((p.norm() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn joint_steering_norm(s in arb_source(), n in 1usize..7) {
            let g = ArrayGeometry::linear(SensorKind::Tripole, n).unwrap();
            let v = joint_steering(&g, &s);
            prop_assert!((v.norm() - (n as f64).sqrt()).abs() < 1e-12);
        }

        #[test]
        fn b_times_g_factorisation(s in arb_source(), n in 1usize..7) {
            let g = ArrayGeometry::linear(SensorKind::Tripole, n).unwrap();
            let b = doa_steering_matrix(&g, s.theta, s.phi).unwrap();
            let phasor = polarisation_phasor(s.gamma, s.eta);
            let v = joint_steering(&g, &s);
            let bg = &b * DVector::from_column_slice(&[phasor[0], phasor[1]]);
            prop_assert!((bg - v).norm() < 1e-12);
        }

        #[test]
        fn linear_steering_depends_only_on_sin_product(
            t1 in 0.05..PI/2.0, p1 in 0.05..(PI/2.0 - 0.01), t2 in 0.0..PI/2.0
        ) {
            // pick (t2, p2) with sinθ₂·sinφ₂ = sinθ₁·sinφ₁ when feasible
            let s = t1.sin() * p1.sin();
            let ratio = s / t2.sin();
            prop_assume!(t2.sin() > 1e-6 && ratio.abs() <= 1.0);
            let p2 = ratio.asin();
            let g = ArrayGeometry::linear(SensorKind::Tripole, 6).unwrap();
            let a1 = spatial_steering(&g, t1, p1);
            let a2 = spatial_steering(&g, t2, p2);
            prop_assert!((a1 - a2).norm() < 1e-10);
        }
    }
}
