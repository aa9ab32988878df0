//! Multiplication counts of the three search algorithms, exact integer
//! evaluation.
//!
//! Per grid point the 4-D search costs (3N+1)(3N−M) multiplications over L⁴
//! points. The reduced searches spend (6N+4)(3N−M) per point building the
//! 2×2 Gram matrix over L² DOA points (plus 2 for its determinant or 6 for
//! its minimum eigenvalue), then another L² polarisation points at 8
//! multiplications each with the Gram matrix reused:
//!
//! * 4-D:     L⁴·(3N+1)(3N−M)
//! * det:     L²·[(6N+4)(3N−M) + 10] + (6N+4)(3N−M)
//! * min-eig: L²·[(6N+4)(3N−M) + 14] + (6N+4)(3N−M)

use anyhow::{bail, Result};

/// Exact multiplication counts for one (N, M, L) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexityReport {
    pub sensors: u64,
    pub sources: u64,
    pub grid_points: u64,
    pub music4d: u128,
    pub det2d: u128,
    pub mineig2d: u128,
}

/// Evaluate the closed forms for N sensors, M sources and L search points
/// per axis. Domain: N ≥ 1, 1 ≤ M < 3N, L ≥ 2.
pub fn complexity_report(sensors: u64, sources: u64, grid_points: u64) -> Result<ComplexityReport> {
    if sensors < 1 {
        bail!("sensor count must be >= 1, got {sensors}");
    }
    if sources < 1 || sources >= 3 * sensors {
        bail!(
            "source count must satisfy 1 <= M < 3N = {}, got {sources}",
            3 * sensors
        );
    }
    if grid_points < 2 {
        bail!("grid point count must be >= 2, got {grid_points}");
    }
    let (n, m, l) = (sensors as u128, sources as u128, grid_points as u128);
    let dof_rem = 3 * n - m;
    let gram = (6 * n + 4) * dof_rem;
    Ok(ComplexityReport {
        sensors,
        sources,
        grid_points,
        music4d: l.pow(4) * (3 * n + 1) * dof_rem,
        det2d: l * l * (gram + 10) + gram,
        mineig2d: l * l * (gram + 14) + gram,
    })
}
