use std::time::Instant;
use vsarray::music::Method;
use vsarray::crb::PARAM_NAMES;
use vsarray_cli::config::ExperimentConfig;
use vsarray_cli::experiments::{run_estimator_comparison, run_geometry_comparison};

fn main() {
    // criterion 5: single source (10,20,15,30), N=4, 20 dB, 50 trials, shared seeds
    let cfg = ExperimentConfig {
        sources_deg: vec![[10.0, 20.0, 15.0, 30.0]],
        snr_db: vec![20.0],
        trials: 50,
        ..Default::default()
    };
    let t0 = Instant::now();
    let table = run_estimator_comparison(&cfg).unwrap();
    println!("comparison elapsed {:?}", t0.elapsed());
    for p in 0..4 {
        let det = table.rmse(Method::Reduced2DDet, 20.0, 0, p).unwrap();
        let eig = table.rmse(Method::Reduced2DEig, 20.0, 0, p).unwrap();
        let rel = (det - eig).abs() / det.max(eig);
        println!("{:6}: det {det:.4} eig {eig:.4} rel-diff {:.3}", PARAM_NAMES[p], rel);
    }

    // criterion 8: geometry comparison phi_1, SNR sweep, 50 trials
    let cfg = ExperimentConfig {
        snr_db: vec![0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0],
        trials: 50,
        ..Default::default()
    };
    let t0 = Instant::now();
    let table = run_geometry_comparison(&cfg).unwrap();
    println!("geometry comparison elapsed {:?}", t0.elapsed());
    for &snr in &cfg.snr_db {
        let tri: Vec<&vsarray_cli::experiments::RmseRow> = table.rows.iter()
            .filter(|r| r.geometry.starts_with("tripole") && (r.snr_db - snr).abs() < 1e-9 && r.source == 1 && r.param == "phi")
            .collect();
        let pl: Vec<&vsarray_cli::experiments::RmseRow> = table.rows.iter()
            .filter(|r| r.geometry.starts_with("crossed") && (r.snr_db - snr).abs() < 1e-9 && r.source == 1 && r.param == "phi")
            .collect();
        println!("snr {snr:4}: tripole rmse {:.4} crb {:.4} fails {} | planar rmse {:.4} crb {:.4} fails {}",
            tri[0].rmse_deg, tri[0].crb_sqrt_deg.unwrap(), tri[0].trials_failed,
            pl[0].rmse_deg, pl[0].crb_sqrt_deg.unwrap(), pl[0].trials_failed);
    }
}
