use std::time::Instant;
use vsarray::music::Method;
use vsarray_cli::config::ExperimentConfig;
use vsarray_cli::experiments::run_rmse_sweep;
use vsarray::crb::PARAM_NAMES;

fn main() {
    let trials: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let snrs: Vec<f64> = vec![0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0];
    let cfg = ExperimentConfig {
        snr_db: snrs.clone(),
        trials,
        methods: vec![Method::Reduced2DDet, Method::Music4D],
        ..Default::default()
    };
    let t0 = Instant::now();
    let table = run_rmse_sweep(&cfg).unwrap();
    println!("elapsed: {:?} for {} trials x {} snrs", t0.elapsed(), trials, snrs.len());
    for &m in &[Method::Reduced2DDet, Method::Music4D] {
        for src in 0..2 {
            for p in 0..4 {
                print!("{:8} s{} {:5}: ", m.label(), src + 1, PARAM_NAMES[p]);
                for &snr in &snrs {
                    let r = table.rmse(m, snr, src, p).unwrap();
                    print!("{r:8.4} ");
                }
                let crb = table.crb_sqrt(m, 30.0, src, p).unwrap();
                let crb20 = table.crb_sqrt(m, 20.0, src, p).unwrap();
                println!(" | crb20 {crb20:.4} crb30 {crb:.4}");
            }
        }
    }
    // failures
    for row in &table.rows {
        if row.trials_failed > 0 {
            println!("FAILURES: {} snr {} s{} {}: {}", row.method, row.snr_db, row.source, row.param, row.trials_failed);
        }
    }
}
