use vsarray::array::*;
use vsarray::music::*;
use vsarray::signal::*;

fn main() {
    let g = ArrayGeometry::linear(SensorKind::Tripole, 4).unwrap();
    let sources = vec![
        SourceParams::from_degrees(10.0, 20.0, 15.0, 30.0).unwrap(),
        SourceParams::from_degrees(60.0, 70.0, 60.0, 80.0).unwrap(),
    ];
    for seed in [12345u64, 12346, 12400] {
        let sim = SimulationConfig {
            sources: sources.clone(),
            source_powers: vec![100.0, 100.0],  // 20 dB
            noise_power: 1.0,
            snapshots: 1000,
            seed,
        };
        let x = generate_snapshots(&sim, &g).unwrap();
        let r = sample_covariance(&x);
        let dec = decompose(&r, 2).unwrap();
        let ta = GridAxis::inclusive("theta_deg", 0.0, 90.0, 1.0);
        let pa = GridAxis::periodic("phi_deg", 0.0, 360.0, 1.0);
        let spec = doa_spectrum_det(&dec.noise_basis, &g, &ta, &pa);
        println!("seed {seed}: top regional maxima:");
        match find_peaks(&spec, 6) {
            Ok(peaks) => {
                for p in &peaks {
                    let at = spec.angles_deg(p);
                    println!("  ({:5.1}, {:5.1}) val {:.4e}", at[0], at[1], spec.value(p));
                }
            }
            Err(e) => println!("  error: {e}"),
        }
    }
}
