//! Histogram of the visit count Z for PAC(128,64) at one SNR, over the
//! successful decodings only.
//!
//! cargo run --release --example z_distribution -- [snr_db] [trials]

use pacsim::code_config::PacConfigFile;
use pacsim::sim::{run_campaign, workers_from_env, CampaignConfig, StoppingRule, ZHistogram};

fn main() -> pacsim::Result<()> {
    let mut args = std::env::args().skip(1);
    let snr_db: f64 = args.next().map_or(3.0, |s| s.parse().expect("snr_db"));
    let trials: u64 = args.next().map_or(100_000, |s| s.parse().expect("trials"));

    let code = PacConfigFile { n: 128, k: 64, c_octal: "133".into(), rho: 1.35, delta: 2.0, z_max: None, profile: "rm".into() };
    let cfg = CampaignConfig::pac(code, vec![snr_db], 1)
        .with_stopping(StoppingRule::fixed(trials))
        .with_success_only_hist(true)
        .with_workers(workers_from_env().unwrap_or(0));
    let p = &run_campaign(&cfg)?.points[0];
    println!("snr {snr_db} dB, {} trials, {} errors, ANV {:.1}", p.trials, p.frame_errors, p.anv);
    for (i, (count, pct)) in p.z_hist.counts().iter().zip(p.z_hist.percentages()).enumerate() {
        println!("{:>16} {count:>9} {pct:>9.4}%", ZHistogram::label(i));
    }
    Ok(())
}
