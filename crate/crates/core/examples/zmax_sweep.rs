//! FER of PAC(128,64) as a function of the visit cap, from one stream of
//! unbounded decodes.
//!
//! cargo run --release --example zmax_sweep -- [snr_db] [trials]

use pacsim::code_config::PacConfigFile;
use pacsim::sim::{fer_vs_zmax_sweep, workers_from_env, CampaignConfig, StoppingRule};

fn main() -> pacsim::Result<()> {
    let mut args = std::env::args().skip(1);
    let snr_db: f64 = args.next().map_or(2.5, |s| s.parse().expect("snr_db"));
    let trials: u64 = args.next().map_or(20_000, |s| s.parse().expect("trials"));

    let code = PacConfigFile { n: 128, k: 64, c_octal: "133".into(), rho: 1.35, delta: 2.0, z_max: None, profile: "rm".into() };
    let cfg = CampaignConfig::pac(code, vec![snr_db], 1)
        .with_stopping(StoppingRule::fixed(trials))
        .with_workers(workers_from_env().unwrap_or(0));
    let caps: Vec<Option<u64>> = (7..=17).map(|b| Some(1u64 << b)).chain([None]).collect();
    let (stats, rows) = fer_vs_zmax_sweep(&cfg, snr_db, &caps)?;
    println!("# {} trials at {snr_db} dB, ANV {:.1}", stats.trials, stats.anv);
    println!("zmax,fer");
    for (cap, fer) in rows {
        println!("{},{fer:.4e}", cap.map_or("inf".into(), |c| c.to_string()));
    }
    Ok(())
}
