//! Average number of visits of the Fano decoder for the three PAC(128,K)
//! operating points, next to the cutoff-rate SNR and the list-decoder
//! node count.
//!
//! cargo run --release --example anv_table -- [trials]

use pacsim::analysis::{scl_visit_estimate, snr_for_cutoff_rate};
use pacsim::code_config::PacConfigFile;
use pacsim::sim::{run_campaign, workers_from_env, CampaignConfig, StoppingRule};

fn main() -> pacsim::Result<()> {
    let trials: u64 = std::env::args().nth(1).map_or(10_000, |s| s.parse().expect("trials"));
    let rows = [
        (29, "3211", 1.4, vec![-1.0, -0.5, 0.0, 0.5, 1.0]),
        (64, "133", 1.35, vec![2.0, 2.5, 3.0]),
        (99, "133", 1.14, vec![6.0, 6.5, 7.0]),
    ];
    println!("K,r0_snr_db,scl_nodes,snr_db,trials,fer,anv,anv_success");
    for (k, c, rho, snrs) in rows {
        let code = PacConfigFile { n: 128, k, c_octal: c.into(), rho, delta: 2.0, z_max: None, profile: "rm".into() };
        let cfg = CampaignConfig::pac(code, snrs, 1)
            .with_stopping(StoppingRule::fixed(trials))
            .with_workers(workers_from_env().unwrap_or(0));
        let r0 = snr_for_cutoff_rate(k as f64 / 128.0)?;
        for p in run_campaign(&cfg)?.points {
            println!(
                "{k},{r0:.2},{},{},{},{:.3e},{:.1},{:.1}",
                scl_visit_estimate(64, k as u64, 11),
                p.snr_db,
                p.trials,
                p.fer,
                p.anv,
                p.anv_success
            );
        }
    }
    Ok(())
}
