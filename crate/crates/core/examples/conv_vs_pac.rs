//! FER and ANV of PAC(128,64) next to the (133,171) convolutional code with
//! K = 64, both decoded by the Fano algorithm.
//!
//! cargo run --release --example conv_vs_pac -- [trials]

use pacsim::code_config::PacConfigFile;
use pacsim::conv::{ConvConfigFile, ConvSection};
use pacsim::sim::{run_campaign, workers_from_env, CampaignConfig, SchemeSpec, StoppingRule};

fn main() -> pacsim::Result<()> {
    let trials: u64 = std::env::args().nth(1).map_or(5_000, |s| s.parse().expect("trials"));
    let snrs = vec![1.5, 2.0, 2.5, 3.0, 3.5];
    let pac = SchemeSpec::Pac(PacConfigFile {
        n: 128,
        k: 64,
        c_octal: "133".into(),
        rho: 1.35,
        delta: 2.0,
        z_max: None,
        profile: "rm".into(),
    });
    let conv = SchemeSpec::Conv(ConvConfigFile {
        conv: ConvSection { g1_octal: "133".into(), g2_octal: "171".into(), k: 64 },
        bias: 1.0,
        delta: 2.0,
        z_max: None,
    });
    println!("scheme,snr_db,trials,fer,anv");
    for (name, scheme) in [("pac", pac), ("conv", conv)] {
        let cfg = CampaignConfig::new(scheme, snrs.clone(), 1)
            .with_stopping(StoppingRule::fixed(trials))
            .with_workers(workers_from_env().unwrap_or(0));
        for p in run_campaign(&cfg)?.points {
            println!("{name},{},{},{:.3e},{:.1}", p.snr_db, p.trials, p.fer, p.anv);
        }
    }
    Ok(())
}
