use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pacsim::analysis::{biawgn_moments, cutoff_rate, dispersion_fer, snr_for_cutoff_rate};
use pacsim::code_config::{rm_profile, PacConfigFile};
use pacsim::conv::ConvConfigFile;
use pacsim::sim::{
    emit_results, fer_vs_zmax_sweep, parse_snr_list, results_csv, run_campaign, workers_from_env, CampaignConfig,
    OutputFormat, SchemeSpec, StoppingRule,
};

#[derive(Parser)]
#[command(name = "pacsim", version, about = "PAC / convolutional Fano decoding simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// FER/ANV campaign for a PAC code
    Pac(RunArgs),
    /// FER/ANV campaign for the terminated convolutional code
    Conv(RunArgs),
    /// FER versus visit cap from one stream of unbounded decodes
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        snr: f64,
        /// Comma-separated caps; "inf" for no cap
        #[arg(long, default_value = "128,1024,2048,4096,8192,16384,32768,65536,inf")]
        caps: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        stop: StopArgs,
    },
    /// Closed-form analysis tables
    Analyze {
        #[command(subcommand)]
        what: Analyze,
    },
    /// Print the RM data index set (1-based)
    Profile {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum Analyze {
    /// SNR at which the cutoff rate equals RATE (or a table over --snr)
    R0 {
        #[arg(long)]
        rate: Option<f64>,
        #[arg(long)]
        snr: Option<String>,
    },
    /// Capacity, dispersion and normal-approximation FER
    Dispersion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "0:0.25:3")]
        snr: String,
    },
}

#[derive(Args)]
struct StopArgs {
    #[arg(long, default_value_t = 10_000)]
    min_trials: u64,
    #[arg(long, default_value_t = 100)]
    min_errors: u64,
    #[arg(long, default_value_t = 10_000_000)]
    max_trials: u64,
}

impl StopArgs {
    fn rule(&self) -> StoppingRule {
        StoppingRule { min_trials: self.min_trials, min_errors: self.min_errors, max_trials: self.max_trials }
    }
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long, default_value = "0:0.5:3.5")]
    snr: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Abort decoding after this many visits (counted as a frame error)
    #[arg(long)]
    zmax: Option<u64>,
    /// Histogram only successful decodings
    #[arg(long)]
    success_only_hist: bool,
    /// Output file; `.json` writes JSON with histograms, anything else CSV
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    stop: StopArgs,
}

fn load_scheme(pac: bool, path: &std::path::Path) -> pacsim::Result<SchemeSpec> {
    Ok(if pac {
        SchemeSpec::Pac(PacConfigFile::load(path)?)
    } else {
        SchemeSpec::Conv(ConvConfigFile::load(path)?)
    })
}

fn campaign(args: RunArgs, pac: bool) -> pacsim::Result<()> {
    let mut cfg = CampaignConfig::new(load_scheme(pac, &args.config)?, parse_snr_list(&args.snr)?, args.seed)
        .with_stopping(args.stop.rule())
        .with_success_only_hist(args.success_only_hist)
        .with_workers(workers_from_env().unwrap_or(0));
    if args.zmax.is_some() {
        cfg = cfg.with_z_max(args.zmax);
    }
    let report = run_campaign(&cfg)?;
    match &args.out {
        Some(path) => emit_results(&report.points, &cfg, OutputFormat::from_path(path), path)?,
        None => print!("{}", results_csv(&report.points, &cfg)?),
    }
    if let Some(msg) = report.failure {
        return Err(pacsim::Error::InvalidParameter(format!("campaign stopped early: {msg}")));
    }
    Ok(())
}

fn parse_caps(text: &str) -> pacsim::Result<Vec<Option<u64>>> {
    text.split(',')
        .map(|c| match c.trim() {
            "inf" => Ok(None),
            v => v
                .parse()
                .map(Some)
                .map_err(|_| pacsim::Error::InvalidParameter(format!("bad cap {v:?}"))),
        })
        .collect()
}

fn run(cli: Cli) -> pacsim::Result<()> {
    match cli.command {
        Command::Pac(args) => campaign(args, true)?,
        Command::Conv(args) => campaign(args, false)?,
        Command::Sweep { config, snr, caps, seed, stop } => {
            let cfg = CampaignConfig::pac(PacConfigFile::load(&config)?, vec![snr], seed)
                .with_stopping(stop.rule())
                .with_workers(workers_from_env().unwrap_or(0));
            let (stats, rows) = fer_vs_zmax_sweep(&cfg, snr, &parse_caps(&caps)?)?;
            println!("# snr_db={} sigma={:.9} trials={}", stats.snr_db, stats.sigma, stats.trials);
            println!("zmax,fer");
            for (cap, fer) in rows {
                let cap = cap.map_or_else(|| "inf".to_string(), |c| c.to_string());
                println!("{cap},{fer:.6e}");
            }
        }
        Command::Analyze { what: Analyze::R0 { rate, snr } } => {
            if let Some(r) = rate {
                println!("rate,snr_db");
                println!("{r},{:.4}", snr_for_cutoff_rate(r)?);
            }
            if let Some(list) = snr {
                println!("snr_db,r0");
                for s in parse_snr_list(&list)? {
                    println!("{s},{:.6}", cutoff_rate(s));
                }
            }
        }
        Command::Analyze { what: Analyze::Dispersion { n, k, snr } } => {
            println!("snr_db,r0,capacity,dispersion,fer_approx");
            for s in parse_snr_list(&snr)? {
                let m = biawgn_moments(s)?;
                println!(
                    "{s},{:.6},{:.6},{:.6},{:.6e}",
                    cutoff_rate(s),
                    m.capacity,
                    m.dispersion,
                    dispersion_fer(n, k, s)?
                );
            }
        }
        Command::Profile { n, k } => println!("{}", rm_profile(n, k)?.to_one_based_list()),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
