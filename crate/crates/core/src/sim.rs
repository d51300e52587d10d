//! Monte Carlo campaigns: FER, average number of visits (ANV), visit-count
//! histograms and FER-versus-cap sweeps.
//!
//! Each trial draws its randomness from its own ChaCha stream keyed by
//! `(master_seed, snr_index, trial_index)`. Trials are decoded in parallel
//! batches but aggregated in trial order, and the stopping rule is applied
//! per trial, so the statistics do not depend on the worker count.

use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{awgn_sample, bpsk_modulate, channel_llrs, SnrPoint};
use crate::code_config::{extract_data, CodeConfig, DecoderConfig, PacConfigFile};
use crate::conv::{conv_encode_zt, ConvConfig, ConvConfigFile, ConvDecoder};
use crate::error::{Error, Result};
use crate::pac::{pac_encode, DecodeOutcome, PacDecoder};

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "PACSIM_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialOutcome {
    Success,
    FrameError,
    Abort,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialResult {
    pub outcome: TrialOutcome,
    /// Visit count `Z`.
    pub z: u64,
}

impl TrialResult {
    pub fn is_error(&self) -> bool {
        self.outcome != TrialOutcome::Success
    }
}

pub const HIST_BUCKETS: usize = 10;

/// Visit-count histogram with buckets `Z <= 2^10`, `(2^b, 2^{b+1}]` for
/// `b = 10..=17`, and `Z > 2^18`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<HistBucket>", try_from = "Vec<HistBucket>")]
pub struct ZHistogram {
    counts: [u64; HIST_BUCKETS],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistBucket {
    pub label: String,
    pub count: u64,
    pub percent: f64,
}

impl ZHistogram {
    pub fn bucket_of(z: u64) -> usize {
        if z <= 1 << 10 {
            0
        } else if z > 1 << 18 {
            HIST_BUCKETS - 1
        } else {
            // z in (2^b, 2^{b+1}]
            let b = 63 - (z - 1).leading_zeros() as usize;
            b - 9
        }
    }

    pub fn label(bucket: usize) -> String {
        match bucket {
            0 => "Z<=2^10".to_string(),
            b if b == HIST_BUCKETS - 1 => "2^18<Z".to_string(),
            b => format!("2^{}<Z<=2^{}", b + 9, b + 10),
        }
    }

    pub fn record(&mut self, z: u64) {
        self.counts[Self::bucket_of(z)] += 1;
    }

    pub fn counts(&self) -> &[u64; HIST_BUCKETS] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Bucket shares in percent, rounded to four decimals.
    pub fn percentages(&self) -> [f64; HIST_BUCKETS] {
        let total = self.total();
        let mut out = [0.0; HIST_BUCKETS];
        if total > 0 {
            for (o, &c) in out.iter_mut().zip(&self.counts) {
                *o = (c as f64 * 100.0 / total as f64 * 1e4).round() / 1e4;
            }
        }
        out
    }

    /// Fraction of recorded trials with `Z > bound`, where `bound` is a power of
    /// two between `2^10` and `2^18`.
    pub fn fraction_above(&self, bound: u64) -> f64 {
        assert!(bound.is_power_of_two() && (1 << 10..=1 << 18).contains(&bound));
        let first = Self::bucket_of(bound) + 1;
        let total = self.total();
        if total == 0 {
            return 0.0;
        }
        self.counts[first..].iter().sum::<u64>() as f64 / total as f64
    }
}

impl From<ZHistogram> for Vec<HistBucket> {
    fn from(h: ZHistogram) -> Self {
        let pct = h.percentages();
        (0..HIST_BUCKETS)
            .map(|b| HistBucket { label: ZHistogram::label(b), count: h.counts[b], percent: pct[b] })
            .collect()
    }
}

impl TryFrom<Vec<HistBucket>> for ZHistogram {
    type Error = String;

    fn try_from(buckets: Vec<HistBucket>) -> std::result::Result<Self, String> {
        if buckets.len() != HIST_BUCKETS {
            return Err(format!("expected {HIST_BUCKETS} buckets, got {}", buckets.len()));
        }
        let mut counts = [0u64; HIST_BUCKETS];
        for (b, bucket) in buckets.iter().enumerate() {
            if bucket.label != ZHistogram::label(b) {
                return Err(format!("bucket {b} has label {:?}", bucket.label));
            }
            counts[b] = bucket.count;
        }
        Ok(Self { counts })
    }
}

/// Bucket table over a set of trials, optionally keeping only successes.
pub fn z_histogram(results: &[TrialResult], success_only: bool) -> ZHistogram {
    let mut h = ZHistogram::default();
    for r in results.iter().filter(|r| !success_only || !r.is_error()) {
        h.record(r.z);
    }
    h
}

/// Aggregated statistics at one SNR.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SnrStats {
    pub snr_db: f64,
    pub sigma: f64,
    pub trials: u64,
    /// Frame errors, aborts included.
    pub frame_errors: u64,
    pub aborts: u64,
    pub fer: f64,
    /// Mean `Z` over all trials.
    pub anv: f64,
    /// Mean `Z` over successful trials.
    pub anv_success: f64,
    pub z_hist: ZHistogram,
    pub z_hist_success_only: bool,
}

#[derive(Debug, Clone, Default)]
struct Accumulator {
    trials: u64,
    errors: u64,
    aborts: u64,
    z_sum: u128,
    z_sum_success: u128,
    successes: u64,
    hist_all: ZHistogram,
    hist_success: ZHistogram,
}

impl Accumulator {
    fn push(&mut self, r: &TrialResult) {
        self.trials += 1;
        self.z_sum += u128::from(r.z);
        self.hist_all.record(r.z);
        match r.outcome {
            TrialOutcome::Success => {
                self.successes += 1;
                self.z_sum_success += u128::from(r.z);
                self.hist_success.record(r.z);
            }
            TrialOutcome::FrameError => self.errors += 1,
            TrialOutcome::Abort => {
                self.errors += 1;
                self.aborts += 1;
            }
        }
    }

    fn finish(&self, point: SnrPoint, success_only: bool) -> SnrStats {
        let mean = |sum: u128, n: u64| if n == 0 { 0.0 } else { sum as f64 / n as f64 };
        SnrStats {
            snr_db: point.snr_db,
            sigma: point.sigma,
            trials: self.trials,
            frame_errors: self.errors,
            aborts: self.aborts,
            fer: mean(u128::from(self.errors), self.trials),
            anv: mean(self.z_sum, self.trials),
            anv_success: mean(self.z_sum_success, self.successes),
            z_hist: if success_only { self.hist_success } else { self.hist_all },
            z_hist_success_only: success_only,
        }
    }
}

/// Stop at the first trial where `trials >= min_trials` and
/// `errors >= min_errors`, or at `max_trials`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoppingRule {
    pub min_trials: u64,
    pub min_errors: u64,
    pub max_trials: u64,
}

impl Default for StoppingRule {
    fn default() -> Self {
        Self { min_trials: 10_000, min_errors: 100, max_trials: 10_000_000 }
    }
}

impl StoppingRule {
    /// Exactly `n` trials.
    pub fn fixed(n: u64) -> Self {
        Self { min_trials: n, min_errors: 0, max_trials: n }
    }

    fn validate(&self) -> Result<()> {
        if self.min_trials > self.max_trials || self.max_trials == 0 {
            return Err(Error::InvalidParameter(format!(
                "stopping rule needs 0 < max_trials and min_trials <= max_trials, got {self:?}"
            )));
        }
        Ok(())
    }

    fn done(&self, trials: u64, errors: u64) -> bool {
        trials >= self.max_trials || (trials >= self.min_trials && errors >= self.min_errors)
    }
}

/// Which code is simulated, in configuration-file form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "scheme", rename_all = "lowercase")]
pub enum SchemeSpec {
    Pac(PacConfigFile),
    Conv(ConvConfigFile),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub scheme: SchemeSpec,
    pub snr_db: Vec<f64>,
    pub master_seed: u64,
    pub stopping: StoppingRule,
    pub success_only_hist: bool,
    /// Worker threads; 0 means rayon's default. Not part of the output.
    #[serde(skip)]
    pub workers: usize,
}

impl CampaignConfig {
    pub fn new(scheme: SchemeSpec, snr_db: Vec<f64>, master_seed: u64) -> Self {
        Self {
            scheme,
            snr_db,
            master_seed,
            stopping: StoppingRule::default(),
            success_only_hist: false,
            workers: 0,
        }
    }

    pub fn pac(code: PacConfigFile, snr_db: Vec<f64>, master_seed: u64) -> Self {
        Self::new(SchemeSpec::Pac(code), snr_db, master_seed)
    }

    pub fn with_stopping(mut self, stopping: StoppingRule) -> Self {
        self.stopping = stopping;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_success_only_hist(mut self, on: bool) -> Self {
        self.success_only_hist = on;
        self
    }

    /// Replace the visit cap of the configured decoder.
    pub fn with_z_max(mut self, z_max: Option<u64>) -> Self {
        match &mut self.scheme {
            SchemeSpec::Pac(f) => f.z_max = z_max,
            SchemeSpec::Conv(f) => f.z_max = z_max,
        }
        self
    }
}

/// Worker count from `PACSIM_WORKERS`, if set and valid.
pub fn workers_from_env() -> Option<usize> {
    std::env::var(WORKERS_ENV).ok()?.trim().parse().ok()
}

#[derive(Debug, Clone)]
enum Scheme {
    Pac(CodeConfig, DecoderConfig),
    Conv(ConvConfig, DecoderConfig),
}

enum Decoder {
    Pac(PacDecoder),
    Conv(ConvDecoder),
}

impl Scheme {
    fn build(spec: &SchemeSpec) -> Result<Self> {
        Ok(match spec {
            SchemeSpec::Pac(f) => {
                let (c, d) = f.build()?;
                Scheme::Pac(c, d)
            }
            SchemeSpec::Conv(f) => {
                let (c, d) = f.build()?;
                Scheme::Conv(c, d)
            }
        })
    }

    fn decoder(&self) -> Decoder {
        match self {
            Scheme::Pac(c, d) => Decoder::Pac(PacDecoder::new(c.clone(), *d)),
            Scheme::Conv(c, d) => Decoder::Conv(ConvDecoder::new(c.clone(), *d)),
        }
    }
}

/// Splits `(master_seed, snr_index)` into a ChaCha seed; the trial index
/// selects the stream.
fn trial_rng(master_seed: u64, snr_index: usize, trial: u64) -> ChaCha8Rng {
    let mut z = master_seed ^ (snr_index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    let mut rng = ChaCha8Rng::seed_from_u64(z);
    rng.set_stream(trial);
    rng
}

fn run_trial(decoder: &mut Decoder, point: SnrPoint, rng: &mut ChaCha8Rng) -> Result<TrialResult> {
    let (data, outcome) = match decoder {
        Decoder::Pac(dec) => {
            let k = dec.code().dimension();
            let data: Vec<u8> = (0..k).map(|_| rng.random_range(0..2u8)).collect();
            let x = pac_encode(&data, dec.code())?;
            let y = awgn_sample(&bpsk_modulate(&x), point, rng);
            let out = dec.decode(&channel_llrs(&y, point))?;
            let decoded = out.path().map(|v| extract_data(v, dec.code().profile())).transpose()?;
            (data, (out.visits(), out.is_aborted(), decoded))
        }
        Decoder::Conv(dec) => {
            let k = dec.config().message_len();
            let data: Vec<u8> = (0..k).map(|_| rng.random_range(0..2u8)).collect();
            let x = conv_encode_zt(&data, dec.config())?;
            let y = awgn_sample(&bpsk_modulate(&x), point, rng);
            let out: DecodeOutcome = dec.decode(&channel_llrs(&y, point))?;
            let decoded = out.path().map(|p| p[..k].to_vec());
            (data, (out.visits(), out.is_aborted(), decoded))
        }
    };
    let (z, aborted, decoded) = outcome;
    let outcome = if aborted {
        TrialOutcome::Abort
    } else if decoded.as_deref() == Some(data.as_slice()) {
        TrialOutcome::Success
    } else {
        TrialOutcome::FrameError
    };
    Ok(TrialResult { outcome, z })
}

/// Statistics for every SNR point, plus the failure message if a trial
/// failed (the points completed so far are kept).
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignReport {
    pub points: Vec<SnrStats>,
    pub failure: Option<String>,
}

/// One SNR point, with the individual trials when `keep_trials` is set.
pub fn run_point(
    cfg: &CampaignConfig,
    snr_index: usize,
    keep_trials: bool,
) -> Result<(SnrStats, Option<Vec<TrialResult>>)> {
    cfg.stopping.validate()?;
    let scheme = Scheme::build(&cfg.scheme)?;
    let snr_db = *cfg
        .snr_db
        .get(snr_index)
        .ok_or_else(|| Error::InvalidParameter(format!("no SNR point with index {snr_index}")))?;
    let point = SnrPoint::from_db(snr_db);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    let batch = 256 * pool.current_num_threads() as u64;

    let mut acc = Accumulator::default();
    let mut kept = keep_trials.then(Vec::new);
    let mut next = 0u64;
    'outer: while next < cfg.stopping.max_trials {
        let end = (next + batch).min(cfg.stopping.max_trials);
        let results: Vec<Result<TrialResult>> = pool.install(|| {
            (next..end)
                .into_par_iter()
                .map_init(
                    || scheme.decoder(),
                    |dec, t| run_trial(dec, point, &mut trial_rng(cfg.master_seed, snr_index, t)),
                )
                .collect()
        });
        for r in results {
            let r = r?;
            acc.push(&r);
            if let Some(k) = kept.as_mut() {
                k.push(r);
            }
            if cfg.stopping.done(acc.trials, acc.errors) {
                break 'outer;
            }
        }
        next = end;
    }
    Ok((acc.finish(point, cfg.success_only_hist), kept))
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.stopping.validate()?;
    Scheme::build(&cfg.scheme)?;
    let mut points = Vec::with_capacity(cfg.snr_db.len());
    for i in 0..cfg.snr_db.len() {
        match run_point(cfg, i, false) {
            Ok((stats, _)) => points.push(stats),
            Err(e) => return Ok(CampaignReport { points, failure: Some(e.to_string()) }),
        }
    }
    Ok(CampaignReport { points, failure: None })
}

/// A visit cap (`None` for no cap) and the FER under it.
pub type CapFer = (Option<u64>, f64);

/// FER under each cap, from one stream of unbounded decodes. A trial is an
/// error under cap `z` if it was a frame error or needed more than `z`
/// visits; a capped Fano run follows the unbounded one until it aborts.
/// `None` stands for no cap.
pub fn fer_vs_zmax(results: &[TrialResult], caps: &[Option<u64>]) -> Vec<CapFer> {
    caps.iter()
        .map(|&cap| {
            let errors = results
                .iter()
                .filter(|r| r.is_error() || cap.is_some_and(|c| r.z > c))
                .count();
            let fer = if results.is_empty() { 0.0 } else { errors as f64 / results.len() as f64 };
            (cap, fer)
        })
        .collect()
}

/// Runs the unbounded decoder at `snr_db` and post-processes the trials for
/// every cap.
pub fn fer_vs_zmax_sweep(
    cfg: &CampaignConfig,
    snr_db: f64,
    caps: &[Option<u64>],
) -> Result<(SnrStats, Vec<CapFer>)> {
    let mut single = cfg.clone().with_z_max(None);
    single.snr_db = vec![snr_db];
    let (stats, trials) = run_point(&single, 0, true)?;
    let trials = trials.expect("trials were kept");
    Ok((stats, fer_vs_zmax(&trials, caps)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    /// `.json` means JSON, anything else CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => OutputFormat::Json,
            _ => OutputFormat::Csv,
        }
    }
}

pub const CSV_HEADER: &str = "snr_db,trials,errors,fer,anv,sigma,anv_success";

/// CSV with a `#`-prefixed config line, then one row per SNR point.
pub fn results_csv(stats: &[SnrStats], cfg: &CampaignConfig) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "# config: {}", serde_json::to_string(cfg)?).expect("write to String");
    out.push_str(CSV_HEADER);
    out.push('\n');
    for s in stats {
        writeln!(
            out,
            "{},{},{},{:.6e},{:.4},{:.9},{:.4}",
            s.snr_db, s.trials, s.frame_errors, s.fer, s.anv, s.sigma, s.anv_success
        )
        .expect("write to String");
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultsFile {
    pub config: CampaignConfig,
    pub results: Vec<SnrStats>,
}

pub fn results_json(stats: &[SnrStats], cfg: &CampaignConfig) -> Result<String> {
    let file = ResultsFile { config: cfg.clone(), results: stats.to_vec() };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn read_results_json(text: &str) -> Result<ResultsFile> {
    Ok(serde_json::from_str(text)?)
}

pub fn emit_results(stats: &[SnrStats], cfg: &CampaignConfig, format: OutputFormat, path: &Path) -> Result<()> {
    let body = match format {
        OutputFormat::Csv => results_csv(stats, cfg)?,
        OutputFormat::Json => results_json(stats, cfg)?,
    };
    std::fs::write(path, body)?;
    Ok(())
}

/// Parses `start:step:stop` (inclusive), a comma-separated list, or one value.
pub fn parse_snr_list(text: &str) -> Result<Vec<f64>> {
    let bad = || Error::InvalidParameter(format!("cannot parse SNR list {text:?}"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [start, step, stop] => {
            let (start, step, stop) = (num(start)?, num(step)?, num(stop)?);
            if step.is_nan() || step <= 0.0 || stop < start {
                return Err(bad());
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            Ok((0..count).map(|i| ((start + i as f64 * step) * 1e9).round() / 1e9).collect())
        }
        [single] => single.split(',').map(num).collect(),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_pac() -> PacConfigFile {
        PacConfigFile {
            n: 16,
            k: 8,
            c_octal: "133".into(),
            rho: 0.8,
            delta: 2.0,
            z_max: None,
            profile: "rm".into(),
        }
    }

    #[test]
    fn bucket_boundaries() {
        assert_eq!(ZHistogram::bucket_of(128), 0);
        assert_eq!(ZHistogram::bucket_of(1024), 0);
        assert_eq!(ZHistogram::bucket_of(1025), 1);
        assert_eq!(ZHistogram::bucket_of(2048), 1);
        assert_eq!(ZHistogram::bucket_of(2049), 2);
        assert_eq!(ZHistogram::bucket_of(1 << 18), 8);
        assert_eq!(ZHistogram::bucket_of((1 << 18) + 1), 9);
        assert_eq!(ZHistogram::label(1), "2^10<Z<=2^11");
        assert_eq!(ZHistogram::label(8), "2^17<Z<=2^18");
    }

    #[test]
    fn histogram_filtering() {
        let trials = vec![
            TrialResult { outcome: TrialOutcome::Success, z: 128 },
            TrialResult { outcome: TrialOutcome::Success, z: 5000 },
            TrialResult { outcome: TrialOutcome::FrameError, z: 40_000 },
            TrialResult { outcome: TrialOutcome::Abort, z: 16_385 },
        ];
        let all = z_histogram(&trials, false);
        assert_eq!(all.total(), 4);
        let ok = z_histogram(&trials, true);
        assert_eq!(ok.total(), 2);
        assert_eq!(ok.percentages()[0], 50.0);
        assert_eq!(all.fraction_above(1 << 15), 0.25);
        let same: Vec<TrialResult> = (0..10).map(|_| TrialResult { outcome: TrialOutcome::Success, z: 128 }).collect();
        assert_eq!(z_histogram(&same, true).percentages()[0], 100.0);
    }

    #[test]
    fn sweep_postprocessing() {
        let trials = vec![
            TrialResult { outcome: TrialOutcome::Success, z: 16 },
            TrialResult { outcome: TrialOutcome::Success, z: 30 },
            TrialResult { outcome: TrialOutcome::FrameError, z: 16 },
            TrialResult { outcome: TrialOutcome::Success, z: 100 },
        ];
        let rows = fer_vs_zmax(&trials, &[Some(16), Some(30), Some(99), None]);
        assert_eq!(rows, vec![(Some(16), 0.75), (Some(30), 0.5), (Some(99), 0.5), (None, 0.25)]);
    }

    #[test]
    fn snr_lists() {
        assert_eq!(parse_snr_list("0:0.5:3.5").unwrap(), vec![0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5]);
        assert_eq!(parse_snr_list("2.5").unwrap(), vec![2.5]);
        assert_eq!(parse_snr_list("1,2.5, 3").unwrap(), vec![1.0, 2.5, 3.0]);
        assert_eq!(parse_snr_list("0:0.1:0.3").unwrap().len(), 4);
        assert!(parse_snr_list("1:0:2").is_err());
        assert!(parse_snr_list("a").is_err());
        assert!(parse_snr_list("1:2").is_err());
    }

    #[test]
    fn stopping_rule() {
        let r = StoppingRule { min_trials: 10, min_errors: 2, max_trials: 50 };
        assert!(!r.done(9, 5));
        assert!(!r.done(10, 1));
        assert!(r.done(10, 2));
        assert!(r.done(50, 0));
        assert!(StoppingRule { min_trials: 5, min_errors: 0, max_trials: 4 }.validate().is_err());
    }

    #[test]
    fn seeded_campaign_is_reproducible() {
        let cfg = CampaignConfig::pac(small_pac(), vec![1.0, 3.0], 7).with_stopping(StoppingRule {
            min_trials: 300,
            min_errors: 5,
            max_trials: 2000,
        });
        let a = run_campaign(&cfg).unwrap();
        let b = run_campaign(&cfg.clone().with_workers(3)).unwrap();
        assert_eq!(a, b);
        assert!(a.failure.is_none());
        assert_eq!(a.points.len(), 2);
        assert!(a.points[0].fer >= a.points[1].fer);
    }

    #[test]
    fn empty_csv_and_json_roundtrip() {
        let cfg = CampaignConfig::pac(small_pac(), vec![], 1);
        let csv = results_csv(&[], &cfg).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("# config: "));
        assert_eq!(lines[1], CSV_HEADER);

        let cfg = CampaignConfig::pac(small_pac(), vec![2.0], 1).with_stopping(StoppingRule::fixed(200));
        let report = run_campaign(&cfg).unwrap();
        let back = read_results_json(&results_json(&report.points, &cfg).unwrap()).unwrap();
        assert_eq!(back.results, report.points);
        assert_eq!(back.config, cfg);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut f = small_pac();
        f.k = 0;
        assert!(run_campaign(&CampaignConfig::pac(f, vec![1.0], 0)).is_err());
        let cfg = CampaignConfig::pac(small_pac(), vec![1.0], 0)
            .with_stopping(StoppingRule { min_trials: 10, min_errors: 0, max_trials: 5 });
        assert!(run_campaign(&cfg).is_err());
    }
}
