//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. Worker threads follow `PACSIM_WORKERS`
//! (default: all cores); results do not depend on the worker count.

use std::process::ExitCode;
use std::time::Instant;

use pacsim::analysis::{scl_visit_estimate, snr_for_cutoff_rate};
use pacsim::code_config::{extract_data, insert_data, rm_profile, CodeConfig, DecoderConfig, GeneratorSequence, PacConfigFile};
use pacsim::conv::{conv_encode_zt, register_state, ConvConfig, ConvConfigFile, ConvSection};
use pacsim::pac::{fano_decode, pac_encode, DecodeOutcome};
use pacsim::polar::{polar_transform, ScState};
use pacsim::sim::{
    results_csv, run_campaign, workers_from_env, CampaignConfig, SchemeSpec, SnrStats, StoppingRule,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ANV_TOLERANCE: f64 = 0.25;
const FER_TARGET: f64 = 6e-3;
const FER_FACTOR: f64 = 1.5;

struct Suite {
    failures: usize,
}

impl Suite {
    fn check(&mut self, id: &str, ok: bool, detail: String) {
        println!("{} [{id}] {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures += 1;
        }
    }
}

fn pac_file(k: usize, c: &str, rho: f64) -> PacConfigFile {
    PacConfigFile { n: 128, k, c_octal: c.into(), rho, delta: 2.0, z_max: None, profile: "rm".into() }
}

fn campaign(cfg: CampaignConfig) -> SnrStats {
    let cfg = cfg.with_workers(workers_from_env().unwrap_or(0));
    let report = run_campaign(&cfg).expect("campaign");
    assert!(report.failure.is_none(), "{:?}", report.failure);
    report.points[0].clone()
}

fn within(value: f64, target: f64, rel: f64) -> bool {
    (value - target).abs() <= rel * target
}

fn criterion_1(s: &mut Suite) {
    for (k, target) in [(64, 2.46), (29, -1.63), (99, 5.49)] {
        let db = snr_for_cutoff_rate(k as f64 / 128.0).unwrap();
        s.check(
            "1 cutoff rate",
            (db - target).abs() <= 0.01,
            format!("R0 = {k}/128 at {db:.4} dB, expected {target} +/- 0.01 dB"),
        );
    }
}

fn criterion_2(s: &mut Suite) {
    let got: Vec<u64> = [29, 64, 99].iter().map(|&k| scl_visit_estimate(64, k, 11)).collect();
    s.check("2 list estimate", got == [5120, 9600, 14080], format!("2L(K+C) for K=29/64/99: {got:?}, expected [5120, 9600, 14080]"));
}

fn anv_check(s: &mut Suite, id: &str, stats: &SnrStats, k: usize, target: f64) {
    s.check(
        id,
        within(stats.anv, target, ANV_TOLERANCE) && stats.trials >= 100_000,
        format!(
            "PAC(128,{k}) at {} dB: ANV {:.1} (successes only {:.1}), expected {target} +/- 25%, {} trials, FER {:.3e}",
            stats.snr_db, stats.anv, stats.anv_success, stats.trials, stats.fer
        ),
    );
}

fn criteria_3_and_4(s: &mut Suite) {
    let t = Instant::now();
    let at3 = campaign(
        CampaignConfig::pac(pac_file(64, "133", 1.35), vec![3.0], 3001)
            .with_stopping(StoppingRule::fixed(1_000_000))
            .with_success_only_hist(true),
    );
    anv_check(s, "3 ANV", &at3, 64, 368.0);
    let low = at3.z_hist.percentages()[0];
    let high = 100.0 * at3.z_hist.fraction_above(1 << 15);
    s.check(
        "4 Z distribution",
        at3.trials >= 1_000_000 && (low - 98.14).abs() <= 0.5 && high < 0.1,
        format!(
            "3.0 dB, successful decodings of {} trials: Z <= 2^10 {low:.4}% (expected 98.14 +/- 0.5), Z > 2^15 {high:.4}% (expected < 0.1) [{:.0?}]",
            at3.trials,
            t.elapsed()
        ),
    );

    let at25 = campaign(
        CampaignConfig::pac(pac_file(64, "133", 1.35), vec![2.5], 2501).with_stopping(StoppingRule::fixed(100_000)),
    );
    anv_check(s, "3 ANV", &at25, 64, 736.0);
    let k29 = campaign(
        CampaignConfig::pac(pac_file(29, "3211", 1.4), vec![0.0], 2901).with_stopping(StoppingRule::fixed(100_000)),
    );
    anv_check(s, "3 ANV", &k29, 29, 191.0);
    let k99 = campaign(
        CampaignConfig::pac(pac_file(99, "133", 1.14), vec![7.0], 9901).with_stopping(StoppingRule::fixed(100_000)),
    );
    anv_check(s, "3 ANV", &k99, 99, 270.0);
}

fn fer_band(s: &mut Suite, label: &str, stats: &SnrStats) {
    let ok = stats.frame_errors >= 100 && stats.fer <= FER_TARGET * FER_FACTOR && stats.fer >= FER_TARGET / FER_FACTOR;
    s.check(
        "5 FER",
        ok,
        format!(
            "PAC(128,64) at 2.5 dB, {label}: FER {:.3e} ({} errors, {} aborts, {} trials), expected within [{:.1e}, {:.1e}]",
            stats.fer,
            stats.frame_errors,
            stats.aborts,
            stats.trials,
            FER_TARGET / FER_FACTOR,
            FER_TARGET * FER_FACTOR
        ),
    );
}

fn criterion_5(s: &mut Suite) {
    let rule = StoppingRule { min_trials: 100_000, min_errors: 100, max_trials: 2_000_000 };
    let base = CampaignConfig::pac(pac_file(64, "133", 1.35), vec![2.5], 2502).with_stopping(rule);
    fer_band(s, "unbounded", &campaign(base.clone()));
    fer_band(s, "Z_max = 16384", &campaign(base.with_z_max(Some(16384))));
}

fn random_bits(rng: &mut ChaCha8Rng, n: usize) -> Vec<u8> {
    (0..n).map(|_| rng.random_range(0..2)).collect()
}

fn brute_force_llr(llrs: &[f64], prefix: &[u8]) -> f64 {
    let free = llrs.len() - prefix.len() - 1;
    let mut sums = [0.0f64; 2];
    for bit in 0..2u8 {
        for tail in 0..(1u32 << free) {
            let mut u = prefix.to_vec();
            u.push(bit);
            u.extend((0..free).map(|t| ((tail >> t) & 1) as u8));
            let x = polar_transform(&u).unwrap();
            let lw: f64 = x.iter().zip(llrs).map(|(&b, &l)| if b == 0 { l / 2.0 } else { -l / 2.0 }).sum();
            sums[bit as usize] += lw.exp();
        }
    }
    (sums[0] / sums[1]).ln()
}

fn criterion_6(s: &mut Suite) {
    let mut rng = ChaCha8Rng::seed_from_u64(6);

    let mut ok = true;
    for _ in 0..1000 {
        let a = random_bits(&mut rng, 128);
        let b = random_bits(&mut rng, 128);
        let ta = polar_transform(&a).unwrap();
        let sum: Vec<u8> = a.iter().zip(&b).map(|(x, y)| x ^ y).collect();
        let tb = polar_transform(&b).unwrap();
        let tsum: Vec<u8> = ta.iter().zip(&tb).map(|(x, y)| x ^ y).collect();
        ok &= polar_transform(&ta).unwrap() == a && polar_transform(&sum).unwrap() == tsum;
    }
    s.check("6 properties", ok, "polar transform is a linear involution on 1000 random pairs (N=128)".into());

    let code = CodeConfig::new(GeneratorSequence::identity(), rm_profile(8, 4).unwrap()).unwrap();
    let ok = (0..16u32).all(|m| {
        let d: Vec<u8> = (0..4).map(|i| ((m >> i) & 1) as u8).collect();
        pac_encode(&d, &code).unwrap() == polar_transform(&insert_data(&d, code.profile()).unwrap()).unwrap()
    });
    s.check("6 properties", ok, "c = (1) PAC encoding equals polar encoding for all 16 messages at N=8".into());

    let mut worst = 0.0f64;
    for len in [2usize, 4, 8] {
        for _ in 0..50 {
            let llrs: Vec<f64> = (0..len).map(|_| rng.random_range(-5.0..5.0)).collect();
            let u = random_bits(&mut rng, len);
            let mut sc = ScState::new(&llrs).unwrap();
            for j in 0..len {
                let lam = sc.next_bit_llr().unwrap();
                let oracle = brute_force_llr(&llrs, &u[..j]);
                worst = worst.max((lam - oracle).abs() / oracle.abs().max(1.0));
                sc.commit_bit(u[j]).unwrap();
            }
        }
    }
    s.check("6 properties", worst <= 1e-9, format!("SC LLRs vs enumeration at N<=8: worst relative error {worst:.2e}"));

    let code = CodeConfig::rm(128, 64, "133").unwrap();
    let mut ok = true;
    for rho in [0.0, 0.5, 1.0] {
        let dec = DecoderConfig::new(rho, 2.0, None).unwrap();
        for _ in 0..20 {
            let d = random_bits(&mut rng, 64);
            let llrs: Vec<f64> = pac_encode(&d, &code).unwrap().iter().map(|&b| if b == 0 { 1e6 } else { -1e6 }).collect();
            ok &= match fano_decode(&llrs, &code, &dec).unwrap() {
                DecodeOutcome::Decoded { path, visits, metric } => {
                    visits == 128
                        && (metric - (128.0 - 64.0 * rho)).abs() < 1e-9
                        && extract_data(&path, code.profile()).unwrap() == d
                }
                DecodeOutcome::Aborted { .. } => false,
            };
        }
    }
    s.check("6 properties", ok, "noiseless decoding: Z = N and metric N - K rho for rho in {0, 0.5, 1}, 60 random messages".into());

    let profile = rm_profile(128, 64).unwrap();
    let ok = (0..200).all(|_| {
        let d = random_bits(&mut rng, 64);
        extract_data(&insert_data(&d, &profile).unwrap(), &profile).unwrap() == d
    });
    s.check("6 properties", ok, "insert/extract round trip on 200 random messages".into());

    let expected: Vec<usize> = (0..128).filter(|i: &usize| i.count_ones() >= 4).collect();
    s.check(
        "6 properties",
        profile.data_indices() == expected.as_slice(),
        "RM profile (128,64) is the set of indices with binary weight >= 4".into(),
    );

    let cfg = ConvConfig::standard_133_171();
    let mut impulse = vec![0u8; 64];
    impulse[0] = 1;
    let out = conv_encode_zt(&impulse, &cfg).unwrap();
    let (g1, g2) = cfg.generators();
    let mut expected = vec![0u8; 140];
    for t in 0..7 {
        expected[2 * t] = g1.taps()[t];
        expected[2 * t + 1] = g2.taps()[t];
    }
    let mut inputs = random_bits(&mut rng, 64);
    inputs.extend([0; 6]);
    s.check(
        "6 properties",
        out == expected && register_state(&inputs, 6) == vec![0; 6],
        format!("(133,171) impulse response equals taps {}/{} and the tail clears the register", g1.to_octal(), g2.to_octal()),
    );

    let base = CampaignConfig::pac(pac_file(64, "133", 1.35), vec![2.0, 2.5], 66)
        .with_stopping(StoppingRule { min_trials: 500, min_errors: 5, max_trials: 5000 });
    let csv = |workers| {
        let cfg = base.clone().with_workers(workers);
        results_csv(&run_campaign(&cfg).unwrap().points, &cfg).unwrap()
    };
    s.check("6 properties", csv(1) == csv(3), "campaign CSV is byte-identical with 1 and 3 workers".into());
}

fn criterion_7(s: &mut Suite) {
    let pac = |snr, seed| {
        campaign(CampaignConfig::pac(pac_file(64, "133", 1.35), vec![snr], seed).with_stopping(StoppingRule::fixed(20_000)))
    };
    let (lo, hi) = (pac(2.0, 7020), pac(3.0, 7030));
    let ratio = lo.anv / hi.anv;
    s.check(
        "7 PAC knee",
        ratio >= 5.0,
        format!("PAC(128,64) ANV {:.1} at 2.0 dB vs {:.1} at 3.0 dB: ratio {ratio:.2}, expected >= 5", lo.anv, hi.anv),
    );

    let conv_file = ConvConfigFile {
        conv: ConvSection { g1_octal: "133".into(), g2_octal: "171".into(), k: 64 },
        bias: 1.0,
        delta: 2.0,
        z_max: None,
    };
    let conv = |snr, seed| {
        campaign(
            CampaignConfig::new(SchemeSpec::Conv(conv_file.clone()), vec![snr], seed)
                .with_stopping(StoppingRule::fixed(20_000)),
        )
    };
    let (lo, hi) = (conv(2.0, 7120), conv(3.5, 7135));
    let ratio = lo.anv / hi.anv;
    s.check(
        "7 conv knee",
        ratio >= 3.0,
        format!(
            "conv (133,171) K=64, bias 1, step 2: ANV {:.1} at 2.0 dB vs {:.1} at 3.5 dB: ratio {ratio:.2}, expected >= 3",
            lo.anv, hi.anv
        ),
    );
}

fn main() -> ExitCode {
    // keep `cargo test -- --list` and filters from running the long suite
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut suite = Suite { failures: 0 };
    let started = Instant::now();
    criterion_1(&mut suite);
    criterion_2(&mut suite);
    criterion_6(&mut suite);
    criteria_3_and_4(&mut suite);
    criterion_5(&mut suite);
    criterion_7(&mut suite);
    println!("acceptance: {} failure(s) in {:.0?}", suite.failures, started.elapsed());
    if suite.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
