//! Encode one random message with PAC(128,64), send it over AWGN and
//! decode it with the Fano decoder.
//!
//! cargo run --release --example encode_decode -- [snr_db] [seed]

use pacsim::channel::{awgn_sample, bpsk_modulate, channel_llrs, SnrPoint};
use pacsim::code_config::{extract_data, CodeConfig, DecoderConfig};
use pacsim::pac::{pac_encode, DecodeOutcome, PacDecoder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> pacsim::Result<()> {
    let mut args = std::env::args().skip(1);
    let snr_db: f64 = args.next().map_or(2.5, |s| s.parse().expect("snr_db"));
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));

    let code = CodeConfig::rm(128, 64, "133")?;
    let dec = DecoderConfig::table_default(128, 64).expect("tabulated operating point");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let data: Vec<u8> = (0..code.dimension()).map(|_| rng.random_range(0..2)).collect();
    let x = pac_encode(&data, &code)?;
    let point = SnrPoint::from_db(snr_db);
    let y = awgn_sample(&bpsk_modulate(&x), point, &mut rng);
    let llrs = channel_llrs(&y, point);
    let hard_errors = y.iter().zip(&x).filter(|(&y, &b)| (y < 0.0) != (b == 1)).count();

    let mut decoder = PacDecoder::new(code.clone(), dec);
    match decoder.decode(&llrs)? {
        DecodeOutcome::Decoded { path, visits, metric } => {
            let d_hat = extract_data(&path, code.profile())?;
            let bit_errors = d_hat.iter().zip(&data).filter(|(a, b)| a != b).count();
            println!("snr {snr_db} dB, sigma {:.4}, {hard_errors} hard-decision channel errors", point.sigma);
            println!("decoded after {visits} visits, path metric {metric:.3}, {bit_errors} data bit errors");
        }
        DecodeOutcome::Aborted { visits } => println!("aborted after {visits} visits"),
    }
    Ok(())
}
