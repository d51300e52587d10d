//! Cutoff rate of the BPSK AWGN channel and the SNR at which it equals a
//! given code rate.
//!
//! cargo run --example cutoff_rates

use pacsim::analysis::{cutoff_rate, snr_for_cutoff_rate};

fn main() -> pacsim::Result<()> {
    for k in [29, 64, 99] {
        let rate = k as f64 / 128.0;
        println!("R = {k}/128 = {rate:.4}: R0 = R at {:.2} dB", snr_for_cutoff_rate(rate)?);
    }
    println!();
    println!("snr_db,r0");
    for i in -8..=16 {
        let snr = i as f64 * 0.5;
        println!("{snr},{:.5}", cutoff_rate(snr));
    }
    Ok(())
}
