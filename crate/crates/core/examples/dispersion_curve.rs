//! Normal approximation of the best achievable FER for a short block code
//! on the BPSK AWGN channel.
//!
//! cargo run --example dispersion_curve -- [n] [k]

use pacsim::analysis::{biawgn_moments, dispersion_fer};

fn main() -> pacsim::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(128, |s| s.parse().expect("n"));
    let k: usize = args.next().map_or(64, |s| s.parse().expect("k"));
    println!("snr_db,capacity,dispersion,fer");
    for i in 0..=16 {
        let snr = i as f64 * 0.25;
        let m = biawgn_moments(snr)?;
        println!("{snr},{:.6},{:.6},{:.4e}", m.capacity, m.dispersion, dispersion_fer(n, k, snr)?);
    }
    Ok(())
}
