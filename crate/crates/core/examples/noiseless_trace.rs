//! Trace the Fano search on a small PAC(8,4) code: every forward move with
//! its depth, metric and threshold.
//!
//! cargo run --example noiseless_trace -- [rho] [flip]
//!
//! With `flip` the first received symbol is inverted; at the default bias
//! the search then backs up and lowers its threshold before finishing.

use pacsim::code_config::{CodeConfig, DecoderConfig};
use pacsim::pac::{pac_encode, PacDecoder};

fn main() -> pacsim::Result<()> {
    let mut args = std::env::args().skip(1);
    let rho: f64 = args.next().map_or(1.35, |s| s.parse().expect("rho"));
    let flip = args.next().is_some_and(|a| a == "flip");

    let code = CodeConfig::rm(8, 4, "133")?;
    let dec = DecoderConfig::new(rho, 1.0, None)?;
    let data = [1, 0, 1, 1];
    let x = pac_encode(&data, &code)?;
    let mut llrs: Vec<f64> = x.iter().map(|&b| if b == 0 { 3.0 } else { -3.0 }).collect();
    if flip {
        llrs[0] = -llrs[0];
    }
    println!("data indices (1-based): {}", code.profile().to_one_based_list());
    println!("codeword {x:?}, llrs {llrs:?}");
    println!("{:>5} {:>6} {:>10} {:>10} {:>6}  path", "move", "depth", "metric", "threshold", "tighten");

    let mut decoder = PacDecoder::new(code, dec);
    let mut n = 0;
    let out = decoder.decode_observed(&llrs, |m| {
        n += 1;
        println!(
            "{n:>5} {:>6} {:>10.4} {:>10.1} {:>6}  {:?}",
            m.path.len(),
            m.metric,
            m.threshold,
            m.first_visit,
            m.path
        );
    })?;
    println!("{out:?}");
    Ok(())
}
