//! Reed-Muller rate profiles and the insertion of data bits.
//!
//! cargo run --example rate_profile -- [n] [k]

use pacsim::code_config::{insert_data, rm_profile};

fn main() -> pacsim::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(128, |s| s.parse().expect("n"));
    let k: usize = args.next().map_or(64, |s| s.parse().expect("k"));
    let profile = rm_profile(n, k)?;
    println!("({n},{k}) data indices, 1-based:");
    println!("{}", profile.to_one_based_list());
    let ones = vec![1u8; k];
    let mask: String = insert_data(&ones, &profile)?.iter().map(|&b| if b == 1 { '#' } else { '.' }).collect();
    for row in mask.as_bytes().chunks(64) {
        println!("{}", std::str::from_utf8(row).expect("ascii"));
    }
    Ok(())
}
