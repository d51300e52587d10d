//! Polarization-adjusted convolutional (PAC) codes under Fano sequential
//! decoding.
//!
//! The crate covers the whole chain used to study these codes at short
//! block lengths:
//!
//! - [`code_config`]: octal generators, Reed-Muller rate profiles, data
//!   insertion and extraction.
//! - [`polar`]: the polar transform and a successive-cancellation engine
//!   with constant-time rewind, used as the metric calculator.
//! - [`fano`]: a generic Fano tree search with visit counting and an
//!   optional visit cap.
//! - [`pac`]: PAC encoding and decoding.
//! - [`conv`]: a terminated (133, 171) convolutional code with its own Fano
//!   decoder, for comparison.
//! - [`channel`]: BPSK, seeded AWGN and channel LLRs.
//! - [`analysis`]: cutoff rate, BI-AWGN dispersion approximation and the
//!   list-decoder complexity estimate.
//! - [`sim`]: reproducible Monte Carlo campaigns and result files.
//!
//! ```
//! use pacsim::code_config::{CodeConfig, DecoderConfig};
//! use pacsim::pac::{pac_encode, PacDecoder};
//!
//! let code = CodeConfig::rm(128, 64, "133").unwrap();
//! let dec = DecoderConfig::table_default(128, 64).unwrap();
//! let data: Vec<u8> = (0..64).map(|i| (i % 3 == 0) as u8).collect();
//! let x = pac_encode(&data, &code).unwrap();
//! let llrs: Vec<f64> = x.iter().map(|&b| if b == 0 { 8.0 } else { -8.0 }).collect();
//! let out = PacDecoder::new(code.clone(), dec).decode(&llrs).unwrap();
//! let v = out.path().unwrap();
//! assert_eq!(pacsim::code_config::extract_data(v, code.profile()).unwrap(), data);
//! ```

pub mod analysis;
pub mod channel;
pub mod code_config;
pub mod conv;
pub mod error;
pub mod fano;
pub mod pac;
pub mod polar;
pub mod sim;

pub use error::{Error, Result};
