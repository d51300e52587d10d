//! BPSK over the binary-input AWGN channel.
//!
//! SNR convention: `snr_db = 10 log10(Es / sigma^2)` with `Es = 1` and
//! `sigma^2` the noise variance per real dimension. This is the convention
//! under which the cutoff rate equals 1/2 at 2.46 dB.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// One operating point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SnrPoint {
    pub snr_db: f64,
    pub sigma: f64,
}

impl SnrPoint {
    pub fn from_db(snr_db: f64) -> Self {
        Self { snr_db, sigma: snr_to_sigma(snr_db) }
    }

    pub fn from_sigma(sigma: f64) -> Self {
        assert!(sigma > 0.0, "sigma must be positive");
        Self { snr_db: -20.0 * sigma.log10(), sigma }
    }

    pub fn variance(&self) -> f64 {
        self.sigma * self.sigma
    }
}

pub fn snr_to_sigma(snr_db: f64) -> f64 {
    10f64.powf(-snr_db / 20.0)
}

/// `0 -> +1`, `1 -> -1`.
pub fn bpsk_modulate(bits: &[u8]) -> Vec<f64> {
    bits.iter().map(|&b| 1.0 - 2.0 * f64::from(b)).collect()
}

/// Adds i.i.d. `N(0, sigma^2)` noise to each symbol.
pub fn awgn_sample<R: Rng + ?Sized>(signal: &[f64], point: SnrPoint, rng: &mut R) -> Vec<f64> {
    signal
        .iter()
        .map(|&s| {
            let n: f64 = rng.sample(StandardNormal);
            s + point.sigma * n
        })
        .collect()
}

/// Natural-log LLR `2y / sigma^2`; positive favours bit 0.
#[inline]
pub fn channel_llr(y: f64, point: SnrPoint) -> f64 {
    2.0 * y / point.variance()
}

pub fn channel_llrs(received: &[f64], point: SnrPoint) -> Vec<f64> {
    received.iter().map(|&y| channel_llr(y, point)).collect()
}
