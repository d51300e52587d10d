//! Cutoff rate, BI-AWGN capacity/dispersion and the normal approximation,
//! and the list-decoder node count estimate.

use serde::{Deserialize, Serialize};
use libm::erfc;

use crate::error::{Error, Result};

/// BI-AWGN cutoff rate `1 - log2(1 + e^{-s/2})`, `s = 10^{snr_db/10}`.
pub fn cutoff_rate(snr_db: f64) -> f64 {
    let s = 10f64.powf(snr_db / 10.0);
    1.0 - (-s / 2.0).exp().ln_1p() * std::f64::consts::LOG2_E
}

/// SNR (dB) at which the cutoff rate equals `rate`.
pub fn snr_for_cutoff_rate(rate: f64) -> Result<f64> {
    if !(rate > 0.0 && rate < 1.0) {
        return Err(Error::InvalidParameter(format!("rate must lie in (0, 1), got {rate}")));
    }
    let s = -2.0 * (2f64.powf(1.0 - rate) - 1.0).ln();
    Ok(10.0 * s.log10())
}

/// Capacity and dispersion of the BI-AWGN channel at one SNR.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BiawgnMoments {
    pub snr_db: f64,
    /// bits per channel use
    pub capacity: f64,
    /// bits^2 per channel use
    pub dispersion: f64,
}

/// Information density `log2(2 / (1 + e^{-llr}))` of one received LLR.
fn info_density(llr: f64) -> f64 {
    let softplus = if llr < 0.0 { -llr + llr.exp().ln_1p() } else { (-llr).exp().ln_1p() };
    1.0 - softplus * std::f64::consts::LOG2_E
}

/// `E[i]` and `Var[i]` by the trapezoidal rule in the standard normal
/// variable on `[-12, 12]` with `steps_per_unit` points per unit. The
/// integrand is analytic in a strip, so the rule converges geometrically.
fn moments_with(steps_per_unit: usize, snr_db: f64) -> (f64, f64) {
    let var = 10f64.powf(-snr_db / 10.0);
    // LLR under bit 0 is N(2/var, 4/var)
    let mean = 2.0 / var;
    let spread = 2.0 / var.sqrt();
    let h = 1.0 / steps_per_unit as f64;
    let half = 12 * steps_per_unit as i64;
    let norm = h / (2.0 * std::f64::consts::PI).sqrt();
    let (mut m1, mut m2) = (0.0, 0.0);
    for j in -half..=half {
        let z = j as f64 * h;
        let w = (-0.5 * z * z).exp();
        let i = info_density(mean + spread * z);
        m1 += w * i;
        m2 += w * i * i;
    }
    let c = m1 * norm;
    (c, (m2 * norm - c * c).max(0.0))
}

pub const QUADRATURE_STEPS: usize = 32;
const MAX_QUADRATURE_STEPS: usize = 4096;

/// Capacity and dispersion by quadrature. The grid is refined by halving
/// the step until two successive rules agree to 1e-9.
pub fn biawgn_moments(snr_db: f64) -> Result<BiawgnMoments> {
    let mut steps = QUADRATURE_STEPS;
    let (mut c, mut v) = moments_with(steps, snr_db);
    loop {
        let (c_ref, v_ref) = moments_with(2 * steps, snr_db);
        let diff = (c - c_ref).abs().max((v - v_ref).abs());
        if diff.is_finite() && diff <= 1e-9 {
            return Ok(BiawgnMoments { snr_db, capacity: c_ref.clamp(0.0, 1.0), dispersion: v_ref });
        }
        steps *= 2;
        if steps >= MAX_QUADRATURE_STEPS {
            return Err(Error::QuadratureNonConvergence { snr_db, diff });
        }
        (c, v) = (c_ref, v_ref);
    }
}

/// Gaussian tail `Q(x) = P(N(0,1) > x)`.
pub fn q_function(x: f64) -> f64 {
    0.5 * erfc(x / std::f64::consts::SQRT_2)
}

/// Inverse of `Q` by bisection.
pub fn q_inverse(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter(format!("Q^-1 needs p in (0, 1), got {p}")));
    }
    let (mut lo, mut hi) = (-40.0f64, 40.0f64);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if q_function(mid) > p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Normal approximation of the best achievable FER of an `(N, K)` code:
/// `Q((N C - K + log2(N)/2) / sqrt(N V))`.
pub fn dispersion_fer(block_len: usize, k: usize, snr_db: f64) -> Result<f64> {
    if block_len == 0 || k == 0 || k > block_len {
        return Err(Error::InvalidParameter(format!("need 0 < K <= N, got N={block_len}, K={k}")));
    }
    let m = biawgn_moments(snr_db)?;
    let n = block_len as f64;
    let numerator = n * m.capacity - k as f64 + 0.5 * n.log2();
    let spread = (n * m.dispersion).sqrt();
    if spread <= 1e-300 {
        return Ok(match numerator.partial_cmp(&0.0) {
            Some(std::cmp::Ordering::Greater) => 0.0,
            Some(std::cmp::Ordering::Less) => 1.0,
            _ => 0.5,
        });
    }
    Ok(q_function(numerator / spread))
}

/// Nodes inspected by a list-of-`L` decoder over `K + C` branching points,
/// `2 L (K + C)`.
pub fn scl_visit_estimate(list_size: u64, k: u64, crc_len: u64) -> u64 {
    2 * list_size * (k + crc_len)
}
