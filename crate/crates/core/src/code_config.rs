//! Code parameters: generator sequences, rate profiles, and the data
//! container mapping between `d` (K bits) and `v` (N bits).
//!
//! Bits are stored as `u8` values in `{0, 1}`. Indices are 0-based here;
//! user-facing output (the `profile` subcommand) adds one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Convolution taps `(c_0, ..., c_m)` with `c_0 = c_m = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSequence {
    taps: Vec<u8>,
}

impl GeneratorSequence {
    pub fn from_taps(taps: Vec<u8>) -> Result<Self> {
        let text: String = taps.iter().map(|b| if *b != 0 { '1' } else { '0' }).collect();
        if taps.is_empty() {
            return Err(Error::InvalidGenerator { text, reason: "no taps" });
        }
        if taps.iter().any(|&b| b > 1) {
            return Err(Error::InvalidGenerator { text, reason: "taps must be 0 or 1" });
        }
        if taps[0] != 1 {
            return Err(Error::InvalidGenerator { text, reason: "first tap c_0 must be 1" });
        }
        if taps[taps.len() - 1] != 1 {
            return Err(Error::InvalidGenerator { text, reason: "last tap c_m must be 1" });
        }
        Ok(Self { taps })
    }

    /// The identity precoder `c = (1)`.
    pub fn identity() -> Self {
        Self { taps: vec![1] }
    }

    pub fn taps(&self) -> &[u8] {
        &self.taps
    }

    /// Memory length `m` (number of taps minus one).
    pub fn memory(&self) -> usize {
        self.taps.len() - 1
    }

    /// Back to octal, most significant digit first.
    pub fn to_octal(&self) -> String {
        let len = self.taps.len();
        let pad = (3 - len % 3) % 3;
        let bits: Vec<u8> = std::iter::repeat_n(0, pad).chain(self.taps.iter().copied()).collect();
        bits.chunks(3)
            .map(|c| char::from(b'0' + (c[0] << 2 | c[1] << 1 | c[2])))
            .collect()
    }
}

/// Parse an octal generator such as `"133"`.
///
/// Each digit expands to three bits, most significant first. Leading zero
/// bits are dropped and the first surviving bit becomes `c_0`.
pub fn parse_octal_generator(text: &str) -> Result<GeneratorSequence> {
    if text.is_empty() {
        return Err(Error::InvalidGenerator { text: text.into(), reason: "empty string" });
    }
    let mut bits = Vec::with_capacity(3 * text.len());
    for ch in text.chars() {
        let digit = ch
            .to_digit(8)
            .ok_or_else(|| Error::InvalidOctalDigit(ch, text.into()))? as u8;
        bits.extend_from_slice(&[(digit >> 2) & 1, (digit >> 1) & 1, digit & 1]);
    }
    let first = match bits.iter().position(|&b| b == 1) {
        Some(p) => p,
        None => {
            return Err(Error::InvalidGenerator { text: text.into(), reason: "all digits are zero" })
        }
    };
    let taps = bits.split_off(first);
    if taps[taps.len() - 1] != 1 {
        return Err(Error::InvalidGenerator {
            text: text.into(),
            reason: "last tap c_m is zero (generator must end in an odd digit)",
        });
    }
    GeneratorSequence::from_taps(taps)
}

/// The data index set `A` and its mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateProfile {
    mask: Vec<bool>,
    data_indices: Vec<usize>,
}

impl RateProfile {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        let data_indices = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        Self { mask, data_indices }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Result<Self> {
        let mut mask = vec![false; len];
        for &i in indices {
            if i >= len {
                return Err(Error::InvalidParameter(format!("data index {i} out of range for N={len}")));
            }
            if mask[i] {
                return Err(Error::InvalidParameter(format!("duplicate data index {i}")));
            }
            mask[i] = true;
        }
        Ok(Self::from_mask(mask))
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.data_indices.len()
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Data positions, ascending, 0-based.
    pub fn data_indices(&self) -> &[usize] {
        &self.data_indices
    }

    #[inline]
    pub fn is_data(&self, index: usize) -> bool {
        self.mask[index]
    }

    /// Comma-separated 1-based index list.
    pub fn to_one_based_list(&self) -> String {
        self.data_indices
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Reed-Muller rate profile: the `K` indices whose binary expansion has the
/// largest Hamming weight. Within the boundary weight class the larger
/// indices win.
pub fn rm_profile(block_len: usize, k: usize) -> Result<RateProfile> {
    if !block_len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(block_len));
    }
    if k == 0 || k > block_len {
        return Err(Error::InvalidParameter(format!("need 1 <= K <= N, got K={k}, N={block_len}")));
    }
    let mut order: Vec<usize> = (0..block_len).collect();
    order.sort_by(|&a, &b| b.count_ones().cmp(&a.count_ones()).then(b.cmp(&a)));
    let mut mask = vec![false; block_len];
    for &i in &order[..k] {
        mask[i] = true;
    }
    Ok(RateProfile::from_mask(mask))
}

/// Place `d` on the data positions of a zeroed container.
pub fn insert_data(data: &[u8], profile: &RateProfile) -> Result<Vec<u8>> {
    if data.len() != profile.dimension() {
        return Err(Error::LengthMismatch { expected: profile.dimension(), got: data.len() });
    }
    let mut v = vec![0u8; profile.len()];
    for (&i, &bit) in profile.data_indices().iter().zip(data) {
        v[i] = bit;
    }
    Ok(v)
}

/// Read the data positions back out of a container.
pub fn extract_data(container: &[u8], profile: &RateProfile) -> Result<Vec<u8>> {
    if container.len() != profile.len() {
        return Err(Error::LengthMismatch { expected: profile.len(), got: container.len() });
    }
    Ok(profile.data_indices().iter().map(|&i| container[i]).collect())
}

/// One PAC code: block length, dimension, generator and rate profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeConfig {
    block_len: usize,
    stages: usize,
    generator: GeneratorSequence,
    profile: RateProfile,
}

impl CodeConfig {
    pub fn new(generator: GeneratorSequence, profile: RateProfile) -> Result<Self> {
        let block_len = profile.len();
        if !block_len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(block_len));
        }
        if profile.dimension() == 0 {
            return Err(Error::InvalidParameter("rate profile has no data positions".into()));
        }
        Ok(Self {
            block_len,
            stages: block_len.trailing_zeros() as usize,
            generator,
            profile,
        })
    }

    /// RM-profiled code with an octal generator, e.g. `CodeConfig::rm(128, 64, "133")`.
    pub fn rm(block_len: usize, k: usize, c_octal: &str) -> Result<Self> {
        Self::new(parse_octal_generator(c_octal)?, rm_profile(block_len, k)?)
    }

    /// Block length `N`.
    pub fn block_len(&self) -> usize {
        self.block_len
    }

    /// Dimension `K`.
    pub fn dimension(&self) -> usize {
        self.profile.dimension()
    }

    /// `n = log2 N`.
    pub fn stages(&self) -> usize {
        self.stages
    }

    pub fn rate(&self) -> f64 {
        self.dimension() as f64 / self.block_len as f64
    }

    pub fn generator(&self) -> &GeneratorSequence {
        &self.generator
    }

    pub fn profile(&self) -> &RateProfile {
        &self.profile
    }
}

/// Fano decoder parameters: bias `rho` (bits per data level, or per branch
/// for the convolutional decoder), threshold spacing `delta` and an
/// optional visit cap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecoderConfig {
    pub rho: f64,
    pub delta: f64,
    pub z_max: Option<u64>,
}

impl DecoderConfig {
    pub fn new(rho: f64, delta: f64, z_max: Option<u64>) -> Result<Self> {
        if !(rho.is_finite() && rho >= 0.0) {
            return Err(Error::InvalidParameter(format!("bias rho must be finite and >= 0, got {rho}")));
        }
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidParameter(format!("threshold spacing delta must be > 0, got {delta}")));
        }
        if z_max == Some(0) {
            return Err(Error::InvalidParameter("z_max must be positive".into()));
        }
        Ok(Self { rho, delta, z_max })
    }

    /// Bias and spacing used for the three RM-profiled N=128 codes.
    pub fn table_default(block_len: usize, k: usize) -> Option<Self> {
        let rho = match (block_len, k) {
            (128, 29) => 1.4,
            (128, 64) => 1.35,
            (128, 99) => 1.14,
            _ => return None,
        };
        Some(Self { rho, delta: 2.0, z_max: None })
    }

    pub fn with_z_max(mut self, z_max: Option<u64>) -> Self {
        self.z_max = z_max;
        self
    }

    /// Checks the cap against the depth of the search tree: a decode
    /// never finishes with fewer than `depth` visits.
    pub fn validate_for_depth(&self, depth: usize) -> Result<()> {
        match self.z_max {
            Some(z) if (z as usize) < depth => Err(Error::InvalidParameter(format!(
                "z_max = {z} is below the tree depth {depth}"
            ))),
            _ => Ok(()),
        }
    }
}

/// JSON schema of a PAC configuration file. `n` is the block length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PacConfigFile {
    pub n: usize,
    pub k: usize,
    pub c_octal: String,
    pub rho: f64,
    pub delta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_max: Option<u64>,
    #[serde(default = "default_profile")]
    pub profile: String,
}

fn default_profile() -> String {
    "rm".into()
}

impl PacConfigFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn build(&self) -> Result<(CodeConfig, DecoderConfig)> {
        if self.profile != "rm" {
            return Err(Error::InvalidParameter(format!(
                "unsupported profile {:?} (only \"rm\")",
                self.profile
            )));
        }
        let code = CodeConfig::rm(self.n, self.k, &self.c_octal)?;
        let dec = DecoderConfig::new(self.rho, self.delta, self.z_max)?;
        dec.validate_for_depth(code.block_len())?;
        Ok((code, dec))
    }
}
