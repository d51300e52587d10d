//! Zero-tail terminated rate-1/2 convolutional code and its Fano decoder.

use serde::{Deserialize, Serialize};

use crate::code_config::{parse_octal_generator, DecoderConfig, GeneratorSequence};
use crate::error::{Error, Result};
use crate::fano::{bit_metric, Branch, Branches, CodeTree, FanoSearch, ForwardMove};
use crate::pac::DecodeOutcome;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvConfig {
    g1: GeneratorSequence,
    g2: GeneratorSequence,
    message_len: usize,
    memory: usize,
}

impl ConvConfig {
    pub fn new(g1: GeneratorSequence, g2: GeneratorSequence, message_len: usize) -> Result<Self> {
        if g1 == g2 {
            return Err(Error::InvalidParameter("the two generators must differ".into()));
        }
        if message_len == 0 {
            return Err(Error::InvalidParameter("message length must be positive".into()));
        }
        let memory = g1.memory().max(g2.memory());
        Ok(Self { g1, g2, message_len, memory })
    }

    pub fn from_octal(g1: &str, g2: &str, message_len: usize) -> Result<Self> {
        Self::new(parse_octal_generator(g1)?, parse_octal_generator(g2)?, message_len)
    }

    /// The (133, 171) code with K = 64 (N = 140).
    pub fn standard_133_171() -> Self {
        Self::from_octal("133", "171", 64).expect("valid generators")
    }

    pub fn message_len(&self) -> usize {
        self.message_len
    }

    pub fn memory(&self) -> usize {
        self.memory
    }

    /// Number of trellis sections including the tail.
    pub fn sections(&self) -> usize {
        self.message_len + self.memory
    }

    pub fn output_len(&self) -> usize {
        2 * self.sections()
    }

    /// Effective rate `K / (2 (K + m))`.
    pub fn rate(&self) -> f64 {
        self.message_len as f64 / self.output_len() as f64
    }

    pub fn generators(&self) -> (&GeneratorSequence, &GeneratorSequence) {
        (&self.g1, &self.g2)
    }

    #[inline]
    fn outputs(&self, inputs: &[u8], section: usize, current: u8) -> (u8, u8) {
        (tap_sum(self.g1.taps(), inputs, section, current), tap_sum(self.g2.taps(), inputs, section, current))
    }
}

#[inline]
fn tap_sum(taps: &[u8], inputs: &[u8], section: usize, current: u8) -> u8 {
    let mut acc = current & taps[0];
    for (j, &c) in taps.iter().enumerate().skip(1).take(section) {
        acc ^= c & inputs[section - j];
    }
    acc
}

/// Zero-state start, `m` zero tail bits, `(g1, g2)` outputs interleaved.
pub fn conv_encode_zt(data: &[u8], cfg: &ConvConfig) -> Result<Vec<u8>> {
    if data.len() != cfg.message_len {
        return Err(Error::LengthMismatch { expected: cfg.message_len, got: data.len() });
    }
    let mut inputs = data.to_vec();
    inputs.resize(cfg.sections(), 0);
    let mut out = Vec::with_capacity(cfg.output_len());
    for t in 0..cfg.sections() {
        let (a, b) = cfg.outputs(&inputs, t, inputs[t]);
        out.push(a);
        out.push(b);
    }
    Ok(out)
}

/// Encoder register contents after feeding `inputs`, most recent first.
pub fn register_state(inputs: &[u8], memory: usize) -> Vec<u8> {
    (0..memory)
        .map(|i| if i < inputs.len() { inputs[inputs.len() - 1 - i] } else { 0 })
        .collect()
}

/// Two-bit branch metric minus the per-branch bias.
#[inline]
pub fn conv_branch_metric(llrs: (f64, f64), bits: (u8, u8), bias: f64) -> f64 {
    bit_metric(llrs.0, bits.0) + bit_metric(llrs.1, bits.1) - bias
}

struct ConvTree<'a> {
    cfg: &'a ConvConfig,
    llrs: &'a [f64],
    bias: f64,
    inputs: &'a mut Vec<u8>,
}

impl CodeTree for ConvTree<'_> {
    fn levels(&self) -> usize {
        self.cfg.sections()
    }

    fn branches(&mut self, level: usize) -> Branches {
        let llrs = (self.llrs[2 * level], self.llrs[2 * level + 1]);
        let metric = |bit: u8| conv_branch_metric(llrs, self.cfg.outputs(self.inputs, level, bit), self.bias);
        let zero = Branch { label: 0, metric: metric(0) };
        if level < self.cfg.message_len {
            Branches::pair(zero, Branch { label: 1, metric: metric(1) })
        } else {
            Branches::single(zero)
        }
    }

    fn descend(&mut self, _level: usize, label: u8) {
        self.inputs.push(label);
    }

    fn ascend(&mut self, level: usize) {
        self.inputs.truncate(level);
    }
}

/// Fano decoder for the terminated code. `DecoderConfig::rho` is the bias
/// per branch (two code bits).
#[derive(Debug, Clone)]
pub struct ConvDecoder {
    cfg: ConvConfig,
    dec: DecoderConfig,
    inputs: Vec<u8>,
    search: FanoSearch,
}

impl ConvDecoder {
    pub fn new(cfg: ConvConfig, dec: DecoderConfig) -> Self {
        let inputs = Vec::with_capacity(cfg.sections());
        Self { cfg, dec, inputs, search: FanoSearch::new() }
    }

    pub fn config(&self) -> &ConvConfig {
        &self.cfg
    }

    /// Decode; a `Decoded` path holds all `K + m` inputs including the tail.
    pub fn decode(&mut self, channel_llrs: &[f64]) -> Result<DecodeOutcome> {
        self.decode_observed(channel_llrs, |_| {})
    }

    pub fn decode_observed<F>(&mut self, channel_llrs: &[f64], observe: F) -> Result<DecodeOutcome>
    where
        F: FnMut(&ForwardMove<'_>),
    {
        if channel_llrs.len() != self.cfg.output_len() {
            return Err(Error::LengthMismatch { expected: self.cfg.output_len(), got: channel_llrs.len() });
        }
        self.inputs.clear();
        let mut tree = ConvTree { cfg: &self.cfg, llrs: channel_llrs, bias: self.dec.rho, inputs: &mut self.inputs };
        Ok(self.search.run_observed(&mut tree, self.dec.delta, self.dec.z_max, observe).into())
    }
}

pub fn conv_fano_decode(channel_llrs: &[f64], cfg: &ConvConfig, dec: &DecoderConfig) -> Result<DecodeOutcome> {
    ConvDecoder::new(cfg.clone(), *dec).decode(channel_llrs)
}

/// JSON schema: `{"conv": {"g1_octal": "133", "g2_octal": "171", "k": 64}, "delta": 2}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvConfigFile {
    pub conv: ConvSection,
    #[serde(default = "default_bias")]
    pub bias: f64,
    #[serde(default = "default_delta")]
    pub delta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_max: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvSection {
    pub g1_octal: String,
    pub g2_octal: String,
    pub k: usize,
}

fn default_bias() -> f64 {
    1.0
}

fn default_delta() -> f64 {
    2.0
}

impl ConvConfigFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn build(&self) -> Result<(ConvConfig, DecoderConfig)> {
        let cfg = ConvConfig::from_octal(&self.conv.g1_octal, &self.conv.g2_octal, self.conv.k)?;
        let dec = DecoderConfig::new(self.bias, self.delta, self.z_max)?;
        dec.validate_for_depth(cfg.sections())?;
        Ok((cfg, dec))
    }
}
