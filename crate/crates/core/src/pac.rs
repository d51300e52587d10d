//! PAC encoding (data insertion, rate-1 convolution, polar transform) and
//! Fano sequential decoding with the SC engine as metric calculator.

use crate::code_config::{insert_data, CodeConfig, DecoderConfig, GeneratorSequence};
use crate::error::{Error, Result};
use crate::fano::{bit_metric, Branch, Branches, CodeTree, FanoSearch, ForwardMove, SearchResult};
use crate::polar::{polar_transform_in_place, ScState};

/// `u_i = XOR_j c_j v_{i-j}`, zero initial state.
pub fn conv_encode(v: &[u8], generator: &GeneratorSequence) -> Vec<u8> {
    let taps = generator.taps();
    (0..v.len())
        .map(|i| {
            taps.iter()
                .enumerate()
                .take(i + 1)
                .fold(0u8, |acc, (j, &c)| acc ^ (c & v[i - j]))
        })
        .collect()
}

/// `x = T(insert(d) * c)`.
pub fn pac_encode(data: &[u8], code: &CodeConfig) -> Result<Vec<u8>> {
    let v = insert_data(data, code.profile())?;
    let mut x = conv_encode(&v, code.generator());
    polar_transform_in_place(&mut x)?;
    Ok(x)
}

/// Fano branch metric in bits: `1 - log2(1 + e^{-(1-2u) llr}) - bias`.
#[inline]
pub fn branch_metric(llr: f64, bit: u8, bias: f64) -> f64 {
    bit_metric(llr, bit) - bias
}

/// Path metric recomputed from scratch for a `v` prefix.
#[derive(Debug, Clone, PartialEq)]
pub struct PathMetric {
    pub total: f64,
    pub per_level: Vec<f64>,
}

/// Recompute `Gamma` for a container prefix by replaying it through a fresh
/// SC engine.
pub fn path_metric(channel_llrs: &[f64], prefix: &[u8], code: &CodeConfig, dec: &DecoderConfig) -> Result<PathMetric> {
    check_len(channel_llrs, code)?;
    if prefix.len() > code.block_len() {
        return Err(Error::LengthMismatch { expected: code.block_len(), got: prefix.len() });
    }
    let mut sc = ScState::new(channel_llrs)?;
    let taps = code.generator().taps();
    let mut per_level = Vec::with_capacity(prefix.len());
    for (i, &v) in prefix.iter().enumerate() {
        let u = conv_output(prefix, i, v, taps);
        let llr = sc.next_bit_llr()?;
        let bias = if code.profile().is_data(i) { dec.rho } else { 0.0 };
        per_level.push(branch_metric(llr, u, bias));
        sc.commit_bit(u)?;
    }
    Ok(PathMetric { total: per_level.iter().sum(), per_level })
}

/// Result of one decoding session.
#[derive(Debug, Clone, PartialEq)]
pub enum DecodeOutcome {
    /// Reached a leaf. `path` is the decoded container `v`.
    Decoded { path: Vec<u8>, visits: u64, metric: f64 },
    /// Visit count exceeded `z_max`.
    Aborted { visits: u64 },
}

impl DecodeOutcome {
    pub fn visits(&self) -> u64 {
        match self {
            DecodeOutcome::Decoded { visits, .. } | DecodeOutcome::Aborted { visits } => *visits,
        }
    }

    pub fn path(&self) -> Option<&[u8]> {
        match self {
            DecodeOutcome::Decoded { path, .. } => Some(path),
            DecodeOutcome::Aborted { .. } => None,
        }
    }

    pub fn is_aborted(&self) -> bool {
        matches!(self, DecodeOutcome::Aborted { .. })
    }
}

impl From<SearchResult> for DecodeOutcome {
    fn from(r: SearchResult) -> Self {
        match r {
            SearchResult::Complete { path, visits, metric } => DecodeOutcome::Decoded { path, visits, metric },
            SearchResult::Aborted { visits } => DecodeOutcome::Aborted { visits },
        }
    }
}

#[inline]
fn conv_output(v: &[u8], level: usize, current: u8, taps: &[u8]) -> u8 {
    let mut u = current & taps[0];
    for (j, &c) in taps.iter().enumerate().skip(1).take(level) {
        u ^= c & v[level - j];
    }
    u
}

fn check_len(channel_llrs: &[f64], code: &CodeConfig) -> Result<()> {
    if channel_llrs.len() != code.block_len() {
        return Err(Error::LengthMismatch { expected: code.block_len(), got: channel_llrs.len() });
    }
    Ok(())
}

struct PacTree<'a> {
    code: &'a CodeConfig,
    rho: f64,
    sc: &'a mut ScState,
    v: &'a mut Vec<u8>,
}

impl CodeTree for PacTree<'_> {
    fn levels(&self) -> usize {
        self.code.block_len()
    }

    fn branches(&mut self, level: usize) -> Branches {
        let llr = self.sc.next_bit_llr().expect("SC cursor tracks the search depth");
        let u0 = conv_output(self.v, level, 0, self.code.generator().taps());
        if self.code.profile().is_data(level) {
            let zero_u = Branch { label: u0, metric: branch_metric(llr, 0, self.rho) };
            let one_u = Branch { label: u0 ^ 1, metric: branch_metric(llr, 1, self.rho) };
            Branches::pair(zero_u, one_u)
        } else {
            Branches::single(Branch { label: 0, metric: branch_metric(llr, u0, 0.0) })
        }
    }

    fn descend(&mut self, level: usize, label: u8) {
        debug_assert_eq!(self.v.len(), level);
        let u = conv_output(self.v, level, label, self.code.generator().taps());
        self.v.push(label);
        self.sc.commit_bit(u).expect("SC cursor tracks the search depth");
    }

    fn ascend(&mut self, level: usize) {
        self.v.truncate(level);
        self.sc.rewind_to(level).expect("SC cursor tracks the search depth");
    }
}

/// Fano decoder for one PAC code, reusing its buffers across codewords.
#[derive(Debug, Clone)]
pub struct PacDecoder {
    code: CodeConfig,
    dec: DecoderConfig,
    sc: ScState,
    v: Vec<u8>,
    search: FanoSearch,
}

impl PacDecoder {
    pub fn new(code: CodeConfig, dec: DecoderConfig) -> Self {
        let sc = ScState::new(&vec![0.0; code.block_len()]).expect("block length is a power of two");
        let v = Vec::with_capacity(code.block_len());
        Self { code, dec, sc, v, search: FanoSearch::new() }
    }

    pub fn code(&self) -> &CodeConfig {
        &self.code
    }

    pub fn decoder_config(&self) -> &DecoderConfig {
        &self.dec
    }

    pub fn decode(&mut self, channel_llrs: &[f64]) -> Result<DecodeOutcome> {
        self.decode_observed(channel_llrs, |_| {})
    }

    /// Decode while reporting every forward move to `observe`. The move's
    /// `path` is the `v` prefix of the node entered.
    pub fn decode_observed<F>(&mut self, channel_llrs: &[f64], observe: F) -> Result<DecodeOutcome>
    where
        F: FnMut(&ForwardMove<'_>),
    {
        check_len(channel_llrs, &self.code)?;
        self.sc.reset(channel_llrs)?;
        self.v.clear();
        let mut tree = PacTree { code: &self.code, rho: self.dec.rho, sc: &mut self.sc, v: &mut self.v };
        let result = self.search.run_observed(&mut tree, self.dec.delta, self.dec.z_max, observe);
        Ok(result.into())
    }
}

/// One-shot Fano decode.
pub fn fano_decode(channel_llrs: &[f64], code: &CodeConfig, dec: &DecoderConfig) -> Result<DecodeOutcome> {
    PacDecoder::new(code.clone(), *dec).decode(channel_llrs)
}
