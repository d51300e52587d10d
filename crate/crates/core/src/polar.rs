//! Polar transform over GF(2) and a successive-cancellation likelihood
//! engine with O(1) rewind.
//!
//! The engine keeps one LLR slot and one partial-sum slot for every node of
//! the SC tree (`(n + 1) * N` values each). A node's LLRs depend only on the
//! channel and on the decided bits that precede the node, so moving the
//! decision cursor backwards never invalidates the ancestors of the new
//! cursor position. Rewinding therefore only moves the cursor.

use crate::error::{Error, Result};

/// `x = u F^{(x)n}` with `F = [[1,0],[1,1]]`, in place.
pub fn polar_transform_in_place(bits: &mut [u8]) -> Result<()> {
    let len = bits.len();
    if !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    let mut half = 1;
    while half < len {
        for block in bits.chunks_exact_mut(2 * half) {
            let (left, right) = block.split_at_mut(half);
            for (l, r) in left.iter_mut().zip(right.iter()) {
                *l ^= *r;
            }
        }
        half *= 2;
    }
    Ok(())
}

pub fn polar_transform(u: &[u8]) -> Result<Vec<u8>> {
    let mut x = u.to_vec();
    polar_transform_in_place(&mut x)?;
    Ok(x)
}

/// `ln(1 + e^{-x})` for `x >= 0`.
#[inline]
fn ln1p_exp_neg(x: f64) -> f64 {
    if x > 40.0 {
        0.0
    } else {
        (-x).exp().ln_1p()
    }
}

/// Check-node combine, `2 atanh(tanh(a/2) tanh(b/2))`.
///
/// Evaluated in the equivalent log-sum form so that large magnitudes keep
/// full precision instead of saturating `tanh` to one.
#[inline]
pub fn f_combine(a: f64, b: f64) -> f64 {
    let sign = if (a < 0.0) != (b < 0.0) { -1.0 } else { 1.0 };
    sign * a.abs().min(b.abs()) + ln1p_exp_neg((a + b).abs()) - ln1p_exp_neg((a - b).abs())
}

/// Variable-node combine, `b + (1 - 2s) a`.
#[inline]
pub fn g_combine(a: f64, b: f64, s: u8) -> f64 {
    if s == 0 {
        b + a
    } else {
        b - a
    }
}

/// Successive-cancellation state for one received word.
#[derive(Debug, Clone)]
pub struct ScState {
    len: usize,
    stages: usize,
    // level d occupies [d * len, (d + 1) * len); level 0 holds the channel LLRs
    llr: Vec<f64>,
    beta: Vec<u8>,
    depth: usize,
    // nodes starting at `depth` hold values for the current prefix
    ready: bool,
}

impl ScState {
    /// Fresh state at depth 0. LLRs are natural-log, positive favouring 0.
    pub fn new(channel_llrs: &[f64]) -> Result<Self> {
        let len = channel_llrs.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        let stages = len.trailing_zeros() as usize;
        let mut state = Self {
            len,
            stages,
            llr: vec![0.0; (stages + 1) * len],
            beta: vec![0; (stages + 1) * len],
            depth: 0,
            ready: false,
        };
        state.llr[..len].copy_from_slice(channel_llrs);
        Ok(state)
    }

    /// Reload channel values and return to depth 0, reusing the buffers.
    pub fn reset(&mut self, channel_llrs: &[f64]) -> Result<()> {
        if channel_llrs.len() != self.len {
            return Err(Error::LengthMismatch { expected: self.len, got: channel_llrs.len() });
        }
        self.llr[..self.len].copy_from_slice(channel_llrs);
        self.depth = 0;
        self.ready = false;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of committed bits.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Committed bits `u_0 .. u_{depth-1}`.
    pub fn committed(&self) -> &[u8] {
        let base = self.stages * self.len;
        &self.beta[base..base + self.depth]
    }

    fn compute_nodes(&mut self) {
        let j = self.depth;
        let n = self.stages;
        let len = self.len;
        let first = if j == 0 { 1 } else { n.saturating_sub(j.trailing_zeros() as usize).max(1) };
        for d in first..=n {
            let size = 1usize << (n - d);
            let k = j >> (n - d);
            let parent = (d - 1) * len + (k >> 1) * 2 * size;
            let child = d * len + k * size;
            let (lo, hi) = self.llr.split_at_mut(d * len);
            let a = &lo[parent..parent + size];
            let b = &lo[parent + size..parent + 2 * size];
            let out = &mut hi[child - d * len..child - d * len + size];
            if k & 1 == 0 {
                for i in 0..size {
                    out[i] = f_combine(a[i], b[i]);
                }
            } else {
                let left = &self.beta[child - size..child];
                for i in 0..size {
                    out[i] = g_combine(a[i], b[i], left[i]);
                }
            }
        }
        self.ready = true;
    }

    /// LLR of the next bit given the channel and the committed prefix.
    pub fn next_bit_llr(&mut self) -> Result<f64> {
        if self.depth >= self.len {
            return Err(Error::DepthOutOfRange { depth: self.depth, len: self.len });
        }
        if !self.ready {
            self.compute_nodes();
        }
        Ok(self.llr[self.stages * self.len + self.depth])
    }

    /// Commit the next bit and update the partial sums.
    pub fn commit_bit(&mut self, bit: u8) -> Result<()> {
        let j = self.depth;
        if j >= self.len {
            return Err(Error::DepthOutOfRange { depth: j, len: self.len });
        }
        if !self.ready {
            self.compute_nodes();
        }
        let n = self.stages;
        let len = self.len;
        self.beta[n * len + j] = bit & 1;
        for d in (1..=n).rev() {
            let size = 1usize << (n - d);
            let k = j >> (n - d);
            if !(j + 1).is_multiple_of(size) || k & 1 == 0 {
                break;
            }
            let right = d * len + k * size;
            let left = right - size;
            let parent = (d - 1) * len + (k >> 1) * 2 * size;
            let (lo, hi) = self.beta.split_at_mut(d * len);
            let l = &hi[left - d * len..left - d * len + size];
            let r = &hi[right - d * len..right - d * len + size];
            let (p_left, p_right) = lo[parent..parent + 2 * size].split_at_mut(size);
            for i in 0..size {
                p_left[i] = l[i] ^ r[i];
                p_right[i] = r[i];
            }
        }
        self.depth += 1;
        self.ready = false;
        Ok(())
    }

    /// Move the cursor back to `depth`, forgetting later decisions.
    pub fn rewind_to(&mut self, depth: usize) -> Result<()> {
        if depth > self.depth {
            return Err(Error::DepthOutOfRange { depth, len: self.depth });
        }
        if depth < self.depth {
            // the nodes starting at `depth` were computed on the way past it
            self.ready = true;
            self.depth = depth;
        }
        Ok(())
    }
}
