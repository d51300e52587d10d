//! Fano sequential search over a binary code tree.
//!
//! This is the classical flowchart: look forward to the best branch, move
//! forward when the metric clears the threshold (tightening the threshold on
//! a first visit), otherwise look back and either retreat to try the next
//! best sibling or lower the threshold by `delta`. The threshold is held as
//! an integer multiple of `delta`, so it never drifts off the grid.
//!
//! Only forward moves are counted as visits.

/// One candidate branch out of a tree node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branch {
    pub label: u8,
    pub metric: f64,
}

/// At most two branches, best first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branches {
    items: [Branch; 2],
    count: u8,
}

impl Branches {
    pub fn single(branch: Branch) -> Self {
        Self { items: [branch, branch], count: 1 }
    }

    /// Orders the pair best first; `first` wins ties.
    pub fn pair(first: Branch, second: Branch) -> Self {
        if second.metric > first.metric {
            Self { items: [second, first], count: 2 }
        } else {
            Self { items: [first, second], count: 2 }
        }
    }

    pub fn len(&self) -> usize {
        self.count as usize
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn get(&self, rank: usize) -> Branch {
        debug_assert!(rank < self.len());
        self.items[rank]
    }
}

/// A code tree explored along a single current path.
///
/// The searcher only asks for the branches of the node at the end of the
/// current path, so implementations can keep incremental state.
pub trait CodeTree {
    /// Number of levels; a path of this length is a complete codeword.
    fn levels(&self) -> usize;

    /// Branches out of the node at `level` (the current path has `level`
    /// labels), best first.
    fn branches(&mut self, level: usize) -> Branches;

    /// Extend the current path (of length `level`) by `label`.
    fn descend(&mut self, level: usize, label: u8);

    /// Truncate the current path to `level` labels.
    fn ascend(&mut self, level: usize);
}

/// Snapshot passed to an observer after each forward move.
#[derive(Debug)]
pub struct ForwardMove<'a> {
    /// Labels of the path ending at the node just entered.
    pub path: &'a [u8],
    pub metric: f64,
    pub threshold: f64,
    pub visits: u64,
    /// The threshold was tightened on this move.
    pub first_visit: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchResult {
    Complete { path: Vec<u8>, visits: u64, metric: f64 },
    Aborted { visits: u64 },
}

impl SearchResult {
    pub fn visits(&self) -> u64 {
        match self {
            SearchResult::Complete { visits, .. } | SearchResult::Aborted { visits } => *visits,
        }
    }
}

/// Reusable search buffers.
#[derive(Debug, Default, Clone)]
pub struct FanoSearch {
    metric: Vec<f64>,
    cache: Vec<Branches>,
    rank: Vec<usize>,
    labels: Vec<u8>,
}

impl FanoSearch {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn run<T: CodeTree>(&mut self, tree: &mut T, delta: f64, z_max: Option<u64>) -> SearchResult {
        self.run_observed(tree, delta, z_max, |_| {})
    }

    pub fn run_observed<T, F>(&mut self, tree: &mut T, delta: f64, z_max: Option<u64>, mut observe: F) -> SearchResult
    where
        T: CodeTree,
        F: FnMut(&ForwardMove<'_>),
    {
        assert!(delta > 0.0, "threshold spacing must be positive");
        let levels = tree.levels();
        let empty = Branches::single(Branch { label: 0, metric: 0.0 });
        self.metric.clear();
        self.metric.resize(levels + 1, 0.0);
        self.cache.clear();
        self.cache.resize(levels.max(1), empty);
        self.rank.clear();
        self.rank.resize(levels.max(1), 0);
        self.labels.clear();
        self.labels.resize(levels, 0);

        if levels == 0 {
            return SearchResult::Complete { path: Vec::new(), visits: 0, metric: 0.0 };
        }

        let cap = z_max.unwrap_or(u64::MAX);
        let mut step: i64 = 0;
        let mut depth = 0usize;
        let mut visits = 0u64;
        self.cache[0] = tree.branches(0);

        loop {
            let threshold = step as f64 * delta;
            let branch = self.cache[depth].get(self.rank[depth]);
            let forward = self.metric[depth] + branch.metric;
            if forward >= threshold {
                tree.descend(depth, branch.label);
                self.labels[depth] = branch.label;
                let back = self.metric[depth];
                depth += 1;
                self.metric[depth] = forward;
                visits += 1;
                let first_visit = back < (step + 1) as f64 * delta;
                if first_visit {
                    step = step.max((forward / delta).floor() as i64);
                }
                observe(&ForwardMove {
                    path: &self.labels[..depth],
                    metric: forward,
                    threshold: step as f64 * delta,
                    visits,
                    first_visit,
                });
                if visits > cap {
                    return SearchResult::Aborted { visits };
                }
                if depth == levels {
                    return SearchResult::Complete {
                        path: self.labels.clone(),
                        visits,
                        metric: forward,
                    };
                }
                self.cache[depth] = tree.branches(depth);
                self.rank[depth] = 0;
                continue;
            }

            // look back
            loop {
                if depth > 0 && self.metric[depth - 1] >= threshold {
                    depth -= 1;
                    tree.ascend(depth);
                    if self.rank[depth] + 1 < self.cache[depth].len() {
                        self.rank[depth] += 1;
                        break;
                    }
                } else {
                    step -= 1;
                    self.rank[depth] = 0;
                    break;
                }
            }
        }
    }
}

#[inline]
fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// `log2(P(x | y) / P(x))` for a uniform bit `x` with channel LLR `llr`,
/// i.e. `1 - log2(1 + e^{-(1 - 2x) llr})`.
#[inline]
pub fn bit_metric(llr: f64, bit: u8) -> f64 {
    let signed = if bit == 0 { llr } else { -llr };
    1.0 - softplus(-signed) * std::f64::consts::LOG2_E
}
