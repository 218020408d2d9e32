//! Weights, weight distributions and minimum distance.
//!
//! Exhaustive enumeration walks the message space GF(p)^(k r) in a
//! modular p-ary Gray order, one row addition per codeword, over a range
//! of indices so callers can split the work and sum the counts.
//! Codes too large for that go through [`min_distance_bz`] or the
//! information-set covering in [`distribution_prefix`].

mod lowweight;
mod space;

use alloc::{collections::BTreeMap, vec, vec::Vec};

pub use lowweight::{
    distribution_prefix, information_sets, min_distance_bz, BzStats, InfoSet, LowWeightPlan,
};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Elem;
use space::{Binary, Generic, Space};

/// Default cap on codewords visited by exhaustive enumeration.
pub const DEFAULT_EXHAUSTIVE_BUDGET: u64 = 1 << 26;
/// Default cap on search-tree nodes for low-weight enumeration.
pub const DEFAULT_LOW_WEIGHT_BUDGET: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightKind {
    Hamming,
    /// pairs `(v_i, v_{N+i})` not both zero, `N` half the length
    Symplectic,
}

impl WeightKind {
    pub fn name(self) -> &'static str {
        match self {
            WeightKind::Hamming => "hamming",
            WeightKind::Symplectic => "symplectic",
        }
    }
}

pub(crate) fn weight_unchecked(v: &[Elem], kind: WeightKind) -> usize {
    match kind {
        WeightKind::Hamming => v.iter().filter(|x| !x.is_zero()).count(),
        WeightKind::Symplectic => {
            let (a, b) = v.split_at(v.len() / 2);
            a.iter().zip(b).filter(|(x, y)| !x.is_zero() || !y.is_zero()).count()
        }
    }
}

pub fn weight(v: &[Elem], kind: WeightKind) -> Result<usize> {
    if kind == WeightKind::Symplectic && !v.len().is_multiple_of(2) {
        return Err(Error::OddLength(v.len()));
    }
    Ok(weight_unchecked(v, kind))
}

/// Codeword counts by weight. A complete distribution covers all `q^k`
/// codewords; a prefix covers every weight up to `max_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub kind: WeightKind,
    pub counts: BTreeMap<usize, u64>,
    pub complete: bool,
    /// Largest weight the counts are exact for.
    pub max_weight: usize,
}

impl WeightDistribution {
    pub(crate) fn from_slice(kind: WeightKind, counts: &[u64], complete: bool, max_weight: usize) -> Self {
        let counts = counts
            .iter()
            .enumerate()
            .take(max_weight + 1)
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect();
        WeightDistribution { kind, counts, complete, max_weight }
    }

    /// Smallest nonzero weight present.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    /// Restriction to weights `<= w`, marked as a prefix.
    pub fn truncate(&self, w: usize) -> WeightDistribution {
        WeightDistribution {
            kind: self.kind,
            counts: self.counts.range(..=w).map(|(&a, &b)| (a, b)).collect(),
            complete: false,
            max_weight: w,
        }
    }
}

/// `q^k`, saturating.
pub fn codeword_count(q: u32, k: usize) -> u128 {
    let mut n: u128 = 1;
    for _ in 0..k {
        n = n.saturating_mul(q as u128);
    }
    n
}

fn check_kind(c: &LinearCode, kind: WeightKind) -> Result<()> {
    if kind == WeightKind::Symplectic && !c.length().is_multiple_of(2) {
        return Err(Error::OddLength(c.length()));
    }
    Ok(())
}

struct GrayWalk<S: Space> {
    space: S,
    /// `alpha_t * b_i` for each GF(p)-coordinate of the message space
    steps: Vec<S::V>,
    p: u64,
}

impl<S: Space> GrayWalk<S> {
    fn new(space: S, c: &LinearCode) -> GrayWalk<S> {
        let f = c.field();
        let basis = c.basis();
        let p = f.characteristic() as u64;
        let mut steps = Vec::new();
        for row in basis.rows() {
            let mut alpha = 1u64;
            for _ in 0..f.degree() {
                let a = f.elem(alpha).expect("basis digit");
                let scaled: Vec<Elem> = row.iter().map(|&x| f.mul(a, x)).collect();
                steps.push(space.pack(&scaled));
                alpha *= p;
            }
        }
        GrayWalk { space, steps, p }
    }

    /// Adds the weight of every codeword with Gray index in `[start, end)`.
    fn count(&self, start: u64, end: u64, counts: &mut [u64]) {
        if start >= end {
            return;
        }
        let p = self.p;
        // Gray digit t of i is d_t - d_{t+1} mod p
        let mut acc = self.space.zero();
        let mut digits = Vec::with_capacity(self.steps.len() + 1);
        let mut x = start;
        for _ in 0..=self.steps.len() {
            digits.push(x % p);
            x /= p;
        }
        for (t, step) in self.steps.iter().enumerate() {
            let g = (digits[t] + p - digits[t + 1]) % p;
            for _ in 0..g {
                self.space.add_assign(&mut acc, step);
            }
        }
        counts[self.space.weight(&acc)] += 1;
        for i in start + 1..end {
            let j = if p == 2 {
                i.trailing_zeros() as usize
            } else {
                let mut j = 0;
                let mut y = i;
                while y % p == 0 {
                    y /= p;
                    j += 1;
                }
                j
            };
            self.space.add_assign(&mut acc, &self.steps[j]);
            counts[self.space.weight(&acc)] += 1;
        }
    }
}

enum Walk {
    Binary(GrayWalk<Binary>),
    Generic(GrayWalk<Generic>),
}

/// Exhaustive codeword enumerator over Gray-index ranges.
pub struct Enumerator {
    walk: Walk,
    kind: WeightKind,
    total: u128,
    max_weight: usize,
}

impl Enumerator {
    pub fn new(c: &LinearCode, kind: WeightKind) -> Result<Enumerator> {
        check_kind(c, kind)?;
        let f = c.field();
        let walk = if f.characteristic() == 2 {
            Walk::Binary(GrayWalk::new(Binary::new(f, c.length(), kind), c))
        } else {
            Walk::Generic(GrayWalk::new(Generic::new(c.field_arc().clone(), c.length(), kind), c))
        };
        let max_weight = match kind {
            WeightKind::Hamming => c.length(),
            WeightKind::Symplectic => c.length() / 2,
        };
        Ok(Enumerator { walk, kind, total: codeword_count(f.order(), c.dim()), max_weight })
    }

    /// Number of codewords, `q^k`.
    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    /// Counts indexed by weight, length `max_weight + 1`.
    pub fn empty_counts(&self) -> Vec<u64> {
        vec![0; self.max_weight + 1]
    }

    /// Weight counts of the codewords with Gray index in `[start, end)`.
    /// Counts from a partition of `[0, total)` sum to the full distribution.
    pub fn count_range(&self, start: u64, end: u64) -> Vec<u64> {
        let mut counts = self.empty_counts();
        let end = end.min(u64::try_from(self.total).unwrap_or(u64::MAX));
        match &self.walk {
            Walk::Binary(w) => w.count(start, end, &mut counts),
            Walk::Generic(w) => w.count(start, end, &mut counts),
        }
        counts
    }

    pub fn distribution(&self, counts: &[u64]) -> WeightDistribution {
        WeightDistribution::from_slice(self.kind, counts, true, self.max_weight)
    }
}

pub(crate) fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Complete distribution by enumerating all `q^k` codewords.
pub fn weight_distribution(c: &LinearCode, kind: WeightKind, budget: u64) -> Result<WeightDistribution> {
    check_kind(c, kind)?;
    check_budget(codeword_count(c.field().order(), c.dim()), budget)?;
    let e = Enumerator::new(c, kind)?;
    let counts = e.count_range(0, e.total() as u64);
    Ok(e.distribution(&counts))
}

/// Exact minimum distance and complete distribution by enumeration.
pub fn min_distance_exhaustive(
    c: &LinearCode,
    kind: WeightKind,
    budget: u64,
) -> Result<(usize, WeightDistribution)> {
    if c.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let dist = weight_distribution(c, kind, budget)?;
    let d = dist.min_distance().expect("nonzero code has a nonzero codeword");
    Ok((d, dist))
}
