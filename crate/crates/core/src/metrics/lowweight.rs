//! Low-weight enumeration through information sets.
//!
//! Both routines enumerate messages of small weight through several
//! systematic generator matrices whose information sets are pairwise
//! disjoint. Messages are taken up to scalar multiples (first nonzero
//! coefficient 1).

use alloc::{sync::Arc, vec, vec::Vec};

use super::space::{Binary, Generic, Space};
use super::{check_budget, codeword_count, weight_distribution, WeightDistribution, WeightKind};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::{rref_ordered, Matrix};

/// A generator matrix in systematic form on `columns`: row `i < rank`
/// has a 1 in `columns[i]` and zeros in the other listed columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfoSet {
    pub columns: Vec<usize>,
    pub rank: usize,
    pub generator: Matrix,
}

impl InfoSet {
    /// `k - rank`: how far the set falls short of a full information set.
    pub fn gap(&self) -> usize {
        self.generator.nrows() - self.rank
    }
}

/// Greedy disjoint information sets: reduce on the unused columns, take
/// the pivots, repeat. All sets but the trailing ones have full rank.
pub fn information_sets(c: &LinearCode) -> Vec<InfoSet> {
    let f = c.field();
    let basis = c.basis();
    let mut remaining: Vec<usize> = (0..c.length()).collect();
    let mut out = Vec::new();
    while !remaining.is_empty() {
        let mut order = remaining.clone();
        order.extend((0..c.length()).filter(|x| !remaining.contains(x)));
        let e = rref_ordered(&basis, f, &order);
        let columns: Vec<usize> =
            e.pivots.iter().copied().filter(|x| remaining.contains(x)).collect();
        if columns.is_empty() {
            break;
        }
        remaining.retain(|x| !columns.contains(x));
        out.push(InfoSet { rank: columns.len(), columns, generator: e.matrix });
    }
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Messages of weight exactly `w` up to scalars.
fn nodes_at(k: usize, w: usize, q: u32) -> u128 {
    if w == 0 {
        return 0;
    }
    binomial(k, w).saturating_mul(codeword_count(q - 1, w - 1))
}

/// Row multiples `rows[i][c] = (c-th nonzero scalar) * row i`, packed.
fn scaled_rows<S: Space>(space: &S, g: &Matrix, f: &Field) -> Vec<Vec<S::V>> {
    let scalars: Vec<Elem> = f.elements().filter(|x| !x.is_zero()).collect();
    g.rows()
        .map(|row| {
            let mut v: Vec<S::V> = Vec::with_capacity(scalars.len());
            // scalar 1 first
            for &s in core::iter::once(&Elem::ONE).chain(scalars.iter().filter(|&&s| s != Elem::ONE)) {
                let r: Vec<Elem> = row.iter().map(|&x| f.mul(s, x)).collect();
                v.push(space.pack(&r));
            }
            v
        })
        .collect()
}

/// Depth-first walk over messages with increasing positions. Visits every
/// message whose weight lies in `min..=max`; `first` pins the position of
/// the leading coefficient.
struct Walker<'a, S: Space> {
    space: &'a S,
    rows: &'a [Vec<S::V>],
    accs: Vec<S::V>,
    min: usize,
    max: usize,
    nodes: u64,
}

impl<'a, S: Space> Walker<'a, S> {
    fn new(space: &'a S, rows: &'a [Vec<S::V>], min: usize, max: usize) -> Self {
        Walker { space, rows, accs: vec![space.zero(); max.max(1)], min, max, nodes: 0 }
    }

    fn run(&mut self, first: usize, visit: &mut impl FnMut(&S, &S::V)) {
        if self.max == 0 || first >= self.rows.len() {
            return;
        }
        if self.rows.len() - first < self.min {
            return;
        }
        self.accs[0].clone_from(&self.rows[first][0]);
        self.step(0, first, visit);
    }

    fn step(&mut self, level: usize, pos: usize, visit: &mut impl FnMut(&S, &S::V)) {
        let depth = level + 1;
        self.nodes += 1;
        if depth >= self.min {
            visit(self.space, &self.accs[level]);
        }
        if depth == self.max {
            return;
        }
        let k = self.rows.len();
        // leave room for the positions still required to reach `min`
        let need = self.min.saturating_sub(depth + 1);
        for i in pos + 1..k.saturating_sub(need) {
            for c in 0..self.rows[i].len() {
                let (prev, cur) = self.accs.split_at_mut(depth);
                self.space.sum_into(&mut cur[0], &prev[level], &self.rows[i][c]);
                self.step(depth, i, visit);
            }
        }
    }
}

/// Bookkeeping from a Brouwer-Zimmermann run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BzStats {
    pub info_set_ranks: Vec<usize>,
    /// Lower bound after each completed message weight.
    pub lower_bounds: Vec<usize>,
    /// Message weight reached when the bounds met.
    pub final_weight: usize,
    pub nodes: u64,
}

fn bz_in<S: Space>(space: &S, c: &LinearCode, budget: u64) -> Result<(usize, BzStats)> {
    let f = c.field();
    let k = c.dim();
    let q = f.order();
    let sets = information_sets(c);
    let rows: Vec<Vec<Vec<S::V>>> = sets.iter().map(|s| scaled_rows(space, &s.generator, f)).collect();
    let mut stats = BzStats { info_set_ranks: sets.iter().map(|s| s.rank).collect(), ..Default::default() };
    let mut upper = usize::MAX;
    let mut done = vec![0usize; sets.len()];
    let bound = |done: &[usize]| -> usize {
        sets.iter()
            .zip(done)
            .map(|(s, &d)| if d == 0 { 0 } else { (d + 1).saturating_sub(s.gap()) })
            .sum()
    };
    let mut spent: u128 = 0;
    for w in 1..=k {
        for (j, set) in sets.iter().enumerate() {
            // a set helps only once w + 1 exceeds its gap, and then it must
            // have covered every weight from 1
            if w < set.gap() {
                continue;
            }
            for weight in done[j] + 1..=w {
                spent = spent.saturating_add(nodes_at(k, weight, q));
                check_budget(spent, budget)?;
                let mut walker = Walker::new(space, &rows[j], weight, weight);
                let mut visit = |sp: &S, v: &S::V| {
                    let wt = sp.weight(v);
                    if wt < upper {
                        upper = wt;
                    }
                };
                for first in 0..k {
                    walker.run(first, &mut visit);
                }
                stats.nodes += walker.nodes;
            }
            done[j] = w;
            if done[j] == k && set.gap() == 0 {
                // every codeword has been seen
                stats.final_weight = w;
                stats.lower_bounds.push(upper);
                return Ok((upper, stats));
            }
            if bound(&done) >= upper {
                break;
            }
        }
        let lower = bound(&done);
        if let Some(&prev) = stats.lower_bounds.last() {
            assert!(lower >= prev, "lower bound decreased from {prev} to {lower}");
        }
        stats.lower_bounds.push(lower);
        if lower >= upper {
            stats.final_weight = w;
            return Ok((upper, stats));
        }
    }
    Err(Error::Inconsistent("bounds did not meet".into()))
}

/// Exact Hamming minimum distance by Brouwer-Zimmermann. `budget` caps
/// the number of enumerated messages.
pub fn min_distance_bz(c: &LinearCode, budget: u64) -> Result<(usize, BzStats)> {
    if c.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let f = c.field();
    if f.characteristic() == 2 {
        bz_in(&Binary::new(f, c.length(), WeightKind::Hamming), c, budget)
    } else {
        bz_in(&Generic::new(c.field_arc().clone(), c.length(), WeightKind::Hamming), c, budget)
    }
}

struct Cover<S: Space> {
    space: S,
    /// per full information set: packed scaled rows, column mask, threshold
    rows: Vec<Vec<Vec<S::V>>>,
    masks: Vec<S::V>,
    thresholds: Vec<usize>,
}

impl<S: Space> Cover<S> {
    fn run(&self, j: usize, first: usize, max_weight: usize, mult: u64, counts: &mut [u64]) {
        let mut walker = Walker::new(&self.space, &self.rows[j], 1, self.thresholds[j]);
        let mut visit = |sp: &S, v: &S::V| {
            let wt = sp.weight(v);
            if wt > max_weight {
                return;
            }
            for e in 0..j {
                if sp.masked_weight(v, &self.masks[e]) <= self.thresholds[e] {
                    return;
                }
            }
            counts[wt] += mult;
        };
        walker.run(first, &mut visit);
    }
}

enum CoverKind {
    Binary(Cover<Binary>),
    Generic(Cover<Generic>),
}

/// Exact Hamming weight counts up to `max_weight` by covering: with
/// disjoint information sets `I_j` and thresholds `t_j` summing (plus one
/// each) past `max_weight`, every light codeword has weight at most `t_j`
/// on some `I_j` and is counted at the first such `j`.
///
/// The work is split into independent tasks whose counts add up.
pub struct LowWeightPlan {
    cover: CoverKind,
    k: usize,
    q: u32,
    max_weight: usize,
    nodes: u128,
}

impl LowWeightPlan {
    pub fn new(c: &LinearCode, max_weight: usize, budget: u64) -> Result<LowWeightPlan> {
        if c.dim() == 0 {
            return Err(Error::ZeroCode);
        }
        let f = c.field();
        let k = c.dim();
        let q = f.order();
        let full: Vec<InfoSet> = information_sets(c).into_iter().filter(|s| s.gap() == 0).collect();
        let s = full.len();
        let units = max_weight + 1;
        let thresholds: Vec<usize> = if units.div_ceil(s) > k {
            vec![k]
        } else {
            (0..s)
                .map(|j| units / s + usize::from(j < units % s))
                .take_while(|&u| u > 0)
                .map(|u| u - 1)
                .collect()
        };
        let used = &full[..thresholds.len()];
        let nodes: u128 = thresholds
            .iter()
            .map(|&t| (1..=t).map(|w| nodes_at(k, w, q)).sum::<u128>())
            .sum();
        check_budget(nodes, budget)?;
        fn build<S: Space>(space: S, sets: &[InfoSet], thresholds: &[usize], f: &Field) -> Cover<S> {
            let rows = sets.iter().map(|s| scaled_rows(&space, &s.generator, f)).collect();
            let masks = sets.iter().map(|s| space.mask(&s.columns)).collect();
            Cover { space, rows, masks, thresholds: thresholds.to_vec() }
        }
        let cover = if f.characteristic() == 2 {
            CoverKind::Binary(build(Binary::new(f, c.length(), WeightKind::Hamming), used, &thresholds, f))
        } else {
            let space = Generic::new(Arc::clone(c.field_arc()), c.length(), WeightKind::Hamming);
            CoverKind::Generic(build(space, used, &thresholds, f))
        };
        Ok(LowWeightPlan { cover, k, q, max_weight, nodes })
    }

    /// Upper estimate of enumerated messages.
    pub fn estimated_nodes(&self) -> u128 {
        self.nodes
    }

    pub fn thresholds(&self) -> &[usize] {
        match &self.cover {
            CoverKind::Binary(c) => &c.thresholds,
            CoverKind::Generic(c) => &c.thresholds,
        }
    }

    pub fn tasks(&self) -> usize {
        self.thresholds().len() * self.k
    }

    /// Counts indexed by weight `0..=max_weight` for one task.
    pub fn run_task(&self, t: usize) -> Vec<u64> {
        let mut counts = vec![0u64; self.max_weight + 1];
        let (j, first) = (t / self.k, t % self.k);
        let mult = self.q as u64 - 1;
        match &self.cover {
            CoverKind::Binary(c) => c.run(j, first, self.max_weight, mult, &mut counts),
            CoverKind::Generic(c) => c.run(j, first, self.max_weight, mult, &mut counts),
        }
        counts
    }

    /// Distribution from the summed task counts.
    pub fn finish(&self, mut counts: Vec<u64>) -> WeightDistribution {
        counts[0] = 1;
        WeightDistribution::from_slice(WeightKind::Hamming, &counts, false, self.max_weight)
    }

    pub fn run(&self) -> WeightDistribution {
        let mut total = vec![0u64; self.max_weight + 1];
        for t in 0..self.tasks() {
            for (a, b) in total.iter_mut().zip(self.run_task(t)) {
                *a += b;
            }
        }
        self.finish(total)
    }
}

/// Exact counts for all weights `<= max_weight`: full enumeration when
/// `q^k` fits `exhaustive_budget`, otherwise (Hamming only) the
/// information-set covering of [`LowWeightPlan`].
pub fn distribution_prefix(
    c: &LinearCode,
    kind: WeightKind,
    max_weight: usize,
    exhaustive_budget: u64,
    low_weight_budget: u64,
) -> Result<WeightDistribution> {
    if c.dim() == 0 {
        let mut d = WeightDistribution::from_slice(kind, &[1], false, max_weight);
        d.max_weight = max_weight;
        return Ok(d);
    }
    let needed = codeword_count(c.field().order(), c.dim());
    if needed <= exhaustive_budget as u128 {
        return Ok(weight_distribution(c, kind, exhaustive_budget)?.truncate(max_weight));
    }
    if kind == WeightKind::Symplectic {
        return Err(Error::BudgetExceeded { needed, budget: exhaustive_budget });
    }
    Ok(LowWeightPlan::new(c, max_weight, low_weight_budget)?.run())
}
