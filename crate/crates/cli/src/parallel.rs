//! Rayon drivers for the splittable computations in the core crate.
//!
//! Each driver partitions work the same way regardless of thread count and
//! combines results in a fixed order, so output does not depend on `-j`.

use std::time::Instant;

use qclcd_core::code::LinearCode;
use qclcd_core::metrics::{
    codeword_count, Enumerator, LowWeightPlan, WeightDistribution, WeightKind,
};
use qclcd_core::search::{SearchPlan, SearchRecord, SearchState};
use qclcd_core::{Error, Result};
use rayon::prelude::*;

pub fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}

fn add(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

const CHUNK: u64 = 1 << 16;

/// Complete distribution, enumerating Gray-index ranges in parallel.
pub fn weight_distribution(
    pool: &rayon::ThreadPool,
    c: &LinearCode,
    kind: WeightKind,
    budget: u64,
) -> Result<WeightDistribution> {
    let needed = codeword_count(c.field().order(), c.dim());
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let e = Enumerator::new(c, kind)?;
    let total = e.total() as u64;
    let counts = pool.install(|| {
        (0..total.div_ceil(CHUNK))
            .into_par_iter()
            .map(|i| e.count_range(i * CHUNK, ((i + 1) * CHUNK).min(total)))
            .reduce(|| e.empty_counts(), add)
    });
    Ok(e.distribution(&counts))
}

/// Parallel counterpart of `qclcd_core::metrics::distribution_prefix`.
pub fn distribution_prefix(
    pool: &rayon::ThreadPool,
    c: &LinearCode,
    kind: WeightKind,
    max_weight: usize,
    exhaustive_budget: u64,
    low_weight_budget: u64,
) -> Result<WeightDistribution> {
    if c.dim() == 0 {
        return qclcd_core::metrics::distribution_prefix(c, kind, max_weight, 0, 0);
    }
    let needed = codeword_count(c.field().order(), c.dim());
    if needed <= exhaustive_budget as u128 {
        return Ok(weight_distribution(pool, c, kind, exhaustive_budget)?.truncate(max_weight));
    }
    if kind == WeightKind::Symplectic {
        return Err(Error::BudgetExceeded { needed, budget: exhaustive_budget });
    }
    let plan = LowWeightPlan::new(c, max_weight, low_weight_budget)?;
    let counts = pool.install(|| {
        (0..plan.tasks())
            .into_par_iter()
            .map(|t| plan.run_task(t))
            .reduce(|| vec![0; max_weight + 1], add)
    });
    Ok(plan.finish(counts))
}

/// Runs trials in fixed-size batches, evaluated in parallel and folded in
/// trial order. `on_improvement` sees each table improvement as it is
/// folded. The deadline is checked between batches.
pub fn search(
    pool: &rayon::ThreadPool,
    plan: &SearchPlan,
    deadline: Option<Instant>,
    mut on_improvement: impl FnMut(&SearchRecord),
) -> Result<SearchState> {
    let batch = 64 * pool.current_num_threads().max(1) as u64;
    let total = plan.trials();
    let mut state = SearchState::default();
    let mut start = 0;
    while start < total {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            state.partial = true;
            break;
        }
        let end = (start + batch).min(total);
        let outcomes: Vec<_> = pool.install(|| (start..end).into_par_iter().map(|t| plan.evaluate(t)).collect());
        for outcome in outcomes {
            let seen = state.improvements.len();
            state.absorb(outcome?);
            if let Some(rec) = state.improvements.get(seen) {
                on_improvement(rec);
            }
        }
        start = end;
    }
    Ok(state)
}
