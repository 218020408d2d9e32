//! Search for good quasi-cyclic LCD codes.
//!
//! Each trial builds one candidate descriptor from the trial index alone
//! (a per-trial RNG stream, or a mixed-radix index for exhaustive
//! sampling), so trials can be evaluated in any order. Outcomes are then
//! folded in trial order into a best-distance-per-dimension table.

use alloc::{collections::BTreeMap, sync::Arc, vec, vec::Vec};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{assemble_qc, QcDescriptor, QcGenerator};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::lcd::{check_hgen, hull_dimension, theorem_check, LcdVerdict, OracleMode};
use crate::linalg::InnerProduct;
use crate::metrics::{
    codeword_count, min_distance_bz, min_distance_exhaustive, WeightKind,
    DEFAULT_EXHAUSTIVE_BUDGET, DEFAULT_LOW_WEIGHT_BUDGET,
};
use crate::polyring::{Poly, Reciprocity, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GChoice {
    /// every admissible self-(conjugate-)reciprocal divisor
    All,
    One(Poly),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    /// f coefficients uniform over GF(q)^n, one RNG stream per trial
    Random { trials: u64, seed: u64 },
    /// every f tuple with all degrees `<= max_degree`
    Exhaustive { max_degree: usize },
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub field: Arc<Field>,
    pub n: usize,
    pub ell: usize,
    pub kind: InnerProduct,
    pub h: usize,
    pub g: GChoice,
    pub sampling: Sampling,
    /// force `f_0 = 1` in every generator
    pub fix_f0: bool,
    pub exhaustive_budget: u64,
    pub low_weight_budget: u64,
    /// Re-verification of passing candidates by the hull oracle.
    pub oracle: OracleMode,
}

impl SearchConfig {
    pub fn new(field: Arc<Field>, n: usize, ell: usize, kind: InnerProduct) -> SearchConfig {
        SearchConfig {
            field,
            n,
            ell,
            kind,
            h: 1,
            g: GChoice::All,
            sampling: Sampling::Random { trials: 1000, seed: 0 },
            fix_f0: false,
            exhaustive_budget: DEFAULT_EXHAUSTIVE_BUDGET,
            low_weight_budget: DEFAULT_LOW_WEIGHT_BUDGET,
            oracle: OracleMode::Auto,
        }
    }
}

/// Minimum distance of a record: exact, or a lower bound when the code is
/// too large to enumerate under the symplectic weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Distance {
    pub value: usize,
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub struct SearchRecord {
    pub trial: u64,
    pub descriptor: QcDescriptor,
    pub length: usize,
    pub dim: usize,
    pub distance: Distance,
    pub verdict: LcdVerdict,
}

impl SearchRecord {
    /// Whether `self` is preferred over `other` for the same dimension.
    fn beats(&self, other: &SearchRecord) -> bool {
        (self.distance.value, core::cmp::Reverse(self.trial))
            > (other.distance.value, core::cmp::Reverse(other.trial))
    }
}

/// What one trial produced.
#[derive(Clone, Debug)]
pub enum TrialOutcome {
    /// fails the polynomial conditions
    Rejected,
    /// passes the conditions but the hull oracle disagrees
    Mismatch { trial: u64, hull_dim: usize },
    /// distance computation exceeded its budget
    OverBudget { trial: u64 },
    Passed(SearchRecord),
}

/// Best record per dimension.
#[derive(Clone, Debug, Default)]
pub struct RecordTable {
    best: BTreeMap<usize, SearchRecord>,
}

impl RecordTable {
    /// Inserts `rec` if it beats the stored record of its dimension.
    pub fn offer(&mut self, rec: SearchRecord) -> bool {
        match self.best.get(&rec.dim) {
            Some(cur) if !rec.beats(cur) => false,
            _ => {
                self.best.insert(rec.dim, rec);
                true
            }
        }
    }

    /// Order-independent union.
    pub fn merge(&mut self, other: RecordTable) {
        for rec in other.best.into_values() {
            self.offer(rec);
        }
    }

    /// Records sorted by dimension.
    pub fn records(&self) -> impl Iterator<Item = &SearchRecord> {
        self.best.values()
    }

    pub fn get(&self, k: usize) -> Option<&SearchRecord> {
        self.best.get(&k)
    }

    pub fn len(&self) -> usize {
        self.best.len()
    }

    pub fn is_empty(&self) -> bool {
        self.best.is_empty()
    }
}

fn reciprocity(kind: InnerProduct) -> Reciprocity {
    match kind {
        InnerProduct::Hermitian => Reciprocity::Hermitian,
        _ => Reciprocity::Euclidean,
    }
}

/// Self-(conjugate-)reciprocal divisors of x^n - 1 other than x^n - 1.
pub fn enumerate_g(ring: &Ring, kind: InnerProduct) -> Result<Vec<Poly>> {
    let m = ring.modulus();
    let mut out = ring.self_reciprocal_divisors(reciprocity(kind))?;
    out.retain(|g| *g != m);
    Ok(out)
}

/// A validated search: candidate generation and per-trial evaluation.
#[derive(Clone, Debug)]
pub struct SearchPlan {
    cfg: SearchConfig,
    ring: Ring,
    gs: Vec<Poly>,
    trials: u64,
}

impl SearchPlan {
    pub fn new(cfg: SearchConfig) -> Result<SearchPlan> {
        let bad = |m: &str| Err(Error::InvalidConfig(m.into()));
        if cfg.ell == 0 || cfg.h == 0 {
            return bad("ell and h must be at least 1");
        }
        if cfg.kind == InnerProduct::Symplectic && !cfg.ell.is_multiple_of(2) {
            return bad("symplectic kind requires even ell");
        }
        if cfg.kind == InnerProduct::Hermitian && cfg.field.hermitian_base().is_none() {
            return Err(Error::NotSquareOrder(cfg.field.order()));
        }
        let ring = Ring::new(cfg.field.clone(), cfg.n)?;
        ring.require_semisimple()?;
        let gs = match &cfg.g {
            GChoice::All => enumerate_g(&ring, cfg.kind)?,
            GChoice::One(g) => {
                if !g.is_monic() || !ring.is_divisor(g) {
                    return Err(Error::NotDivisor);
                }
                vec![g.clone()]
            }
        };
        if gs.is_empty() {
            return bad("no admissible generator polynomial");
        }
        let trials = match cfg.sampling {
            Sampling::Random { trials, .. } => trials,
            Sampling::Exhaustive { max_degree } => {
                let per_f = codeword_count(cfg.field.order(), (max_degree + 1).min(cfg.n));
                let free = cfg.h * cfg.ell - if cfg.fix_f0 { cfg.h } else { 0 };
                let mut total = gs.len() as u128;
                for _ in 0..free {
                    total = total.saturating_mul(per_f);
                }
                u64::try_from(total).map_err(|_| Error::InvalidConfig("too many candidates".into()))?
            }
        };
        Ok(SearchPlan { cfg, ring, gs, trials })
    }

    pub fn config(&self) -> &SearchConfig {
        &self.cfg
    }

    pub fn generator_polys(&self) -> &[Poly] {
        &self.gs
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    /// The descriptor examined by trial `t`.
    pub fn candidate(&self, t: u64) -> QcDescriptor {
        let cfg = &self.cfg;
        let f = &*cfg.field;
        let q = f.order() as u64;
        let n = cfg.n;
        let (g, polys): (Poly, Vec<Poly>) = match cfg.sampling {
            Sampling::Random { seed, .. } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(t);
                let g = self.gs[rng.gen_range(0..self.gs.len())].clone();
                let count = cfg.h * cfg.ell;
                let polys = (0..count)
                    .map(|i| {
                        if cfg.fix_f0 && i % cfg.ell == 0 {
                            return Poly::one();
                        }
                        let c: Vec<Elem> =
                            (0..n).map(|_| f.elem(rng.gen_range(0..q)).expect("in range")).collect();
                        Poly::from_coeffs(c)
                    })
                    .collect();
                (g, polys)
            }
            Sampling::Exhaustive { max_degree } => {
                let len = (max_degree + 1).min(n);
                let per_f = q.pow(len as u32);
                let mut idx = t;
                let g = self.gs[(idx % self.gs.len() as u64) as usize].clone();
                idx /= self.gs.len() as u64;
                let polys = (0..cfg.h * cfg.ell)
                    .map(|i| {
                        if cfg.fix_f0 && i % cfg.ell == 0 {
                            return Poly::one();
                        }
                        let mut code = idx % per_f;
                        idx /= per_f;
                        let c: Vec<Elem> = (0..len)
                            .map(|_| {
                                let e = f.elem(code % q).expect("in range");
                                code /= q;
                                e
                            })
                            .collect();
                        Poly::from_coeffs(c)
                    })
                    .collect();
                (g, polys)
            }
        };
        let generators = polys
            .chunks(cfg.ell)
            .map(|fs| QcGenerator { g: g.clone(), f: fs.to_vec() })
            .collect();
        QcDescriptor::new(self.ring.clone(), cfg.ell, cfg.kind, generators)
            .expect("search candidates satisfy descriptor invariants")
    }

    /// Theorem filter, then oracle re-check and distance for survivors.
    pub fn evaluate(&self, t: u64) -> Result<TrialOutcome> {
        let desc = self.candidate(t);
        if !theorem_check(&desc)?.holds {
            return Ok(TrialOutcome::Rejected);
        }
        let verdict = check_hgen(&desc, self.cfg.oracle)?;
        if let (Some(false), Some(hull_dim)) = (verdict.oracle, verdict.hull_dim) {
            return Ok(TrialOutcome::Mismatch { trial: t, hull_dim });
        }
        let code = assemble_qc(&desc);
        if code.dim() == 0 {
            return Ok(TrialOutcome::Rejected);
        }
        let distance = match self.distance(&code) {
            Ok(d) => d,
            Err(Error::BudgetExceeded { .. }) => return Ok(TrialOutcome::OverBudget { trial: t }),
            Err(e) => return Err(e),
        };
        Ok(TrialOutcome::Passed(SearchRecord {
            trial: t,
            length: code.length(),
            dim: code.dim(),
            descriptor: desc,
            distance,
            verdict,
        }))
    }

    fn distance(&self, code: &crate::code::LinearCode) -> Result<Distance> {
        let kind = match self.cfg.kind {
            InnerProduct::Symplectic => WeightKind::Symplectic,
            _ => WeightKind::Hamming,
        };
        let needed = codeword_count(code.field().order(), code.dim());
        if needed <= self.cfg.exhaustive_budget as u128 {
            let (d, _) = min_distance_exhaustive(code, kind, self.cfg.exhaustive_budget)?;
            return Ok(Distance { value: d, exact: true });
        }
        let (dh, _) = min_distance_bz(code, self.cfg.low_weight_budget)?;
        Ok(match kind {
            WeightKind::Hamming => Distance { value: dh, exact: true },
            // wt_H <= 2 wt_s
            WeightKind::Symplectic => Distance { value: dh.div_ceil(2), exact: false },
        })
    }
}

/// Trial-ordered fold of outcomes.
#[derive(Clone, Debug, Default)]
pub struct SearchState {
    pub table: RecordTable,
    /// Records that improved the table, in trial order.
    pub improvements: Vec<SearchRecord>,
    pub trials_run: u64,
    pub passed: u64,
    pub mismatches: Vec<(u64, usize)>,
    pub over_budget: u64,
    /// Stopped before all trials ran.
    pub partial: bool,
}

impl SearchState {
    pub fn absorb(&mut self, outcome: TrialOutcome) {
        self.trials_run += 1;
        match outcome {
            TrialOutcome::Rejected => {}
            TrialOutcome::Mismatch { trial, hull_dim } => self.mismatches.push((trial, hull_dim)),
            TrialOutcome::OverBudget { .. } => {
                self.over_budget += 1;
                self.partial = true;
            }
            TrialOutcome::Passed(rec) => {
                self.passed += 1;
                if self.table.offer(rec.clone()) {
                    self.improvements.push(rec);
                }
            }
        }
    }
}

/// Runs every trial in order; `stop` is polled between trials.
pub fn run_search(cfg: SearchConfig, mut stop: impl FnMut() -> bool) -> Result<SearchState> {
    let plan = SearchPlan::new(cfg)?;
    let mut state = SearchState::default();
    for t in 0..plan.trials() {
        if stop() {
            state.partial = true;
            break;
        }
        state.absorb(plan.evaluate(t)?);
    }
    Ok(state)
}

/// Hull oracle on a stored record, for soundness checks.
pub fn reverify(rec: &SearchRecord) -> Result<bool> {
    let code = assemble_qc(&rec.descriptor);
    Ok(hull_dimension(&code, rec.descriptor.kind())? == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Arc<Field> {
        Arc::new(Field::new(q).unwrap())
    }

    #[test]
    fn g_candidates() {
        let r = Ring::new(gf(2), 13).unwrap();
        let gs = enumerate_g(&r, InnerProduct::Euclidean).unwrap();
        assert!(gs.contains(&Poly::one()));
        assert!(!gs.contains(&r.modulus()));
        let r = Ring::new(gf(2), 21).unwrap();
        assert!(enumerate_g(&r, InnerProduct::Euclidean).unwrap().contains(&Poly::from_exponents(&[0, 3])));
        let r = Ring::new(gf(4), 19).unwrap();
        assert!(enumerate_g(&r, InnerProduct::Hermitian).unwrap().contains(&Poly::from_exponents(&[0, 1])));
        let r = Ring::new(gf(2), 4).unwrap();
        assert!(matches!(enumerate_g(&r, InnerProduct::Euclidean), Err(Error::NotSemisimple { .. })));
    }

    #[test]
    fn config_validation() {
        let cfg = SearchConfig::new(gf(2), 13, 3, InnerProduct::Symplectic);
        assert!(matches!(SearchPlan::new(cfg), Err(Error::InvalidConfig(_))));
        let cfg = SearchConfig::new(gf(2), 13, 2, InnerProduct::Hermitian);
        assert_eq!(SearchPlan::new(cfg).unwrap_err(), Error::NotSquareOrder(2));
        let mut cfg = SearchConfig::new(gf(2), 3, 2, InnerProduct::Euclidean);
        cfg.g = GChoice::One(Poly::from_exponents(&[0, 2]));
        assert_eq!(SearchPlan::new(cfg).unwrap_err(), Error::NotDivisor);
    }

    #[test]
    fn exhaustive_candidates_cover_the_space() {
        let mut cfg = SearchConfig::new(gf(2), 3, 2, InnerProduct::Euclidean);
        cfg.g = GChoice::One(Poly::from_exponents(&[0, 1, 2]));
        cfg.sampling = Sampling::Exhaustive { max_degree: 1 };
        let plan = SearchPlan::new(cfg).unwrap();
        assert_eq!(plan.trials(), 16);
        let mut seen: Vec<Vec<Poly>> = (0..16).map(|t| plan.candidate(t).generators()[0].f.clone()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn table_keeps_best_and_earliest() {
        let mut cfg = SearchConfig::new(gf(2), 7, 2, InnerProduct::Euclidean);
        cfg.sampling = Sampling::Random { trials: 200, seed: 5 };
        let state = run_search(cfg.clone(), || false).unwrap();
        assert!(state.mismatches.is_empty());
        let all: Vec<SearchRecord> = {
            let plan = SearchPlan::new(cfg).unwrap();
            (0..200)
                .filter_map(|t| match plan.evaluate(t).unwrap() {
                    TrialOutcome::Passed(r) => Some(r),
                    _ => None,
                })
                .collect()
        };
        for rec in state.table.records() {
            let same_k = all.iter().filter(|r| r.dim == rec.dim);
            let best = same_k.clone().map(|r| r.distance.value).max().unwrap();
            assert_eq!(rec.distance.value, best);
            let first = same_k.filter(|r| r.distance.value == best).map(|r| r.trial).min().unwrap();
            assert_eq!(rec.trial, first);
        }
        // merge order does not matter
        let mut a = RecordTable::default();
        let mut b = RecordTable::default();
        for (i, r) in all.iter().enumerate() {
            if i % 2 == 0 { a.offer(r.clone()); } else { b.offer(r.clone()); }
        }
        let mut ab = a.clone();
        ab.merge(b.clone());
        b.merge(a);
        let key = |t: &RecordTable| t.records().map(|r| (r.dim, r.distance.value, r.trial)).collect::<Vec<_>>();
        assert_eq!(key(&ab), key(&b));
        assert_eq!(key(&ab), key(&state.table));
    }

    #[test]
    fn stop_marks_partial() {
        let cfg = SearchConfig::new(gf(2), 7, 2, InnerProduct::Euclidean);
        let mut n = 0;
        let state = run_search(cfg, || {
            n += 1;
            n > 3
        })
        .unwrap();
        assert!(state.partial);
        assert_eq!(state.trials_run, 3);
    }
}
