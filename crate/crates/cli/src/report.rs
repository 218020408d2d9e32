//! The JSON report written by `qclcd verify`.
//!
//! Every field except `timing_ms` is a function of the descriptor and the
//! settings, so re-running on the echoed descriptor reproduces the report.

use std::collections::BTreeMap;
use std::time::Instant;

use qclcd_core::code::{assemble_qc, dual_code, LinearCode, QcDescriptor};
use qclcd_core::lcd::{check_hgen, LcdVerdict, OracleMode};
use qclcd_core::metrics::{codeword_count, min_distance_bz, WeightDistribution, WeightKind};
use qclcd_core::polyring::Poly;
use qclcd_core::{Error, Field, InnerProduct};
use serde::{Deserialize, Serialize};

use crate::descriptor::DescriptorFile;
use crate::{parallel, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    /// exhaustive when q^k fits the budget, otherwise Brouwer-Zimmermann
    Auto,
    Exhaustive,
    Bz,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Settings {
    pub oracle: String,
    pub distance: DistanceMethod,
    pub prefix_weight: Option<usize>,
    pub dual: bool,
    pub exhaustive_budget: u64,
    pub low_weight_budget: u64,
    pub seed: u64,
}

impl Settings {
    pub fn oracle_mode(&self) -> Result<OracleMode, CliError> {
        parse_oracle(&self.oracle)
    }
}

pub fn parse_oracle(s: &str) -> Result<OracleMode, CliError> {
    match s {
        "auto" => Ok(OracleMode::Auto),
        "always" => Ok(OracleMode::Always),
        "never" => Ok(OracleMode::Never),
        other => Err(CliError::Config(format!("unknown oracle mode {other:?}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub value: usize,
    /// false when `value` is only a lower bound
    pub exact: bool,
    pub weight: String,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyReport {
    pub coeffs: Vec<u64>,
    pub text: String,
}

impl PolyReport {
    pub fn new(p: &Poly, f: &Field) -> PolyReport {
        PolyReport { coeffs: p.reps().into_iter().map(u64::from).collect(), text: p.format(f) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub r: usize,
    pub s: usize,
    pub same_generator: bool,
    pub self_reciprocal: bool,
    pub sum: PolyReport,
    pub gcd: PolyReport,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcdReport {
    pub kind: String,
    pub is_lcd: bool,
    pub theorem: bool,
    pub generators_equal: bool,
    pub self_reciprocal: bool,
    pub generator_reduced: bool,
    pub separable_generator: bool,
    pub pairs: Vec<PairReport>,
    pub oracle: Option<bool>,
    pub hull_dim: Option<usize>,
    pub agrees: Option<bool>,
}

impl LcdReport {
    pub fn new(v: &LcdVerdict, f: &Field) -> LcdReport {
        LcdReport {
            kind: v.kind.name().to_string(),
            is_lcd: v.is_lcd(),
            theorem: v.theorem.holds,
            generators_equal: v.theorem.generators_equal,
            self_reciprocal: v.theorem.self_reciprocal,
            generator_reduced: v.theorem.generator_reduced,
            separable_generator: v.theorem.separable_generator,
            pairs: v
                .theorem
                .pairs
                .iter()
                .map(|p| PairReport {
                    r: p.r,
                    s: p.s,
                    same_generator: p.same_generator,
                    self_reciprocal: p.self_reciprocal,
                    sum: PolyReport::new(&p.sum, f),
                    gcd: PolyReport::new(&p.gcd, f),
                    holds: p.holds,
                })
                .collect(),
            oracle: v.oracle,
            hull_dim: v.hull_dim,
            agrees: v.agrees(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionReport {
    pub weight: String,
    /// false for a prefix exact only up to `max_weight`
    pub complete: bool,
    pub max_weight: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl From<&WeightDistribution> for DistributionReport {
    fn from(d: &WeightDistribution) -> Self {
        DistributionReport {
            weight: d.kind.name().to_string(),
            complete: d.complete,
            max_weight: d.max_weight,
            counts: d.counts.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    /// ℓn
    pub length: usize,
    pub rows: usize,
    pub dim: usize,
    pub distance: Option<DistanceReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualReport {
    pub dim: usize,
    pub distance: Option<DistanceReport>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub lcd: f64,
    pub distance: f64,
    pub distribution: f64,
    pub dual: f64,
    pub total: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeReport {
    pub version: String,
    pub descriptor: DescriptorFile,
    pub settings: Settings,
    pub parameters: Parameters,
    pub lcd: LcdReport,
    pub distribution: Option<DistributionReport>,
    pub dual: Option<DualReport>,
    pub timing_ms: Timing,
}

fn weight_kind(kind: InnerProduct) -> WeightKind {
    match kind {
        InnerProduct::Symplectic => WeightKind::Symplectic,
        _ => WeightKind::Hamming,
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Minimum distance by the requested method, with the complete
/// distribution when it was enumerated.
pub fn distance(
    pool: &rayon::ThreadPool,
    c: &LinearCode,
    kind: WeightKind,
    method: DistanceMethod,
    s: &Settings,
) -> Result<Option<(DistanceReport, Option<WeightDistribution>)>, CliError> {
    if c.dim() == 0 || method == DistanceMethod::None {
        return Ok(None);
    }
    let fits = codeword_count(c.field().order(), c.dim()) <= s.exhaustive_budget as u128;
    let report = |value, exact, method: &str| DistanceReport {
        value,
        exact,
        weight: kind.name().to_string(),
        method: method.to_string(),
    };
    if method == DistanceMethod::Exhaustive || (method == DistanceMethod::Auto && fits) {
        let dist = parallel::weight_distribution(pool, c, kind, s.exhaustive_budget)?;
        let d = dist.min_distance().ok_or_else(|| Error::Inconsistent("nonzero code without nonzero codeword".into()))?;
        return Ok(Some((report(d, true, "exhaustive"), Some(dist))));
    }
    let (dh, _) = min_distance_bz(c, s.low_weight_budget)?;
    Ok(Some(match kind {
        WeightKind::Hamming => (report(dh, true, "bz"), None),
        // wt_H <= 2 wt_s gives only a lower bound
        WeightKind::Symplectic => (report(dh.div_ceil(2), false, "bz-hamming-bound"), None),
    }))
}

/// Full check of one descriptor.
pub fn verify(pool: &rayon::ThreadPool, desc: &QcDescriptor, settings: &Settings) -> Result<CodeReport, CliError> {
    let start = Instant::now();
    let mut timing = Timing::default();
    let f = desc.field();

    let t = Instant::now();
    let verdict = check_hgen(desc, settings.oracle_mode()?)?;
    timing.lcd = ms(t);

    let code = assemble_qc(desc);
    let wk = weight_kind(desc.kind());

    let t = Instant::now();
    let found = distance(pool, &code, wk, settings.distance, settings)?;
    timing.distance = ms(t);
    let (dist_report, full) = match found {
        Some((d, full)) => (Some(d), full),
        None => (None, None),
    };

    let t = Instant::now();
    let distribution = match (settings.prefix_weight, &full) {
        (Some(w), Some(full)) => Some(full.truncate(w)),
        (Some(w), None) => Some(parallel::distribution_prefix(
            pool,
            &code,
            wk,
            w,
            settings.exhaustive_budget,
            settings.low_weight_budget,
        )?),
        (None, full) => full.clone(),
    };
    timing.distribution = ms(t);

    let t = Instant::now();
    let dual = if settings.dual {
        let dc = dual_code(&code, desc.kind())?;
        let method = match settings.distance {
            DistanceMethod::None => DistanceMethod::Auto,
            m => m,
        };
        let d = distance(pool, &dc, wk, method, settings)?.map(|(d, _)| d);
        Some(DualReport { dim: dc.dim(), distance: d })
    } else {
        None
    };
    timing.dual = ms(t);
    timing.total = ms(start);

    Ok(CodeReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        descriptor: DescriptorFile::from_descriptor(desc),
        settings: settings.clone(),
        parameters: Parameters {
            length: code.length(),
            rows: verdict.rows,
            dim: code.dim(),
            distance: dist_report,
        },
        lcd: LcdReport::new(&verdict, f),
        distribution: distribution.as_ref().map(DistributionReport::from),
        dual,
        timing_ms: timing,
    })
}
