//! Search configuration files and JSON-lines records.
//!
//! ```json
//! {"q": 2, "n": 13, "ell": 3, "kind": "euclidean", "trials": 10000, "seed": 1}
//! ```
//!
//! Omitted fields take the command-line defaults. `g` fixes the generator
//! polynomial; `exhaustive_degree` switches from random sampling to every
//! `f` tuple of bounded degree.

use qclcd_core::lcd::OracleMode;
use qclcd_core::metrics::{DEFAULT_EXHAUSTIVE_BUDGET, DEFAULT_LOW_WEIGHT_BUDGET};
use qclcd_core::polyring::Poly;
use qclcd_core::search::{GChoice, Sampling, SearchConfig, SearchRecord};
use serde::{Deserialize, Serialize};

use crate::descriptor::{field, parse_kind, DescriptorFile};
use crate::report::parse_oracle;
use crate::CliError;

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_TRIALS: u64 = 1000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchFile {
    pub q: Option<u32>,
    pub modulus: Option<Vec<u32>>,
    pub n: Option<usize>,
    pub ell: Option<usize>,
    pub kind: Option<String>,
    pub h: Option<usize>,
    pub g: Option<Vec<u64>>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub exhaustive_degree: Option<usize>,
    pub fix_f0: Option<bool>,
    pub oracle: Option<String>,
    pub exhaustive_budget: Option<u64>,
    pub low_weight_budget: Option<u64>,
}

impl SearchFile {
    pub fn from_json(text: &str) -> Result<SearchFile, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Config(format!("malformed search config at line {} column {}: {e}", e.line(), e.column()))
        })
    }

    /// Fields set in `other` win.
    pub fn overlay(self, other: SearchFile) -> SearchFile {
        macro_rules! pick {
            ($($f:ident),*) => { SearchFile { $($f: other.$f.or(self.$f)),* } };
        }
        pick!(q, modulus, n, ell, kind, h, g, trials, seed, exhaustive_degree, fix_f0, oracle, exhaustive_budget, low_weight_budget)
    }

    pub fn to_config(&self) -> Result<SearchConfig, CliError> {
        let need = |name: &str| CliError::Config(format!("search needs {name}"));
        let f = field(self.q.ok_or_else(|| need("q"))?, self.modulus.as_deref())?;
        let kind = parse_kind(self.kind.as_deref().unwrap_or("euclidean")).map_err(|e| CliError::Config(e.to_string()))?;
        let mut cfg = SearchConfig::new(f.clone(), self.n.ok_or_else(|| need("n"))?, self.ell.ok_or_else(|| need("ell"))?, kind);
        cfg.h = self.h.unwrap_or(1);
        if let Some(g) = &self.g {
            cfg.g = GChoice::One(Poly::from_reps(g, &f).map_err(|e| CliError::Config(format!("g: {e}")))?);
        }
        cfg.sampling = match self.exhaustive_degree {
            Some(max_degree) => Sampling::Exhaustive { max_degree },
            None => Sampling::Random {
                trials: self.trials.unwrap_or(DEFAULT_TRIALS),
                seed: self.seed.unwrap_or(DEFAULT_SEED),
            },
        };
        cfg.fix_f0 = self.fix_f0.unwrap_or(false);
        cfg.oracle = match &self.oracle {
            Some(s) => parse_oracle(s)?,
            None => OracleMode::Auto,
        };
        cfg.exhaustive_budget = self.exhaustive_budget.unwrap_or(DEFAULT_EXHAUSTIVE_BUDGET);
        cfg.low_weight_budget = self.low_weight_budget.unwrap_or(DEFAULT_LOW_WEIGHT_BUDGET);
        Ok(cfg)
    }
}

/// One emitted JSON line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordLine {
    pub trial: u64,
    pub length: usize,
    pub dim: usize,
    pub distance: usize,
    pub distance_exact: bool,
    pub oracle: Option<bool>,
    pub descriptor: DescriptorFile,
}

impl From<&SearchRecord> for RecordLine {
    fn from(r: &SearchRecord) -> Self {
        RecordLine {
            trial: r.trial,
            length: r.length,
            dim: r.dim,
            distance: r.distance.value,
            distance_exact: r.distance.exact,
            oracle: r.verdict.oracle,
            descriptor: DescriptorFile::from_descriptor(&r.descriptor),
        }
    }
}
