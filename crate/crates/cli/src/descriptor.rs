//! JSON descriptor files.
//!
//! ```json
//! {"q": 2, "modulus": [1, 1], "n": 3, "ell": 2, "kind": "euclidean",
//!  "generators": [{"g": [1, 1], "f": [[1], [0, 1]]}]}
//! ```
//!
//! Coefficients run from the constant term up; each is the integer
//! encoding of a field element. `modulus` is optional on input and always
//! written on output.

use std::sync::Arc;

use qclcd_core::code::{QcDescriptor, QcGenerator};
use qclcd_core::polyring::{Poly, Ring};
use qclcd_core::{Field, InnerProduct};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFile {
    pub g: Vec<u64>,
    pub f: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorFile {
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub ell: usize,
    pub kind: String,
    pub generators: Vec<GeneratorFile>,
}

pub fn parse_kind(s: &str) -> Result<InnerProduct, CliError> {
    s.parse().map_err(CliError::Descriptor)
}

pub fn field(q: u32, modulus: Option<&[u32]>) -> Result<Arc<Field>, CliError> {
    let f = match modulus {
        Some(m) => Field::with_modulus(q, m),
        None => Field::new(q),
    };
    f.map(Arc::new).map_err(|e| CliError::Descriptor(e.to_string()))
}

fn poly(coeffs: &[u64], f: &Field, what: &str) -> Result<Poly, CliError> {
    Poly::from_reps(coeffs, f).map_err(|e| CliError::Descriptor(format!("{what}: {e}")))
}

impl DescriptorFile {
    pub fn from_json(text: &str) -> Result<DescriptorFile, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Descriptor(format!("malformed descriptor at line {} column {}: {e}", e.line(), e.column()))
        })
    }

    pub fn to_descriptor(&self) -> Result<QcDescriptor, CliError> {
        let f = field(self.q, self.modulus.as_deref())?;
        let kind = parse_kind(&self.kind)?;
        let ring = Ring::new(f.clone(), self.n).map_err(|e| CliError::Descriptor(e.to_string()))?;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, gen) in self.generators.iter().enumerate() {
            let g = poly(&gen.g, &f, &format!("generators[{i}].g"))?;
            let fs = gen
                .f
                .iter()
                .enumerate()
                .map(|(j, c)| poly(c, &f, &format!("generators[{i}].f[{j}]")))
                .collect::<Result<Vec<_>, _>>()?;
            gens.push(QcGenerator { g, f: fs });
        }
        QcDescriptor::new(ring, self.ell, kind, gens).map_err(|e| CliError::Descriptor(e.to_string()))
    }

    /// Canonical form: explicit modulus, `f` reduced mod x^n - 1.
    pub fn from_descriptor(d: &QcDescriptor) -> DescriptorFile {
        let reps = |p: &Poly| p.reps().into_iter().map(u64::from).collect::<Vec<_>>();
        DescriptorFile {
            q: d.field().order(),
            modulus: Some(d.field().modulus().to_vec()),
            n: d.n(),
            ell: d.ell(),
            kind: d.kind().name().to_string(),
            generators: d
                .generators()
                .iter()
                .map(|g| GeneratorFile { g: reps(&g.g), f: g.f.iter().map(reps).collect() })
                .collect(),
        }
    }
}
