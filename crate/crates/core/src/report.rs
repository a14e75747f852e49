//! Verification configuration and the JSON report shared by every check.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::FieldSpec;

pub const SCHEMA_VERSION: u32 = 1;

/// Parameters common to the randomized checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub field: FieldSpec,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub degree_bound: usize,
    pub word_length: usize,
}

impl RunConfig {
    pub fn new(field: FieldSpec, n: usize, samples: usize, seed: u64) -> Result<Self> {
        let cfg = RunConfig {
            field,
            n,
            samples,
            seed,
            degree_bound: 2,
            word_length: 3,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_degree_bound(mut self, d: usize) -> Self {
        self.degree_bound = d;
        self
    }

    pub fn with_word_length(mut self, l: usize) -> Self {
        self.word_length = l;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Config(format!("n must be at least 2, got {}", self.n)));
        }
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if self.word_length == 0 {
            return Err(Error::Config("word length must be at least 1".into()));
        }
        Ok(())
    }

    /// The generator for sample `index`: ChaCha8 seeded from `seed`, on
    /// stream `index`. Samples are independent of evaluation order, so
    /// parallel and sequential runs see the same draws.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        sample_rng(self.seed, index)
    }
}

pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Outcome of one verification run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub check: String,
    pub field: String,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl Report {
    pub fn new(check: &str, cfg: &RunConfig, pass: bool) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            check: check.to_string(),
            field: cfg.field.to_string(),
            n: cfg.n,
            samples: cfg.samples,
            seed: cfg.seed,
            pass,
            dimension: None,
            counterexample: None,
            details: None,
        }
    }

    pub fn with_counterexample(mut self, c: Option<Value>) -> Self {
        self.counterexample = c;
        self
    }

    pub fn with_details(mut self, d: Value) -> Self {
        self.details = Some(d);
        self
    }
}
