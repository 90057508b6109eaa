//! Reproducible Monte Carlo over the random graph models.
//!
//! Trial `i` is driven by `derive_trial_seed(master_seed, i)`; per-trial values
//! are stored by index and reduced sequentially, so the estimate is bit-identical
//! for any worker count.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::bias::{is_triangle_free, triangle_bias_value};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::graphon::{sample_graphon_graph, Graphon};
use crate::par::{map_indexed, Exec};
use crate::sparse::{sample_cm, sample_errg, DegreeSequence, ErrgParams};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 applied to `master + (index + 1) * GOLDEN`.
///
/// For a fixed master the map is a bijection on `u64`: the affine step is
/// invertible because `GOLDEN` is odd, and the finaliser is invertible.
pub fn derive_trial_seed(master_seed: u64, trial_index: u64) -> u64 {
    let mut z = master_seed.wrapping_add(trial_index.wrapping_add(1).wrapping_mul(GOLDEN));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelConfig {
    /// Give exactly one of `p` and `lambda`.
    Errg {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<f64>,
    },
    /// Degrees inline, from a file, or a named distribution on `n` vertices.
    Cm {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degrees: Option<Vec<u64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degrees_file: Option<PathBuf>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        distribution: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    Graphon {
        n: usize,
        graphon: Graphon,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    /// Average triangle bias.
    AverageTfb,
    /// `n^power` times the average triangle bias, `power` in `-2..=2`.
    ScaledTfb { power: i32 },
    /// 1 if the sampled graph has no triangle, else 0.
    TriangleFreeIndicator,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub model: ModelConfig,
    pub statistic: Statistic,
    pub trials: u64,
    pub master_seed: u64,
    /// `None` or 0: all cores; 1: sequential.
    #[serde(default)]
    pub workers: Option<usize>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<ExperimentConfig> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("experiment config: {e}")))
    }
}

/// A validated model ready for sampling.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Errg(ErrgParams),
    Cm(DegreeSequence),
    Graphon { n: usize, graphon: Graphon },
}

impl Model {
    pub fn from_config(cfg: &ModelConfig) -> Result<Model> {
        match cfg {
            ModelConfig::Errg { n, p, lambda } => match (p, lambda) {
                (Some(p), None) => Ok(Model::Errg(ErrgParams::from_p(*n, *p)?)),
                (None, Some(l)) => Ok(Model::Errg(ErrgParams::from_lambda(*n, *l)?)),
                _ => Err(Error::Input("errg model needs exactly one of p and lambda".into())),
            },
            ModelConfig::Cm { degrees, degrees_file, distribution, n } => {
                let ds = match (degrees, degrees_file, distribution) {
                    (Some(d), None, None) => DegreeSequence::new(d.clone())?,
                    (None, Some(path), None) => DegreeSequence::read(path)?,
                    (None, None, Some(name)) => {
                        let n = n.ok_or_else(|| {
                            Error::Input("a named degree distribution needs n".into())
                        })?;
                        DegreeSequence::named(name, n)?
                    }
                    _ => {
                        return Err(Error::Input(
                            "cm model needs exactly one of degrees, degrees_file, distribution"
                                .into(),
                        ))
                    }
                };
                Ok(Model::Cm(ds))
            }
            ModelConfig::Graphon { n, graphon } => {
                graphon.validate()?;
                if *n == 0 {
                    return Err(Error::Input("graphon sample size must be positive".into()));
                }
                Ok(Model::Graphon { n: *n, graphon: graphon.clone() })
            }
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Model::Errg(p) => p.n(),
            Model::Cm(ds) => ds.n(),
            Model::Graphon { n, .. } => *n,
        }
    }

    pub fn sample(&self, seed: u64) -> Multigraph {
        match self {
            Model::Errg(p) => sample_errg(p, seed),
            Model::Cm(ds) => sample_cm(ds, seed),
            Model::Graphon { n, graphon } => sample_graphon_graph(*n, graphon, seed),
        }
    }
}

impl Statistic {
    fn validate(&self) -> Result<()> {
        match self {
            Statistic::ScaledTfb { power } if !(-2..=2).contains(power) => Err(Error::Input(
                format!("scaling power {power} outside -2..=2"),
            )),
            _ => Ok(()),
        }
    }

    pub fn evaluate(&self, g: &Multigraph) -> f64 {
        match self {
            Statistic::AverageTfb => triangle_bias_value(g),
            Statistic::ScaledTfb { power } => {
                (g.n() as f64).powi(*power) * triangle_bias_value(g)
            }
            Statistic::TriangleFreeIndicator => {
                if is_triangle_free(g) {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation over `sqrt(trials)`.
    pub stderr: f64,
    pub trials: u64,
    pub master_seed: u64,
}

impl McEstimate {
    /// Reduces per-trial values in index order.
    pub fn from_values(values: &[f64], master_seed: u64) -> Result<McEstimate> {
        if values.len() < 2 {
            return Err(Error::Input("a standard error needs at least 2 trials".into()));
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
        Ok(McEstimate {
            mean,
            stderr: (ss / (n - 1.0) / n).sqrt(),
            trials: values.len() as u64,
            master_seed,
        })
    }

    /// True when `target` lies within `k` standard errors of the mean.
    pub fn within(&self, target: f64, k: f64) -> bool {
        (self.mean - target).abs() <= k * self.stderr
    }
}

/// Per-trial statistic values in trial-index order.
pub fn trial_values(model: &Model, statistic: Statistic, trials: u64, master_seed: u64, exec: Exec) -> Vec<f64> {
    map_indexed(trials, exec, |i| {
        let g = model.sample(derive_trial_seed(master_seed, i));
        statistic.evaluate(&g)
    })
}

pub fn run_mc_with(config: &ExperimentConfig, exec: Exec) -> Result<McEstimate> {
    if config.trials < 2 {
        return Err(Error::Input(format!(
            "need at least 2 trials for a standard error, got {}",
            config.trials
        )));
    }
    config.statistic.validate()?;
    let model = Model::from_config(&config.model)?;
    let values = trial_values(&model, config.statistic, config.trials, config.master_seed, exec);
    if let Some(index) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::Trial {
            index: index as u64,
            source: Box::new(Error::Invariant("non-finite statistic".into())),
        });
    }
    McEstimate::from_values(&values, config.master_seed)
}

pub fn run_mc(config: &ExperimentConfig) -> Result<McEstimate> {
    run_mc_with(config, Exec::from_workers(config.workers))
}
