//! Sparse random graphs: the Erdős–Rényi graph with `p = lambda / n` and the
//! configuration model with a prescribed degree sequence.

pub mod cm;
pub mod errg;

pub use cm::{
    cm_brute_force_mean, cm_exact_mean_rational, cm_exact_mean_tfb, sample_cm, zeta_cm,
    DegreeSequence,
};
pub use errg::{
    errg_brute_force_mean, errg_exact_mean_rational, errg_exact_mean_tfb, sample_errg, zeta_errg,
    ErrgParams,
};

/// Parameters of a Poisson triangle-count limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TriangleFreeModel {
    Errg { lambda: f64 },
    Cm { c1: f64, c2: f64 },
}

/// Limiting probability that the graph has no triangles.
pub fn triangle_free_limit(model: TriangleFreeModel) -> f64 {
    let mean = match model {
        TriangleFreeModel::Errg { lambda } => lambda.powi(3) / 6.0,
        TriangleFreeModel::Cm { c1, c2 } => ((c2 - c1) / c1).powi(3) / 6.0,
    };
    (-mean).exp()
}
