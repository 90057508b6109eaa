//! Triangle friendship paradox: exact bias computations on multigraphs,
//! partially completed star-graphs, sparse random graph models, graphons,
//! and a reproducible Monte Carlo engine.

pub mod bias;
pub mod error;
pub mod graph;
pub mod graphon;
pub mod mc;
pub mod par;
pub mod rational;
pub mod sparse;
pub mod star;

pub use error::{Error, Result};
pub use graph::Multigraph;
pub use rational::Rational;
