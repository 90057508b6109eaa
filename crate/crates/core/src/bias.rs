//! Degrees, wedge and triangle counts, and the friendship-bias family on multigraphs.
//!
//! For an attribute `x`, the bias of vertex `i` is
//! `[sum_j A_ij x_j / d_i - x_i] * 1{d_i != 0}`; the diagonal term `A_ii x_i / d_i`
//! is included so that self-loops are treated like any other adjacency entry.
//! All results here are exact rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttributeKind {
    Degree,
    Wedge,
    Triangle,
    Custom,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BiasReport {
    pub per_vertex: Vec<Rational>,
    pub average: Rational,
    pub attribute_kind: AttributeKind,
}

impl BiasReport {
    /// `n` times the average, i.e. the summed bias over all vertices.
    pub fn total(&self) -> Rational {
        self.per_vertex.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexStats {
    pub degrees: Vec<u64>,
    pub triangles: Vec<u64>,
    pub wedges: Vec<u64>,
}

/// Triangles at every vertex, `t_i = 1/2 sum_{j != k, both != i} A_ij A_jk A_ki`.
///
/// Parallel edges multiply: two parallel edges plus a third edge closing the
/// triangle count as two triangles. Self-loops never contribute.
pub fn triangle_counts(g: &Multigraph) -> Vec<u64> {
    let n = g.n();
    let mut mark = vec![0u64; n];
    let mut out = vec![0u64; n];
    for i in 0..n {
        let nbrs = g.neighbors(i);
        for &(k, m) in nbrs {
            mark[k] = m;
        }
        let mut total = 0u64;
        for &(j, a_ij) in nbrs {
            for &(k, a_jk) in g.neighbors(j) {
                // each unordered {j, k} once
                if k > j {
                    total += a_ij * a_jk * mark[k];
                }
            }
        }
        out[i] = total;
        for &(k, _) in nbrs {
            mark[k] = 0;
        }
    }
    out
}

pub fn vertex_stats(g: &Multigraph) -> VertexStats {
    let degrees = g.degrees();
    let wedges = degrees
        .iter()
        .map(|&d| d * d.saturating_sub(1) / 2)
        .collect();
    VertexStats {
        triangles: triangle_counts(g),
        degrees,
        wedges,
    }
}

/// True when the graph has no triangle at all.
pub fn is_triangle_free(g: &Multigraph) -> bool {
    let n = g.n();
    let mut mark = vec![false; n];
    for i in 0..n {
        let nbrs = g.neighbors(i);
        for &(k, _) in nbrs {
            mark[k] = true;
        }
        let hit = nbrs
            .iter()
            .any(|&(j, _)| g.neighbors(j).iter().any(|&(k, _)| k != i && mark[k]));
        for &(k, _) in nbrs {
            mark[k] = false;
        }
        if hit {
            return false;
        }
    }
    true
}

/// Exact per-vertex and average bias of an arbitrary rational attribute.
pub fn attribute_bias(g: &Multigraph, x: &[Rational]) -> Result<BiasReport> {
    check_len(g, x.len())?;
    Ok(report(g, x, AttributeKind::Custom))
}

fn check_len(g: &Multigraph, len: usize) -> Result<()> {
    if len != g.n() {
        return Err(Error::Input(format!(
            "attribute has {len} entries but the graph has {} vertices",
            g.n()
        )));
    }
    Ok(())
}

fn report(g: &Multigraph, x: &[Rational], kind: AttributeKind) -> BiasReport {
    let per_vertex: Vec<Rational> = (0..g.n())
        .map(|i| {
            let d = g.degree(i);
            if d == 0 {
                return Rational::zero();
            }
            let mut acc = x[i].clone() * BigInt::from(g.adjacency(i, i));
            for &(j, m) in g.neighbors(i) {
                acc += x[j].clone() * BigInt::from(m);
            }
            acc / BigInt::from(d) - &x[i]
        })
        .collect();
    let average = average_of(&per_vertex);
    BiasReport {
        per_vertex,
        average,
        attribute_kind: kind,
    }
}

fn average_of(v: &[Rational]) -> Rational {
    if v.is_empty() {
        return Rational::zero();
    }
    v.iter().sum::<Rational>() / BigInt::from(v.len())
}

fn int_attribute(x: &[u64]) -> Vec<Rational> {
    x.iter().map(|&v| Rational::from_integer(v.into())).collect()
}

pub fn degree_bias(g: &Multigraph) -> BiasReport {
    report(g, &int_attribute(&g.degrees()), AttributeKind::Degree)
}

pub fn wedge_bias(g: &Multigraph) -> BiasReport {
    report(g, &int_attribute(&vertex_stats(g).wedges), AttributeKind::Wedge)
}

pub fn triangle_bias(g: &Multigraph) -> BiasReport {
    report(g, &int_attribute(&triangle_counts(g)), AttributeKind::Triangle)
}

/// Summed triangle bias `n * average`, computed with one division per distinct degree.
///
/// Used by the exhaustive sweeps where per-vertex values are not needed.
pub fn triangle_bias_total(g: &Multigraph) -> Rational {
    integer_attribute_total(g, &triangle_counts(g))
}

/// Summed bias of a non-negative integer attribute.
pub fn integer_attribute_total(g: &Multigraph, x: &[u64]) -> Rational {
    let mut by_degree: BTreeMap<u64, u128> = BTreeMap::new();
    let mut own: u128 = 0;
    for i in 0..g.n() {
        let d = g.degree(i);
        if d == 0 {
            continue;
        }
        let mut s = g.adjacency(i, i) as u128 * x[i] as u128;
        for &(j, m) in g.neighbors(i) {
            s += m as u128 * x[j] as u128;
        }
        *by_degree.entry(d).or_default() += s;
        own += x[i] as u128;
    }
    let mut total = Rational::from_integer(-BigInt::from(own));
    for (d, s) in by_degree {
        total += Rational::new(BigInt::from(s), BigInt::from(d));
    }
    total
}

/// Average triangle bias in floating point; the Monte Carlo fast path.
pub fn triangle_bias_value(g: &Multigraph) -> f64 {
    let n = g.n();
    if n == 0 {
        return 0.0;
    }
    let t = triangle_counts(g);
    let mut acc = 0.0;
    for i in 0..n {
        let d = g.degree(i);
        if d == 0 {
            continue;
        }
        let mut s = g.adjacency(i, i) as f64 * t[i] as f64;
        for &(j, m) in g.neighbors(i) {
            s += m as f64 * t[j] as f64;
        }
        acc += s / d as f64 - t[i] as f64;
    }
    acc / n as f64
}

/// `kappa_i = sum_j A_ij / d_j`, skipping isolated `j` (which force `A_ij = 0`).
pub fn kappa_vector(g: &Multigraph) -> Vec<Rational> {
    let degrees = g.degrees();
    (0..g.n())
        .map(|i| {
            let mut k = Rational::zero();
            if degrees[i] > 0 && g.self_loops(i) > 0 {
                k += Rational::new(g.adjacency(i, i).into(), degrees[i].into());
            }
            for &(j, m) in g.neighbors(i) {
                k += Rational::new(m.into(), degrees[j].into());
            }
            k
        })
        .collect()
}

/// `Cov(x_U, kappa_U)` for a uniform vertex `U`.
///
/// Equals `attribute_bias(g, x).average` whenever `g` has no isolated vertices.
pub fn covariance_bias(g: &Multigraph, x: &[Rational]) -> Result<Rational> {
    check_len(g, x.len())?;
    let n = g.n();
    if n == 0 {
        return Ok(Rational::zero());
    }
    let kappa = kappa_vector(g);
    let nn = BigInt::from(n);
    let mixed: Rational = x.iter().zip(&kappa).map(|(a, b)| a * b).sum::<Rational>() / &nn;
    let mean_x: Rational = x.iter().sum::<Rational>() / &nn;
    let mean_k: Rational = kappa.iter().sum::<Rational>() / &nn;
    Ok(mixed - mean_x * mean_k)
}
