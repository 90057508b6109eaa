//! Sparse Erdős–Rényi random graph.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bias::triangle_bias;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::rational::{from_f64, Rational};

/// `G(n, p)`; `p` is canonical, `lambda = n p` is derived.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrgParams {
    n: usize,
    p: f64,
}

impl ErrgParams {
    pub fn from_p(n: usize, p: f64) -> Result<ErrgParams> {
        if n == 0 {
            return Err(Error::Domain("ERRG needs n >= 1".into()));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!("edge probability {p} outside [0, 1]")));
        }
        Ok(ErrgParams { n, p })
    }

    pub fn from_lambda(n: usize, lambda: f64) -> Result<ErrgParams> {
        if !(lambda > 0.0) {
            return Err(Error::Domain(format!("lambda must be positive, got {lambda}")));
        }
        if n == 0 || lambda > n as f64 {
            return Err(Error::Domain(format!("lambda / n = {lambda}/{n} outside (0, 1]")));
        }
        ErrgParams::from_p(n, lambda / n as f64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn lambda(&self) -> f64 {
        self.p * self.n as f64
    }
}

/// Samples `G(n, p)` by geometric skipping over the pairs `(w, v)`, `w < v`.
pub fn sample_errg_with<R: Rng>(params: &ErrgParams, rng: &mut R) -> Multigraph {
    let n = params.n;
    let p = params.p;
    let mut edges = Vec::new();
    if p >= 1.0 {
        for v in 1..n {
            edges.extend((0..v).map(|w| (w, v)));
        }
    } else if p > 0.0 {
        let log_q = (-p).ln_1p();
        let (mut v, mut w): (usize, i64) = (1, -1);
        while v < n {
            let r: f64 = 1.0 - rng.random::<f64>();
            let skip = (r.ln() / log_q).floor();
            // a skip past every remaining pair ends the walk
            if skip >= (n * n) as f64 {
                break;
            }
            w += 1 + skip as i64;
            while v < n && w >= v as i64 {
                w -= v as i64;
                v += 1;
            }
            if v < n {
                edges.push((w as usize, v));
            }
        }
    }
    Multigraph::from_edges(n, edges).expect("ids below n")
}

pub fn sample_errg(params: &ErrgParams, seed: u64) -> Multigraph {
    sample_errg_with(params, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Exact `E[average triangle bias]` for `n >= 3`.
pub fn errg_exact_mean_tfb(params: &ErrgParams) -> Result<f64> {
    let n = params.n;
    if n < 3 {
        return Err(Error::Domain(format!("exact ERRG mean needs n >= 3, got {n}")));
    }
    if n == 3 {
        return Ok(0.0);
    }
    let p = params.p;
    let nf = n as f64;
    let q = ((nf - 1.0) * (-p).ln_1p()).exp();
    let p3 = p * p * p;
    Ok(0.5 * (nf - 2.0) * (nf - 3.0) * p3 * (1.0 - q) + (nf - 1.0) * p * p - p + p * q
        - 0.5 * (nf - 1.0) * (nf - 2.0) * p3)
}

/// The same expectation in exact arithmetic.
pub fn errg_exact_mean_rational(n: usize, p: &Rational) -> Result<Rational> {
    check_probability(n, p)?;
    let one = Rational::one();
    let q = num_traits::pow(&one - p, n - 1);
    let p2 = p * p;
    let p3 = &p2 * p;
    let half = |a: usize, b: usize| Rational::new(BigInt::from(a * b), BigInt::from(2));
    let n_big = BigInt::from(n);
    Ok(half(n - 2, n - 3) * &p3 * (&one - &q) + &p2 * (n_big - 1) - p + p * &q
        - half(n - 1, n - 2) * &p3)
}

fn check_probability(n: usize, p: &Rational) -> Result<()> {
    if n < 3 {
        return Err(Error::Domain(format!("exact ERRG mean needs n >= 3, got {n}")));
    }
    if *p < Rational::zero() || *p > Rational::one() {
        return Err(Error::Domain(format!("edge probability {p} outside [0, 1]")));
    }
    Ok(())
}

pub const ERRG_ORACLE_MAX_N: usize = 5;

/// Weighted enumeration of all labelled graphs on `n <= 5` vertices.
pub fn errg_brute_force_mean(n: usize, p: &Rational) -> Result<Rational> {
    if n > ERRG_ORACLE_MAX_N {
        return Err(Error::Domain(format!(
            "brute-force ERRG oracle limited to n <= {ERRG_ORACLE_MAX_N}, got {n}"
        )));
    }
    if *p < Rational::zero() || *p > Rational::one() {
        return Err(Error::Domain(format!("edge probability {p} outside [0, 1]")));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let q = Rational::one() - p;
    let mut mean = Rational::zero();
    for mask in 0u32..(1 << pairs.len()) {
        let e = mask.count_ones() as usize;
        let weight = num_traits::pow(p.clone(), e) * num_traits::pow(q.clone(), pairs.len() - e);
        if weight.is_zero() {
            continue;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        let g = Multigraph::from_edges(n, edges)?;
        mean += weight * triangle_bias(&g).average;
    }
    Ok(mean)
}

/// Convenience: oracle at a floating-point `p`, converted exactly.
pub fn errg_brute_force_mean_f64(n: usize, p: f64) -> Result<f64> {
    Ok(crate::rational::to_f64(&errg_brute_force_mean(n, &from_f64(p)?)?))
}

/// `zeta(lambda) = lambda^2 - lambda + (lambda - lambda^3 / 2) e^{-lambda}`.
pub fn zeta_errg(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::Domain(format!("zeta needs lambda > 0, got {lambda}")));
    }
    if lambda < 0.1 {
        return Ok(zeta_series(lambda));
    }
    Ok(lambda * lambda - lambda + (lambda - 0.5 * lambda.powi(3)) * (-lambda).exp())
}

/// Taylor series around 0; the coefficients of `lambda^1..lambda^3` cancel.
fn zeta_series(lambda: f64) -> f64 {
    // coefficient of lambda^m is (-1)^(m-1) [1/(m-1)! - 1/(2 (m-3)!)]
    let mut sum = 0.0;
    let mut inv_fact_m1 = 1.0 / 6.0; // 1/(m-1)! at m = 4
    let mut inv_fact_m3 = 1.0; // 1/(m-3)! at m = 4
    let mut power = lambda.powi(4);
    let mut sign = -1.0;
    for m in 4..40 {
        sum += sign * (inv_fact_m1 - 0.5 * inv_fact_m3) * power;
        inv_fact_m1 /= m as f64;
        inv_fact_m3 /= (m - 2) as f64;
        power *= lambda;
        sign = -sign;
    }
    sum
}
