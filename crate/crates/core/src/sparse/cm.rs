//! Configuration model: uniform pairing of half-edges, keeping self-loops and
//! multi-edges.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bias::triangle_bias;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::rational::{to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<u64>,
}

impl DegreeSequence {
    pub fn new(degrees: Vec<u64>) -> Result<DegreeSequence> {
        if degrees.is_empty() {
            return Err(Error::Input("empty degree sequence".into()));
        }
        if let Some(i) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::Input(format!("degree of vertex {i} is 0; degrees must be positive")));
        }
        let m1: u64 = degrees.iter().sum();
        if m1 % 2 == 1 {
            return Err(Error::Input(format!("degree sum {m1} is odd; no perfect matching exists")));
        }
        Ok(DegreeSequence { degrees })
    }

    /// `regular:<d>` or `two-point:<a>,<b>,<frac>` (a fraction `frac` of the
    /// vertices gets degree `a`, the rest `b`).
    pub fn named(spec: &str, n: usize) -> Result<DegreeSequence> {
        let bad = || Error::Input(format!("invalid degree distribution {spec:?}"));
        let (kind, args) = spec.split_once(':').ok_or_else(bad)?;
        match kind {
            "regular" => {
                let d: u64 = args.trim().parse().map_err(|_| bad())?;
                DegreeSequence::new(vec![d; n])
            }
            "two-point" => {
                let parts: Vec<&str> = args.split(',').map(str::trim).collect();
                let [a, b, f] = parts[..] else { return Err(bad()) };
                let a: u64 = a.parse().map_err(|_| bad())?;
                let b: u64 = b.parse().map_err(|_| bad())?;
                let f: f64 = f.parse().map_err(|_| bad())?;
                if !(0.0..=1.0).contains(&f) {
                    return Err(bad());
                }
                let count_a = (f * n as f64).round() as usize;
                let mut d = vec![a; count_a];
                d.resize(n, b);
                DegreeSequence::new(d)
            }
            _ => Err(bad()),
        }
    }

    /// One positive integer per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<DegreeSequence> {
        let mut degrees = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let d = line.parse::<u64>().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("expected a degree, got {line:?}"),
            })?;
            degrees.push(d);
        }
        DegreeSequence::new(degrees)
    }

    pub fn read(path: &Path) -> Result<DegreeSequence> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        DegreeSequence::parse(&text)
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// `m_k = sum_i d_i^k`, exact.
    pub fn moment(&self, k: u32) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d).pow(k)).sum()
    }

    /// `c_k = m_k / n`.
    pub fn normalized_moment(&self, k: u32) -> f64 {
        to_f64(&Rational::new(self.moment(k), BigInt::from(self.n())))
    }

    pub fn half_edges(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

pub fn sample_cm_with<R: Rng>(ds: &DegreeSequence, rng: &mut R) -> Multigraph {
    let mut stubs: Vec<usize> = ds
        .degrees
        .iter()
        .enumerate()
        .flat_map(|(i, &d)| std::iter::repeat_n(i, d as usize))
        .collect();
    stubs.shuffle(rng);
    let edges = stubs.chunks_exact(2).map(|pair| (pair[0], pair[1]));
    Multigraph::from_edges(ds.n(), edges).expect("stub owners are vertex ids")
}

pub fn sample_cm(ds: &DegreeSequence, seed: u64) -> Multigraph {
    sample_cm_with(ds, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Exact `E[average triangle bias]`, requires `m_1 > 7`.
pub fn cm_exact_mean_rational(ds: &DegreeSequence) -> Result<Rational> {
    let m: Vec<BigInt> = (0..=7).map(|k| ds.moment(k)).collect();
    if m[1] <= BigInt::from(7) {
        return Err(Error::Domain(format!(
            "exact CM mean needs m_1 > 7, got m_1 = {}",
            m[1]
        )));
    }
    let (m1, m2, m3, m4, m5, m6, m7) = (&m[1], &m[2], &m[3], &m[4], &m[5], &m[6], &m[7]);
    let c = |v: i64| BigInt::from(v);

    let a1 = c(6) * m1 * m3 - c(18) * m1 * m4 + c(14) * m1 * m5 - c(2) * m1 * m6
        + c(4) * m2 * m3
        - c(8) * m2 * m4
        + c(4) * m3 * m3;
    let a2 = -c(14) * m1 * m2 * m3 + c(3) * m1 * m2 * m4 - c(9) * m1 * m1 * m2
        + c(18) * m1 * m1 * m3
        - c(5) * m1 * m1 * m4
        + c(3) * m1 * m2 * m2
        + c(4) * m2 * m2 * m2;
    let a3 = -c(7) * m1 * m1 * m1 * m2 - m1 * m2 * m2 * m2 + c(5) * m1 * m1 * m2 * m2
        + c(3) * m1 * m1 * m1 * m1;
    let b1 = c(2) * m7 - c(10) * m6 + c(14) * m5 - c(6) * m4;
    let b2 = c(6) * m1 * m3 - c(8) * m1 * m4 + c(2) * m1 * m5 - c(13) * m2 * m3
        + c(11) * m2 * m4
        - c(2) * m2 * m5
        - m3 * m4
        + c(3) * m2 * m2
        + c(2) * m3 * m3;
    let b3 = -c(2) * m1 * m2 * m3 - c(3) * m1 * m1 * m2 + m1 * m1 * m3 + c(6) * m1 * m2 * m2
        + m2 * m2 * m3
        - c(3) * m2 * m2 * m2;

    let n = BigInt::from(ds.n());
    let denominator = c(2) * (m1 - 1) * (m1 - 3) * (m1 - 5) * (m1 - 7);
    let numerator = Rational::new(a1 + a2 + a3, n) + Rational::from_integer(b1 + b2 + b3);
    Ok(numerator / Rational::from_integer(denominator))
}

pub fn cm_exact_mean_tfb(ds: &DegreeSequence) -> Result<f64> {
    cm_exact_mean_rational(ds).map(|r| to_f64(&r))
}

pub const CM_ORACLE_MAX_HALF_EDGES: u64 = 12;

/// Exact average of the triangle bias over all `(m_1 - 1)!!` perfect matchings.
pub fn cm_brute_force_mean(ds: &DegreeSequence) -> Result<Rational> {
    let m1 = ds.half_edges();
    if m1 > CM_ORACLE_MAX_HALF_EDGES {
        return Err(Error::Domain(format!(
            "matching oracle limited to m_1 <= {CM_ORACLE_MAX_HALF_EDGES}, got {m1}"
        )));
    }
    let stubs: Vec<usize> = ds
        .degrees
        .iter()
        .enumerate()
        .flat_map(|(i, &d)| std::iter::repeat_n(i, d as usize))
        .collect();
    let mut used = vec![false; stubs.len()];
    let mut pairs = Vec::with_capacity(stubs.len() / 2);
    let mut sum = Rational::zero();
    let mut count = 0u64;
    enumerate_matchings(&stubs, &mut used, &mut pairs, &mut |pairs| {
        let g = Multigraph::from_edges(ds.n(), pairs.iter().copied()).expect("valid ids");
        sum += triangle_bias(&g).average;
        count += 1;
    });
    Ok(sum / BigInt::from(count))
}

fn enumerate_matchings<F: FnMut(&[(usize, usize)])>(
    stubs: &[usize],
    used: &mut [bool],
    pairs: &mut Vec<(usize, usize)>,
    visit: &mut F,
) {
    let Some(first) = used.iter().position(|&u| !u) else {
        visit(pairs);
        return;
    };
    used[first] = true;
    for other in first + 1..stubs.len() {
        if used[other] {
            continue;
        }
        used[other] = true;
        pairs.push((stubs[first], stubs[other]));
        enumerate_matchings(stubs, used, pairs, visit);
        pairs.pop();
        used[other] = false;
    }
    used[first] = false;
}

/// `zeta(c1, c2, c3) = (c2 - c1)^2 / (2 c1^4) [(c3 - c1 c2) - 3 (c2 - c1^2)]`.
pub fn zeta_cm(c1: f64, c2: f64, c3: f64) -> Result<f64> {
    if !(c1 > 0.0) {
        return Err(Error::Domain(format!("zeta_cm needs c1 > 0, got {c1}")));
    }
    let spread = c2 - c1;
    Ok(spread * spread / (2.0 * c1.powi(4)) * ((c3 - c1 * c2) - 3.0 * (c2 - c1 * c1)))
}

/// The same limit from exact moments, so that regular sequences give exactly 0.
pub fn zeta_cm_rational(c1: &Rational, c2: &Rational, c3: &Rational) -> Result<Rational> {
    if !c1.is_positive() {
        return Err(Error::Domain(format!("zeta_cm needs c1 > 0, got {c1}")));
    }
    let spread = c2 - c1;
    let c1_4 = c1 * c1 * c1 * c1;
    let bracket = (c3 - c1 * c2) - (c2 - c1 * c1) * BigInt::from(3);
    Ok(&spread * &spread / (c1_4 * BigInt::from(2)) * bracket)
}

/// Limit of `n^-2 E[average triangle bias]` when `m_k / n^{k+1} -> c_k*`.
pub fn cm_dense_limit(c1: f64, c2: f64, c3: f64) -> Result<f64> {
    if !(c1 > 0.0) {
        return Err(Error::Domain(format!("dense CM limit needs c1* > 0, got {c1}")));
    }
    Ok(c2 * c2 * (c3 - c1 * c2) / (2.0 * c1.powi(4)))
}
