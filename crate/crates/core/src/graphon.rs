//! Dense limits: graphons, their degree and triangle densities, the `chi`
//! functional (limit of `n^-2` times the average triangle bias), and samplers.
//!
//! Every [`Graphon`] variant is piecewise constant, so `chi` is computed exactly
//! by block algebra. Continuous kernels go through [`chi_t`], a composite
//! midpoint rule whose cells are aligned to the kernel's breakpoints.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub const DEFAULT_QUADRATURE_N: usize = 256;

/// Symmetric kernel on `[0,1]^2` with values in `[0,1]`.
pub trait Kernel {
    fn value(&self, x: f64, y: f64) -> f64;

    /// Interior points where the kernel may jump; quadrature cells never straddle them.
    fn breakpoints(&self) -> Vec<f64> {
        Vec::new()
    }
}

/// A kernel given by a closure, assumed continuous.
pub struct FnKernel<F>(pub F);

impl<F: Fn(f64, f64) -> f64> Kernel for FnKernel<F> {
    fn value(&self, x: f64, y: f64) -> f64 {
        (self.0)(x, y)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Graphon {
    Constant {
        p: f64,
    },
    /// `alpha` on `[0,p]^2`, `beta` on `[p,1]^2`, `gamma` across.
    TwoBlock {
        alpha: f64,
        beta: f64,
        gamma: f64,
        p: f64,
    },
    /// `nu(x) nu(y)` with `nu` a step function on equal cells.
    Rank1 {
        profile: Vec<f64>,
    },
    /// Blocks of relative sizes `sizes` (normalised to sum to 1).
    Block {
        sizes: Vec<f64>,
        matrix: Vec<Vec<f64>>,
    },
    /// Step kernel on an `N x N` grid of equal cells.
    Grid {
        matrix: Vec<Vec<f64>>,
    },
}

/// Piecewise-constant form: block widths summing to 1 and the block values.
#[derive(Debug, Clone, PartialEq)]
pub struct Blocks {
    pub widths: Vec<f64>,
    pub values: Vec<Vec<f64>>,
}

impl Blocks {
    fn index_of(&self, x: f64) -> usize {
        let mut edge = 0.0;
        for (i, w) in self.widths.iter().enumerate() {
            edge += w;
            if x < edge {
                return i;
            }
        }
        self.widths.len() - 1
    }

    pub fn degree_densities(&self) -> Vec<f64> {
        self.values
            .iter()
            .map(|row| row.iter().zip(&self.widths).map(|(k, w)| k * w).sum())
            .collect()
    }

    pub fn triangle_densities(&self) -> Vec<f64> {
        let b = self.widths.len();
        // m[a][c] = sum_b K_ab w_b K_bc
        let mut m = vec![vec![0.0; b]; b];
        for a in 0..b {
            for mid in 0..b {
                let kw = self.values[a][mid] * self.widths[mid];
                if kw == 0.0 {
                    continue;
                }
                let row = &self.values[mid];
                for (slot, k) in m[a].iter_mut().zip(row) {
                    *slot += kw * k;
                }
            }
        }
        (0..b)
            .map(|a| {
                0.5 * (0..b)
                    .map(|c| m[a][c] * self.widths[c] * self.values[c][a])
                    .sum::<f64>()
            })
            .collect()
    }

    /// `chi = sum_a w_a [ (1/D_a) sum_b K_ab w_b T_b - T_a ]`.
    pub fn chi(&self) -> Result<f64> {
        let d = self.degree_densities();
        if let Some(a) = d.iter().position(|&v| v <= 0.0) {
            return Err(Error::Hypothesis(format!(
                "degree density vanishes on block {a}; chi is undefined"
            )));
        }
        let t = self.triangle_densities();
        let mut chi = 0.0;
        for a in 0..self.widths.len() {
            let neighbour_t: f64 = (0..self.widths.len())
                .map(|b| self.values[a][b] * self.widths[b] * t[b])
                .sum();
            chi += self.widths[a] * (neighbour_t / d[a] - t[a]);
        }
        Ok(chi)
    }
}

fn check_unit(v: f64, what: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::Input(format!("{what} = {v} outside [0, 1]")));
    }
    Ok(())
}

fn check_matrix(matrix: &[Vec<f64>], size: usize) -> Result<()> {
    if matrix.len() != size || matrix.iter().any(|r| r.len() != size) {
        return Err(Error::Input(format!("block matrix must be {size} x {size}")));
    }
    for (i, row) in matrix.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            check_unit(v, &format!("kernel value [{i}][{j}]"))?;
            if v != matrix[j][i] {
                return Err(Error::Input(format!("kernel matrix not symmetric at [{i}][{j}]")));
            }
        }
    }
    Ok(())
}

impl Graphon {
    pub fn from_json(text: &str) -> Result<Graphon> {
        let g: Graphon = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("graphon description: {e}")))?;
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Graphon::Constant { p } => check_unit(*p, "p"),
            Graphon::TwoBlock { alpha, beta, gamma, p } => {
                check_unit(*alpha, "alpha")?;
                check_unit(*beta, "beta")?;
                check_unit(*gamma, "gamma")?;
                if !(*p > 0.0 && *p < 1.0) {
                    return Err(Error::Input(format!("block split p = {p} outside (0, 1)")));
                }
                Ok(())
            }
            Graphon::Rank1 { profile } => {
                if profile.is_empty() {
                    return Err(Error::Input("empty rank-1 profile".into()));
                }
                profile.iter().try_for_each(|&v| check_unit(v, "profile value"))
            }
            Graphon::Block { sizes, matrix } => {
                if sizes.is_empty() || sizes.iter().any(|&s| !(s > 0.0) || !s.is_finite()) {
                    return Err(Error::Input("block sizes must be positive".into()));
                }
                check_matrix(matrix, sizes.len())
            }
            Graphon::Grid { matrix } => {
                if matrix.is_empty() {
                    return Err(Error::Input("empty grid".into()));
                }
                check_matrix(matrix, matrix.len())
            }
        }
    }

    pub fn blocks(&self) -> Blocks {
        match self {
            Graphon::Constant { p } => Blocks {
                widths: vec![1.0],
                values: vec![vec![*p]],
            },
            Graphon::TwoBlock { alpha, beta, gamma, p } => Blocks {
                widths: vec![*p, 1.0 - p],
                values: vec![vec![*alpha, *gamma], vec![*gamma, *beta]],
            },
            Graphon::Rank1 { profile } => Blocks {
                widths: vec![1.0 / profile.len() as f64; profile.len()],
                values: profile
                    .iter()
                    .map(|a| profile.iter().map(|b| a * b).collect())
                    .collect(),
            },
            Graphon::Block { sizes, matrix } => {
                let total: f64 = sizes.iter().sum();
                Blocks {
                    widths: sizes.iter().map(|s| s / total).collect(),
                    values: matrix.clone(),
                }
            }
            Graphon::Grid { matrix } => Blocks {
                widths: vec![1.0 / matrix.len() as f64; matrix.len()],
                values: matrix.clone(),
            },
        }
    }

    /// `D(x) = int kappa(x, y) dy`.
    pub fn degree_density(&self, x: f64) -> f64 {
        let blocks = self.blocks();
        blocks.degree_densities()[blocks.index_of(x)]
    }

    /// `T(x) = 1/2 int int kappa(x, y) kappa(y, z) kappa(z, x) dy dz`.
    pub fn triangle_density(&self, x: f64) -> f64 {
        let blocks = self.blocks();
        blocks.triangle_densities()[blocks.index_of(x)]
    }

    /// Exact `chi` via the block structure.
    pub fn chi(&self) -> Result<f64> {
        self.validate()?;
        self.blocks().chi()
    }

    /// Moments `(m1, m2, m3)` of a rank-1 profile.
    pub fn rank1_moments(&self) -> Option<(f64, f64, f64)> {
        let Graphon::Rank1 { profile } = self else { return None };
        let n = profile.len() as f64;
        let m = |k: i32| profile.iter().map(|v| v.powi(k)).sum::<f64>() / n;
        Some((m(1), m(2), m(3)))
    }
}

impl Kernel for Graphon {
    fn value(&self, x: f64, y: f64) -> f64 {
        let blocks = self.blocks();
        blocks.values[blocks.index_of(x)][blocks.index_of(y)]
    }

    fn breakpoints(&self) -> Vec<f64> {
        let blocks = self.blocks();
        let mut edge = 0.0;
        let mut out = Vec::new();
        for w in &blocks.widths[..blocks.widths.len() - 1] {
            edge += w;
            out.push(edge);
        }
        out
    }
}

/// Composite midpoint rule with about `quadrature_n` cells, aligned to breakpoints.
pub fn chi_t<K: Kernel + ?Sized>(kernel: &K, quadrature_n: usize) -> Result<f64> {
    if quadrature_n == 0 {
        return Err(Error::Input("quadrature needs at least one cell".into()));
    }
    let mut edges = vec![0.0];
    let mut bps: Vec<f64> = kernel
        .breakpoints()
        .into_iter()
        .filter(|&b| b > 0.0 && b < 1.0)
        .collect();
    bps.sort_by(f64::total_cmp);
    bps.push(1.0);
    let mut lo = 0.0;
    for hi in bps {
        if hi <= lo {
            continue;
        }
        let cells = (((hi - lo) * quadrature_n as f64).round() as usize).max(1);
        for c in 1..=cells {
            edges.push(lo + (hi - lo) * c as f64 / cells as f64);
        }
        lo = hi;
    }
    let mids: Vec<f64> = edges.windows(2).map(|e| 0.5 * (e[0] + e[1])).collect();
    let blocks = Blocks {
        widths: edges.windows(2).map(|e| e[1] - e[0]).collect(),
        values: mids
            .iter()
            .map(|&x| mids.iter().map(|&y| kernel.value(x, y)).collect())
            .collect(),
    };
    blocks.chi()
}

/// Result of [`chi_t_converged`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiEstimate {
    pub value: f64,
    pub cells: usize,
    pub converged: bool,
}

/// Doubles the cell count from `start_n` until successive values differ by
/// less than `tol`, or until `max_n` is reached.
pub fn chi_t_converged<K: Kernel + ?Sized>(
    kernel: &K,
    start_n: usize,
    max_n: usize,
    tol: f64,
) -> Result<ChiEstimate> {
    let mut n = start_n.max(1);
    let mut prev = chi_t(kernel, n)?;
    while n * 2 <= max_n {
        n *= 2;
        let next = chi_t(kernel, n)?;
        if (next - prev).abs() < tol {
            return Ok(ChiEstimate { value: next, cells: n, converged: true });
        }
        prev = next;
    }
    Ok(ChiEstimate { value: prev, cells: n, converged: false })
}

/// Factorised two-block `chi`.
///
/// The factors are evaluated with the triangle density taken without its
/// factor 1/2, so `product = theta1 * theta2 * theta3` is twice the limit of
/// `n^-2` times the average triangle bias; that limit is `chi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiBreakdown {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
    pub product: f64,
    pub chi: f64,
}

/// Closed-form factorisation of `chi` for the two-block graphon.
pub fn two_block_chi(alpha: f64, beta: f64, gamma: f64, p: f64) -> Result<ChiBreakdown> {
    Graphon::TwoBlock { alpha, beta, gamma, p }.validate()?;
    let q = 1.0 - p;
    let d_inner = p * alpha + q * gamma;
    let d_outer = p * gamma + q * beta;
    if d_inner <= 0.0 || d_outer <= 0.0 {
        return Err(Error::Hypothesis(
            "degree density vanishes on a block; chi is undefined".into(),
        ));
    }
    let theta1 = p * q * gamma / (d_outer * d_inner);
    let theta2 = p * (gamma - alpha) + q * (beta - gamma);
    let theta3 = p * p * alpha * (gamma * gamma - alpha * alpha)
        + 2.0 * p * q * gamma * gamma * (beta - alpha)
        + q * q * beta * (beta * beta - gamma * gamma);
    let product = theta1 * theta2 * theta3;
    Ok(ChiBreakdown {
        theta1,
        theta2,
        theta3,
        product,
        chi: 0.5 * product,
    })
}

/// `chi = (m2^2 / 2 m1)(m3 - m1 m2)` for the rank-1 kernel `nu(x) nu(y)`,
/// where `m_k` is the `k`-th moment of `nu`. Here `D = nu m1` and `T = nu^2 m2^2 / 2`.
pub fn rank1_chi(m1: f64, m2: f64, m3: f64) -> Result<f64> {
    if !(m1 > 0.0) {
        return Err(Error::Domain(format!("rank-1 chi needs m1 > 0, got {m1}")));
    }
    Ok(0.5 * m2 * m2 / m1 * (m3 - m1 * m2))
}

/// Inhomogeneous random graph: vertex `i` sits at the cell midpoint `(i + 1/2)/n`
/// and each pair is joined independently with probability `kappa(x_i, x_j)`.
pub fn sample_graphon_graph_with<K: Kernel + ?Sized, R: Rng>(
    n: usize,
    kernel: &K,
    rng: &mut R,
) -> Multigraph {
    let xs: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < kernel.value(xs[i], xs[j]) {
                edges.push((i, j));
            }
        }
    }
    Multigraph::from_edges(n, edges).expect("ids below n")
}

/// Fast path for piecewise-constant graphons.
pub fn sample_graphon_graph(n: usize, g: &Graphon, seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let blocks = g.blocks();
    let idx: Vec<usize> = (0..n)
        .map(|i| blocks.index_of((i as f64 + 0.5) / n as f64))
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        let row = &blocks.values[idx[i]];
        for j in i + 1..n {
            if rng.random::<f64>() < row[idx[j]] {
                edges.push((i, j));
            }
        }
    }
    Multigraph::from_edges(n, edges).expect("ids below n")
}
