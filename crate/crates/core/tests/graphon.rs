mod common;

use common::rng;
use rand::Rng;
use trifp::graphon::*;
use trifp::mc::{run_mc, ExperimentConfig, ModelConfig, Statistic};
use trifp::sparse::{errg_exact_mean_tfb, ErrgParams};

#[test]
fn constant_chi_vanishes_under_quadrature() {
    for p in [0.1, 0.3, 0.77, 1.0] {
        let g = Graphon::Constant { p };
        assert!(chi_t(&g, DEFAULT_QUADRATURE_N).unwrap().abs() < 1e-10);
        let k = FnKernel(move |_: f64, _: f64| p);
        assert!(chi_t(&k, 64).unwrap().abs() < 1e-10);
    }
}

#[test]
fn two_block_closed_form_matches_quadrature() {
    let mut r = rng(11);
    for _ in 0..50 {
        let (alpha, beta, gamma) = (r.random::<f64>(), r.random::<f64>(), r.random::<f64>());
        let p = r.random_range(0.05..0.95);
        let closed = two_block_chi(alpha, beta, gamma, p).unwrap();
        let quad = chi_t(&Graphon::TwoBlock { alpha, beta, gamma, p }, DEFAULT_QUADRATURE_N).unwrap();
        assert!((closed.chi - quad).abs() < 1e-8, "{alpha} {beta} {gamma} {p}");
        assert!(closed.theta1 >= 0.0);
    }
}

#[test]
fn half_split_factorises() {
    let mut r = rng(12);
    for _ in 0..50 {
        let (a, b, c) = (r.random::<f64>(), r.random::<f64>(), r.random_range(0.01..1.0));
        let closed = two_block_chi(a, b, c, 0.5).unwrap();
        let factor = (a - b).powi(2) * (c.powi(3) + c * (a * a + a * b + b * b)) / (8.0 * (a + c) * (b + c));
        assert!((closed.product - factor).abs() < 1e-13, "{a} {b} {c}");
        assert!(closed.product >= 0.0);
    }
}

#[test]
fn sign_regimes() {
    let mut r = rng(13);
    let mut negatives = 0;
    for _ in 0..200 {
        let mut v = [r.random::<f64>(), r.random::<f64>(), r.random::<f64>()];
        v.sort_by(f64::total_cmp);
        let p = r.random_range(0.01..0.99);
        // beta > gamma > alpha
        assert!(two_block_chi(v[0], v[2], v[1], p).unwrap().product > 0.0);
        // beta < gamma < alpha
        assert!(two_block_chi(v[2], v[0], v[1], p).unwrap().product > 0.0);

        let (beta, gamma) = (v[0], v[2]);
        let lo = (gamma * gamma - beta * beta) / (2.0 * gamma * gamma);
        let hi = (gamma - beta) / gamma;
        if hi - lo > 1e-6 {
            let ratio = r.random_range(lo..hi);
            let p = ratio / (1.0 + ratio);
            assert!(two_block_chi(0.0, beta, gamma, p).unwrap().product < 0.0);
            negatives += 1;
        }
    }
    assert!(negatives > 20);
    assert!(two_block_chi(0.0, 0.25, 0.5, 10.0 / 33.0).unwrap().product < 0.0);
}

#[test]
fn rank1_profiles_are_non_negative() {
    let mut r = rng(14);
    for _ in 0..200 {
        let len = r.random_range(1..12);
        let profile: Vec<f64> = (0..len).map(|_| r.random_range(0.01..=1.0)).collect();
        let g = Graphon::Rank1 { profile };
        let (m1, m2, m3) = g.rank1_moments().unwrap();
        let chi = rank1_chi(m1, m2, m3).unwrap();
        assert!(chi >= -1e-15);
        assert!((g.chi().unwrap() - chi).abs() < 1e-13);
    }
}

#[test]
fn chung_lu_edge_frequencies() {
    let g = Graphon::Rank1 { profile: vec![0.3, 0.9] };
    let n = 40;
    let samples = 300;
    let mut cross = 0u64;
    for seed in 0..samples {
        let s = sample_graphon_graph(n, &g, seed);
        cross += s.edges().filter(|&(u, v, _)| u < n / 2 && v >= n / 2).count() as u64;
    }
    let trials = (samples * (n / 2 * n / 2) as u64) as f64;
    let p = 0.27;
    let freq = cross as f64 / trials;
    assert!((freq - p).abs() < 4.0 * (p * (1.0 - p) / trials).sqrt(), "{freq}");
}

#[test]
fn dense_constant_graphon_matches_errg_mean() {
    let n = 120;
    let p = 0.3;
    let cfg = ExperimentConfig {
        model: ModelConfig::Graphon { n, graphon: Graphon::Constant { p } },
        statistic: Statistic::ScaledTfb { power: -1 },
        trials: 200,
        master_seed: 8,
        workers: None,
    };
    let est = run_mc(&cfg).unwrap();
    let exact = errg_exact_mean_tfb(&ErrgParams::from_p(n, p).unwrap()).unwrap() / n as f64;
    assert!(est.within(exact, 4.0), "{est:?} vs {exact}");
}

#[test]
fn quadrature_doubling_converges_for_smooth_kernel() {
    let k = FnKernel(|x: f64, y: f64| 0.2 + 0.6 * x * y + 0.1 * (x + y));
    let est = chi_t_converged(&k, 32, 512, 1e-6).unwrap();
    assert!(est.converged, "{est:?}");
    assert!(est.value > 0.0);
}
