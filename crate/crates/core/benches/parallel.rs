use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use trifp::bias::triangle_bias_total;
use trifp::mc::{run_mc_with, ExperimentConfig, ModelConfig, Statistic};
use trifp::par::{map_slice, Exec};
use trifp::rational::int;
use trifp::star::{enumerate_pcs, glue_pcs, PcsInstance};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn monte_carlo(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_mc");
    group.sample_size(10);
    let configs = [
        ("errg_n200", ModelConfig::Errg { n: 200, p: None, lambda: Some(2.0) }),
        (
            "cm_n200",
            ModelConfig::Cm { degrees: None, degrees_file: None, distribution: Some("two-point:1,3,0.5".into()), n: Some(200) },
        ),
    ];
    for (name, model) in configs {
        let config = ExperimentConfig {
            model,
            statistic: Statistic::AverageTfb,
            trials: 2000,
            master_seed: 1,
            workers: None,
        };
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, mode), &exec, |b, &exec| {
                b.iter(|| run_mc_with(black_box(&config), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn gluing_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("pcs_gluing");
    group.sample_size(10);
    let instances: Vec<PcsInstance> = enumerate_pcs(8).map(PcsInstance::new).collect();
    for (mode, exec) in MODES {
        group.bench_function(mode, |b| {
            b.iter(|| {
                map_slice(&instances, exec, |a| {
                    let mut negative = 0usize;
                    for other in &instances {
                        for v1 in 1..=a.spec.ring_size() {
                            for v2 in 1..=other.spec.ring_size() {
                                let g = glue_pcs(&a.graph, v1, &other.graph, v2).unwrap();
                                negative += usize::from(triangle_bias_total(&g) < int(0));
                            }
                        }
                    }
                    negative
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, monte_carlo, gluing_sweep);
criterion_main!(benches);
