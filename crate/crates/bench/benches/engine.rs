use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use macpieri::algebra::{Rat, Specialized, Symbolic};
use macpieri::comb::Composition;
use macpieri::ctnorm::verify_orthogonality_norms;
use macpieri::Engine;
use std::hint::black_box;

fn c(s: &str) -> Composition {
    s.parse().unwrap()
}

// each iteration starts from a cold cache
fn generation(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("generate");
    for eta in ["2,0,1", "1,2,0,1", "3,1,2"] {
        g.bench_with_input(BenchmarkId::new("e", eta), &c(eta), |b, eta| {
            b.iter(|| Engine::new(Symbolic::generic()).generate_e(black_box(eta)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("estar", eta), &c(eta), |b, eta| {
            b.iter(|| Engine::new(Symbolic::generic()).generate_estar(black_box(eta)).unwrap())
        });
    }
    g.finish();
}

fn oracle(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("vanishing_oracle");
    g.sample_size(10);
    let point = Specialized { q: Rat::new(3, 7).unwrap(), t: Rat::new(-5, 2).unwrap() };
    for eta in ["1,0,1", "0,2,1"] {
        g.bench_with_input(BenchmarkId::new("specialized", eta), &c(eta), |b, eta| {
            b.iter(|| Engine::new(point.clone()).vanishing_solve_oracle(black_box(eta)).unwrap())
        });
    }
    g.bench_function("symbolic/1,0,1", |b| {
        b.iter(|| Engine::new(Symbolic::generic()).vanishing_solve_oracle(&c("1,0,1")).unwrap())
    });
    g.finish();
}

fn pieri(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("pieri");
    g.sample_size(10);
    for (eta, r) in [("1,0,1", 1), ("1,0,1", 2), ("2,0,1", 2)] {
        g.bench_function(format!("homogeneous/{eta}/r={r}"), |b| {
            b.iter(|| Engine::new(Symbolic::generic()).pieri_homogeneous(&c(eta), r).unwrap())
        });
    }
    g.bench_function("r1_closed/2,0,1", |b| {
        b.iter(|| Engine::new(Symbolic::generic()).pieri_r1_closed(&c("2,0,1")).unwrap())
    });
    g.finish();
}

fn norms(cr: &mut Criterion) {
    let mut g = cr.benchmark_group("ctnorm");
    g.sample_size(10);
    g.bench_function("orthogonality/n=2,k=1,mod=2", |b| b.iter(|| verify_orthogonality_norms(2, 1, 2).unwrap()));
    g.finish();
}

criterion_group!(benches, generation, oracle, pieri, norms);
criterion_main!(benches);
