use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dialgebra::composition::{gsb_check, GsbOptions};
use dialgebra::word::Diword;
use dialgebra::{irr_enumerate, paper_instance, reduce, DiPolynomial, Execution, Letter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MODES: [Execution; 2] = [Execution::Sequential, Execution::Parallel];

fn random_polys(n: usize) -> Vec<DiPolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    (0..n)
        .map(|_| {
            let terms = (0..rng.gen_range(1..=6)).map(|_| {
                let len = rng.gen_range(1..=6);
                let w: Vec<Letter> = (0..len).map(|_| Letter(rng.gen_range(0..4))).collect();
                let c = rng.gen_range(1..=len);
                (dialgebra::poly::int(rng.gen_range(-5..=5)), Diword::new(w, c).unwrap())
            });
            DiPolynomial::from_terms(terms)
        })
        .collect()
}

fn bench(c: &mut Criterion) {
    let set = paper_instance().relations;
    let polys = random_polys(256);

    let mut g = c.benchmark_group("irr_enumerate_deg5");
    for exec in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| irr_enumerate(&set, 5, e))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("gsb_check_extended");
    for exec in MODES {
        let options = GsbOptions {
            extended: true,
            exec,
            ..Default::default()
        };
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &options, |b, o| {
            b.iter(|| gsb_check(&set, o))
        });
    }
    g.finish();

    let mut g = c.benchmark_group("reduce_batch_256");
    for exec in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| e.map(&polys, |f| reduce(f, &set).normal_form))
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
