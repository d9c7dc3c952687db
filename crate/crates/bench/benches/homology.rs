use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use indcx::complex::{independence_complex, Limits};
use indcx::homology::{betti_reduced, betti_window, Coefficients};
use indcx::homotopy::{reduce, DEFAULT_BUDGET};
use indcx::morse::{element_matching, product_order};
use indcx::Family;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for n in [3, 4, 5] {
        let g = Family::Mycielskian { n, r: 5 }.graph().unwrap();
        group.bench_with_input(BenchmarkId::new("mycielskian_r5", n), &g, |b, g| {
            b.iter(|| independence_complex(g, None, &Limits::default()).unwrap())
        });
    }
    group.finish();
}

fn homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology");
    group.sample_size(10);
    for n in [3, 4] {
        let g = Family::ConjectureK2K3Kn { n }.graph().unwrap();
        group.bench_with_input(BenchmarkId::new("k2k3kn_window_mod2", n), &g, |b, g| {
            b.iter(|| betti_window(g, 2, 4, Coefficients::Mod2, &Limits::default()).unwrap())
        });
    }
    let k = independence_complex(&Family::Product { m: 5, n: 5 }.graph().unwrap(), None, &Limits::default()).unwrap();
    for (name, coeff) in [("mod2", Coefficients::Mod2), ("integer", Coefficients::Integer)] {
        group.bench_function(BenchmarkId::new("k5xk5_full", name), |b| b.iter(|| betti_reduced(&k, coeff).unwrap()));
    }
    group.finish();
}

fn morse(c: &mut Criterion) {
    let k = independence_complex(&Family::Product { m: 6, n: 6 }.graph().unwrap(), None, &Limits::default()).unwrap();
    let order = product_order(6, 6);
    c.bench_function("morse/k6xk6_match_and_check", |b| {
        b.iter(|| element_matching(&k, &order).unwrap().verify_acyclic(&k).unwrap())
    });
}

fn reducer(c: &mut Criterion) {
    let g = Family::Gadget { n: 4, t: 6 }.graph().unwrap();
    c.bench_function("reduce/gadget_4_6", |b| b.iter(|| reduce(&g, DEFAULT_BUDGET)));
}

criterion_group!(benches, enumeration, homology, morse, reducer);
criterion_main!(benches);
