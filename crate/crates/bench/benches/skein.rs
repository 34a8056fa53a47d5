use criterion::{black_box, criterion_group, criterion_main, Criterion};

use skeintail_core::cable::cable;
use skeintail_core::corpus;
use skeintail_core::jones::colored_jones;
use skeintail_core::jw;
use skeintail_core::kauffman::bracket_oracle;
use skeintail_core::morse::{evaluate_morse, morseize, EvalConfig};
use skeintail_core::poly::LaurentPoly;
use skeintail_core::ratfn::RationalFn;
use skeintail_core::tl::{tl_multiply, Matching, TLElement};

fn bench_bracket(c: &mut Criterion) {
    let d = corpus::load("trefoil-r2").unwrap();
    c.bench_function("bracket_state_sum_c5", |b| {
        b.iter(|| bracket_oracle(black_box(&d)).unwrap())
    });
}

fn bench_tl_multiply(c: &mut Criterion) {
    let n = 5;
    let basis = Matching::enumerate(2 * n);
    let mut x = TLElement::zero(n);
    let mut y = TLElement::zero(n);
    for (i, m) in basis.iter().enumerate() {
        let coeff = RationalFn::from_poly(LaurentPoly::monomial(
            (i % 5) as i64 - 2,
            num_bigint::BigInt::from(1 + (i % 3) as i64),
        ));
        if i % 2 == 0 {
            x.add_term(m.clone(), coeff);
        } else {
            y.add_term(m.clone(), coeff);
        }
    }
    c.bench_function("tl_multiply_full_tl5", |b| {
        b.iter(|| tl_multiply(black_box(&x), black_box(&y)).unwrap())
    });
}

fn bench_jw(c: &mut Criterion) {
    // warm the cache first so the benchmark measures the verification pass
    let _ = jw::jw(5).unwrap();
    c.bench_function("verify_jw_5", |b| {
        b.iter(|| jw::verify_jw(black_box(5)).unwrap())
    });
}

fn bench_colored_jones(c: &mut Criterion) {
    let d = corpus::load("trefoil-std").unwrap();
    let config = EvalConfig { width_cap: 16 };
    c.bench_function("colored_jones_trefoil_n2", |b| {
        b.iter(|| colored_jones(black_box(&d), 2, &config).unwrap())
    });
    let fig8 = corpus::load("figure8-std").unwrap();
    c.bench_function("transfer_figure8_n2", |b| {
        b.iter(|| {
            let word = morseize(&cable(black_box(&fig8), 2).unwrap()).unwrap();
            evaluate_morse(&word, &config).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_bracket,
    bench_tl_multiply,
    bench_jw,
    bench_colored_jones
);
criterion_main!(benches);
