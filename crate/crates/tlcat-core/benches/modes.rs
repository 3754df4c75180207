//! Benchmarks for the kernels that fan out over basis pairs or monomials.
//!
//! Every bench id embeds [`par::mode`] ("parallel" or "sequential"), so
//! running the suite once with default features and once with
//! `--no-default-features` produces side-by-side entries for the two
//! execution paths:
//!
//! ```text
//! cargo bench -p tlcat-core
//! cargo bench -p tlcat-core --no-default-features
//! ```

use criterion::{criterion_group, criterion_main, Criterion};

use tlcat_core::cells::InducedModule;
use tlcat_core::diagram::{enumerate_matchings, Matching};
use tlcat_core::ideal::{hilbert_triple_check, RewriteSystem};
use tlcat_core::par;
use tlcat_core::tl::Trace;

fn bench_gram(c: &mut Criterion) {
    c.bench_function(&format!("gram/graded/strands5/{}", par::mode()), |b| {
        b.iter(|| Trace::Graded.gram(5).unwrap())
    });
}

fn bench_pairing_rank(c: &mut Criterion) {
    let module = InducedModule::new(6, 3).unwrap();
    c.bench_function(&format!("cells/rank/strands6/{}", par::mode()), |b| {
        b.iter(|| module.pairing_space_rank().unwrap())
    });
}

fn bench_confluence(c: &mut Criterion) {
    let sys = RewriteSystem::new(3, &[]).unwrap();
    c.bench_function(&format!("confluence/n3/deg12/{}", par::mode()), |b| {
        b.iter(|| sys.confluence_check(6).unwrap())
    });
}

fn bench_hilbert_triple(c: &mut Criterion) {
    c.bench_function(&format!("hilbert/triple/n3/deg16/{}", par::mode()), |b| {
        b.iter(|| hilbert_triple_check(3, &[], 8).unwrap())
    });
}

fn bench_closure_pairs(c: &mut Criterion) {
    let matchings = enumerate_matchings(6).unwrap();
    c.bench_function(&format!("closure/pairs/strands6/{}", par::mode()), |b| {
        b.iter(|| {
            let mut max_total = 0;
            for x in &matchings {
                for y in &matchings {
                    let (w, erased) = Matching::compose(x, &y.flip()).unwrap();
                    max_total = max_total.max(erased + w.closure().circles);
                }
            }
            max_total
        })
    });
}

fn configured() -> Criterion {
    Criterion::default().sample_size(10)
}

criterion_group! {
    name = modes;
    config = configured();
    targets = bench_gram, bench_pairing_rank, bench_confluence, bench_hilbert_triple, bench_closure_pairs
}
criterion_main!(modes);
