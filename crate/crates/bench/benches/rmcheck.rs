use criterion::{criterion_group, criterion_main, Criterion};
use profmatch::rmcheck::{is_rank_maximal, is_rank_maximal_grouped, ranks_of};
use profmatch_bench::{distinct_ladder, ladder_weights};

fn million(c: &mut Criterion) {
    let grouped = ladder_weights(1_000_000, 40, 3);
    let distinct = distinct_ladder(1_000);
    let mut group = c.benchmark_group("rmcheck");
    group.sample_size(10);
    group.bench_function("grouped_1e6", |b| {
        b.iter(|| assert!(is_rank_maximal_grouped(&grouped)))
    });
    group.bench_function("ranks_of_1e6", |b| b.iter(|| ranks_of(&grouped).unwrap()));
    group.bench_function("literal_distinct_1e3", |b| {
        b.iter(|| assert!(is_rank_maximal(&distinct)))
    });
    group.finish();
}

criterion_group!(benches, million);
criterion_main!(benches);
