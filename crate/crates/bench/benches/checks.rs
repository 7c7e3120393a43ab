use criterion::{black_box, criterion_group, criterion_main, Criterion};

use sbtg_bench::{canonical_spaces, sbtg_instances};
use sbtg_core::bitop::{
    bi_soft_connected, is_sbtg_componentwise, is_sbtg_oracle, minimal_subcover,
    slice_separation_equivalence, CoverProblem, DEFAULT_ORACLE_CAP,
};
use sbtg_core::gallery;
use sbtg_core::topology::DEFAULT_OPEN_CAP;
use sbtg_core::{Origin, SbtgInstance, SeIndex, SeparationLevel, SoftBitopSpace};

fn d8(c: &mut Criterion) {
    let ex = gallery::d8_example();
    let inst = SbtgInstance::new(ex.group.clone(), ex.tau1.clone(), ex.tau2.clone()).unwrap();
    c.bench_function("d8/componentwise", |b| {
        b.iter(|| is_sbtg_componentwise(black_box(&inst)).unwrap())
    });
    c.bench_function("d8/enumerate_se", |b| {
        b.iter(|| {
            SeIndex::new(black_box(ex.carrier()))
                .unwrap()
                .elements()
                .count()
        })
    });
    let space = SoftBitopSpace::new(ex.tau1.clone(), ex.tau2.clone()).unwrap();
    let cover = CoverProblem {
        target: ex.carrier().clone(),
        cover: vec![
            (ex.f1.clone(), Origin::Tau1),
            (ex.f2.clone(), Origin::Tau1),
            (ex.carrier().clone(), Origin::Tau2),
        ],
    };
    c.bench_function("d8/minimal_subcover", |b| {
        b.iter(|| minimal_subcover(&space, black_box(&cover)).unwrap())
    });
}

fn random_instances(c: &mut Criterion) {
    let instances = sbtg_instances(32, DEFAULT_ORACLE_CAP);
    c.bench_function("random/componentwise", |b| {
        b.iter(|| {
            instances
                .iter()
                .filter(|i| is_sbtg_componentwise(i).unwrap().holds)
                .count()
        })
    });
    c.bench_function("random/oracle", |b| {
        b.iter(|| {
            instances
                .iter()
                .filter(|i| is_sbtg_oracle(i, DEFAULT_ORACLE_CAP).unwrap().holds)
                .count()
        })
    });
    c.bench_function("random/connected", |b| {
        b.iter(|| {
            instances
                .iter()
                .filter(|i| {
                    bi_soft_connected(i.space(), DEFAULT_OPEN_CAP)
                        .unwrap()
                        .holds
                })
                .count()
        })
    });
}

fn separation(c: &mut Criterion) {
    let spaces = canonical_spaces(32, 64);
    c.bench_function("canonical/slice_separation_t2", |b| {
        b.iter(|| {
            spaces
                .iter()
                .filter(|s| slice_separation_equivalence(s, SeparationLevel::T2).holds())
                .count()
        })
    });
}

criterion_group!(benches, d8, random_instances, separation);
criterion_main!(benches);
