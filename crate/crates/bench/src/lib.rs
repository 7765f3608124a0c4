//! Deterministic input generators shared by the benchmark suite. Seeded so
//! successive benchmark runs measure the same workload.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use stacksim::{rescale, ChartVector, Segment, StackedBarChart};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A chart with `segments` values drawn uniformly from [0, 10000).
pub fn random_chart(name: &str, segments: usize, rng: &mut StdRng) -> StackedBarChart {
    let segments = (0..segments)
        .map(|i| Segment::new(format!("seg{i}"), rng.gen_range(0.0..10_000.0)))
        .collect();
    StackedBarChart::new(name, segments).expect("generated charts are valid")
}

/// Two prescaled vectors of the given dimension, components in [0, 10).
pub fn random_vectors(dims: usize, rng: &mut StdRng) -> (ChartVector, ChartVector) {
    let draw =
        |rng: &mut StdRng| -> Vec<f64> { (0..dims).map(|_| rng.gen_range(0.0..10.0)).collect() };
    let x = rescale(&draw(rng), 1.0).expect("components are finite");
    let y = rescale(&draw(rng), 1.0).expect("components are finite");
    (x, y)
}

/// A pool of charts plus an index pairing for batch-style workloads.
pub fn random_batch(
    charts: usize,
    segments: usize,
    pairs: usize,
    rng: &mut StdRng,
) -> (Vec<StackedBarChart>, Vec<(usize, usize)>) {
    let pool: Vec<StackedBarChart> = (0..charts)
        .map(|i| random_chart(&format!("chart{i}"), segments, rng))
        .collect();
    let index = (0..pairs)
        .map(|_| (rng.gen_range(0..charts), rng.gen_range(0..charts)))
        .collect();
    (pool, index)
}
