//! Benchmarks for the window search and the forecasting pipelines.

use criterion::{BenchmarkId, Criterion};
use phrasecast::{
    find_best_match, forecast_phrase, generate, quantize, ForecastConfig, GeneratorSpec,
    SimilarityCriterion, TimeSeries, TrendMode,
};

fn scenario(length: usize) -> TimeSeries {
    let spec = GeneratorSpec::sinusoid(length, 25.0, 2.0)
        .with_linear_trend(0.02)
        .with_noise(0.15, 7);
    generate(&spec).expect("valid generator spec")
}

pub fn matcher(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_best_match");
    for length in [100, 1_000, 10_000] {
        let (q, _) = quantize(&scenario(length), 32).unwrap();
        for (name, criterion, detrend) in [
            ("difference", SimilarityCriterion::Difference, false),
            ("correlation", SimilarityCriterion::Correlation, false),
            (
                "correlation-detrended",
                SimilarityCriterion::Correlation,
                true,
            ),
        ] {
            group.bench_with_input(BenchmarkId::new(name, length), &q, |b, q| {
                b.iter(|| find_best_match(q, 20, 20, criterion, detrend).unwrap())
            });
        }
    }
    group.finish();
}

pub fn pipelines(c: &mut Criterion) {
    let series = scenario(1_000);
    let mut group = c.benchmark_group("forecast");
    for mode in [TrendMode::None, TrendMode::Linear] {
        let cfg = ForecastConfig::new(20).levels(30).trend_mode(mode);
        group.bench_function(format!("{mode:?}"), |b| {
            b.iter(|| forecast_phrase(&series, &cfg).unwrap())
        });
    }
    group.finish();
}
