use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use phrasecast::eval::BacktestReport;
use phrasecast::{
    forecast, generate, validate_multiplier, ForecastConfig, GeneratorKind, GeneratorSpec,
    HoltConfig, ModelSpec, SimilarityCriterion, TimeSeries, TrendMode,
};

use crate::args::{CriterionArg, ForecastArgs, GenerateArgs, KindArg, MethodArg, TrendArg};
use crate::ingest::ingest_csv;
use crate::report::{ForecastReport, InputDigest, Metrics, ResolvedConfig, RunManifest};

/// Everything a command produces, gathered before anything is written.
#[derive(Debug, Default)]
pub struct Outputs {
    pub files: Vec<(std::path::PathBuf, String)>,
    pub stdout: String,
    pub warnings: Vec<String>,
}

impl Outputs {
    fn emit(&mut self, path: Option<&Path>, contents: String) {
        match path {
            Some(p) => self.files.push((p.to_path_buf(), contents)),
            None => self.stdout.push_str(&contents),
        }
    }

    /// Writes files, then standard output, then warnings to standard error.
    pub fn flush(self) -> Result<()> {
        for (path, contents) in &self.files {
            fs::write(path, contents)
                .with_context(|| format!("cannot write {}", path.display()))?;
        }
        let mut out = io::stdout().lock();
        out.write_all(self.stdout.as_bytes())?;
        out.flush()?;
        let mut err = io::stderr().lock();
        for w in &self.warnings {
            writeln!(err, "warning: {w}")?;
        }
        Ok(())
    }
}

fn model_from_args(args: &ForecastArgs) -> Result<ModelSpec> {
    match args.method {
        MethodArg::Linguistic => {
            for (flag, given) in [("--xi", args.xi.is_some()), ("--phi", args.phi.is_some())] {
                if given {
                    bail!("{flag} is only valid with --method holt");
                }
            }
            let mut config = ForecastConfig::new(args.horizon)
                .multiplier(args.multiplier.unwrap_or(1.0))
                .levels(args.levels.unwrap_or(32))
                .criterion(match args.criterion.unwrap_or(CriterionArg::Difference) {
                    CriterionArg::Difference => SimilarityCriterion::Difference,
                    CriterionArg::Correlation => SimilarityCriterion::Correlation,
                })
                .trend_mode(match args.trend.unwrap_or(TrendArg::None) {
                    TrendArg::None => TrendMode::None,
                    TrendArg::Linear => TrendMode::Linear,
                });
            if let Some(n) = args.window {
                config = config.window(n);
            }
            config.window_length()?;
            Ok(ModelSpec::Phrase(config))
        }
        MethodArg::Holt => {
            for (flag, given) in [
                ("--multiplier", args.multiplier.is_some()),
                ("--window", args.window.is_some()),
                ("--levels", args.levels.is_some()),
                ("--criterion", args.criterion.is_some()),
                ("--trend", args.trend.is_some()),
            ] {
                if given {
                    bail!("{flag} is not valid with --method holt");
                }
            }
            if args.horizon < 1 {
                bail!("--horizon must be at least 1");
            }
            let config = HoltConfig::new(args.xi.unwrap_or(0.5), args.phi.unwrap_or(0.5))?;
            Ok(ModelSpec::Holt {
                config,
                horizon: args.horizon,
            })
        }
    }
}

fn resolved_config(model: &ModelSpec, holdout: bool) -> Result<ResolvedConfig> {
    Ok(match model {
        ModelSpec::Phrase(c) => ResolvedConfig::Linguistic {
            horizon: c.horizon,
            multiplier: c.multiplier,
            window: c.window_length()?,
            window_override: c.window.is_some(),
            levels: c.levels,
            criterion: c.criterion,
            trend: c.trend_mode,
            holdout,
        },
        ModelSpec::Holt { config, horizon } => ResolvedConfig::Holt {
            horizon: *horizon,
            xi: config.xi,
            phi: config.phi,
            holdout,
        },
    })
}

pub fn forecast_csv(first_index: usize, values: &[f64]) -> String {
    let mut out = String::from("index,value\n");
    for (j, v) in values.iter().enumerate() {
        writeln!(out, "{},{}", first_index + j, v).unwrap();
    }
    out
}

pub fn plot_csv(
    history: &[f64],
    first_index: usize,
    forecast: &[f64],
    actual: Option<&[f64]>,
) -> String {
    let mut out = String::from("series,index,value\n");
    for (i, v) in history.iter().enumerate() {
        writeln!(out, "history,{},{}", i + 1, v).unwrap();
    }
    for (j, v) in forecast.iter().enumerate() {
        writeln!(out, "forecast,{},{}", first_index + j, v).unwrap();
    }
    for (j, v) in actual.unwrap_or_default().iter().enumerate() {
        writeln!(out, "actual,{},{}", first_index + j, v).unwrap();
    }
    out
}

pub fn values_csv(values: &[f64]) -> String {
    let mut out = String::new();
    for v in values {
        writeln!(out, "{v}").unwrap();
    }
    out
}

pub fn run_forecast(args: &ForecastArgs, subcommand: &'static str) -> Result<Outputs> {
    let holdout = args.holdout || subcommand == "backtest";
    let model = model_from_args(args)?;
    let input = ingest_csv(&args.input)?;
    let series = &input.series;
    let p = model.horizon();

    let (train, actual) = if holdout {
        let required = model.min_length()? + p;
        if series.len() < required {
            return Err(phrasecast::Error::SeriesTooShort {
                required,
                actual: series.len(),
            }
            .into());
        }
        let split = series.len() - p;
        (
            series.prefix(split)?,
            Some(series.values()[split..].to_vec()),
        )
    } else {
        (series.clone(), None)
    };

    let fc = forecast(&train, &model)?;
    let backtest = actual
        .as_deref()
        .map(|a| BacktestReport::from_forecast(fc.clone(), a));

    let labels = input.labels.as_ref();
    let manifest = RunManifest::new(
        subcommand,
        resolved_config(&model, holdout)?,
        Some(InputDigest {
            path: args.input.display().to_string(),
            sha256: input.sha256.clone(),
            rows: series.len(),
            layout: input.layout,
            header: input.header.clone(),
            first_label: labels.and_then(|l| l.first().cloned()),
            last_label: labels.and_then(|l| l.last().cloned()),
        }),
    );
    let multiplier_check = match model {
        ModelSpec::Phrase(c) if c.window.is_none() => Some(validate_multiplier(p, c.multiplier)),
        _ => None,
    };
    let first_index = train.len() + 1;
    let warnings: Vec<String> = fc.warnings.iter().map(ToString::to_string).collect();
    let report = ForecastReport {
        manifest,
        method: fc.method,
        series_length: train.len(),
        horizon: p,
        window: fc.window,
        forecast_start_index: first_index,
        matched_start: fc.matched_start(),
        score: fc.score(),
        grid: fc.grid,
        trend_transfer: fc.trend_transfer,
        multiplier_check,
        warnings: warnings.clone(),
        forecast: fc.values.clone(),
        actual: actual.clone(),
        backtest: backtest.as_ref().map(Metrics::from),
    };

    let mut out = Outputs {
        warnings,
        ..Outputs::default()
    };
    out.emit(
        args.output.as_deref(),
        forecast_csv(first_index, &fc.values),
    );
    if let Some(path) = &args.report {
        out.emit(Some(path), serde_json::to_string_pretty(&report)? + "\n");
    }
    if let Some(path) = &args.plot_data {
        out.emit(
            Some(path),
            plot_csv(train.values(), first_index, &fc.values, actual.as_deref()),
        );
    }
    Ok(out)
}

fn generator_spec(args: &GenerateArgs) -> Result<GeneratorSpec> {
    let (kind, slope, quad) = match args.kind {
        KindArg::Sinusoid => {
            if args.slope.is_some() {
                bail!("--slope is not valid with --kind sinusoid");
            }
            if args.quad.is_some() {
                bail!("--quad is not valid with --kind sinusoid");
            }
            (GeneratorKind::Sinusoid, 0.0, 0.0)
        }
        KindArg::SinusoidLinear => {
            if args.quad.is_some() {
                bail!("--quad is not valid with --kind sinusoid-linear");
            }
            (
                GeneratorKind::SinusoidLinearTrend,
                args.slope.unwrap_or(0.02),
                0.0,
            )
        }
        KindArg::SinusoidNonlinear => (
            GeneratorKind::SinusoidNonlinearTrend,
            args.slope.unwrap_or(0.1),
            args.quad.unwrap_or(-0.001),
        ),
    };
    if args.length < 1 {
        bail!("--length must be at least 1");
    }
    if !(args.period.is_finite() && args.period > 0.0) {
        bail!("--period must be a positive number");
    }
    if !(args.amplitude.is_finite() && args.amplitude > 0.0) {
        bail!("--amplitude must be a positive number");
    }
    if !(args.noise.is_finite() && args.noise >= 0.0) {
        bail!("--noise must be a non-negative number");
    }
    for (flag, v) in [
        ("--slope", slope),
        ("--quad", quad),
        ("--phase", args.phase),
    ] {
        if !v.is_finite() {
            bail!("{flag} must be finite");
        }
    }
    let spec = GeneratorSpec {
        kind,
        length: args.length,
        period: args.period,
        amplitude: args.amplitude,
        slope,
        quad,
        phase: args.phase,
        noise: args.noise,
        seed: args.seed,
    };
    spec.validate()?;
    Ok(spec)
}

pub fn run_generate(args: &GenerateArgs) -> Result<Outputs> {
    let spec = generator_spec(args)?;
    let series: TimeSeries = generate(&spec)?;
    let manifest = RunManifest::new("generate", ResolvedConfig::Generate(spec), None);
    let manifest_json = serde_json::to_string_pretty(&manifest)? + "\n";

    let mut out = Outputs::default();
    out.emit(args.output.as_deref(), values_csv(series.values()));
    if args.output.is_some() {
        out.stdout.push_str(&manifest_json);
    }
    if let Some(path) = &args.report {
        out.emit(Some(path), manifest_json);
    }
    Ok(out)
}
