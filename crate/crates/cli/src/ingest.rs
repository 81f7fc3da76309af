//! CSV ingestion.
//!
//! Two layouts are accepted: a single column of values, or `label,value`
//! rows where the label (a date or timestamp) is kept for reporting but not
//! modelled. The first row is treated as a header when its value field is
//! not a number.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use phrasecast::TimeSeries;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("input file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("parse error at row {row}: {message} ({text:?})")]
    Parse {
        row: u64,
        text: String,
        message: String,
    },
    #[error("input contains no data rows")]
    EmptyInput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    Single,
    Labeled,
}

#[derive(Debug, Clone)]
pub struct Ingested {
    pub series: TimeSeries,
    pub labels: Option<Vec<String>>,
    pub header: Option<Vec<String>>,
    pub layout: Layout,
    /// Hex SHA-256 of the raw file bytes.
    pub sha256: String,
}

pub fn ingest_csv(path: &Path) -> Result<Ingested, IngestError> {
    let bytes = fs::read(path).map_err(|source| match source.kind() {
        io::ErrorKind::NotFound => IngestError::FileNotFound(path.to_path_buf()),
        _ => IngestError::Io {
            path: path.to_path_buf(),
            source,
        },
    })?;
    let mut parsed = parse_csv(&bytes)?;
    parsed.sha256 = hex::encode(Sha256::digest(&bytes));
    Ok(parsed)
}

pub fn parse_csv(bytes: &[u8]) -> Result<Ingested, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);

    let mut layout = None;
    let mut header = None;
    let mut values = Vec::new();
    let mut labels = Vec::new();

    for (i, record) in reader.records().enumerate() {
        let fallback_row = i as u64 + 1;
        let record = record.map_err(|e| IngestError::Parse {
            row: e.position().map_or(fallback_row, |p| p.line()),
            text: String::new(),
            message: e.to_string(),
        })?;
        let row = record.position().map_or(fallback_row, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let this_layout = match record.len() {
            1 => Layout::Single,
            2 => Layout::Labeled,
            n => {
                return Err(IngestError::Parse {
                    row,
                    text: record.iter().collect::<Vec<_>>().join(","),
                    message: format!("expected 1 or 2 columns, found {n}"),
                })
            }
        };
        let expected = *layout.get_or_insert(this_layout);
        if this_layout != expected {
            return Err(IngestError::Parse {
                row,
                text: record.iter().collect::<Vec<_>>().join(","),
                message: format!(
                    "expected {} column(s)",
                    if expected == Layout::Single { 1 } else { 2 }
                ),
            });
        }
        let field = &record[record.len() - 1];
        match parse_value(field) {
            Some(v) => {
                values.push(v);
                if this_layout == Layout::Labeled {
                    labels.push(record[0].to_string());
                }
            }
            None if values.is_empty() && header.is_none() => {
                header = Some(record.iter().map(str::to_string).collect());
            }
            None => {
                return Err(IngestError::Parse {
                    row,
                    text: field.to_string(),
                    message: "not a finite number".into(),
                })
            }
        }
    }

    if values.is_empty() {
        return Err(IngestError::EmptyInput);
    }
    let layout = layout.unwrap_or(Layout::Single);
    Ok(Ingested {
        series: TimeSeries::new(values).expect("values are finite and non-empty"),
        labels: (layout == Layout::Labeled).then_some(labels),
        header,
        layout,
        sha256: String::new(),
    })
}

fn parse_value(field: &str) -> Option<f64> {
    field.parse::<f64>().ok().filter(|v| v.is_finite())
}
