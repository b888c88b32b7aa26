use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use symtour::CrossoverKind;

use crate::error::BenchError;
use crate::experiment::{AggregateResult, ExperimentResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Serialize)]
struct SummaryRow<'a> {
    instance: &'a str,
    opt: Option<f64>,
    crossover: CrossoverKind,
    mean: f64,
    std: f64,
    delta_rel: Option<f64>,
}

fn write_err(path: &Path) -> impl FnOnce(std::io::Error) -> BenchError + '_ {
    move |source| BenchError::Write {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> BenchError + '_ {
    move |e| match e.into_kind() {
        csv::ErrorKind::Io(source) => BenchError::Write {
            path: path.to_path_buf(),
            source,
        },
        other => BenchError::Encode(format!("{other:?}")),
    }
}

/// The summary table as CSV text, one row per operator.
pub fn summary_csv(aggregates: &[AggregateResult]) -> Result<String, BenchError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for a in aggregates {
        w.serialize(SummaryRow {
            instance: &a.instance,
            opt: a.opt,
            crossover: a.crossover,
            mean: a.mean_length,
            std: a.std_length,
            delta_rel: a.relative_error,
        })
        .map_err(|e| BenchError::Encode(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| BenchError::Encode(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn trace_file_name(instance: &str, crossover: CrossoverKind, seed: u64) -> String {
    format!("{instance}_{crossover}_seed{seed}.csv")
}

/// Writes `summary.csv` or `summary.json` into `dir`, plus one trace per run
/// under `dir/traces`. Returns the written paths, summary first.
pub fn emit_results(
    result: &ExperimentResult,
    format: OutputFormat,
    dir: &Path,
) -> Result<Vec<PathBuf>, BenchError> {
    let traces = dir.join("traces");
    fs::create_dir_all(&traces).map_err(write_err(&traces))?;

    let (summary, body) = match format {
        OutputFormat::Csv => (dir.join("summary.csv"), summary_csv(&result.aggregates)?),
        OutputFormat::Json => (
            dir.join("summary.json"),
            serde_json::to_string_pretty(&result.aggregates)
                .map_err(|e| BenchError::Encode(e.to_string()))?
                + "\n",
        ),
    };
    fs::write(&summary, body).map_err(write_err(&summary))?;

    let mut written = vec![summary];
    for op in &result.operators {
        for rec in &op.runs {
            let path = traces.join(trace_file_name(&result.instance, op.crossover, rec.seed));
            let mut w = csv::Writer::from_path(&path).map_err(csv_err(&path))?;
            for row in &rec.per_generation {
                w.serialize(row).map_err(csv_err(&path))?;
            }
            w.flush().map_err(write_err(&path))?;
            written.push(path);
        }
    }
    Ok(written)
}
