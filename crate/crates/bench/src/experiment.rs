use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use symtour::tsplib::read_instance;
use symtour::{run, CrossoverKind, Instance, RunRecord};

use crate::error::BenchError;
use crate::spec::ExperimentSpec;
use crate::stats::{mean, sample_std};

/// Final-length statistics of one operator on one instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateResult {
    pub instance: String,
    pub crossover: CrossoverKind,
    pub runs: usize,
    pub mean_length: f64,
    pub std_length: f64,
    /// Absent when the instance has no known optimum.
    pub opt: Option<f64>,
    /// `(mean_length - opt) / opt`.
    pub relative_error: Option<f64>,
}

impl AggregateResult {
    pub fn from_lengths(
        instance: &str,
        crossover: CrossoverKind,
        lengths: &[f64],
        opt: Option<f64>,
    ) -> Self {
        let mean_length = mean(lengths);
        AggregateResult {
            instance: instance.to_string(),
            crossover,
            runs: lengths.len(),
            mean_length,
            std_length: sample_std(lengths),
            opt,
            relative_error: opt.map(|o| (mean_length - o) / o),
        }
    }
}

/// All runs of one operator, in seed order.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorRuns {
    pub crossover: CrossoverKind,
    pub runs: Vec<RunRecord>,
}

impl OperatorRuns {
    pub fn final_lengths(&self) -> Vec<f64> {
        self.runs.iter().map(|r| r.final_best_length).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub instance: String,
    pub aggregates: Vec<AggregateResult>,
    pub operators: Vec<OperatorRuns>,
}

pub fn load_instance(spec: &ExperimentSpec) -> Result<Instance, BenchError> {
    let raw = read_instance(&spec.instance).map_err(|source| BenchError::Tsplib {
        path: spec.instance.clone(),
        source,
    })?;
    let inst = Instance::from_raw(&raw)?;
    Ok(match spec.known_optimum {
        Some(opt) => inst.with_known_opt(opt),
        None => inst,
    })
}

/// Loads the instance and runs every operator `repetitions` times, in
/// parallel across seeds. Results come back in seed order.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentResult, BenchError> {
    spec.validate()?;
    let instance = load_instance(spec)?;
    run_on_instance(spec, &instance)
}

pub fn run_on_instance(
    spec: &ExperimentSpec,
    instance: &Instance,
) -> Result<ExperimentResult, BenchError> {
    spec.validate()?;
    let seeds: Vec<u64> = spec.seeds().collect();
    let mut operators = Vec::with_capacity(spec.crossovers.len());
    for &crossover in &spec.crossovers {
        let runs = seeds
            .par_iter()
            .map(|&seed| run(instance, &spec.ga_config(crossover, seed)))
            .collect::<Result<Vec<_>, _>>()?;
        operators.push(OperatorRuns { crossover, runs });
    }
    let aggregates = operators
        .iter()
        .map(|op| {
            AggregateResult::from_lengths(
                instance.name(),
                op.crossover,
                &op.final_lengths(),
                instance.known_opt(),
            )
        })
        .collect();
    Ok(ExperimentResult {
        instance: instance.name().to_string(),
        aggregates,
        operators,
    })
}
