mod common;

use std::fs;

use proptest::prelude::*;
use symtour::CrossoverKind;
use symtour_bench::stats::{mean, sample_std};
use symtour_bench::{
    convergence_curves, emit_convergence_plot, emit_results, run_experiment, AggregateResult,
    ExperimentSpec, OutputFormat,
};

fn small_spec(repetitions: usize) -> ExperimentSpec {
    ExperimentSpec {
        instance: common::data("eil51.tsp"),
        crossovers: vec![CrossoverKind::Csrx, CrossoverKind::Box],
        repetitions,
        base_seed: 7,
        max_generations: 25,
        population_size: 30,
        ..ExperimentSpec::default()
    }
}

#[test]
fn csv_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let result = run_experiment(&small_spec(3)).unwrap();
    let written = emit_results(&result, OutputFormat::Csv, dir.path()).unwrap();
    assert_eq!(written.len(), 1 + 2 * 3);

    let summary = fs::read_to_string(&written[0]).unwrap();
    let mut lines = summary.lines();
    assert_eq!(
        lines.next(),
        Some("instance,opt,crossover,mean,std,delta_rel")
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..3], &["eil51", "426.0", "csrx"]);
    let agg = &result.aggregates[0];
    assert_eq!(row[3].parse::<f64>().unwrap(), agg.mean_length);
    assert_eq!(
        row[5].parse::<f64>().unwrap(),
        (agg.mean_length - 426.0) / 426.0
    );

    let trace = dir.path().join("traces/eil51_box_seed9.csv");
    let text = fs::read_to_string(trace).unwrap();
    assert_eq!(
        text.lines().next(),
        Some("generation,best_length,mean_length")
    );
    assert_eq!(text.lines().count(), 1 + 25 + 1);
}

#[test]
fn json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let result = run_experiment(&small_spec(2)).unwrap();
    let written = emit_results(&result, OutputFormat::Json, dir.path()).unwrap();
    let back: Vec<AggregateResult> =
        serde_json::from_str(&fs::read_to_string(&written[0]).unwrap()).unwrap();
    assert_eq!(back, result.aggregates);
}

#[test]
fn aggregates_match_the_runs() {
    let result = run_experiment(&small_spec(4)).unwrap();
    for (agg, op) in result.aggregates.iter().zip(&result.operators) {
        let finals: Vec<f64> = op.runs.iter().map(|r| r.final_best_length).collect();
        let m = finals.iter().sum::<f64>() / 4.0;
        let var = finals.iter().map(|x| (x - m).powi(2)).sum::<f64>() / 3.0;
        assert!((agg.mean_length - m).abs() < 1e-9);
        assert!((agg.std_length - var.sqrt()).abs() < 1e-9);
        assert_eq!(
            op.runs.iter().map(|r| r.seed).collect::<Vec<_>>(),
            vec![7, 8, 9, 10]
        );
    }
}

#[test]
fn identical_specs_give_identical_summaries() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let spec = small_spec(3);
    let pa = emit_results(&run_experiment(&spec).unwrap(), OutputFormat::Csv, a.path()).unwrap();
    let pb = emit_results(&run_experiment(&spec).unwrap(), OutputFormat::Csv, b.path()).unwrap();
    assert_eq!(fs::read(&pa[0]).unwrap(), fs::read(&pb[0]).unwrap());
}

#[test]
fn plots() {
    let dir = tempfile::tempdir().unwrap();
    let result = run_experiment(&small_spec(3)).unwrap();
    let path = dir.path().join("c.svg");
    let warnings = emit_convergence_plot("eil51", &result.operators, 0.95, &path).unwrap();
    assert!(warnings.is_empty());
    let svg = fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<polygon").count(), 2);
    assert_eq!(svg.matches("<polyline").count(), 2);

    let single = run_experiment(&ExperimentSpec {
        crossovers: vec![CrossoverKind::Csrx],
        ..small_spec(1)
    })
    .unwrap();
    let warnings = emit_convergence_plot("eil51", &single.operators, 0.95, &path).unwrap();
    assert_eq!(warnings.len(), 1);
    let svg = fs::read_to_string(&path).unwrap();
    assert_eq!(
        (
            svg.matches("<polygon").count(),
            svg.matches("<polyline").count()
        ),
        (0, 1)
    );
}

#[test]
fn identical_traces_have_zero_width_band() {
    let result = run_experiment(&small_spec(1)).unwrap();
    let mut ops = result.operators.clone();
    for op in &mut ops {
        op.runs.push(op.runs[0].clone());
    }
    for curve in convergence_curves(&ops, 0.95) {
        assert!(curve.half_width.unwrap().iter().all(|&h| h == 0.0));
    }
}

#[test]
fn bad_inputs() {
    let spec = ExperimentSpec {
        instance: common::data("missing.tsp"),
        ..small_spec(1)
    };
    assert_eq!(run_experiment(&spec).unwrap_err().exit_code(), 2);
    let spec = ExperimentSpec {
        repetitions: 0,
        ..small_spec(1)
    };
    assert_eq!(run_experiment(&spec).unwrap_err().exit_code(), 1);
}

proptest! {
    #[test]
    fn aggregates_ignore_run_order(
        values in prop::collection::vec(100.0..1000.0f64, 1..20).prop_flat_map(|v| {
            let n = v.len();
            (Just(v.clone()), Just(v).prop_shuffle(), 0..n)
        })
    ) {
        let (original, shuffled, _) = values;
        prop_assert_eq!(mean(&original), mean(&shuffled));
        prop_assert_eq!(sample_std(&original), sample_std(&shuffled));
    }
}
