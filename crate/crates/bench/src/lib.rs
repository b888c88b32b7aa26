//! Multi-seed experiments over the symtour GA: aggregate statistics, result
//! files, convergence plots and an exact small-instance oracle.

pub mod error;
pub mod experiment;
pub mod oracle;
pub mod output;
pub mod plot;
pub mod spec;
pub mod stats;

pub use error::BenchError;
pub use experiment::{
    run_experiment, run_on_instance, AggregateResult, ExperimentResult, OperatorRuns,
};
pub use oracle::brute_force_optimum;
pub use output::{emit_results, OutputFormat};
pub use plot::{convergence_curves, emit_convergence_plot, Curve};
pub use spec::ExperimentSpec;
