use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use symtour::tsplib::{read_instance, read_opt_tour, OptTour};
use symtour::{run, CrossoverKind, GaConfig, Instance, Tour};
use symtour_bench::experiment::load_instance;
use symtour_bench::{
    emit_convergence_plot, emit_results, run_experiment, BenchError, ExperimentSpec, OutputFormat,
};

#[derive(Parser)]
#[command(
    name = "symtour",
    version,
    about = "Genetic algorithms for the symmetric TSP"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the GA once and print the best tour.
    Solve(SolveArgs),
    /// Run a multi-seed experiment described by a TOML file.
    Bench(BenchArgs),
    /// Print the length of a tour file on an instance.
    Verify { instance: PathBuf, tour: PathBuf },
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, default_value = "csrx")]
    crossover: CrossoverKind,
    #[arg(long, default_value_t = 100)]
    pop: usize,
    #[arg(long, default_value_t = 0.05)]
    mutation: f64,
    #[arg(long, default_value_t = 0.10)]
    elitism: f64,
    #[arg(long, default_value_t = 1000)]
    generations: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the tour in TSPLIB format.
    #[arg(long)]
    tour_out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    spec: PathBuf,
    /// Output directory (overrides `output_dir`).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: OutputFormat,
    /// Also write convergence.svg.
    #[arg(long)]
    plot: bool,
    #[arg(long, default_value_t = 0.95)]
    confidence: f64,
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Comma-separated operator names.
    #[arg(long, value_delimiter = ',')]
    crossovers: Option<Vec<CrossoverKind>>,
    #[arg(long)]
    repetitions: Option<usize>,
    #[arg(long)]
    base_seed: Option<u64>,
    #[arg(long)]
    pop: Option<usize>,
    #[arg(long)]
    mutation: Option<f64>,
    #[arg(long)]
    elitism: Option<f64>,
    #[arg(long)]
    generations: Option<usize>,
    #[arg(long)]
    known_optimum: Option<f64>,
}

fn load(path: &Path) -> Result<Instance, BenchError> {
    let spec = ExperimentSpec {
        instance: path.to_path_buf(),
        ..ExperimentSpec::default()
    };
    load_instance(&spec)
}

fn solve(args: SolveArgs) -> Result<(), BenchError> {
    let instance = load(&args.instance)?;
    let config = GaConfig {
        population_size: args.pop,
        mutation_rate: args.mutation,
        elitism_fraction: args.elitism,
        max_generations: args.generations,
        crossover: args.crossover,
        seed: args.seed,
    };
    let record = run(&instance, &config)?;
    println!("instance: {}", instance.name());
    println!("crossover: {}", config.crossover);
    println!("seed: {}", config.seed);
    println!("best length: {}", record.final_best_length);
    if let Some(opt) = instance.known_opt() {
        println!(
            "relative error: {:.4}",
            (record.final_best_length - opt) / opt
        );
    }
    let ids: Vec<String> = record
        .final_best
        .as_slice()
        .iter()
        .map(|c| (c + 1).to_string())
        .collect();
    println!("tour: {}", ids.join(" "));
    if let Some(path) = args.tour_out {
        let file = OptTour {
            instance_name: instance.name().to_string(),
            order: record.final_best.into_vec(),
        };
        fs::write(&path, file.to_tsplib_string())
            .map_err(|source| BenchError::Write { path, source })?;
    }
    Ok(())
}

fn bench(args: BenchArgs) -> Result<(), BenchError> {
    let mut spec = ExperimentSpec::load(&args.spec)?;
    if let Some(v) = args.instance {
        spec.instance = v;
    }
    if let Some(v) = args.crossovers {
        spec.crossovers = v;
    }
    if let Some(v) = args.repetitions {
        spec.repetitions = v;
    }
    if let Some(v) = args.base_seed {
        spec.base_seed = v;
    }
    if let Some(v) = args.pop {
        spec.population_size = v;
    }
    if let Some(v) = args.mutation {
        spec.mutation_rate = v;
    }
    if let Some(v) = args.elitism {
        spec.elitism_fraction = v;
    }
    if let Some(v) = args.generations {
        spec.max_generations = v;
    }
    if let Some(v) = args.known_optimum {
        spec.known_optimum = Some(v);
    }
    if let Some(v) = args.out {
        spec.output_dir = v;
    }
    if !(args.confidence > 0.0 && args.confidence < 1.0) {
        return Err(BenchError::InvalidSpec(format!(
            "confidence {} must lie strictly between 0 and 1",
            args.confidence
        )));
    }

    let result = run_experiment(&spec)?;
    let written = emit_results(&result, args.format, &spec.output_dir)?;
    println!(
        "{:<10} {:>5} {:>12} {:>10} {:>10}",
        "crossover", "runs", "mean", "std", "delta_rel"
    );
    for a in &result.aggregates {
        let rel = a
            .relative_error
            .map_or("-".to_string(), |r| format!("{:.2}%", r * 100.0));
        println!(
            "{:<10} {:>5} {:>12.2} {:>10.2} {:>10}",
            a.crossover.to_string(),
            a.runs,
            a.mean_length,
            a.std_length,
            rel
        );
    }
    println!("summary: {}", written[0].display());
    if args.plot {
        let path = spec.output_dir.join("convergence.svg");
        for warning in
            emit_convergence_plot(&result.instance, &result.operators, args.confidence, &path)?
        {
            eprintln!("warning: {warning}");
        }
        println!("plot: {}", path.display());
    }
    Ok(())
}

fn verify(instance: PathBuf, tour: PathBuf) -> Result<(), BenchError> {
    let raw = read_instance(&instance).map_err(|source| BenchError::Tsplib {
        path: instance.clone(),
        source,
    })?;
    let inst = Instance::from_raw(&raw)?;
    let file = read_opt_tour(&tour).map_err(|source| BenchError::Tsplib { path: tour, source })?;
    let tour = Tour::new(file.order)?;
    inst.check_tour(&tour)?;
    let length = inst.tour_length(&tour);
    println!("length: {length}");
    if let Some(opt) = inst.known_opt() {
        println!("relative error: {}", (length - opt) / opt);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match cli.command {
        Command::Solve(args) => solve(args),
        Command::Bench(args) => bench(args),
        Command::Verify { instance, tour } => verify(instance, tour),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
