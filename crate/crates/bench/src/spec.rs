use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use symtour::{CrossoverKind, GaConfig};

use crate::error::BenchError;

/// A batch of seeded GA runs on one instance. Read from a flat TOML file;
/// every key can be overridden from the command line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentSpec {
    pub instance: PathBuf,
    pub crossovers: Vec<CrossoverKind>,
    pub repetitions: usize,
    pub base_seed: u64,
    pub population_size: usize,
    pub mutation_rate: f64,
    pub elitism_fraction: f64,
    pub max_generations: usize,
    /// Overrides the built-in optimum table for the relative error.
    pub known_optimum: Option<f64>,
    pub output_dir: PathBuf,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        let ga = GaConfig::default();
        ExperimentSpec {
            instance: PathBuf::new(),
            crossovers: CrossoverKind::ALL.to_vec(),
            repetitions: 10,
            base_seed: 0,
            population_size: ga.population_size,
            mutation_rate: ga.mutation_rate,
            elitism_fraction: ga.elitism_fraction,
            max_generations: ga.max_generations,
            known_optimum: None,
            output_dir: PathBuf::from("results"),
        }
    }
}

impl ExperimentSpec {
    pub fn from_toml_str(text: &str, origin: &Path) -> Result<Self, BenchError> {
        toml::from_str(text).map_err(|e| BenchError::SpecSyntax {
            path: origin.to_path_buf(),
            message: e.message().to_string(),
        })
    }

    /// Reads a spec file. Relative paths inside it are taken relative to the
    /// file's directory.
    pub fn load(path: &Path) -> Result<Self, BenchError> {
        let text = fs::read_to_string(path).map_err(|source| BenchError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        let mut spec = Self::from_toml_str(&text, path)?;
        let base = path.parent().unwrap_or(Path::new(""));
        spec.instance = base.join(&spec.instance);
        spec.output_dir = base.join(&spec.output_dir);
        Ok(spec)
    }

    pub fn seeds(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.repetitions as u64).map(|i| self.base_seed.wrapping_add(i))
    }

    pub fn ga_config(&self, crossover: CrossoverKind, seed: u64) -> GaConfig {
        GaConfig {
            population_size: self.population_size,
            mutation_rate: self.mutation_rate,
            elitism_fraction: self.elitism_fraction,
            max_generations: self.max_generations,
            crossover,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.instance.as_os_str().is_empty() {
            return Err(BenchError::InvalidSpec("no instance given".into()));
        }
        if self.repetitions == 0 {
            return Err(BenchError::InvalidSpec(
                "repetitions must be at least 1".into(),
            ));
        }
        if self.crossovers.is_empty() {
            return Err(BenchError::InvalidSpec(
                "no crossover operators given".into(),
            ));
        }
        if let Some(opt) = self.known_optimum {
            if !(opt > 0.0 && opt.is_finite()) {
                return Err(BenchError::InvalidSpec(format!(
                    "known optimum {opt} must be positive"
                )));
            }
        }
        self.ga_config(self.crossovers[0], self.base_seed)
            .validate()?;
        Ok(())
    }
}
