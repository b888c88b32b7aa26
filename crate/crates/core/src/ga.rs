//! Generational GA with elitism and length-shifted roulette selection.
//!
//! Every run owns one [`GaRng`] seeded from [`GaConfig::seed`]. Per offspring
//! the generator is consumed in a fixed order: two parent draws, the crossover
//! cut points, the mutation coin, and (if the coin hits) the two inversion
//! indices. Runs are therefore a pure function of instance and config.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::ConfigError;
use crate::instance::Instance;
use crate::operators::{crossover, mutate, CrossoverKind};
use crate::tour::{random_tour, Tour};

/// The run generator: ChaCha with 8 rounds, seeded through
/// `SeedableRng::seed_from_u64`. Its stream is identical on every platform.
pub type GaRng = ChaCha8Rng;

/// Keeps the worst individual selectable when all weights would vanish.
const SELECTION_DELTA: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaConfig {
    pub population_size: usize,
    pub mutation_rate: f64,
    pub elitism_fraction: f64,
    pub max_generations: usize,
    pub crossover: CrossoverKind,
    pub seed: u64,
}

impl Default for GaConfig {
    fn default() -> Self {
        GaConfig {
            population_size: 100,
            mutation_rate: 0.05,
            elitism_fraction: 0.10,
            max_generations: 1000,
            crossover: CrossoverKind::Csrx,
            seed: 0,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.population_size < 2 {
            return Err(ConfigError::PopulationTooSmall(self.population_size));
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return Err(ConfigError::MutationRate(self.mutation_rate));
        }
        if !(0.0..=1.0).contains(&self.elitism_fraction) {
            return Err(ConfigError::ElitismFraction(self.elitism_fraction));
        }
        let elites = self.elite_count();
        if elites >= self.population_size {
            return Err(ConfigError::TooManyElites {
                elites,
                population: self.population_size,
            });
        }
        Ok(())
    }

    /// `floor(elitism_fraction * population_size)`.
    pub fn elite_count(&self) -> usize {
        // 0.29 * 100 evaluates to 28.999999999999996
        (self.elitism_fraction * self.population_size as f64 + 1e-9).floor() as usize
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    individuals: Vec<Tour>,
    lengths: Vec<f64>,
    best_ever: Tour,
    best_ever_length: f64,
}

impl Population {
    /// Wraps existing tours, computing their lengths. `tours` must be non-empty.
    pub fn from_tours(instance: &Instance, tours: Vec<Tour>) -> Self {
        assert!(!tours.is_empty(), "empty population");
        let lengths: Vec<f64> = tours.iter().map(|t| instance.tour_length(t)).collect();
        let best = argmin(&lengths);
        Population {
            best_ever: tours[best].clone(),
            best_ever_length: lengths[best],
            individuals: tours,
            lengths,
        }
    }

    pub fn individuals(&self) -> &[Tour] {
        &self.individuals
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.individuals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.individuals.is_empty()
    }

    /// Best tour seen in any generation so far.
    pub fn best_ever(&self) -> (&Tour, f64) {
        (&self.best_ever, self.best_ever_length)
    }

    /// Shortest length in the current generation.
    pub fn current_best_length(&self) -> f64 {
        self.lengths[argmin(&self.lengths)]
    }

    pub fn mean_length(&self) -> f64 {
        self.lengths.iter().sum::<f64>() / self.lengths.len() as f64
    }

    /// Indices ordered by length, ties by lower index.
    fn ranking(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.lengths[a].total_cmp(&self.lengths[b]));
        idx
    }
}

/// First index of the smallest value.
fn argmin(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v < values[best] {
            best = i;
        }
    }
    best
}

/// Roulette over `L_max - l_i + eps`, with `eps = (L_max - L_min) / size + delta`.
#[derive(Debug, Clone)]
pub struct ParentSelector {
    dist: WeightedIndex<f64>,
}

impl ParentSelector {
    pub fn new(population: &Population) -> Self {
        ParentSelector {
            dist: WeightedIndex::new(selection_weights(population.lengths()))
                .expect("weights are finite and positive"),
        }
    }

    pub fn pick<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.dist.sample(rng)
    }
}

pub fn selection_weights(lengths: &[f64]) -> Vec<f64> {
    let (lo, hi) = lengths
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &l| {
            (lo.min(l), hi.max(l))
        });
    let eps = (hi - lo) / lengths.len() as f64 + SELECTION_DELTA;
    lengths.iter().map(|&l| hi - l + eps).collect()
}

/// One roulette draw. [`step`] builds a [`ParentSelector`] once per generation
/// instead.
pub fn select_parent<'a, R: Rng + ?Sized>(population: &'a Population, rng: &mut R) -> &'a Tour {
    let i = ParentSelector::new(population).pick(rng);
    &population.individuals[i]
}

pub fn init_population<R: Rng + ?Sized>(
    instance: &Instance,
    config: &GaConfig,
    rng: &mut R,
) -> Result<Population, ConfigError> {
    config.validate()?;
    let tours = (0..config.population_size)
        .map(|_| random_tour(instance.len(), rng).expect("instances have at least 3 cities"))
        .collect();
    Ok(Population::from_tours(instance, tours))
}

/// Produces the next generation: elites copied unchanged, the rest bred by
/// selection, crossover and (with probability `mutation_rate`) inversion.
pub fn step<R: Rng + ?Sized>(
    instance: &Instance,
    population: &Population,
    config: &GaConfig,
    rng: &mut R,
) -> Population {
    let size = config.population_size;
    let elites = config.elite_count();
    let selector = ParentSelector::new(population);

    let mut individuals = Vec::with_capacity(size);
    let mut lengths = Vec::with_capacity(size);
    for i in population.ranking().into_iter().take(elites) {
        individuals.push(population.individuals[i].clone());
        lengths.push(population.lengths[i]);
    }

    while individuals.len() < size {
        let p1 = &population.individuals[selector.pick(rng)];
        let p2 = &population.individuals[selector.pick(rng)];
        let mut child = crossover(
            config.crossover,
            instance,
            p1,
            p2,
            &population.best_ever,
            rng,
        );
        if rng.random::<f64>() < config.mutation_rate {
            child = mutate(&child, rng);
        }
        lengths.push(instance.tour_length(&child));
        individuals.push(child);
    }

    let mut best_ever = population.best_ever.clone();
    let mut best_ever_length = population.best_ever_length;
    let i = argmin(&lengths);
    if lengths[i] < best_ever_length {
        best_ever = individuals[i].clone();
        best_ever_length = lengths[i];
    }
    Population {
        individuals,
        lengths,
        best_ever,
        best_ever_length,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenerationStats {
    pub generation: usize,
    /// Best length found up to and including this generation.
    pub best_length: f64,
    pub mean_length: f64,
}

impl GenerationStats {
    fn of(generation: usize, population: &Population) -> Self {
        GenerationStats {
            generation,
            best_length: population.best_ever_length,
            mean_length: population.mean_length(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub per_generation: Vec<GenerationStats>,
    pub final_best: Tour,
    pub final_best_length: f64,
    pub seed: u64,
}

/// Runs `max_generations` steps from a random population. Generation 0 in
/// the record is the initial population.
pub fn run(instance: &Instance, config: &GaConfig) -> Result<RunRecord, ConfigError> {
    let mut rng = GaRng::seed_from_u64(config.seed);
    let mut population = init_population(instance, config, &mut rng)?;
    let mut per_generation = Vec::with_capacity(config.max_generations + 1);
    per_generation.push(GenerationStats::of(0, &population));
    for generation in 1..=config.max_generations {
        population = step(instance, &population, config, &mut rng);
        per_generation.push(GenerationStats::of(generation, &population));
    }
    let (best, best_length) = population.best_ever();
    Ok(RunRecord {
        per_generation,
        final_best: best.clone(),
        final_best_length: best_length,
        seed: config.seed,
    })
}
