//! Genetic-algorithm toolkit for the symmetric travelling salesperson problem.
//!
//! The crossover operators in [`operators`] include symmetry-aware variants
//! (`csx`, `rx`, `csrx`) that give the same offspring no matter which circular
//! shift or direction the second parent is written in, next to the classic
//! one-point, order (OX) and best-order (BOX) crossovers.

pub mod error;
pub mod ga;
pub mod instance;
pub mod metric;
pub mod operators;
pub mod tour;
pub mod tsplib;

pub use error::{ConfigError, TourError, TsplibError};
pub use ga::{run, GaConfig, GaRng, GenerationStats, Population, RunRecord};
pub use instance::{fitness, known_optimum, tour_length, Instance};
pub use metric::Metric;
pub use operators::{CrossoverKind, SplitIndex};
pub use tour::{
    canonicalize, circular_shift, equivalent, random_tour, reverse, CanonicalTour, Tour,
};
