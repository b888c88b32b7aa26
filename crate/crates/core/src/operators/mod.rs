//! Crossover and mutation operators over [`Tour`]s.
//!
//! Each operator has a deterministic form taking its cut points explicitly and
//! is driven at random through [`crossover`] and [`mutate`].

mod crossover;
mod mutation;

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::ConfigError;
use crate::instance::Instance;
use crate::tour::Tour;

pub use crossover::{
    box_crossover, csrx_crossover, csx_crossover, one_point_crossover, ox_crossover, rx_crossover,
};
pub use mutation::{inversion_mutation, mutate};

/// Index of the last city kept from the first parent, `0 <= s < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitIndex(usize);

impl SplitIndex {
    pub fn new(s: usize, n: usize) -> Option<Self> {
        (s < n).then_some(SplitIndex(s))
    }

    #[cfg(test)]
    pub(crate) fn new_unchecked(s: usize) -> Self {
        SplitIndex(s)
    }

    /// Uniform over `0..n`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        SplitIndex(rng.random_range(0..n))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// Which reference individual orders a BOX segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoxLabel {
    P1,
    P2,
    Best,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossoverKind {
    #[serde(rename = "onepoint")]
    OnePoint,
    Ox,
    Box,
    Csx,
    Rx,
    Csrx,
}

impl CrossoverKind {
    pub const ALL: [CrossoverKind; 6] = [
        CrossoverKind::OnePoint,
        CrossoverKind::Ox,
        CrossoverKind::Box,
        CrossoverKind::Csx,
        CrossoverKind::Rx,
        CrossoverKind::Csrx,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CrossoverKind::OnePoint => "onepoint",
            CrossoverKind::Ox => "ox",
            CrossoverKind::Box => "box",
            CrossoverKind::Csx => "csx",
            CrossoverKind::Rx => "rx",
            CrossoverKind::Csrx => "csrx",
        }
    }
}

impl fmt::Display for CrossoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CrossoverKind {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "onepoint" | "1p" => Ok(CrossoverKind::OnePoint),
            "ox" => Ok(CrossoverKind::Ox),
            "box" => Ok(CrossoverKind::Box),
            "csx" => Ok(CrossoverKind::Csx),
            "rx" => Ok(CrossoverKind::Rx),
            "csrx" => Ok(CrossoverKind::Csrx),
            _ => Err(ConfigError::UnknownCrossover(s.to_string())),
        }
    }
}

/// Draws BOX cut points and labels: a cut count uniform in
/// `1..=min(n - 1, max_splits)`, that many distinct cuts in `1..n`, and one
/// i.i.d. uniform label per segment. The GA passes `max_splits = n - 1`.
pub fn random_box_cuts<R: Rng + ?Sized>(
    n: usize,
    max_splits: usize,
    rng: &mut R,
) -> (Vec<usize>, Vec<BoxLabel>) {
    assert!(n >= 2 && max_splits >= 1, "BOX needs at least one cut");
    let count = rng.random_range(1..=(n - 1).min(max_splits));
    let mut splits: Vec<usize> = index::sample(rng, n - 1, count)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    splits.sort_unstable();
    let labels = (0..=count)
        .map(|_| match rng.random_range(0..3) {
            0 => BoxLabel::P1,
            1 => BoxLabel::P2,
            _ => BoxLabel::Best,
        })
        .collect();
    (splits, labels)
}

/// Applies `kind` with freshly drawn cut points. `best` is only read by BOX.
pub fn crossover<R: Rng + ?Sized>(
    kind: CrossoverKind,
    instance: &Instance,
    p1: &Tour,
    p2: &Tour,
    best: &Tour,
    rng: &mut R,
) -> Tour {
    let n = p1.len();
    match kind {
        CrossoverKind::OnePoint => one_point_crossover(p1, p2, SplitIndex::random(n, rng)),
        CrossoverKind::Csx => csx_crossover(p1, p2, SplitIndex::random(n, rng)),
        CrossoverKind::Rx => rx_crossover(instance, p1, p2, SplitIndex::random(n, rng)),
        CrossoverKind::Csrx => csrx_crossover(instance, p1, p2, SplitIndex::random(n, rng)),
        CrossoverKind::Ox => {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            ox_crossover(p1, p2, a.min(b), a.max(b))
        }
        CrossoverKind::Box => {
            let (splits, labels) = random_box_cuts(n, n - 1, rng);
            box_crossover(p1, p2, best, &splits, &labels)
        }
    }
}
