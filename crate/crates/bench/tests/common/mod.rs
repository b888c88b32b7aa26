#![allow(dead_code)]

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symtour::{Instance, Metric};

pub fn data(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/tsplib")
        .join(file)
}

pub fn random_instance(n: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| (rng.random::<f64>() * 100.0, rng.random::<f64>() * 100.0))
        .collect();
    Instance::new(format!("rand{n}_{seed}"), points, Metric::ExactEuclidean).unwrap()
}

/// Held-Karp dynamic program: shortest closed tour, computed from the raw
/// coordinates rather than the instance's distance table.
pub fn held_karp(inst: &Instance) -> f64 {
    let pts = inst.points();
    let n = pts.len();
    let d = |a: usize, b: usize| inst.metric().distance(pts[a], pts[b]);
    let full = 1usize << (n - 1);
    // best[set][j]: shortest path from city 0 through `set` (cities 1..n as
    // bits 0..n-1) ending at city j + 1
    let mut best = vec![vec![f64::INFINITY; n - 1]; full];
    for j in 0..n - 1 {
        best[1 << j][j] = d(0, j + 1);
    }
    for set in 1..full {
        for j in 0..n - 1 {
            if set & (1 << j) == 0 || !best[set][j].is_finite() {
                continue;
            }
            for k in 0..n - 1 {
                if set & (1 << k) == 0 {
                    let next = set | (1 << k);
                    let cand = best[set][j] + d(j + 1, k + 1);
                    if cand < best[next][k] {
                        best[next][k] = cand;
                    }
                }
            }
        }
    }
    (0..n - 1)
        .map(|j| best[full - 1][j] + d(j + 1, 0))
        .fold(f64::INFINITY, f64::min)
}
