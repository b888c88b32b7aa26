use symtour::{Instance, Tour};

use crate::error::BenchError;

/// Largest instance [`brute_force_optimum`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 10;

/// Exact optimum by enumerating one representative per equivalence class:
/// city 0 first and the second city smaller than the last.
pub fn brute_force_optimum(instance: &Instance) -> Result<(Tour, f64), BenchError> {
    let n = instance.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(BenchError::TooManyCities(n));
    }
    let mut search = Search {
        instance,
        path: vec![0],
        used: vec![false; n],
        best: Vec::new(),
        best_length: f64::INFINITY,
    };
    search.used[0] = true;
    search.extend(0.0);
    let tour = Tour::new(search.best)?;
    Ok((tour, search.best_length))
}

struct Search<'a> {
    instance: &'a Instance,
    path: Vec<usize>,
    used: Vec<bool>,
    best: Vec<usize>,
    best_length: f64,
}

impl Search<'_> {
    fn extend(&mut self, length: f64) {
        let n = self.used.len();
        let last = *self.path.last().expect("path starts at city 0");
        if self.path.len() == n {
            let total = length + self.instance.dist(last, 0);
            if self.path[1] < self.path[n - 1] && total < self.best_length {
                self.best_length = total;
                self.best = self.path.clone();
            }
            return;
        }
        for c in 1..n {
            if !self.used[c] {
                self.used[c] = true;
                self.path.push(c);
                self.extend(length + self.instance.dist(last, c));
                self.path.pop();
                self.used[c] = false;
            }
        }
    }
}
