//! Tours as permutations, and the symmetry group acting on them.
//!
//! A tour and any circular shift or reversal of it describe the same closed
//! path. [`canonicalize`] picks one representative per class: city 0 first,
//! and the smaller of its two neighbours second.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::TourError;

/// A permutation of `0..n` read as a closed tour.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Tour(Vec<usize>);

impl Tour {
    /// Validates that `order` is a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self, TourError> {
        let n = order.len();
        if n < 3 {
            return Err(TourError::TooFewCities(n));
        }
        if !is_permutation(&order) {
            return Err(TourError::NotAPermutation(n));
        }
        Ok(Tour(order))
    }

    /// The tour `0, 1, ..., n-1`.
    pub fn identity(n: usize) -> Result<Self, TourError> {
        Tour::new((0..n).collect())
    }

    /// Callers guarantee the permutation invariant.
    pub(crate) fn from_vec_unchecked(order: Vec<usize>) -> Self {
        debug_assert!(is_permutation(&order), "not a permutation: {order:?}");
        Tour(order)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `pos[city]` is the index of `city` in the tour.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &c) in self.0.iter().enumerate() {
            pos[c] = i;
        }
        pos
    }
}

impl TryFrom<Vec<usize>> for Tour {
    type Error = TourError;

    fn try_from(order: Vec<usize>) -> Result<Self, Self::Error> {
        Tour::new(order)
    }
}

impl From<Tour> for Vec<usize> {
    fn from(tour: Tour) -> Self {
        tour.0
    }
}

impl AsRef<[usize]> for Tour {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Tour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

pub fn is_permutation(order: &[usize]) -> bool {
    let n = order.len();
    let mut seen = vec![false; n];
    for &c in order {
        if c >= n || std::mem::replace(&mut seen[c], true) {
            return false;
        }
    }
    true
}

/// Unique representative of a tour's class under shifts and reversal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTour(Tour);

impl CanonicalTour {
    pub fn as_tour(&self) -> &Tour {
        &self.0
    }

    pub fn into_tour(self) -> Tour {
        self.0
    }

    pub fn as_slice(&self) -> &[usize] {
        self.0.as_slice()
    }
}

/// `result[i] = tour[(i + k) mod n]`.
pub fn circular_shift(tour: &Tour, k: usize) -> Tour {
    let mut order = tour.0.clone();
    let n = order.len();
    order.rotate_left(k % n);
    Tour(order)
}

/// `result[i] = tour[n - 1 - i]`.
pub fn reverse(tour: &Tour) -> Tour {
    let mut order = tour.0.clone();
    order.reverse();
    Tour(order)
}

pub fn canonicalize(tour: &Tour) -> CanonicalTour {
    let n = tour.len();
    let start = tour
        .0
        .iter()
        .position(|&c| c == 0)
        .expect("a permutation contains city 0");
    let mut order = Vec::with_capacity(n);
    order.extend_from_slice(&tour.0[start..]);
    order.extend_from_slice(&tour.0[..start]);
    if order[1] > order[n - 1] {
        // Keep city 0 in front and walk the cycle the other way.
        order[1..].reverse();
    }
    CanonicalTour(Tour(order))
}

/// Whether `a` and `b` are the same closed tour up to shift and reversal.
pub fn equivalent(a: &Tour, b: &Tour) -> bool {
    a.len() == b.len() && canonicalize(a) == canonicalize(b)
}

/// Uniformly random tour over `n` cities (Fisher-Yates shuffle).
pub fn random_tour<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Tour, TourError> {
    if n < 3 {
        return Err(TourError::TooFewCities(n));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    Ok(Tour(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(v: &[usize]) -> Tour {
        Tour::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Tour::new(vec![0, 1]).is_err());
        assert_eq!(Tour::new(vec![0, 1, 1]), Err(TourError::NotAPermutation(3)));
        assert_eq!(Tour::new(vec![0, 1, 3]), Err(TourError::NotAPermutation(3)));
    }

    #[test]
    fn shift_examples() {
        let tour = t(&[0, 1, 2, 3, 4]);
        assert_eq!(circular_shift(&tour, 2), t(&[2, 3, 4, 0, 1]));
        assert_eq!(circular_shift(&tour, 0), tour);
        for k in 0..5 {
            assert_eq!(circular_shift(&circular_shift(&tour, k), (5 - k) % 5), tour);
        }
    }

    #[test]
    fn reverse_examples() {
        let tour = t(&[0, 1, 2, 3]);
        assert_eq!(reverse(&tour), t(&[3, 2, 1, 0]));
        assert_eq!(reverse(&reverse(&tour)), tour);
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonicalize(&t(&[2, 3, 4, 0, 1])).as_slice(),
            &[0, 1, 2, 3, 4]
        );
        assert_eq!(
            canonicalize(&t(&[0, 4, 3, 2, 1])).as_slice(),
            &[0, 1, 2, 3, 4]
        );
        assert_eq!(
            canonicalize(&t(&[3, 0, 4, 1, 2])).as_slice(),
            &[0, 3, 2, 1, 4]
        );
    }

    #[test]
    fn not_equivalent_to_swapped_neighbours() {
        assert!(!equivalent(&t(&[0, 1, 2, 3, 4]), &t(&[0, 2, 1, 3, 4])));
    }

    #[test]
    fn random_tour_is_deterministic_per_seed() {
        let a = random_tour(3, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = random_tour(3, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert!(is_permutation(a.as_slice()));
        assert_eq!(
            random_tour(2, &mut ChaCha8Rng::seed_from_u64(7)),
            Err(TourError::TooFewCities(2))
        );
    }

    #[test]
    fn display() {
        assert_eq!(t(&[2, 0, 1]).to_string(), "2 0 1");
    }
}
