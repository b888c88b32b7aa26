use rand::Rng;

use crate::tour::Tour;

/// Reverses `tour[i..=j]`.
pub fn inversion_mutation(tour: &Tour, i: usize, j: usize) -> Tour {
    assert!(
        i <= j && j < tour.len(),
        "invalid inversion range {i}..={j}"
    );
    let mut order = tour.as_slice().to_vec();
    order[i..=j].reverse();
    Tour::from_vec_unchecked(order)
}

/// Inversion mutation between two uniformly drawn indices.
pub fn mutate<R: Rng + ?Sized>(tour: &Tour, rng: &mut R) -> Tour {
    let n = tour.len();
    let a = rng.random_range(0..n);
    let b = rng.random_range(0..n);
    inversion_mutation(tour, a.min(b), a.max(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tour::reverse;

    #[test]
    fn examples() {
        let tour = Tour::identity(5).unwrap();
        assert_eq!(inversion_mutation(&tour, 2, 2), tour);
        assert_eq!(inversion_mutation(&tour, 1, 3).as_slice(), &[0, 3, 2, 1, 4]);
        assert_eq!(inversion_mutation(&tour, 0, 4), reverse(&tour));
    }
}
