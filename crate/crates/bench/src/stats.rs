//! Sample statistics over run results.

use statrs::distribution::{ContinuousCDF, StudentsT};

/// Sum in ascending order, so the result does not depend on input order.
fn ordered_sum(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.iter().sum()
}

pub fn mean(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "mean of no values");
    ordered_sum(values) / values.len() as f64
}

/// Sample standard deviation (n - 1 denominator); 0 for a single value.
pub fn sample_std(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let m = mean(values);
    let squares: Vec<f64> = values.iter().map(|v| (v - m).powi(2)).collect();
    (ordered_sum(&squares) / (values.len() - 1) as f64).sqrt()
}

/// Half-width of the two-sided Student-t confidence interval for the mean,
/// or `None` with fewer than two values.
pub fn t_half_width(values: &[f64], confidence: f64) -> Option<f64> {
    let n = values.len();
    if n < 2 {
        return None;
    }
    let t = StudentsT::new(0.0, 1.0, (n - 1) as f64)
        .expect("positive degrees of freedom")
        .inverse_cdf(0.5 + confidence / 2.0);
    Some(t * sample_std(values) / (n as f64).sqrt())
}
