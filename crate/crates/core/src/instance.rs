use crate::error::TourError;
use crate::metric::Metric;
use crate::tour::Tour;
use crate::tsplib::RawInstance;

/// Optimal tour lengths of the bundled TSPLIB instances, keyed by `NAME`.
pub fn known_optimum(name: &str) -> Option<f64> {
    match name {
        "att48" => Some(10628.0),
        "eil51" => Some(426.0),
        "st70" => Some(675.0),
        _ => None,
    }
}

/// A symmetric TSP instance with a dense, precomputed distance table.
///
/// Immutable after construction; share it by reference across workers.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    name: String,
    points: Vec<(f64, f64)>,
    metric: Metric,
    known_opt: Option<f64>,
    dist: Vec<f64>,
}

impl Instance {
    pub fn new(
        name: impl Into<String>,
        points: Vec<(f64, f64)>,
        metric: Metric,
    ) -> Result<Self, TourError> {
        let n = points.len();
        if n < 3 {
            return Err(TourError::TooFewCities(n));
        }
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = metric.distance(points[i], points[j]);
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        Ok(Instance {
            name: name.into(),
            points,
            metric,
            known_opt: None,
            dist,
        })
    }

    /// Builds an instance from parsed TSPLIB data. The known optimum is filled
    /// in for the bundled benchmark instances.
    pub fn from_raw(raw: &RawInstance) -> Result<Self, TourError> {
        let inst = Instance::new(
            raw.name.clone(),
            raw.coords.clone(),
            raw.edge_weight_type.into(),
        )?;
        Ok(match known_optimum(&raw.name) {
            Some(opt) => inst.with_known_opt(opt),
            None => inst,
        })
    }

    pub fn with_known_opt(mut self, opt: f64) -> Self {
        self.known_opt = Some(opt);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn known_opt(&self) -> Option<f64> {
        self.known_opt
    }

    #[inline]
    pub fn dist(&self, a: usize, b: usize) -> f64 {
        self.dist[a * self.points.len() + b]
    }

    /// Closed-tour length including the wrap-around edge.
    pub fn tour_length(&self, tour: &Tour) -> f64 {
        self.cycle_length(tour.as_slice())
    }

    /// Fitness is the negated tour length.
    pub fn fitness(&self, tour: &Tour) -> f64 {
        -self.tour_length(tour)
    }

    /// Length of the closed cycle through `order`, which need not be validated.
    pub(crate) fn cycle_length(&self, order: &[usize]) -> f64 {
        let n = order.len();
        let mut total = self.dist(order[n - 1], order[0]);
        for w in order.windows(2) {
            total += self.dist(w[0], w[1]);
        }
        total
    }

    /// Checks that `tour` has this instance's size.
    pub fn check_tour(&self, tour: &Tour) -> Result<(), TourError> {
        if tour.len() == self.len() {
            Ok(())
        } else {
            Err(TourError::SizeMismatch {
                tour: tour.len(),
                instance: self.len(),
            })
        }
    }
}

/// Free-function form of [`Instance::tour_length`].
pub fn tour_length(instance: &Instance, tour: &Tour) -> f64 {
    instance.tour_length(tour)
}

/// Free-function form of [`Instance::fitness`].
pub fn fitness(instance: &Instance, tour: &Tour) -> f64 {
    instance.fitness(tour)
}
