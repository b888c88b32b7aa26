use serde::{Deserialize, Serialize};

use crate::tsplib::EdgeWeightType;

/// Distance function between two planar points. All variants are symmetric
/// and vanish on the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    /// Unrounded Euclidean distance.
    ExactEuclidean,
    /// Unrounded L1 distance.
    Manhattan,
    /// TSPLIB `EUC_2D`: Euclidean distance rounded to the nearest integer.
    TsplibEuc2d,
    /// TSPLIB `ATT` pseudo-Euclidean distance.
    TsplibAtt,
}

/// TSPLIB's `nint`: round half up, as `(int)(x + 0.5)` for non-negative x.
fn nint(x: f64) -> f64 {
    (x + 0.5).floor()
}

impl Metric {
    pub fn distance(self, a: (f64, f64), b: (f64, f64)) -> f64 {
        let dx = a.0 - b.0;
        let dy = a.1 - b.1;
        match self {
            Metric::ExactEuclidean => (dx * dx + dy * dy).sqrt(),
            Metric::Manhattan => dx.abs() + dy.abs(),
            Metric::TsplibEuc2d => nint((dx * dx + dy * dy).sqrt()),
            Metric::TsplibAtt => {
                let r = ((dx * dx + dy * dy) / 10.0).sqrt();
                let t = nint(r);
                if t < r {
                    t + 1.0
                } else {
                    t
                }
            }
        }
    }

    /// True when every distance is an integer, so tour lengths are exact sums.
    pub fn is_integral(self) -> bool {
        matches!(self, Metric::TsplibEuc2d | Metric::TsplibAtt)
    }
}

impl From<EdgeWeightType> for Metric {
    fn from(kind: EdgeWeightType) -> Self {
        match kind {
            EdgeWeightType::Euc2d => Metric::TsplibEuc2d,
            EdgeWeightType::Att => Metric::TsplibAtt,
            EdgeWeightType::ExactEuclidean => Metric::ExactEuclidean,
        }
    }
}
