//! Shape statistics for a sample of real numbers.

use serde::Serialize;

/// Sample moments with standard errors.
///
/// The variance error uses the sample fourth central moment; the skewness
/// and kurtosis errors are the usual normal-theory expressions, which is
/// what the normality checks compare against.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RealSummary {
    pub count: usize,
    pub mean: f64,
    pub mean_se: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    pub variance_se: f64,
    pub skewness: f64,
    pub skewness_se: f64,
    /// Non-excess kurtosis `m4 / m2²` (3 for a normal law).
    pub kurtosis: f64,
    pub kurtosis_se: f64,
}

impl RealSummary {
    /// Panics on fewer than four samples.
    pub fn from_samples(xs: &[f64]) -> Self {
        let count = xs.len();
        assert!(count >= 4, "need at least four samples, got {count}");
        let n = count as f64;
        let mean = super::pairwise_sum(xs) / n;
        let central = |p: i32| super::pairwise_sum(&xs.iter().map(|x| (x - mean).powi(p)).collect::<Vec<_>>()) / n;
        let (m2, m3, m4) = (central(2), central(3), central(4));

        let variance = m2 * n / (n - 1.0);
        RealSummary {
            count,
            mean,
            mean_se: (variance / n).sqrt(),
            variance,
            variance_se: ((m4 - m2 * m2).max(0.0) / n).sqrt(),
            skewness: m3 / m2.powf(1.5),
            skewness_se: (6.0 * n * (n - 1.0) / ((n - 2.0) * (n + 1.0) * (n + 3.0))).sqrt(),
            kurtosis: m4 / (m2 * m2),
            kurtosis_se: (24.0 * n * (n - 1.0) * (n - 1.0) / ((n - 3.0) * (n - 2.0) * (n + 3.0) * (n + 5.0))).sqrt(),
        }
    }
}
