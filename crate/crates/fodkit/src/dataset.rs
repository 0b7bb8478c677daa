//! Raw multi-sensor measurement tables and their summary statistics.

use crate::error::Error;
use crate::num::{mean, population_std, Real};
use crate::Result;

/// Repeated measurements per sensor: rows are measurement rounds, columns are
/// sensors. Units are whatever the instrument reports (percent concentration
/// in the bundled case study).
#[derive(Debug, Clone, PartialEq)]
pub struct SensorDataset<F: Real> {
    labels: Vec<String>,
    rows: Vec<Vec<F>>,
}

impl<F: Real> SensorDataset<F> {
    pub fn new(labels: Vec<String>, rows: Vec<Vec<F>>) -> Result<Self> {
        if labels.len() < 2 || rows.len() < 2 {
            return Err(Error::InsufficientData {
                sensors: labels.len(),
                readings: rows.len(),
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != labels.len() {
                return Err(Error::RaggedRow {
                    row: r + 1,
                    got: row.len(),
                    expected: labels.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if !v.is_finite() || v < F::zero() {
                    return Err(Error::InvalidReading {
                        row: r + 1,
                        col: c + 1,
                    });
                }
            }
        }
        Ok(Self { labels, rows })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn sensor_count(&self) -> usize {
        self.labels.len()
    }

    pub fn reading_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn column(&self, sensor: usize) -> Vec<F> {
        self.rows.iter().map(|r| r[sensor]).collect()
    }
}

/// Per-sensor means and deviations plus the dataset-level reference values.
#[derive(Debug, Clone, PartialEq)]
pub struct SensorStats<F: Real> {
    /// Column means; the per-sensor "true" values.
    pub per_sensor_mean: Vec<F>,
    /// Population standard deviation per column (divisor N).
    pub per_sensor_std: Vec<F>,
    /// Mean of the per-sensor means.
    pub true_value: F,
    /// Population deviation of the per-sensor means.
    pub system_std: F,
}

/// Column statistics in the population (divide-by-N) convention.
pub fn sensor_stats<F: Real>(dataset: &SensorDataset<F>) -> SensorStats<F> {
    let mut per_sensor_mean = Vec::with_capacity(dataset.sensor_count());
    let mut per_sensor_std = Vec::with_capacity(dataset.sensor_count());
    for s in 0..dataset.sensor_count() {
        let col = dataset.column(s);
        per_sensor_mean.push(mean(&col));
        per_sensor_std.push(population_std(&col));
    }
    let true_value = mean(&per_sensor_mean);
    let system_std = population_std(&per_sensor_mean);
    SensorStats {
        per_sensor_mean,
        per_sensor_std,
        true_value,
        system_std,
    }
}
