use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sampling plan for sweeps over the open unit disk: concentric circles of
/// the given radii, each sampled at equally spaced angles in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiskGrid {
    radii: Vec<f64>,
    angles_per_circle: usize,
}

impl DiskGrid {
    pub const DEFAULT_RADII: [f64; 4] = [0.5, 0.9, 0.99, 0.999];
    pub const DEFAULT_ANGLES: usize = 4096;

    pub fn new(radii: Vec<f64>, angles_per_circle: usize) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::InvalidGrid("no radii".into()));
        }
        if radii.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
            return Err(Error::InvalidGrid("radii must lie in (0, 1)".into()));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid("radii must be strictly ascending".into()));
        }
        if angles_per_circle == 0 {
            return Err(Error::InvalidGrid("need at least one angle per circle".into()));
        }
        Ok(Self { radii, angles_per_circle })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles_per_circle(&self) -> usize {
        self.angles_per_circle
    }

    pub fn max_radius(&self) -> f64 {
        *self.radii.last().expect("grid has radii")
    }

    pub fn angle(&self, k: usize) -> f64 {
        TAU * k as f64 / self.angles_per_circle as f64
    }

    /// Angular spacing of the samples.
    pub fn step(&self) -> f64 {
        TAU / self.angles_per_circle as f64
    }

    pub fn point(&self, circle: usize, k: usize) -> Complex64 {
        Complex64::from_polar(self.radii[circle], self.angle(k))
    }
}

impl Default for DiskGrid {
    fn default() -> Self {
        Self { radii: Self::DEFAULT_RADII.to_vec(), angles_per_circle: Self::DEFAULT_ANGLES }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let g = DiskGrid::default();
        assert_eq!(g.radii(), &[0.5, 0.9, 0.99, 0.999]);
        assert_eq!(g.angles_per_circle(), 4096);
        assert!(g.max_radius() < 1.0);
        assert_eq!(g.angle(0), 0.0);
        assert!(g.angle(4095) < TAU);
    }

    #[test]
    fn invalid_grids() {
        assert!(DiskGrid::new(vec![], 10).is_err());
        assert!(DiskGrid::new(vec![0.5, 1.0], 10).is_err());
        assert!(DiskGrid::new(vec![0.9, 0.5], 10).is_err());
        assert!(DiskGrid::new(vec![0.5], 0).is_err());
        assert!(DiskGrid::new(vec![0.0, 0.5], 10).is_err());
    }
}
