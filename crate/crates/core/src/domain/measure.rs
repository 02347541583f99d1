//! Probability measures as point-weight vectors.

use crate::domain::capacity::Capacity;
use crate::domain::ground::{GroundSet, Subset};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// Nonnegative point weights summing to exactly 1. On a finite discrete
/// space this is the whole of the probability measures; it doubles as a core
/// element for a capacity when it dominates it on every subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbMeasure {
    ground: GroundSet,
    weights: Vec<Rat>,
}

impl ProbMeasure {
    pub fn new(ground: GroundSet, weights: Vec<Rat>) -> Result<Self> {
        if weights.len() != ground.n() {
            return Err(Error::WrongLength {
                expected: ground.n(),
                found: weights.len(),
            });
        }
        for (point, w) in weights.iter().enumerate() {
            if w.is_negative() {
                return Err(Error::NegativeWeight {
                    point,
                    value: w.clone(),
                });
            }
        }
        let total: Rat = weights.iter().sum();
        if total != Rat::one() {
            return Err(Error::WeightsNotNormalized { total });
        }
        Ok(ProbMeasure { ground, weights })
    }

    pub fn uniform(ground: GroundSet) -> Self {
        let n = ground.n() as i64;
        let weights = vec![Rat::new(1, n); ground.n()];
        ProbMeasure { ground, weights }
    }

    pub fn point_mass(ground: GroundSet, point: usize) -> Result<Self> {
        if point >= ground.n() {
            return Err(Error::BadPoint {
                index: point,
                points: ground.n(),
            });
        }
        let mut weights = vec![Rat::zero(); ground.n()];
        weights[point] = Rat::one();
        Ok(ProbMeasure { ground, weights })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn weight(&self, point: usize) -> &Rat {
        &self.weights[point]
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// Exact measure of a subset: the sum of its point weights.
    pub fn measure_of(&self, s: Subset) -> Rat {
        s.points().map(|i| &self.weights[i]).sum()
    }

    /// The additive capacity with the same subset values.
    pub fn to_capacity(&self) -> Result<Capacity> {
        self.ground.ensure_dense()?;
        let values = self.ground.subsets().map(|s| self.measure_of(s)).collect();
        Capacity::new(self.ground.clone(), values)
    }
}
