use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;

/// A point with exact rational coordinates. Serializes as a bare array of
/// rationals; the ambient dimension is the coordinate count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPoint {
    coords: Vec<Rational>,
}

impl QPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        QPoint { coords }
    }

    /// Point from integer coordinates, handy in tests and fixtures.
    pub fn from_ints(coords: &[i64]) -> Self {
        QPoint::new(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    /// First `k` coordinates.
    pub fn truncate(&self, k: usize) -> QPoint {
        QPoint::new(self.coords[..k].to_vec())
    }

    /// Coordinates at the given positions, in the given order.
    pub fn select(&self, positions: &[usize]) -> QPoint {
        QPoint::new(positions.iter().map(|&i| self.coords[i].clone()).collect())
    }

    /// Componentwise difference `self - other` as a direction vector.
    pub fn direction_from(&self, other: &QPoint) -> Vec<Rational> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect()
    }
}

impl fmt::Debug for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
