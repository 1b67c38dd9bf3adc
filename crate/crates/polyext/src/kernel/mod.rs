//! Exact rational arithmetic, affine dimension, and the planar line
//! predicates every other module builds on. All values are immutable and all
//! operations are pure; nothing here needs synchronization.

pub mod linalg;
mod point;
mod rational;

pub use point::QPoint;
pub use rational::{ParseRationalError, Rational, ZeroDenominator};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("empty input")]
    EmptyInput,
    #[error("points have mixed ambient dimensions")]
    MixedDimensions,
    #[error("operation requires ambient dimension 2")]
    WrongDimension,
    #[error("the two points defining a line coincide")]
    DegenerateLine,
}

/// Intersection of two lines in the plane, each given by two distinct points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineIntersection2D {
    /// The lines meet in exactly one point.
    Point(QPoint),
    /// Parallel and disjoint.
    Parallel,
    /// The same line.
    Coincident,
}

/// Dimension of the affine hull of a nonempty point set (0 for a single
/// point), computed as the exact rank of the difference vectors.
pub fn affine_dimension(points: &[QPoint]) -> Result<usize, KernelError> {
    let first = points.first().ok_or(KernelError::EmptyInput)?;
    if points.iter().any(|p| p.dim() != first.dim()) {
        return Err(KernelError::MixedDimensions);
    }
    let dirs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.direction_from(first))
        .collect();
    Ok(linalg::rank(&dirs))
}

/// 2x2 determinant of `(b - a, c - a)`.
fn orient2d(a: &QPoint, b: &QPoint, c: &QPoint) -> Rational {
    let abx = b.coord(0) - a.coord(0);
    let aby = b.coord(1) - a.coord(1);
    let acx = c.coord(0) - a.coord(0);
    let acy = c.coord(1) - a.coord(1);
    &abx * &acy - &aby * &acx
}

/// True iff `a`, `b`, `c` lie on one line (repeated points count as collinear).
pub fn collinear_2d(a: &QPoint, b: &QPoint, c: &QPoint) -> Result<bool, KernelError> {
    if a.dim() != 2 || b.dim() != 2 || c.dim() != 2 {
        return Err(KernelError::WrongDimension);
    }
    Ok(orient2d(a, b, c).is_zero())
}

/// Intersects the lines `p1 p2` and `p3 p4`.
pub fn intersect_lines_2d(
    p1: &QPoint,
    p2: &QPoint,
    p3: &QPoint,
    p4: &QPoint,
) -> Result<LineIntersection2D, KernelError> {
    for p in [p1, p2, p3, p4] {
        if p.dim() != 2 {
            return Err(KernelError::WrongDimension);
        }
    }
    if p1 == p2 || p3 == p4 {
        return Err(KernelError::DegenerateLine);
    }
    let d1 = p2.direction_from(p1);
    let d2 = p4.direction_from(p3);
    let den = &d1[0] * &d2[1] - &d1[1] * &d2[0];
    if den.is_zero() {
        return Ok(if collinear_2d(p1, p2, p3)? {
            LineIntersection2D::Coincident
        } else {
            LineIntersection2D::Parallel
        });
    }
    let offset = p3.direction_from(p1);
    let t = (&offset[0] * &d2[1] - &offset[1] * &d2[0]) / den;
    let x = p1.coord(0) + &t * &d1[0];
    let y = p1.coord(1) + &t * &d1[1];
    Ok(LineIntersection2D::Point(QPoint::new(vec![x, y])))
}
