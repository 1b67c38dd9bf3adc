//! Exact double description: extreme rays of `{ y : R y >= 0 }` over the
//! integers. One routine serves both conversion directions — facets of a hull
//! are the extreme rays of the polar cone of the lifted points, and vertex
//! enumeration is the ray computation of the homogenized inequality system.
//!
//! Rays are kept as primitive integer vectors. Insertion follows the caller's
//! row order and output is sorted, so results are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::kernel::{linalg, Rational};

pub type IntVec = Vec<BigInt>;

/// Divides out the gcd of all entries; the zero vector is left unchanged.
pub fn make_primitive(v: &mut IntVec) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g == BigInt::from(1) {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction (positive scale factor).
pub fn clear_denominators(v: &[Rational]) -> IntVec {
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut out: IntVec = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(&mut out);
    out
}

pub fn to_rationals(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from(x.clone())).collect()
}

/// Set of row indices a ray is tight on, as a packed bitset.
#[derive(Clone, PartialEq, Eq)]
struct TightSet {
    words: Vec<u64>,
}

impl TightSet {
    fn new(nbits: usize) -> Self {
        TightSet {
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &TightSet) -> TightSet {
        TightSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn is_subset_of(&self, other: &TightSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    coords: IntVec,
    tight: TightSet,
}

/// Extreme rays of the pointed cone `{ y in R^dim : row . y >= 0 }`.
///
/// Preconditions: every row has length `dim` and the stacked rows have rank
/// `dim` (which is what makes the cone pointed).
fn extreme_rays_pointed(rows: &[IntVec], dim: usize) -> Vec<IntVec> {
    assert!(dim > 0);
    let nrows = rows.len();

    // Greedy initial basis: the first `dim` rows that are linearly independent.
    let mut basis_idx: Vec<usize> = Vec::with_capacity(dim);
    let mut staged: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        staged.push(to_rationals(row));
        if linalg::rank(&staged) == staged.len() {
            basis_idx.push(i);
        } else {
            staged.pop();
        }
        if basis_idx.len() == dim {
            break;
        }
    }
    assert_eq!(basis_idx.len(), dim, "cone is not pointed");

    // Rays of the basis cone: solve M r_i = e_i and clear denominators. Each
    // M r_i then equals a positive multiple of e_i, so all constraints hold.
    let basis_rows: Vec<Vec<Rational>> =
        basis_idx.iter().map(|&i| to_rationals(&rows[i])).collect();
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut unit = vec![Rational::zero(); dim];
        unit[i] = Rational::one();
        let sol = linalg::solve_square(&basis_rows, &unit).expect("basis is invertible");
        rays.push(Ray {
            coords: clear_denominators(&sol),
            tight: TightSet::new(nrows),
        });
    }

    // Insertion order: basis rows first, then the rest in input order.
    let mut order = basis_idx.clone();
    for i in 0..nrows {
        if !basis_idx.contains(&i) {
            order.push(i);
        }
    }

    let mut processed: Vec<usize> = Vec::with_capacity(nrows);
    for &row_idx in &order {
        let row = &rows[row_idx];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();

        if values.iter().all(|v| !v.is_negative()) {
            for (ray, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    ray.tight.set(row_idx);
                }
            }
            processed.push(row_idx);
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        let mut fresh: Vec<IntVec> = Vec::new();
        for (pos, ray) in rays.iter().enumerate() {
            if values[pos].is_negative() {
                continue;
            }
            for (neg, other) in rays.iter().enumerate() {
                if !values[pos].is_positive() || !values[neg].is_negative() {
                    continue;
                }
                // Combinatorial adjacency: no third ray is tight on every row
                // the pair is jointly tight on.
                let common = ray.tight.intersection(&other.tight);
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, third)| k != pos && k != neg && common.is_subset_of(&third.tight));
                if blocked {
                    continue;
                }
                let mut combo: IntVec = ray
                    .coords
                    .iter()
                    .zip(&other.coords)
                    .map(|(a, b)| &values[pos] * b - &values[neg] * a)
                    .collect();
                make_primitive(&mut combo);
                fresh.push(combo);
            }
        }
        for (pos, ray) in rays.iter().enumerate() {
            if !values[pos].is_negative() {
                let mut kept = Ray {
                    coords: ray.coords.clone(),
                    tight: ray.tight.clone(),
                };
                if values[pos].is_zero() {
                    kept.tight.set(row_idx);
                }
                next.push(kept);
            }
        }
        processed.push(row_idx);
        fresh.sort();
        fresh.dedup();
        for coords in fresh {
            let mut tight = TightSet::new(nrows);
            for &j in &processed {
                if dot(&rows[j], &coords).is_zero() {
                    tight.set(j);
                }
            }
            next.push(Ray { coords, tight });
        }
        rays = next;
    }

    let mut out: Vec<IntVec> = rays.into_iter().map(|r| r.coords).collect();
    out.sort();
    out.dedup();
    debug_assert!(out
        .iter()
        .all(|r| rows.iter().all(|row| !dot(row, r).is_negative())));
    out
}

/// Extreme rays of `{ y : R y >= 0 }` for an arbitrary cone.
///
/// Returns `(lineality_basis, rays)`: the cone is the sum of the linear span
/// of the lineality basis and the pointed cone generated by the rays.
pub fn extreme_rays(rows: &[IntVec], dim: usize) -> (Vec<IntVec>, Vec<IntVec>) {
    if rows.is_empty() {
        let mut lineality = Vec::new();
        for i in 0..dim {
            let mut v = vec![BigInt::zero(); dim];
            v[i] = BigInt::from(1);
            lineality.push(v);
        }
        return (lineality, Vec::new());
    }
    let rat_rows: Vec<Vec<Rational>> = rows.iter().map(|r| to_rationals(r)).collect();
    let lineality: Vec<IntVec> = linalg::nullspace(&rat_rows, dim)
        .iter()
        .map(|v| clear_denominators(v))
        .collect();
    if lineality.is_empty() {
        return (Vec::new(), extreme_rays_pointed(rows, dim));
    }

    // Quotient out the lineality: work in the row space, where the cone is
    // pointed. Basis = RREF rows of the constraint matrix.
    let mut rref_rows = rat_rows.clone();
    linalg::rref(&mut rref_rows);
    let basis: Vec<IntVec> = rref_rows.iter().map(|v| clear_denominators(v)).collect();
    let rank = basis.len();
    let reduced: Vec<IntVec> = rows
        .iter()
        .map(|row| {
            let mut r: IntVec = basis.iter().map(|w| dot(row, w)).collect();
            make_primitive(&mut r);
            r
        })
        .collect();
    let reduced_rays = extreme_rays_pointed(&reduced, rank);
    let mut rays: Vec<IntVec> = reduced_rays
        .into_iter()
        .map(|t| {
            let mut y = vec![BigInt::zero(); dim];
            for (coef, w) in t.iter().zip(&basis) {
                for (yi, wi) in y.iter_mut().zip(w) {
                    *yi += coef * wi;
                }
            }
            make_primitive(&mut y);
            y
        })
        .collect();
    rays.sort();
    (lineality, rays)
}
