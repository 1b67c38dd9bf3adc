//! Shared helpers for the integration suites: an independent brute-force
//! facet oracle (no double description anywhere in it) and seeded random
//! generators for heptagons, point sets and affine maps.

#![allow(dead_code)]

use polyext::heptagon::{check_general_position, Heptagon};
use polyext::kernel::{linalg, QPoint, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Facet vertex sets of the hull of a full-dimensional point set, found by
/// testing every hyperplane spanned by a subset of points for one-sidedness.
/// Deliberately independent of the double description implementation.
pub fn brute_facet_tight_sets(points: &[QPoint]) -> Vec<Vec<usize>> {
    let dim = points[0].dim();
    let n = points.len();
    let mut tight_sets: Vec<Vec<usize>> = Vec::new();
    let mut subset: Vec<usize> = (0..dim).collect();

    fn next_combination(subset: &mut [usize], n: usize) -> bool {
        let k = subset.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if subset[i] < n - (k - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    loop {
        let base = &points[subset[0]];
        let dirs: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&i| points[i].direction_from(base))
            .collect();
        if linalg::rank(&dirs) == dim - 1 {
            let null = linalg::nullspace(&dirs, dim);
            if null.len() == 1 {
                let normal = &null[0];
                let rhs = linalg::dot(normal, base.coords());
                let values: Vec<Rational> = points
                    .iter()
                    .map(|p| linalg::dot(normal, p.coords()) - rhs.clone())
                    .collect();
                let pos = values.iter().any(|v| v.is_positive());
                let neg = values.iter().any(|v| v.is_negative());
                if !(pos && neg) {
                    let tight: Vec<usize> = values
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| v.is_zero())
                        .map(|(i, _)| i)
                        .collect();
                    if !tight_sets.contains(&tight) {
                        tight_sets.push(tight);
                    }
                }
            }
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    tight_sets.sort();
    tight_sets
}

/// Number of facets by the brute-force oracle, relative to the affine hull:
/// lower-dimensional inputs are first mapped onto the pivot coordinates of
/// their direction space, which is an affine isomorphism of the hull.
pub fn brute_facet_count(points: &[QPoint]) -> usize {
    let dirs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.direction_from(&points[0]))
        .collect();
    let mut rref = dirs.clone();
    let pivots = linalg::rref(&mut rref);
    if pivots.is_empty() {
        return 0; // a single point has no facets
    }
    let reduced: Vec<QPoint> = points.iter().map(|p| p.select(&pivots)).collect();
    brute_facet_tight_sets(&reduced).len()
}

/// 2D convex hull vertex set by monotone chain, exact arithmetic.
pub fn brute_hull_2d(points: &[QPoint]) -> Vec<QPoint> {
    let mut pts: Vec<QPoint> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let turn = |o: &QPoint, a: &QPoint, b: &QPoint| -> Rational {
        let d1 = a.direction_from(o);
        let d2 = b.direction_from(o);
        &d1[0] * &d2[1] - &d1[1] * &d2[0]
    };
    let mut lower: Vec<QPoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<QPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    let mut hull = lower;
    hull.extend(upper);
    hull.sort();
    hull
}

fn rational(rng: &mut ChaCha8Rng, num_range: i64, den_range: i64) -> Rational {
    let num = rng.gen_range(-num_range..=num_range);
    let den = rng.gen_range(1..=den_range);
    Rational::ratio(num, den)
}

/// Random strictly convex heptagon: seven distinct rational points on the
/// unit circle via the tangent-half-angle parametrization, scaled up.
pub fn random_heptagon(rng: &mut ChaCha8Rng) -> Heptagon {
    loop {
        let mut ts: Vec<Rational> = Vec::new();
        while ts.len() < 7 {
            let t = rational(rng, 60, 12);
            if !ts.contains(&t) {
                ts.push(t);
            }
        }
        let scale = Rational::from_integer(30);
        let points: Vec<QPoint> = ts
            .iter()
            .map(|t| {
                let t2 = t * t;
                let denom = &Rational::one() + &t2;
                let x = (&Rational::one() - &t2) / denom.clone();
                let y = (&Rational::ratio(2, 1) * t) / denom;
                QPoint::new(vec![&x * &scale, &y * &scale])
            })
            .collect();
        if let Ok(h) = Heptagon::new(&points) {
            return h;
        }
    }
}

/// Random heptagons passing the exhaustive general-position check.
pub fn random_gp_heptagons(rng: &mut ChaCha8Rng, count: usize) -> Vec<Heptagon> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let h = random_heptagon(rng);
        if check_general_position(&h).in_general_position {
            out.push(h);
        }
    }
    out
}

/// Random integer-coordinate point set.
pub fn random_points(rng: &mut ChaCha8Rng, dim: usize, n: usize, range: i64) -> Vec<QPoint> {
    (0..n)
        .map(|_| {
            let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(-range..=range)).collect();
            QPoint::from_ints(&coords)
        })
        .collect()
}

/// Random invertible rational matrix with a translation part.
pub fn random_affine_map(rng: &mut ChaCha8Rng, dim: usize) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    loop {
        let matrix: Vec<Vec<Rational>> = (0..dim)
            .map(|_| (0..dim).map(|_| rational(rng, 3, 2)).collect())
            .collect();
        if linalg::rank(&matrix) == dim {
            let shift: Vec<Rational> = (0..dim).map(|_| rational(rng, 5, 1)).collect();
            return (matrix, shift);
        }
    }
}

pub fn apply_affine(
    points: &[QPoint],
    matrix: &[Vec<Rational>],
    shift: &[Rational],
) -> Vec<QPoint> {
    points
        .iter()
        .map(|p| {
            let coords: Vec<Rational> = matrix
                .iter()
                .zip(shift)
                .map(|(row, s)| linalg::dot(row, p.coords()) + s.clone())
                .collect();
            QPoint::new(coords)
        })
        .collect()
}
