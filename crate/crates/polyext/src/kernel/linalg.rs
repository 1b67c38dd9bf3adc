//! Small dense exact linear algebra over the rationals: reduced row echelon
//! form, rank, nullspaces and linear solves. Pivoting is deterministic
//! (lowest row index first), so every caller sees reproducible output.

use super::Rational;

/// Reduced row echelon form computed in place.
///
/// Returns the pivot columns in increasing order. Zero rows sink to the
/// bottom. Pivot entries are scaled to 1 and eliminated above and below.
pub fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].recip().expect("pivot is nonzero");
        for entry in rows[rank].iter_mut() {
            *entry = &*entry * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (entry, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = &factor * p;
                    *entry = &*entry - &delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{ x : rows * x = 0 }` for row vectors of length `ncols`.
///
/// Uses the standard free-variable parametrization of the RREF, so the basis
/// is canonical given the row space.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut vec = vec![Rational::zero(); ncols];
        vec[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            vec[p] = -&m[i][free];
        }
        basis.push(vec);
    }
    basis
}

/// Solves the square system `a * x = b`; `None` when `a` is singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

/// Solution set of `rows * x = rhs` described as a particular point plus a
/// nullspace basis; `None` when inconsistent.
pub fn solve_affine(
    rows: &[Vec<Rational>],
    rhs: &[Rational],
    ncols: usize,
) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&ncols) {
        return None; // a row reduced to 0 = 1
    }
    let mut particular = vec![Rational::zero(); ncols];
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = m[i][ncols].clone();
    }
    // m is already in RREF over the coefficient columns
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut vec = vec![Rational::zero(); ncols];
        vec[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            vec[p] = -&m[i][free];
        }
        basis.push(vec);
    }
    Some((particular, basis))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}
