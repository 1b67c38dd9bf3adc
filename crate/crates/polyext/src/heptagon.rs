//! Convex heptagons: general-position verification, the lift-and-cut
//! construction of a six-facet extension with a hidden vertex, and the two
//! classic gallery extensions (cross-polytope simplex, hexagon prism).

use std::collections::BTreeSet;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::kernel::{QPoint, Rational};
use crate::polytope::{self, hull, incidence, project, vertices_of, PolytopeError, VPolytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeptagonError {
    #[error("input is not a strictly convex heptagon")]
    NotConvexHeptagon,
    #[error("no relabeling admits the lift-and-cut construction")]
    NoValidLabeling,
    #[error("computed lift height is not positive")]
    NonPositiveHeight,
    #[error("dimension outside the supported range")]
    BadDimension,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// A strictly convex heptagon, normalized to counterclockwise cyclic order
/// starting at the lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heptagon {
    vertices: Vec<QPoint>,
}

fn cross2(a: &[Rational], b: &[Rational]) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

impl Heptagon {
    /// Accepts 7 planar points in any order, recovers the convex cyclic
    /// order, and validates strict convexity.
    pub fn new(points: &[QPoint]) -> Result<Self, HeptagonError> {
        if points.len() != 7 || points.iter().any(|p| p.dim() != 2) {
            return Err(HeptagonError::NotConvexHeptagon);
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() != 7 {
            return Err(HeptagonError::NotConvexHeptagon);
        }

        // order counterclockwise around the centroid
        let seventh = Rational::ratio(1, 7);
        let cx = pts.iter().fold(Rational::zero(), |acc, p| acc + p.coord(0)) * seventh.clone();
        let cy = pts.iter().fold(Rational::zero(), |acc, p| acc + p.coord(1)) * seventh;
        let half = |p: &QPoint| -> u8 {
            let dy = p.coord(1) - &cy;
            if dy.is_positive() || (dy.is_zero() && (p.coord(0) - &cx).is_positive()) {
                0
            } else {
                1
            }
        };
        pts.sort_by(|a, b| {
            half(a).cmp(&half(b)).then_with(|| {
                let da = [a.coord(0) - &cx, a.coord(1) - &cy];
                let db = [b.coord(0) - &cx, b.coord(1) - &cy];
                // counterclockwise: a before b when cross(da, db) > 0
                Rational::zero().cmp(&cross2(&da, &db))
            })
        });

        let start = pts
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.cmp(b))
            .map(|(i, _)| i)
            .expect("seven points");
        pts.rotate_left(start);

        // strict convexity: every directed edge keeps the other vertices
        // strictly to its left (this also rejects star traversals)
        for i in 0..7 {
            let a = &pts[i];
            let b = &pts[(i + 1) % 7];
            let d = b.direction_from(a);
            for (j, p) in pts.iter().enumerate() {
                if j == i || j == (i + 1) % 7 {
                    continue;
                }
                if !cross2(&d, &p.direction_from(a)).is_positive() {
                    return Err(HeptagonError::NotConvexHeptagon);
                }
            }
        }
        Ok(Heptagon { vertices: pts })
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.vertices
    }

    /// The heptagon as a canonical polytope.
    pub fn to_polytope(&self) -> VPolytope {
        VPolytope::new(&self.vertices).expect("a heptagon is a valid polytope")
    }

    /// Vertices relabeled by a cyclic shift and optional reversal.
    fn relabeled(&self, shift: usize, reflected: bool) -> Vec<QPoint> {
        (0..7)
            .map(|i| {
                let idx = if reflected {
                    (shift + 7 - i) % 7
                } else {
                    (shift + i) % 7
                };
                self.vertices[idx].clone()
            })
            .collect()
    }
}

impl Serialize for Heptagon {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Heptagon", 2)?;
        st.serialize_field("dim", &2usize)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Heptagon {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            dim: usize,
            vertices: Vec<QPoint>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.dim != 2 {
            return Err(D::Error::custom("heptagon must have dim 2"));
        }
        Heptagon::new(&raw.vertices).map_err(D::Error::custom)
    }
}

/// One violation of the general-position conditions, with enough data to
/// re-validate it by direct predicate evaluation. Indices refer to the
/// normalized cyclic order.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GpViolation {
    /// Condition 1: two vertex-disjoint chords are parallel.
    ParallelChords {
        condition: u8,
        chords: [[usize; 2]; 2],
    },
    /// Condition 2: three pairwise vertex-disjoint chords share a point.
    ConcurrentChords {
        condition: u8,
        chords: [[usize; 2]; 3],
        common_point: QPoint,
    },
    /// Condition 3: for the assignment `u1..u7`, the intersection points
    /// `u1u2 ^ u3u4`, `u2u5 ^ u4u6`, `u3u7 ^ u1u5` are collinear.
    CollinearIntersections {
        condition: u8,
        assignment: [usize; 7],
        points: [QPoint; 3],
    },
}

impl GpViolation {
    pub fn condition(&self) -> u8 {
        match self {
            GpViolation::ParallelChords { .. } => 1,
            GpViolation::ConcurrentChords { .. } => 2,
            GpViolation::CollinearIntersections { .. } => 3,
        }
    }
}

/// Outcome of the exhaustive general-position scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GpReport {
    pub in_general_position: bool,
    pub violations: Vec<GpViolation>,
}

/// Homogeneous integer coordinates `(x : y : w)` with `w > 0`; the scan
/// stays in integer arithmetic and only dehomogenizes for witnesses.
type HomPoint = [num_bigint::BigInt; 3];

fn homogenize(p: &QPoint) -> HomPoint {
    use num_integer::Integer as _;
    let (x, y) = (p.coord(0), p.coord(1));
    let w = x.denom().lcm(y.denom());
    [
        x.numer() * (&w / x.denom()),
        y.numer() * (&w / y.denom()),
        w,
    ]
}

fn hom_cross(a: &HomPoint, b: &HomPoint) -> HomPoint {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn hom_dot(a: &HomPoint, b: &HomPoint) -> num_bigint::BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn hom_reduce(v: &mut HomPoint) {
    use num_integer::Integer as _;
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if !num_traits::Zero::is_zero(&g) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn dehomogenize(p: &HomPoint) -> QPoint {
    let w = Rational::from(p[2].clone());
    QPoint::new(vec![
        Rational::from(p[0].clone()) / w.clone(),
        Rational::from(p[1].clone()) / w,
    ])
}

/// Exhaustively checks the three general-position conditions.
///
/// Condition 1 scans all 105 unordered pairs of vertex-disjoint chords,
/// condition 2 all 105 unordered triples of pairwise disjoint chords, and
/// condition 3 all 5040 role assignments modulo the involution swapping
/// roles (1 2)(3 4)(6 7), which fixes the three intersection points. The
/// whole scan runs on homogeneous integer coordinates: chord lines are
/// cross products of vertex pairs, intersection points cross products of
/// lines, and collinearity one 3x3 determinant.
pub fn check_general_position(p: &Heptagon) -> GpReport {
    use num_traits::Zero as _;

    let v = p.vertices();
    let hom: Vec<HomPoint> = v.iter().map(homogenize).collect();
    let mut violations = Vec::new();

    // the 21 chord lines
    let mut lines: Vec<Vec<Option<HomPoint>>> = vec![vec![None; 7]; 7];
    for i in 0..7 {
        for j in (i + 1)..7 {
            let mut line = hom_cross(&hom[i], &hom[j]);
            hom_reduce(&mut line);
            lines[i][j] = Some(line);
        }
    }
    let line = |c: &[usize; 2]| lines[c[0]][c[1]].as_ref().expect("chord line");

    // intersection points of all disjoint chord pairs; w = 0 means parallel
    let chords: Vec<[usize; 2]> = (0..7)
        .flat_map(|i| ((i + 1)..7).map(move |j| [i, j]))
        .collect();
    let disjoint = |a: &[usize; 2], b: &[usize; 2]| -> bool {
        a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1]
    };
    let mut meets: Vec<Vec<Option<HomPoint>>> = vec![vec![None; 21]; 21];
    for (i, c1) in chords.iter().enumerate() {
        for (j, c2) in chords.iter().enumerate().skip(i + 1) {
            if !disjoint(c1, c2) {
                continue;
            }
            let mut pt = hom_cross(line(c1), line(c2));
            hom_reduce(&mut pt);
            if pt[2].is_zero() {
                // parallel chords (a vanishing point at infinity)
                violations.push(GpViolation::ParallelChords {
                    condition: 1,
                    chords: [*c1, *c2],
                });
            }
            meets[i][j] = Some(pt);
        }
    }
    let meet = |i: usize, j: usize| -> &HomPoint {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        meets[a][b].as_ref().expect("disjoint chord pair")
    };

    for (i, c1) in chords.iter().enumerate() {
        for (j, c2) in chords.iter().enumerate().skip(i + 1) {
            if !disjoint(c1, c2) {
                continue;
            }
            for (k, c3) in chords.iter().enumerate().skip(j + 1) {
                if !disjoint(c1, c3) || !disjoint(c2, c3) {
                    continue;
                }
                let pt = meet(i, j);
                let _ = k;
                if !pt[2].is_zero() && hom_dot(line(c3), pt).is_zero() {
                    violations.push(GpViolation::ConcurrentChords {
                        condition: 2,
                        chords: [*c1, *c2, *c3],
                        common_point: dehomogenize(pt),
                    });
                }
            }
        }
    }

    let chord_index = |a: usize, b: usize| -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        // position of [a, b] in the lexicographic chord list
        a * 7 - a * (a + 1) / 2 + (b - a - 1)
    };
    let mut assignment = [0usize; 7];
    permute_assignments(&mut assignment, &mut [false; 7], 0, &mut |a| {
        let mirror = [a[1], a[0], a[3], a[2], a[4], a[6], a[5]];
        if mirror < *a {
            return;
        }
        let p1 = meet(chord_index(a[0], a[1]), chord_index(a[2], a[3]));
        let p2 = meet(chord_index(a[1], a[4]), chord_index(a[3], a[5]));
        let p3 = meet(chord_index(a[2], a[6]), chord_index(a[0], a[4]));
        if p1[2].is_zero() || p2[2].is_zero() || p3[2].is_zero() {
            return;
        }
        let det = &p1[0] * (&p2[1] * &p3[2] - &p2[2] * &p3[1])
            - &p1[1] * (&p2[0] * &p3[2] - &p2[2] * &p3[0])
            + &p1[2] * (&p2[0] * &p3[1] - &p2[1] * &p3[0]);
        if det.is_zero() {
            violations.push(GpViolation::CollinearIntersections {
                condition: 3,
                assignment: *a,
                points: [dehomogenize(p1), dehomogenize(p2), dehomogenize(p3)],
            });
        }
    });

    GpReport {
        in_general_position: violations.is_empty(),
        violations,
    }
}

/// Visits permutations of `0..7` in lexicographic order.
fn permute_assignments(
    current: &mut [usize; 7],
    used: &mut [bool; 7],
    depth: usize,
    f: &mut impl FnMut(&[usize; 7]),
) {
    if depth == 7 {
        f(current);
        return;
    }
    for i in 0..7 {
        if used[i] {
            continue;
        }
        used[i] = true;
        current[depth] = i;
        permute_assignments(current, used, depth + 1, f);
        used[i] = false;
    }
}

/// The lift-and-cut construction artifact: a 3-dimensional extension with
/// six facets whose extra vertex projects into the heptagon's interior.
///
/// `removed_facet` holds the canonical `q_v` indices of the three lifted
/// points whose triangle facet was cut away from the intermediate hull.
#[derive(Debug, Clone, Serialize)]
pub struct LiftedExtension {
    pub base: Heptagon,
    pub shift: usize,
    pub reflected: bool,
    pub z1: Rational,
    pub z4: Rational,
    pub lifted_points: Vec<QPoint>,
    pub removed_facet: [usize; 3],
    pub q_v: VPolytope,
    pub q_h: crate::polytope::HPolytope,
    pub apex: QPoint,
}

/// Builds a six-facet extension of a convex heptagon by lifting.
///
/// For each of the 14 relabelings (7 cyclic shifts, both orientations, in
/// that order) the labeled vertices `v1` and `v4` are lifted so that
/// `w1, w2, w3, w4` become coplanar, the hull is formed, and the inequality
/// of the triangle facet `w1 w4 w6` is removed. The first relabeling whose
/// result is bounded, has exactly six facets, projects back onto the input,
/// and gains exactly one vertex over the heptagon's interior wins.
pub fn build_heptagon_extension(
    p: &Heptagon,
    z1: &Rational,
) -> Result<LiftedExtension, HeptagonError> {
    if !z1.is_positive() {
        return Err(HeptagonError::NonPositiveHeight);
    }
    let base_poly = p.to_polytope();
    let (_, base_h) = hull(p.vertices())?;

    for reflected in [false, true] {
        for shift in 0..7 {
            let lab = p.relabeled(shift, reflected);
            // height of the plane through w1, w2, w3 over a base point x:
            // linear, zero on the edge v2 v3, z1 at v1
            let edge = lab[2].direction_from(&lab[1]);
            let side = |x: &QPoint| cross2(&edge, &x.direction_from(&lab[1]));
            let s1 = side(&lab[0]);
            if s1.is_zero() {
                continue;
            }
            let z4 = z1 * &(side(&lab[3]) / s1);
            if !z4.is_positive() {
                return Err(HeptagonError::NonPositiveHeight);
            }

            let lifted: Vec<QPoint> = lab
                .iter()
                .enumerate()
                .map(|(i, q)| {
                    let z = match i {
                        0 => z1.clone(),
                        3 => z4.clone(),
                        _ => Rational::zero(),
                    };
                    QPoint::new(vec![q.coord(0).clone(), q.coord(1).clone(), z])
                })
                .collect();

            let (qp_v, qp_h) = hull(&lifted)?;
            if qp_v.vertex_count() != 7 {
                continue;
            }
            let position = |pt: &QPoint, poly: &VPolytope| -> Option<usize> {
                poly.vertices().binary_search(pt).ok()
            };
            let triangle: BTreeSet<usize> = [0usize, 3, 5]
                .iter()
                .filter_map(|&i| position(&lifted[i], &qp_v))
                .collect();
            if triangle.len() != 3 {
                continue;
            }
            let inc = incidence(&qp_v, &qp_h)?;
            let facet = (0..qp_h.inequalities.len()).find(|&f| {
                inc.facet_vertex_set(f).into_iter().collect::<BTreeSet<_>>() == triangle
            });
            let Some(facet) = facet else {
                continue; // conv(w1, w4, w6) is not a facet under this labeling
            };

            let mut cut = qp_h.clone();
            cut.inequalities.remove(facet);
            let q_v = match vertices_of(&cut) {
                Ok(v) => v,
                Err(PolytopeError::Unbounded) | Err(PolytopeError::Empty) => continue,
                Err(e) => return Err(e.into()),
            };
            if q_v.vertex_count() != 8 || !lifted.iter().all(|w| q_v.contains_vertex(w)) {
                continue;
            }
            let (_, q_h) = hull(q_v.vertices())?;
            if polytope::size(&q_h) != 6 {
                continue;
            }
            if project(&q_v, 2)? != base_poly {
                continue;
            }
            let apex = q_v
                .vertices()
                .iter()
                .find(|vert| !lifted.contains(vert))
                .expect("eight vertices, seven of them lifted")
                .clone();
            let shadow = apex.truncate(2);
            let strictly_inside = base_h.inequalities.iter().all(|ineq| {
                let lhs = shadow
                    .coords()
                    .iter()
                    .zip(&ineq.normal)
                    .fold(Rational::zero(), |acc, (c, n)| {
                        acc + c * &Rational::from(n.clone())
                    });
                lhs < Rational::from(ineq.rhs.clone())
            });
            if !strictly_inside {
                continue;
            }

            let removed_facet = [
                position(&lifted[0], &q_v).expect("lifted point is a vertex"),
                position(&lifted[3], &q_v).expect("lifted point is a vertex"),
                position(&lifted[5], &q_v).expect("lifted point is a vertex"),
            ];
            return Ok(LiftedExtension {
                base: p.clone(),
                shift,
                reflected,
                z1: z1.clone(),
                z4,
                lifted_points: lifted,
                removed_facet,
                q_v,
                q_h,
                apex,
            });
        }
    }
    Err(HeptagonError::NoValidLabeling)
}

/// Fixed triangular prism with a hexagonal shadow: five facets upstairs, six
/// downstairs, and every prism vertex lands on a hexagon vertex.
pub fn build_hexagon_prism_extension() -> (VPolytope, VPolytope) {
    let prism_points: Vec<QPoint> = [
        [2, 2, 0],
        [2, 4, 0],
        [4, 2, 0],
        [4, 4, 0],
        [1, 3, 1],
        [5, 3, 1],
    ]
    .iter()
    .map(|c| QPoint::from_ints(c))
    .collect();
    let (q, q_h) = hull(&prism_points).expect("fixed prism is a valid polytope");
    let p = project(&q, 2).expect("projection to the plane");
    let (_, p_h) = hull(p.vertices()).expect("shadow is a valid polytope");
    assert_eq!(polytope::size(&q_h), 5, "prism must have five facets");
    assert_eq!(polytope::size(&p_h), 6, "shadow must be a hexagon");
    assert_eq!(q.vertex_count(), 6);
    assert!(
        q.vertices()
            .iter()
            .all(|w| p.contains_vertex(&w.truncate(2))),
        "no prism vertex may be hidden"
    );
    (p, q)
}

/// The cross-polytope written as a projection of a `(2d-1)`-simplex: the
/// extension has `2d` vertices `(x, lambda)` with `lambda` running over the
/// unit vectors and `x = e_i` or `-e_i` accordingly.
pub fn build_cross_polytope_extension(d: usize) -> Result<(VPolytope, VPolytope), HeptagonError> {
    if d == 0 || d > 5 {
        return Err(HeptagonError::BadDimension);
    }
    let ambient = 3 * d;
    let mut points = Vec::with_capacity(2 * d);
    for j in 0..2 * d {
        let mut coords = vec![Rational::zero(); ambient];
        if j < d {
            coords[j] = Rational::one();
        } else {
            coords[j - d] = -Rational::one();
        }
        coords[d + j] = Rational::one();
        points.push(QPoint::new(coords));
    }
    let (q, q_h) = hull(&points)?;
    assert_eq!(q.vertex_count(), 2 * d, "simplex keeps all generators");
    assert_eq!(q.affine_dimension(), 2 * d - 1, "a (2d-1)-simplex");
    assert_eq!(
        polytope::size(&q_h),
        2 * d,
        "a simplex has one facet per vertex"
    );
    let p = project(&q, d)?;
    let cross: Vec<QPoint> = (0..d)
        .flat_map(|i| {
            let mut plus = vec![Rational::zero(); d];
            plus[i] = Rational::one();
            let mut minus = vec![Rational::zero(); d];
            minus[i] = -Rational::one();
            [QPoint::new(plus), QPoint::new(minus)]
        })
        .collect();
    let expected = VPolytope::new(&cross)?;
    assert_eq!(p, expected, "projection is the cross-polytope");
    Ok((p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hept(list: &[[i64; 2]]) -> Heptagon {
        let pts: Vec<QPoint> = list.iter().map(|c| QPoint::from_ints(c)).collect();
        Heptagon::new(&pts).unwrap()
    }

    #[test]
    fn normalization_recovers_cyclic_order() {
        let shuffled = [[11, 4], [1, 5], [6, 11], [2, 2], [10, 9], [2, 9], [8, 1]];
        let h = hept(&shuffled);
        let expected = [[1, 5], [2, 2], [8, 1], [11, 4], [10, 9], [6, 11], [2, 9]];
        let want: Vec<QPoint> = expected.iter().map(|c| QPoint::from_ints(c)).collect();
        assert_eq!(h.vertices(), &want[..]);
    }

    #[test]
    fn rejects_non_convex_and_degenerate_inputs() {
        // a repeated point
        let pts: Vec<QPoint> = [[0, 0], [4, 0], [5, 1], [5, 3], [1, 3], [-1, 2], [0, 0]]
            .iter()
            .map(|c| QPoint::from_ints(c))
            .collect();
        assert_eq!(
            Heptagon::new(&pts).unwrap_err(),
            HeptagonError::NotConvexHeptagon
        );
        // a point inside the hull of the others
        let pts: Vec<QPoint> = [[0, 0], [4, 0], [5, 1], [5, 3], [1, 3], [-1, 2], [2, 2]]
            .iter()
            .map(|c| QPoint::from_ints(c))
            .collect();
        assert_eq!(
            Heptagon::new(&pts).unwrap_err(),
            HeptagonError::NotConvexHeptagon
        );
    }

    #[test]
    fn trapezoid_chords_violate_condition_one() {
        let h = hept(&[[0, 0], [4, 0], [5, 1], [5, 3], [1, 3], [-1, 2], [-1, 1]]);
        // normalized cyclic order starts at (-1,1); the two horizontal
        // chords (0,0)-(4,0) and (5,3)-(1,3) sit at indices 1,2 and 4,5
        assert_eq!(h.vertices()[1], QPoint::from_ints(&[0, 0]));
        assert_eq!(h.vertices()[4], QPoint::from_ints(&[5, 3]));
        let report = check_general_position(&h);
        assert!(!report.in_general_position);
        assert!(report.violations.iter().any(|viol| matches!(
            viol,
            GpViolation::ParallelChords { chords, .. } if chords.contains(&[1, 2]) && chords.contains(&[4, 5])
        )));
    }

    #[test]
    fn fig_heptagon_geometry_is_degenerate() {
        // two chord pairs are parallel and two assignments have collinear
        // intersection points; recorded as a golden value
        let h = hept(&[[1, 5], [2, 2], [8, 1], [11, 4], [10, 9], [6, 11], [2, 9]]);
        let report = check_general_position(&h);
        assert!(!report.in_general_position);
        let conditions: Vec<u8> = report.violations.iter().map(|v| v.condition()).collect();
        assert_eq!(conditions, vec![1, 1, 3, 3]);
        assert!(report.violations.iter().any(|viol| matches!(
            viol,
            GpViolation::ParallelChords { chords, .. } if *chords == [[0, 6], [2, 4]]
        )));
    }

    #[test]
    fn small_gp_heptagon_passes() {
        let h = hept(&[[1, 5], [3, 2], [8, -1], [11, 4], [10, 6], [6, 11], [2, 9]]);
        let report = check_general_position(&h);
        assert!(report.in_general_position, "{:?}", report.violations);
    }

    #[test]
    fn concurrent_diagonals_violate_condition_two() {
        // three main diagonals pass through the origin by construction;
        // after normalization they are the chords 0-4, 1-5, 2-6
        let h = hept(&[[8, 0], [5, 5], [-5, 5], [-7, 0], [-6, -6], [6, -6], [8, -3]]);
        assert_eq!(h.vertices()[0], QPoint::from_ints(&[-7, 0]));
        assert_eq!(h.vertices()[4], QPoint::from_ints(&[8, 0]));
        let report = check_general_position(&h);
        let origin = QPoint::from_ints(&[0, 0]);
        assert!(report.violations.iter().any(|viol| matches!(
            viol,
            GpViolation::ConcurrentChords { chords, common_point, .. }
                if *chords == [[0, 4], [1, 5], [2, 6]] && *common_point == origin
        )));
    }

    #[test]
    fn gp_scan_is_invariant_under_relabeling() {
        let pts = [[1, 5], [3, 2], [8, -1], [11, 4], [10, 6], [6, 11], [2, 9]];
        let h = hept(&pts);
        let mut rotated: Vec<QPoint> = pts[3..]
            .iter()
            .chain(&pts[..3])
            .map(|c| QPoint::from_ints(c))
            .collect();
        rotated.reverse();
        let h2 = Heptagon::new(&rotated).unwrap();
        // normalization makes the two heptagons equal, so the reports agree
        assert_eq!(h, h2);
        assert_eq!(
            check_general_position(&h).in_general_position,
            check_general_position(&h2).in_general_position
        );
    }

    #[test]
    fn lift_and_cut_on_the_fig_heptagon() {
        let h = hept(&[[1, 5], [2, 2], [8, 1], [11, 4], [10, 9], [6, 11], [2, 9]]);
        let ext = build_heptagon_extension(&h, &Rational::one()).unwrap();
        assert_eq!(ext.shift, 0);
        assert!(!ext.reflected);
        assert_eq!(ext.z4, Rational::ratio(21, 17));
        assert_eq!(ext.q_v.vertex_count(), 8);
        assert_eq!(polytope::size(&ext.q_h), 6);
        let expected_apex = QPoint::new(vec![
            Rational::ratio(781, 135),
            Rational::ratio(152, 27),
            Rational::ratio(203, 135),
        ]);
        assert_eq!(ext.apex, expected_apex);
        assert_eq!(project(&ext.q_v, 2).unwrap(), h.to_polytope());
    }

    #[test]
    fn lifted_plane_points_are_exactly_coplanar() {
        let h = hept(&[[1, 5], [2, 2], [8, 1], [11, 4], [10, 9], [6, 11], [2, 9]]);
        let ext = build_heptagon_extension(&h, &Rational::one()).unwrap();
        let w = &ext.lifted_points;
        let rows: Vec<Vec<Rational>> = (1..4).map(|i| w[i].direction_from(&w[0])).collect();
        assert_eq!(crate::kernel::linalg::rank(&rows), 2);
    }

    #[test]
    fn lift_and_cut_respects_z1_scaling() {
        let h = hept(&[[1, 5], [3, 2], [8, -1], [11, 4], [10, 6], [6, 11], [2, 9]]);
        let ext = build_heptagon_extension(&h, &Rational::ratio(3, 2)).unwrap();
        assert_eq!(polytope::size(&ext.q_h), 6);
        assert_eq!(ext.q_v.vertex_count(), 8);
        assert_eq!(project(&ext.q_v, 2).unwrap(), h.to_polytope());
        assert!(build_heptagon_extension(&h, &Rational::zero()).is_err());
    }

    #[test]
    fn hexagon_prism_gallery() {
        let (p, q) = build_hexagon_prism_extension();
        assert_eq!(p.vertex_count(), 6);
        assert_eq!(q.vertex_count(), 6);
    }

    #[test]
    fn cross_polytope_gallery_small_dims() {
        let (p, q) = build_cross_polytope_extension(1).unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(p.vertex_count(), 2);
        let (p, q) = build_cross_polytope_extension(2).unwrap();
        assert_eq!(q.vertex_count(), 4);
        assert_eq!(p.vertex_count(), 4);
        assert!(build_cross_polytope_extension(0).is_err());
        assert!(build_cross_polytope_extension(6).is_err());
    }
}
