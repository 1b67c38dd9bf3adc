//! Extension verification, hidden-vertex detection, and mechanical
//! refutation of claimed hidden-vertex-free six-facet extensions of
//! heptagons in general position.
//!
//! `Q` is an extension of `P` when the orthogonal projection of `Q` onto the
//! first `dim(P)` coordinates equals `P` exactly. A vertex of `Q` whose
//! projection is not a vertex of `P` is hidden.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::heptagon::{check_general_position, Heptagon};
use crate::kernel::{
    affine_dimension, collinear_2d, intersect_lines_2d, LineIntersection2D, QPoint, Rational,
};
use crate::polytope::{self, hull, incidence, project, PolytopeError, VPolytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("the candidate has lower dimension than the target")]
    DimensionMismatch,
    #[error("the candidate is not an extension of the target")]
    NotAnExtension,
    #[error("the heptagon is not in general position")]
    NotGeneralPosition,
    #[error("no witness found; this refutes the theorem or reveals a bug")]
    InternalExhaustion,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// True iff `project(q, dim(p))` equals `p` as canonical polytopes.
pub fn is_extension(q: &VPolytope, p: &VPolytope) -> Result<bool, ExtensionError> {
    if q.dim() < p.dim() {
        return Err(ExtensionError::DimensionMismatch);
    }
    Ok(project(q, p.dim())? == *p)
}

/// Indices (into the canonical vertex order of `q`) of the vertices whose
/// projection is not a vertex of `p`.
pub fn hidden_vertices(q: &VPolytope, p: &VPolytope) -> Result<Vec<usize>, ExtensionError> {
    if !is_extension(q, p)? {
        return Err(ExtensionError::NotAnExtension);
    }
    Ok(hidden_vertices_unchecked(q, p))
}

fn hidden_vertices_unchecked(q: &VPolytope, p: &VPolytope) -> Vec<usize> {
    q.vertices()
        .iter()
        .enumerate()
        .filter(|(_, w)| !p.contains_vertex(&w.truncate(p.dim())))
        .map(|(i, _)| i)
        .collect()
}

/// Aggregated verification outcome. A failed extension check is encoded in
/// the report rather than an error; `hidden` stays empty in that case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtensionReport {
    pub is_extension: bool,
    pub extension_size: usize,
    pub target_size: usize,
    pub vertex_count: usize,
    pub hidden: Vec<usize>,
    pub hidden_fraction: Rational,
}

pub fn extension_report(q: &VPolytope, p: &VPolytope) -> ExtensionReport {
    let extension_size = hull(q.vertices())
        .map(|(_, h)| polytope::size(&h))
        .unwrap_or(0);
    let target_size = hull(p.vertices())
        .map(|(_, h)| polytope::size(&h))
        .unwrap_or(0);
    let is_ext = q.dim() >= p.dim() && matches!(is_extension(q, p), Ok(true));
    let hidden = if is_ext {
        hidden_vertices_unchecked(q, p)
    } else {
        Vec::new()
    };
    let hidden_fraction = if is_ext && q.vertex_count() > 0 {
        Rational::from_integer(hidden.len() as i64)
            / Rational::from_integer(q.vertex_count() as i64)
    } else {
        Rational::zero()
    };
    ExtensionReport {
        is_extension: is_ext,
        extension_size,
        target_size,
        vertex_count: q.vertex_count(),
        hidden,
        hidden_fraction,
    }
}

/// The flaw found in a claimed hidden-vertex-free six-facet extension.
/// Vertex indices refer to the canonical V-form ordering of the certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RefutationWitness {
    /// The projection does not equal the target heptagon.
    NotExtension,
    /// More than six facets, so the certificate is not of minimum size.
    TooManyFacets { size: usize },
    /// Fewer than seven vertices cannot project onto a heptagon.
    FewVertices { count: usize },
    /// A vertex projecting off the heptagon's vertex set.
    HiddenVertexFound { index: usize },
    /// Four vertices spanning at most a plane with exactly one coinciding
    /// projection pair: three target vertices would be collinear.
    Lemma1Violation { indices: [usize; 4] },
    /// Six vertices forming a triangular prism with at most one coinciding
    /// projection pair; the sub-witness pins the contradicted condition.
    PrismLemma2 {
        indices: [usize; 6],
        sub: PrismSubWitness,
    },
    /// Seven vertices forming the nested-triangle 3-polytope whose chord
    /// intersection points are collinear (the third general-position
    /// condition, stated for the assignment in label order).
    CollinearIntersections {
        indices: [usize; 7],
        projected: Vec<QPoint>,
        intersections: Vec<QPoint>,
    },
}

/// Why a triangular prism inside the certificate is impossible over a
/// heptagon in general position.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrismSubWitness {
    /// Two projected prism chords are parallel (condition 1).
    ParallelChords { points: Vec<QPoint> },
    /// The three projected prism chords share a point (condition 2).
    ConcurrentLines {
        points: Vec<QPoint>,
        common_point: QPoint,
    },
    /// The coinciding pair spans an edge inside a quadrilateral 2-face,
    /// contradicting the planar-quadruple lemma.
    CoincidingPairOnEdge,
}

/// Searches for the first witness refuting the claim that `q` is a
/// hidden-vertex-free extension of `p` with at most six facets.
///
/// Stages, cheapest first: vertex count, facet count, projection equality,
/// hidden vertices, then the subset scans (planar quadruples, triangular
/// prisms, nested-triangle 7-subsets) in lexicographic index order. The
/// subset scans are the executable content of the impossibility argument;
/// on genuine inputs one of the cheap stages always fires, and exhausting
/// all stages is a hard internal error.
pub fn refute_hidden_free(
    p: &Heptagon,
    q: &VPolytope,
) -> Result<RefutationWitness, ExtensionError> {
    if !check_general_position(p).in_general_position {
        return Err(ExtensionError::NotGeneralPosition);
    }
    let target = p.to_polytope();

    if q.vertex_count() < 7 {
        return Ok(RefutationWitness::FewVertices {
            count: q.vertex_count(),
        });
    }
    let (_, q_h) = hull(q.vertices())?;
    let size = polytope::size(&q_h);
    if size > 6 {
        return Ok(RefutationWitness::TooManyFacets { size });
    }
    if q.dim() < 2 || project(q, 2)? != target {
        return Ok(RefutationWitness::NotExtension);
    }
    if let Some(&index) = hidden_vertices_unchecked(q, &target).first() {
        return Ok(RefutationWitness::HiddenVertexFound { index });
    }
    if let Some(indices) = lemma1_scan(q.vertices(), 2) {
        return Ok(RefutationWitness::Lemma1Violation { indices });
    }
    if let Some((indices, sub)) = prism_scan(q.vertices(), 2)? {
        return Ok(RefutationWitness::PrismLemma2 { indices, sub });
    }
    if let Some((indices, projected, intersections)) = nested_triangle_scan(q.vertices(), 2)? {
        return Ok(RefutationWitness::CollinearIntersections {
            indices,
            projected,
            intersections,
        });
    }
    Err(ExtensionError::InternalExhaustion)
}

/// First 4-subset (lexicographic) with exactly one coinciding projection
/// pair whose affine hull has dimension at most 2.
pub fn lemma1_scan(points: &[QPoint], target_dim: usize) -> Option<[usize; 4]> {
    let shadows: Vec<QPoint> = points.iter().map(|p| p.truncate(target_dim)).collect();
    (0..points.len()).combinations(4).find_map(|subset| {
        let coinciding = subset
            .iter()
            .tuple_combinations()
            .filter(|(&a, &b)| shadows[a] == shadows[b])
            .count();
        if coinciding != 1 {
            return None;
        }
        let chosen: Vec<QPoint> = subset.iter().map(|&i| points[i].clone()).collect();
        let dim = affine_dimension(&chosen).expect("four points of one polytope");
        (dim <= 2).then(|| [subset[0], subset[1], subset[2], subset[3]])
    })
}

/// Recognition data for a triangular prism spanned by six points: the label
/// order w1..w6 interleaves one triangle with the partners across the
/// matching edges.
struct PrismShape {
    labeled: [usize; 6],
}

/// A 6-point hull is a triangular prism iff it keeps all six vertices, has
/// affine dimension 3 and exactly five facets: two vertex-disjoint triangles
/// and three quadrilaterals.
fn recognize_prism(points: &[QPoint], subset: &[usize]) -> Option<PrismShape> {
    let chosen: Vec<QPoint> = subset.iter().map(|&i| points[i].clone()).collect();
    let (v, h) = hull(&chosen).ok()?;
    if v.vertex_count() != 6 || v.affine_dimension() != 3 || h.inequalities.len() != 5 {
        return None;
    }
    let inc = incidence(&v, &h).ok()?;
    let facet_sets: Vec<Vec<usize>> = (0..5).map(|f| inc.facet_vertex_set(f)).collect();
    let mut sizes: Vec<usize> = facet_sets.iter().map(|f| f.len()).collect();
    sizes.sort_unstable();
    if sizes != [3, 3, 4, 4, 4] {
        return None;
    }
    let triangles: Vec<&Vec<usize>> = facet_sets.iter().filter(|f| f.len() == 3).collect();
    if triangles[0].iter().any(|v| triangles[1].contains(v)) {
        return None;
    }

    // map canonical hull indices back to the caller's indices
    let original = |local: usize| -> usize {
        let pt = &v.vertices()[local];
        subset
            .iter()
            .copied()
            .find(|&i| points[i] == *pt)
            .expect("hull vertices come from the subset")
    };
    // partner across a matching edge: the unique far-triangle vertex sharing
    // exactly two facets (an edge of a simple 3-polytope)
    let shared_facets = |a: usize, b: usize| -> usize {
        (0..5)
            .filter(|&f| inc.matrix[a][f] && inc.matrix[b][f])
            .count()
    };
    let min_orig = |tri: &[usize]| tri.iter().map(|&l| original(l)).min().unwrap_or(usize::MAX);
    let (near, far) = if min_orig(triangles[0]) <= min_orig(triangles[1]) {
        (triangles[0], triangles[1])
    } else {
        (triangles[1], triangles[0])
    };
    let mut near_sorted: Vec<usize> = near.to_vec();
    near_sorted.sort_by_key(|&l| original(l));

    let mut labeled = [0usize; 6];
    for (slot, &a) in near_sorted.iter().enumerate() {
        let partners: Vec<usize> = far
            .iter()
            .copied()
            .filter(|&b| shared_facets(a, b) == 2)
            .collect();
        let [b] = partners[..] else {
            return None;
        };
        labeled[2 * slot] = original(a);
        labeled[2 * slot + 1] = original(b);
    }
    Some(PrismShape { labeled })
}

/// First 6-subset (lexicographic) spanning a triangular prism with at most
/// one coinciding projection pair, together with its contradiction witness.
pub fn prism_scan(
    points: &[QPoint],
    target_dim: usize,
) -> Result<Option<([usize; 6], PrismSubWitness)>, ExtensionError> {
    let shadows: Vec<QPoint> = points.iter().map(|p| p.truncate(target_dim)).collect();
    for subset in (0..points.len()).combinations(6) {
        let coinciding: Vec<(usize, usize)> = subset
            .iter()
            .tuple_combinations()
            .filter(|(&a, &b)| shadows[a] == shadows[b])
            .map(|(&a, &b)| (a, b))
            .collect();
        if coinciding.len() > 1 {
            continue;
        }
        let Some(shape) = recognize_prism(points, &subset) else {
            continue;
        };
        let w = shape.labeled;
        let u = |i: usize| shadows[w[i]].clone();

        if let [(a, b)] = coinciding[..] {
            // the pair must span a prism edge, which always lies in a
            // quadrilateral 2-face; that face is the planar quadruple
            let pos =
                |x: usize| -> usize { w.iter().position(|&y| y == x).expect("pair is labeled") };
            let (pa, pb) = (pos(a), pos(b));
            let is_edge = pa / 2 == pb / 2 // a matching edge w(2i), w(2i+1)
                || (pa % 2 == pb % 2); // a triangle edge
            if is_edge {
                return Ok(Some((w, PrismSubWitness::CoincidingPairOnEdge)));
            }
            continue;
        }

        // chords u1u2, u3u4, u5u6 of the target: parallel pairs violate
        // condition 1; otherwise the three lines meet in one point
        let meet =
            |i: usize, j: usize, k: usize, l: usize| intersect_lines_2d(&u(i), &u(j), &u(k), &u(l));
        let pairs = [(0, 1, 2, 3), (2, 3, 4, 5), (0, 1, 4, 5)];
        let mut parallel = None;
        for (i, j, k, l) in pairs {
            match meet(i, j, k, l) {
                Ok(LineIntersection2D::Point(_)) => {}
                Ok(_) => {
                    parallel = Some([u(i), u(j), u(k), u(l)]);
                    break;
                }
                Err(_) => break,
            }
        }
        if let Some(points4) = parallel {
            return Ok(Some((
                w,
                PrismSubWitness::ParallelChords {
                    points: points4.to_vec(),
                },
            )));
        }
        if let Ok(LineIntersection2D::Point(common)) = meet(0, 1, 2, 3) {
            if collinear_2d(&u(4), &u(5), &common).unwrap_or(false) {
                return Ok(Some((
                    w,
                    PrismSubWitness::ConcurrentLines {
                        points: (0..6).map(u).collect(),
                        common_point: common,
                    },
                )));
            }
        }
    }
    Ok(None)
}

/// Facet structure of the nested-triangle type in its proof labeling
/// (zero-based): inner triangle 1-2-5, outer square 3-4-6-7, and vertex 5
/// of degree four.
const NESTED_TRIANGLE_REFERENCE: [&[usize]; 6] = [
    &[0, 1, 4],
    &[2, 3, 5, 6],
    &[0, 1, 2, 3],
    &[0, 2, 4, 6],
    &[4, 5, 6],
    &[1, 3, 4, 5],
];

/// First 7-subset (lexicographic) with pairwise distinct projections whose
/// hull is the nested-triangle six-facet 3-polytope and whose three chord
/// intersection points are collinear.
///
/// Returns the subset in label order, the projections, and the three chord
/// intersection points in the order of the third general-position condition.
/// Subset in label order, its projections, and the three chord
/// intersection points.
pub type NestedTriangleWitness = ([usize; 7], Vec<QPoint>, Vec<QPoint>);

pub fn nested_triangle_scan(
    points: &[QPoint],
    target_dim: usize,
) -> Result<Option<NestedTriangleWitness>, ExtensionError> {
    let shadows: Vec<QPoint> = points.iter().map(|p| p.truncate(target_dim)).collect();
    for subset in (0..points.len()).combinations(7) {
        let distinct = subset
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| shadows[a] != shadows[b]);
        if !distinct {
            continue;
        }
        let chosen: Vec<QPoint> = subset.iter().map(|&i| points[i].clone()).collect();
        let Ok((v, h)) = hull(&chosen) else { continue };
        if v.vertex_count() != 7 || v.affine_dimension() != 3 || h.inequalities.len() != 6 {
            continue;
        }
        let Ok(inc) = incidence(&v, &h) else { continue };
        let facet_sets: Vec<Vec<usize>> = (0..6).map(|f| inc.facet_vertex_set(f)).collect();
        // one labeling may pair two parallel chords; another labeling of the
        // same polytope then yields the three intersection points
        for label_of in polytope::labeled_isomorphisms(&facet_sets, 7, &NESTED_TRIANGLE_REFERENCE) {
            // by_label[k] = caller index of the vertex playing label k
            let mut by_label = [0usize; 7];
            for (local, &label) in label_of.iter().enumerate() {
                let pt = &v.vertices()[local];
                by_label[label] = subset
                    .iter()
                    .copied()
                    .find(|&i| points[i] == *pt)
                    .expect("hull vertices come from the subset");
            }
            let u: Vec<QPoint> = by_label.iter().map(|&i| shadows[i].clone()).collect();
            let meet = |i: usize, j: usize, k: usize, l: usize| {
                intersect_lines_2d(&u[i], &u[j], &u[k], &u[l])
            };
            // the condition-three triple: 12^34, 25^46, 37^15
            let (
                Ok(LineIntersection2D::Point(p1)),
                Ok(LineIntersection2D::Point(p2)),
                Ok(LineIntersection2D::Point(p3)),
            ) = (meet(0, 1, 2, 3), meet(1, 4, 3, 5), meet(2, 6, 0, 4))
            else {
                continue;
            };
            if collinear_2d(&p1, &p2, &p3).unwrap_or(false) {
                return Ok(Some((by_label, u, vec![p1, p2, p3])));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heptagon::{
        build_cross_polytope_extension, build_heptagon_extension, build_hexagon_prism_extension,
    };
    use crate::products::prism;

    fn hept(list: &[[i64; 2]]) -> Heptagon {
        let pts: Vec<QPoint> = list.iter().map(|c| QPoint::from_ints(c)).collect();
        Heptagon::new(&pts).unwrap()
    }

    fn fig_heptagon() -> Heptagon {
        hept(&[[1, 5], [2, 2], [8, 1], [11, 4], [10, 9], [6, 11], [2, 9]])
    }

    fn gp_heptagon() -> Heptagon {
        hept(&[[1, 5], [3, 2], [8, -1], [11, 4], [10, 6], [6, 11], [2, 9]])
    }

    #[test]
    fn prism_is_an_extension_without_hidden_vertices() {
        let p = fig_heptagon().to_polytope();
        let q = prism(&p);
        assert!(is_extension(&q, &p).unwrap());
        assert!(hidden_vertices(&q, &p).unwrap().is_empty());
        let report = extension_report(&q, &p);
        assert!(report.is_extension);
        assert_eq!(report.extension_size, 9);
        assert_eq!(report.target_size, 7);
        assert_eq!(report.vertex_count, 14);
        assert_eq!(report.hidden_fraction, Rational::zero());
    }

    #[test]
    fn cube_is_not_an_extension_of_a_triangle() {
        let cube: Vec<QPoint> = (0..8)
            .map(|i| QPoint::from_ints(&[i & 1, (i >> 1) & 1, (i >> 2) & 1]))
            .collect();
        let cube = VPolytope::new(&cube).unwrap();
        let triangle =
            VPolytope::new(&[[0, 0], [3, 0], [0, 3]].map(|c| QPoint::from_ints(&c))).unwrap();
        assert!(!is_extension(&cube, &triangle).unwrap());
        let report = extension_report(&cube, &triangle);
        assert!(!report.is_extension);
        assert!(report.hidden.is_empty());
        assert_eq!(report.hidden_fraction, Rational::zero());
    }

    #[test]
    fn simplex_extension_of_the_cross_polytope_has_no_hidden_vertices() {
        for d in [2usize, 3] {
            let (p, q) = build_cross_polytope_extension(d).unwrap();
            assert!(is_extension(&q, &p).unwrap());
            assert!(hidden_vertices(&q, &p).unwrap().is_empty());
        }
    }

    #[test]
    fn lift_and_cut_extension_has_exactly_the_apex_hidden() {
        let h = fig_heptagon();
        let ext = build_heptagon_extension(&h, &Rational::one()).unwrap();
        let p = h.to_polytope();
        let hidden = hidden_vertices(&ext.q_v, &p).unwrap();
        assert_eq!(hidden.len(), 1);
        assert_eq!(&ext.q_v.vertices()[hidden[0]], &ext.apex);
        let report = extension_report(&ext.q_v, &p);
        assert_eq!(report.extension_size, 6);
        assert_eq!(report.vertex_count, 8);
        assert_eq!(report.hidden_fraction, Rational::ratio(1, 8));
    }

    #[test]
    fn refuter_on_the_standard_candidates() {
        let h = gp_heptagon();
        let p = h.to_polytope();

        let ext = build_heptagon_extension(&h, &Rational::one()).unwrap();
        let witness = refute_hidden_free(&h, &ext.q_v).unwrap();
        let apex_index = ext
            .q_v
            .vertices()
            .iter()
            .position(|v| *v == ext.apex)
            .unwrap();
        assert_eq!(
            witness,
            RefutationWitness::HiddenVertexFound { index: apex_index }
        );

        let witness = refute_hidden_free(&h, &prism(&p)).unwrap();
        assert_eq!(witness, RefutationWitness::TooManyFacets { size: 9 });

        // 5-simplex over six of the heptagon's vertices: too few vertices
        let simplex: Vec<QPoint> = p.vertices()[..6]
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut coords = v.coords().to_vec();
                for j in 0..4 {
                    coords.push(if i == j + 2 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    });
                }
                QPoint::new(coords)
            })
            .collect();
        let simplex = VPolytope::new(&simplex).unwrap();
        assert_eq!(simplex.vertex_count(), 6);
        let witness = refute_hidden_free(&h, &simplex).unwrap();
        assert_eq!(witness, RefutationWitness::FewVertices { count: 6 });

        // the heptagon itself, padded into 3-space: an extension with seven facets
        let flat: Vec<QPoint> = p
            .vertices()
            .iter()
            .map(|v| {
                let mut coords = v.coords().to_vec();
                coords.push(Rational::zero());
                QPoint::new(coords)
            })
            .collect();
        let flat = VPolytope::new(&flat).unwrap();
        let witness = refute_hidden_free(&h, &flat).unwrap();
        assert_eq!(witness, RefutationWitness::TooManyFacets { size: 7 });

        // a polytope over a different heptagon is not an extension
        let other = fig_heptagon().to_polytope();
        let cube: Vec<QPoint> = (0..8)
            .map(|i| QPoint::from_ints(&[7 * (i & 1), 7 * ((i >> 1) & 1), (i >> 2) & 1]))
            .collect();
        let cube = VPolytope::new(&cube).unwrap();
        assert!(!is_extension(&cube, &other).unwrap());
        let witness = refute_hidden_free(&h, &cube).unwrap();
        assert_eq!(witness, RefutationWitness::NotExtension);
    }

    #[test]
    fn refuter_requires_general_position() {
        let h = fig_heptagon(); // degenerate chord geometry
        let q = prism(&h.to_polytope());
        assert_eq!(
            refute_hidden_free(&h, &q).unwrap_err(),
            ExtensionError::NotGeneralPosition
        );
    }

    #[test]
    fn lemma1_scan_finds_a_planar_quadruple() {
        let points = vec![
            QPoint::from_ints(&[0, 0, 0]),
            QPoint::from_ints(&[0, 0, 1]), // same shadow as the first
            QPoint::from_ints(&[1, 0, 0]),
            QPoint::from_ints(&[0, 1, 0]), // off the x-z plane
            QPoint::from_ints(&[2, 0, 0]),
        ];
        // subset {0,1,2,4} spans the x-z plane with one coinciding pair
        let found = lemma1_scan(&points, 2).unwrap();
        assert_eq!(found, [0, 1, 2, 4]);
        assert!(lemma1_scan(&points[1..], 2).is_none());
    }

    #[test]
    fn prism_scan_reports_parallel_chords_on_the_hexagon_prism() {
        let (_, q) = build_hexagon_prism_extension();
        let (indices, sub) = prism_scan(q.vertices(), 2).unwrap().unwrap();
        assert_eq!(indices.len(), 6);
        match sub {
            PrismSubWitness::ParallelChords { points } => {
                let r = intersect_lines_2d(&points[0], &points[1], &points[2], &points[3]).unwrap();
                assert!(!matches!(r, LineIntersection2D::Point(_)));
            }
            other => panic!("expected parallel chords, got {other:?}"),
        }
    }

    #[test]
    fn prism_scan_reports_concurrent_chords_on_a_frustum() {
        // positive homothety: the matching edges' shadows meet at (6,6)
        let points: Vec<QPoint> = [
            [0, 0, 0],
            [6, 0, 0],
            [0, 6, 0],
            [3, 3, 1],
            [6, 3, 1],
            [3, 6, 1],
        ]
        .iter()
        .map(|c| QPoint::from_ints(c))
        .collect();
        let (_, sub) = prism_scan(&points, 2).unwrap().unwrap();
        match sub {
            PrismSubWitness::ConcurrentLines { common_point, .. } => {
                assert_eq!(common_point, QPoint::from_ints(&[6, 6]));
            }
            other => panic!("expected concurrent lines, got {other:?}"),
        }
    }

    #[test]
    fn nested_triangle_scan_finds_collinear_intersections() {
        // square base with a slanted triangle roof, generic enough that the
        // three chord pairs all meet
        let points: Vec<QPoint> = [
            [0, 0, 0],
            [24, 0, 0],
            [24, 24, 0],
            [0, 24, 0],
            [8, 4, 8],
            [18, 3, 6],
            [12, 12, 12],
        ]
        .iter()
        .map(|c| QPoint::from_ints(c))
        .collect();
        let (indices, projected, intersections) =
            nested_triangle_scan(&points, 2).unwrap().unwrap();
        assert_eq!(indices.len(), 7);
        assert_eq!(projected.len(), 7);
        assert!(collinear_2d(&intersections[0], &intersections[1], &intersections[2]).unwrap());
    }
}
