//! Property-based invariants for the kernel predicates and the polytope
//! machinery, plus the structural facts the extension theory relies on.

mod common;

use polyext::extensions::hidden_vertices;
use polyext::heptagon::{build_heptagon_extension, build_hexagon_prism_extension, Heptagon};
use polyext::kernel::{
    affine_dimension, collinear_2d, intersect_lines_2d, LineIntersection2D, QPoint, Rational,
};
use polyext::polytope::{hull, project, vertices_of, HPolytope, Inequality, PolytopeError};
use polyext::products::{prism, prism_at};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..60).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn point2() -> impl Strategy<Value = QPoint> {
    (rational(), rational()).prop_map(|(x, y)| QPoint::new(vec![x, y]))
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
    }

    #[test]
    fn rational_grammar_round_trip(a in rational()) {
        let text = a.to_string();
        let back: Rational = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn affine_dimension_is_permutation_and_translation_invariant(
        mut pts in proptest::collection::vec(point2(), 1..7),
        shift in point2(),
    ) {
        let original = affine_dimension(&pts).unwrap();
        pts.reverse();
        prop_assert_eq!(affine_dimension(&pts).unwrap(), original);
        let translated: Vec<QPoint> = pts
            .iter()
            .map(|p| {
                QPoint::new(vec![
                    p.coord(0) + shift.coord(0),
                    p.coord(1) + shift.coord(1),
                ])
            })
            .collect();
        prop_assert_eq!(affine_dimension(&translated).unwrap(), original);
    }

    #[test]
    fn line_intersection_is_symmetric_and_on_both_lines(
        p1 in point2(), p2 in point2(), p3 in point2(), p4 in point2(),
    ) {
        prop_assume!(p1 != p2 && p3 != p4);
        let ab = intersect_lines_2d(&p1, &p2, &p3, &p4).unwrap();
        let ba = intersect_lines_2d(&p3, &p4, &p1, &p2).unwrap();
        prop_assert_eq!(&ab, &ba);
        if let LineIntersection2D::Point(pt) = ab {
            prop_assert!(collinear_2d(&p1, &p2, &pt).unwrap());
            prop_assert!(collinear_2d(&p3, &p4, &pt).unwrap());
        }
    }

    #[test]
    fn collinearity_ignores_argument_order(a in point2(), b in point2(), c in point2()) {
        let expected = collinear_2d(&a, &b, &c).unwrap();
        for (x, y, z) in [(&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)] {
            prop_assert_eq!(collinear_2d(x, y, z).unwrap(), expected);
        }
    }
}

#[test]
fn five_facet_polytopes_have_at_most_six_vertices() {
    // fixed instance: the gallery prism
    let (_, q) = build_hexagon_prism_extension();
    assert_eq!(q.vertex_count(), 6);

    // random five-inequality systems in three dimensions, kept when bounded
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut bounded = 0usize;
    let mut attempts = 0usize;
    while bounded < 25 && attempts < 4000 {
        attempts += 1;
        let pts = common::random_points(&mut rng, 3, 5, 4);
        let inequalities: Vec<Inequality> = pts
            .iter()
            .map(|p| {
                let normal: Vec<num_bigint::BigInt> =
                    p.coords().iter().map(|c| c.numer().clone()).collect();
                Inequality {
                    normal,
                    rhs: num_bigint::BigInt::from(1),
                }
            })
            .collect();
        if inequalities
            .iter()
            .any(|i| i.normal.iter().all(|c| c == &num_bigint::BigInt::from(0)))
        {
            continue;
        }
        let h = HPolytope {
            dim: 3,
            inequalities,
            equations: vec![],
        };
        match vertices_of(&h) {
            Ok(v) => {
                // count facets of the canonical form; the raw system may
                // carry redundant rows
                let (_, canonical) = hull(v.vertices()).unwrap();
                if canonical.inequalities.len() == 5 {
                    bounded += 1;
                    assert!(
                        v.vertex_count() <= 6,
                        "five facets but {} vertices",
                        v.vertex_count()
                    );
                }
            }
            Err(PolytopeError::Unbounded) | Err(PolytopeError::Empty) => continue,
            Err(e) => panic!("unexpected error: {e}"),
        }
    }
    assert!(bounded >= 10, "only {bounded} bounded five-facet instances");
}

#[test]
fn adding_an_interior_projecting_vertex_grows_the_hidden_list() {
    let heptagon = Heptagon::new(
        &[[1, 5], [2, 2], [8, 1], [11, 4], [10, 9], [6, 11], [2, 9]].map(|c| QPoint::from_ints(&c)),
    )
    .unwrap();
    let p = heptagon.to_polytope();
    let q = prism(&p);
    assert!(hidden_vertices(&q, &p).unwrap().is_empty());
    // a spike over an interior point of the heptagon
    let mut pts = q.vertices().to_vec();
    pts.push(QPoint::from_ints(&[6, 6, 3]));
    let spiked = polyext::VPolytope::new(&pts).unwrap();
    assert_eq!(hidden_vertices(&spiked, &p).unwrap().len(), 1);
}

#[test]
fn hidden_count_doubles_under_the_prism() {
    let heptagon = Heptagon::new(
        &[[1, 5], [2, 2], [8, 1], [11, 4], [10, 9], [6, 11], [2, 9]].map(|c| QPoint::from_ints(&c)),
    )
    .unwrap();
    let p = heptagon.to_polytope();
    let ext = build_heptagon_extension(&heptagon, &Rational::one()).unwrap();
    let before = hidden_vertices(&ext.q_v, &p).unwrap().len();
    // keep the lift coordinate last so the product stays a prefix extension
    let q1 = prism_at(&ext.q_v, 2).unwrap();
    let p1 = prism(&p);
    let after = hidden_vertices(&q1, &p1).unwrap().len();
    assert_eq!(after, 2 * before);
}

#[test]
fn hull_round_trip_on_random_rational_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7777);
    for case in 0..40 {
        let dim = 2 + case % 3;
        let pts = common::random_points(&mut rng, dim, 5 + case % 6, 5);
        let Ok((v, h)) = hull(&pts) else { continue };
        assert_eq!(vertices_of(&h).unwrap(), v);
        // the facet tight sets agree with the brute oracle on full-dim hulls
        if h.equations.is_empty() && pts.len() <= 10 {
            let brute = common::brute_facet_tight_sets(v.vertices());
            assert_eq!(brute.len(), h.inequalities.len());
        }
    }
}

#[test]
fn projection_composes_on_the_gallery() {
    let (_, q) = polyext::heptagon::build_cross_polytope_extension(3).unwrap();
    let once = project(&project(&q, 5).unwrap(), 3).unwrap();
    let direct = project(&q, 3).unwrap();
    assert_eq!(once, direct);
}

#[test]
fn facet_vertex_sets_span_one_dimension_less() {
    let mut rng = ChaCha8Rng::seed_from_u64(314);
    let mut checked = 0usize;
    while checked < 20 {
        let dim = 2 + checked % 3;
        let pts = common::random_points(&mut rng, dim, 6 + checked % 4, 5);
        let Ok((v, h)) = hull(&pts) else { continue };
        let expected = v.affine_dimension();
        if expected == 0 {
            continue;
        }
        let inc = polyext::polytope::incidence(&v, &h).unwrap();
        for f in 0..h.inequalities.len() {
            let members: Vec<QPoint> = inc
                .facet_vertex_set(f)
                .into_iter()
                .map(|i| v.vertices()[i].clone())
                .collect();
            assert_eq!(affine_dimension(&members).unwrap(), expected - 1);
        }
        checked += 1;
    }
}
