//! Polytope representations and exact conversions.
//!
//! A polytope is carried either as a canonical vertex list ([`VPolytope`]) or
//! as an inequality system with explicit affine-hull equations
//! ([`HPolytope`]). Conversion in both directions runs through the double
//! description computation in [`dd`]; lower-dimensional polytopes keep their
//! facet counts relative to the affine hull.
//!
//! Canonical forms: vertices sorted by coordinate tuple, inequalities sorted
//! by `(normal, rhs)` with the normal reduced against the equations and the
//! whole row scaled to a primitive integer vector, equations in scaled
//! reduced row echelon form. Equality of canonical representations is plain
//! structural equality.

mod classify;
pub(crate) mod dd;

pub(crate) use classify::incidence_isomorphisms as labeled_isomorphisms;
pub use classify::{
    classify_6facet_3polytope, enumerate_feasible_kt, simplex_cut_vertex_count, CombinatorialType3D,
};

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::kernel::{linalg, QPoint, Rational};
use dd::IntVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("empty input")]
    EmptyInput,
    #[error("points have mixed ambient dimensions")]
    MixedDimensions,
    #[error("the solution set is unbounded")]
    Unbounded,
    #[error("the solution set is empty")]
    Empty,
    #[error("coordinate count out of range")]
    BadCoordinateCount,
    #[error("vertex index out of range")]
    IndexOutOfRange,
    #[error("vertex list and inequality system describe different polytopes")]
    RepresentationMismatch,
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("no reference combinatorial type matches")]
    UnknownType,
    #[error("parameters outside the admissible range")]
    BadParameters,
    #[error("malformed representation: {0}")]
    MalformedInput(&'static str),
}

/// `normal . x <= rhs` with integer entries, jointly primitive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Inequality {
    #[serde(with = "int_vec_serde")]
    pub normal: Vec<BigInt>,
    #[serde(with = "int_serde")]
    pub rhs: BigInt,
}

/// `normal . x = rhs` with integer entries, jointly primitive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Equation {
    #[serde(with = "int_vec_serde")]
    pub normal: Vec<BigInt>,
    #[serde(with = "int_serde")]
    pub rhs: BigInt,
}

impl fmt::Debug for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} . x <= {}", self.normal, self.rhs)
    }
}

impl fmt::Debug for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} . x = {}", self.normal, self.rhs)
    }
}

/// Arbitrary-precision integers cross the wire as decimal strings, matching
/// the rational grammar with denominator one. Plain JSON integers are also
/// accepted on input.
mod int_serde {
    use super::*;
    use std::str::FromStr;

    pub fn serialize<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(n) => Ok(BigInt::from(n)),
            Repr::Str(s) => BigInt::from_str(s.trim()).map_err(D::Error::custom),
        }
    }
}

mod int_vec_serde {
    use super::*;

    pub fn serialize<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super::int_serde")] BigInt);
        let items = Vec::<Wrap>::deserialize(d)?;
        Ok(items.into_iter().map(|w| w.0).collect())
    }
}

/// Canonical vertex representation: the vertex list holds exactly the extreme
/// points, sorted lexicographically by coordinate tuple.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<QPoint>,
}

impl VPolytope {
    /// Canonicalizes an arbitrary nonempty point set: drops interior points,
    /// deduplicates and sorts.
    pub fn new(points: &[QPoint]) -> Result<Self, PolytopeError> {
        Ok(hull(points)?.0)
    }

    /// Wraps a vertex list already known to be extreme and sorted (products
    /// and slices preserve both properties).
    pub(crate) fn from_canonical_vertices(dim: usize, vertices: Vec<QPoint>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        VPolytope { dim, vertices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, p: &QPoint) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    pub fn affine_dimension(&self) -> usize {
        crate::kernel::affine_dimension(&self.vertices).expect("canonical polytope is nonempty")
    }
}

impl fmt::Debug for VPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VPolytope(dim {}, {:?})", self.dim, self.vertices)
    }
}

impl<'de> Deserialize<'de> for VPolytope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            dim: usize,
            vertices: Vec<QPoint>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.vertices.is_empty() {
            return Err(D::Error::custom("polytope needs at least one vertex"));
        }
        if raw.vertices.iter().any(|p| p.dim() != raw.dim) {
            return Err(D::Error::custom("vertex does not match ambient dimension"));
        }
        VPolytope::new(&raw.vertices).map_err(D::Error::custom)
    }
}

/// Inequality representation with explicit affine-hull equations.
///
/// A freshly deserialized system is raw; the canonical invariants hold for
/// systems produced by [`hull`].
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolytope {
    pub dim: usize,
    pub inequalities: Vec<Inequality>,
    #[serde(default)]
    pub equations: Vec<Equation>,
}

impl HPolytope {
    pub fn contains(&self, p: &QPoint) -> bool {
        self.inequalities.iter().all(|ineq| {
            rational_dot_int(p.coords(), &ineq.normal) <= Rational::from(ineq.rhs.clone())
        }) && self
            .equations
            .iter()
            .all(|eq| rational_dot_int(p.coords(), &eq.normal) == Rational::from(eq.rhs.clone()))
    }

    /// True iff the point satisfies the inequality with equality.
    fn tight(&self, p: &QPoint, facet: usize) -> bool {
        let ineq = &self.inequalities[facet];
        rational_dot_int(p.coords(), &ineq.normal) == Rational::from(ineq.rhs.clone())
    }
}

impl fmt::Debug for HPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HPolytope(dim {}, {} inequalities, {} equations)",
            self.dim,
            self.inequalities.len(),
            self.equations.len()
        )
    }
}

/// Vertex-facet incidence: `matrix[i][j]` is true iff vertex `i` satisfies
/// facet `j` with equality.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Incidence {
    pub matrix: Vec<Vec<bool>>,
}

impl Incidence {
    pub fn vertex_count(&self) -> usize {
        self.matrix.len()
    }

    pub fn facet_count(&self) -> usize {
        self.matrix.first().map_or(0, |r| r.len())
    }

    pub fn facet_vertex_set(&self, facet: usize) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.matrix[v][facet])
            .collect()
    }

    pub fn vertex_facet_set(&self, vertex: usize) -> Vec<usize> {
        (0..self.facet_count())
            .filter(|&f| self.matrix[vertex][f])
            .collect()
    }
}

fn rational_dot_int(coords: &[Rational], normal: &[BigInt]) -> Rational {
    coords
        .iter()
        .zip(normal)
        .fold(Rational::zero(), |acc, (c, n)| {
            acc + c * &Rational::from(n.clone())
        })
}

/// Scaled-RREF canonicalization of an equation system given as rational rows.
fn canonical_equations(rows: Vec<(Vec<Rational>, Rational)>) -> Vec<Equation> {
    let Some(ncols) = rows.first().map(|(n, _)| n.len()) else {
        return Vec::new();
    };
    let mut aug: Vec<Vec<Rational>> = rows
        .into_iter()
        .map(|(mut n, r)| {
            n.push(r);
            n
        })
        .collect();
    linalg::rref(&mut aug);
    let mut out: Vec<Equation> = aug
        .into_iter()
        .map(|row| {
            let ints = dd::clear_denominators(&row);
            Equation {
                normal: ints[..ncols].to_vec(),
                rhs: ints[ncols].clone(),
            }
        })
        .collect();
    out.sort();
    out
}

/// Convex hull: canonical V-representation and canonical irredundant
/// H-representation, with equations when the hull is not full-dimensional.
pub fn hull(points: &[QPoint]) -> Result<(VPolytope, HPolytope), PolytopeError> {
    let first = points.first().ok_or(PolytopeError::EmptyInput)?;
    let dim = first.dim();
    if points.iter().any(|p| p.dim() != dim) {
        return Err(PolytopeError::MixedDimensions);
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();

    // Affine hull: pivot columns of the direction space give coordinates in
    // which the hull is full-dimensional; the nullspace gives the equations.
    let base = pts[0].clone();
    let dirs: Vec<Vec<Rational>> = pts[1..].iter().map(|p| p.direction_from(&base)).collect();
    let mut dir_rref = dirs.clone();
    let free_cols = linalg::rref(&mut dir_rref);
    let k = free_cols.len();
    let equations = canonical_equations(
        linalg::nullspace(&dirs, dim)
            .into_iter()
            .map(|n| {
                let rhs = linalg::dot(&n, base.coords());
                (n, rhs)
            })
            .collect(),
    );

    if k == 0 {
        let h = HPolytope {
            dim,
            inequalities: Vec::new(),
            equations,
        };
        return Ok((VPolytope::from_canonical_vertices(dim, vec![base]), h));
    }

    // Facets of the full-dimensional image: extreme rays of the polar cone of
    // the points lifted to height one.
    let mut lifted: Vec<IntVec> = pts
        .iter()
        .map(|p| {
            let mut row = vec![Rational::one()];
            row.extend(p.select(&free_cols).into_coords());
            dd::clear_denominators(&row)
        })
        .collect();
    lifted.sort();
    lifted.dedup();
    let (lineality, rays) = dd::extreme_rays(&lifted, k + 1);
    debug_assert!(
        lineality.is_empty(),
        "polar cone of a spanning set is pointed"
    );

    let mut inequalities: Vec<Inequality> = rays
        .into_iter()
        .map(|ray| {
            let mut normal = vec![BigInt::zero(); dim];
            for (pos, &col) in free_cols.iter().enumerate() {
                normal[col] = -&ray[pos + 1];
            }
            Inequality {
                normal,
                rhs: ray[0].clone(),
            }
        })
        .collect();
    inequalities.sort();

    let h = HPolytope {
        dim,
        inequalities,
        equations,
    };

    // A point of the hull is a vertex iff its tight facet normals span the
    // affine hull's direction space.
    let vertices: Vec<QPoint> = pts
        .into_iter()
        .filter(|p| {
            let tight_rows: Vec<Vec<Rational>> = h
                .inequalities
                .iter()
                .filter(|ineq| {
                    rational_dot_int(p.coords(), &ineq.normal) == Rational::from(ineq.rhs.clone())
                })
                .map(|ineq| dd::to_rationals(&ineq.normal))
                .collect();
            linalg::rank(&tight_rows) == k
        })
        .collect();

    Ok((VPolytope::from_canonical_vertices(dim, vertices), h))
}

/// Exact vertex enumeration of an inequality system.
///
/// `Unbounded` signals a recession ray (for instance after a facet removal
/// broke boundedness), `Empty` an infeasible system.
pub fn vertices_of(h: &HPolytope) -> Result<VPolytope, PolytopeError> {
    let dim = h.dim;
    if h.inequalities
        .iter()
        .map(|i| &i.normal)
        .chain(h.equations.iter().map(|e| &e.normal))
        .any(|n| n.len() != dim)
    {
        return Err(PolytopeError::MalformedInput(
            "normal length does not match ambient dimension",
        ));
    }

    // Pin the equations first: the remaining system lives in the affine
    // subspace x = particular + N t.
    let (particular, basis) = if h.equations.is_empty() {
        let mut id = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::one();
            id.push(v);
        }
        (vec![Rational::zero(); dim], id)
    } else {
        let rows: Vec<Vec<Rational>> = h
            .equations
            .iter()
            .map(|e| dd::to_rationals(&e.normal))
            .collect();
        let rhs: Vec<Rational> = h
            .equations
            .iter()
            .map(|e| Rational::from(e.rhs.clone()))
            .collect();
        linalg::solve_affine(&rows, &rhs, dim).ok_or(PolytopeError::Empty)?
    };
    let k = basis.len();

    let assemble = |t: &[Rational]| -> QPoint {
        let mut coords = particular.clone();
        for (coef, b) in t.iter().zip(&basis) {
            for (c, bc) in coords.iter_mut().zip(b) {
                *c = &*c + &(coef * bc);
            }
        }
        QPoint::new(coords)
    };

    if k == 0 {
        let p = assemble(&[]);
        return if h.contains(&p) {
            Ok(VPolytope::from_canonical_vertices(dim, vec![p]))
        } else {
            Err(PolytopeError::Empty)
        };
    }

    // Homogenize: rows (rhs', -a') over (x0, t), plus x0 >= 0.
    let mut rows: Vec<IntVec> = Vec::with_capacity(h.inequalities.len() + 1);
    for ineq in &h.inequalities {
        let a = dd::to_rationals(&ineq.normal);
        let mut row = vec![Rational::from(ineq.rhs.clone()) - linalg::dot(&a, &particular)];
        for b in &basis {
            row.push(-linalg::dot(&a, b));
        }
        let int_row = dd::clear_denominators(&row);
        // all-zero rows are the tautology 0 <= 0; a constant negative row
        // survives as (-1, 0, ..) and empties the cone through x0 <= 0
        if int_row.iter().any(|x| !x.is_zero()) {
            rows.push(int_row);
        }
    }
    let mut x0_row = vec![BigInt::zero(); k + 1];
    x0_row[0] = BigInt::from(1);
    rows.push(x0_row);
    rows.sort();
    rows.dedup();

    let (lineality, rays) = dd::extreme_rays(&rows, k + 1);
    let mut vertices: Vec<QPoint> = Vec::new();
    let mut recession = false;
    for ray in &rays {
        if ray[0].is_zero() {
            recession = true;
        } else {
            let x0 = Rational::from(ray[0].clone());
            let t: Vec<Rational> = ray[1..]
                .iter()
                .map(|c| Rational::from(c.clone()) / x0.clone())
                .collect();
            vertices.push(assemble(&t));
        }
    }
    if vertices.is_empty() {
        return Err(PolytopeError::Empty);
    }
    if recession || !lineality.is_empty() {
        return Err(PolytopeError::Unbounded);
    }
    vertices.sort();
    vertices.dedup();
    Ok(VPolytope::from_canonical_vertices(dim, vertices))
}

/// Number of facets, relative to the affine hull fixed by the equations.
pub fn size(h: &HPolytope) -> usize {
    h.inequalities.len()
}

/// Orthogonal projection onto the first `k` coordinates, canonicalized.
pub fn project(p: &VPolytope, k: usize) -> Result<VPolytope, PolytopeError> {
    if k == 0 || k > p.dim() {
        return Err(PolytopeError::BadCoordinateCount);
    }
    let truncated: Vec<QPoint> = p.vertices().iter().map(|v| v.truncate(k)).collect();
    Ok(hull(&truncated)?.0)
}

/// Projection onto an arbitrary coordinate selection, canonicalized.
pub fn project_coords(p: &VPolytope, positions: &[usize]) -> Result<VPolytope, PolytopeError> {
    if positions.is_empty() || positions.iter().any(|&i| i >= p.dim()) {
        return Err(PolytopeError::BadCoordinateCount);
    }
    let selected: Vec<QPoint> = p.vertices().iter().map(|v| v.select(positions)).collect();
    Ok(hull(&selected)?.0)
}

/// Exact vertex-facet incidence of a canonical (V, H) pair.
pub fn incidence(p: &VPolytope, h: &HPolytope) -> Result<Incidence, PolytopeError> {
    if p.dim() != h.dim {
        return Err(PolytopeError::RepresentationMismatch);
    }
    let mut matrix = Vec::with_capacity(p.vertex_count());
    for v in p.vertices() {
        if !h.contains(v) {
            return Err(PolytopeError::RepresentationMismatch);
        }
        matrix.push((0..h.inequalities.len()).map(|j| h.tight(v, j)).collect());
    }
    Ok(Incidence { matrix })
}

/// True iff the polytope has a face whose vertex set is exactly `subset`.
///
/// The smallest face containing `subset` is the intersection of all facets
/// containing it; the subset is a face iff that intersection adds no further
/// vertices.
pub fn is_face(p: &VPolytope, h: &HPolytope, subset: &[usize]) -> Result<bool, PolytopeError> {
    if subset.is_empty() {
        return Err(PolytopeError::PreconditionViolated(
            "subset must be nonempty",
        ));
    }
    if subset.iter().any(|&i| i >= p.vertex_count()) {
        return Err(PolytopeError::IndexOutOfRange);
    }
    let inc = incidence(p, h)?;
    let carriers: Vec<usize> = (0..inc.facet_count())
        .filter(|&f| subset.iter().all(|&v| inc.matrix[v][f]))
        .collect();
    let mut face: Vec<usize> = (0..p.vertex_count())
        .filter(|&v| carriers.iter().all(|&f| inc.matrix[v][f]))
        .collect();
    face.sort_unstable();
    let mut wanted = subset.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    Ok(face == wanted)
}
