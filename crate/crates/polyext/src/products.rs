//! Prism products and the slice machinery: `P x [0,1]^d`, the two slice
//! faces at the distinguished coordinate, the facet-counting inequality
//! they satisfy, vertex partitions, and the hidden-vertex fraction.
//!
//! The vertex set of `P x [0,1]` is exactly the vertex set of `P` crossed
//! with `{0,1}`, so prisms are built directly on the vertex list without a
//! hull round trip.

use serde::Serialize;
use thiserror::Error;

use crate::extensions::{self, ExtensionError};
use crate::kernel::{QPoint, Rational};
use crate::polytope::{self, hull, incidence, PolytopeError, VPolytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("dimension outside the supported range")]
    BadDimension,
    #[error("coordinate index out of range or value outside [0,1]")]
    CoordinateOutOfRange,
    #[error("the requested slice is not a face")]
    NotAFace,
    #[error("the slice contains no vertices")]
    EmptySlice,
    #[error("the candidate is not an extension of the target")]
    NotAnExtension,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

impl From<ExtensionError> for ProductError {
    fn from(e: ExtensionError) -> Self {
        match e {
            ExtensionError::Polytope(p) => ProductError::Polytope(p),
            _ => ProductError::NotAnExtension,
        }
    }
}

/// `P x [0,1]` with the interval coordinate inserted at position `pos`
/// (0-based; `pos = dim` appends). Keeping an extension's auxiliary block
/// behind the new coordinate is what `pos < dim` is for.
pub fn prism_at(p: &VPolytope, pos: usize) -> Result<VPolytope, ProductError> {
    if pos > p.dim() {
        return Err(ProductError::CoordinateOutOfRange);
    }
    let mut vertices = Vec::with_capacity(2 * p.vertex_count());
    for v in p.vertices() {
        for bit in [Rational::zero(), Rational::one()] {
            let mut coords = v.coords().to_vec();
            coords.insert(pos, bit);
            vertices.push(QPoint::new(coords));
        }
    }
    vertices.sort();
    Ok(VPolytope::from_canonical_vertices(p.dim() + 1, vertices))
}

/// `P x [0,1]` with the interval appended as the last coordinate.
pub fn prism(p: &VPolytope) -> VPolytope {
    prism_at(p, p.dim()).expect("appending is always in range")
}

/// `P x [0,1]^d` by d-fold appending; `d <= 6`.
pub fn power_prism(p: &VPolytope, d: usize) -> Result<VPolytope, ProductError> {
    if d > 6 {
        return Err(ProductError::BadDimension);
    }
    let mut out = p.clone();
    for _ in 0..d {
        out = prism(&out);
    }
    Ok(out)
}

/// Vertex indices split by the distinguished coordinate: exactly 0, exactly
/// 1, or strictly between.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexPartition {
    pub v0: Vec<usize>,
    pub v1: Vec<usize>,
    pub vstar: Vec<usize>,
}

/// Exact three-way partition of the vertices by the value at `coord`;
/// any value outside `[0,1]` is an error.
pub fn vertex_partition(q: &VPolytope, coord: usize) -> Result<VertexPartition, ProductError> {
    if coord >= q.dim() {
        return Err(ProductError::CoordinateOutOfRange);
    }
    let zero = Rational::zero();
    let one = Rational::one();
    let mut part = VertexPartition {
        v0: Vec::new(),
        v1: Vec::new(),
        vstar: Vec::new(),
    };
    for (i, v) in q.vertices().iter().enumerate() {
        let c = v.coord(coord);
        if *c < zero || *c > one {
            return Err(ProductError::CoordinateOutOfRange);
        }
        if *c == zero {
            part.v0.push(i);
        } else if *c == one {
            part.v1.push(i);
        } else {
            part.vstar.push(i);
        }
    }
    Ok(part)
}

/// The faces `{x_coord = 0}` and `{x_coord = 1}` of `q`, kept in the full
/// ambient space. Both hyperplanes must be supporting (all coordinate
/// values inside `[0,1]`) and both slices nonempty.
pub fn slice_faces(q: &VPolytope, coord: usize) -> Result<(VPolytope, VPolytope), ProductError> {
    if coord >= q.dim() {
        return Err(ProductError::CoordinateOutOfRange);
    }
    let zero = Rational::zero();
    let one = Rational::one();
    if q.vertices()
        .iter()
        .any(|v| *v.coord(coord) < zero || *v.coord(coord) > one)
    {
        return Err(ProductError::NotAFace);
    }
    let collect = |value: &Rational| -> Vec<QPoint> {
        q.vertices()
            .iter()
            .filter(|v| v.coord(coord) == value)
            .cloned()
            .collect()
    };
    let f0 = collect(&zero);
    let f1 = collect(&one);
    if f0.is_empty() || f1.is_empty() {
        return Err(ProductError::EmptySlice);
    }
    // vertices of a face of q are exactly q's vertices on it, already sorted
    Ok((
        VPolytope::from_canonical_vertices(q.dim(), f0),
        VPolytope::from_canonical_vertices(q.dim(), f1),
    ))
}

/// `|hidden_vertices(q, p)| / |vertices(q)|`.
pub fn hidden_fraction(q: &VPolytope, p: &VPolytope) -> Result<Rational, ProductError> {
    let hidden = extensions::hidden_vertices(q, p)?;
    Ok(Rational::from_integer(hidden.len() as i64)
        / Rational::from_integer(q.vertex_count() as i64))
}

/// Facet bookkeeping for the two slices of an extension of `P x [0,1]`.
///
/// `k` counts the facets of `q`; `f0`, `f1` those of the slices; `c_i` the
/// facets containing slice `i` entirely and `d_i` the facets disjoint from
/// it. The reported inequality is `f_i <= k - c_i - d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceLemmaReport {
    pub k: usize,
    pub f0: usize,
    pub f1: usize,
    pub c0: usize,
    pub c1: usize,
    pub d0: usize,
    pub d1: usize,
    pub inequality_holds: [bool; 2],
    pub slices_are_extensions: [bool; 2],
}

/// Verifies the slice bookkeeping for `q` as an extension of `p x [0,1]`
/// with the interval at position `coord`.
///
/// The extension check projects onto `p`'s coordinates plus `coord`, so an
/// auxiliary block may sit between them; the slices themselves are checked
/// as prefix extensions of `p`.
pub fn verify_slice_lemma(
    q: &VPolytope,
    p: &VPolytope,
    coord: usize,
) -> Result<SliceLemmaReport, ProductError> {
    let base_dim = p.dim();
    if coord < base_dim || coord >= q.dim() {
        return Err(ProductError::CoordinateOutOfRange);
    }
    let mut selection: Vec<usize> = (0..base_dim).collect();
    selection.push(coord);
    let shadow = polytope::project_coords(q, &selection)?;
    if shadow != prism(p) {
        return Err(ProductError::NotAnExtension);
    }

    let (q_v, q_h) = hull(q.vertices())?;
    let k = polytope::size(&q_h);
    let (f0_poly, f1_poly) = slice_faces(&q_v, coord)?;
    let facet_count = |poly: &VPolytope| -> Result<usize, ProductError> {
        Ok(polytope::size(&hull(poly.vertices())?.1))
    };
    let f0 = facet_count(&f0_poly)?;
    let f1 = facet_count(&f1_poly)?;

    let inc = incidence(&q_v, &q_h)?;
    let slice_indices = |poly: &VPolytope| -> Vec<usize> {
        poly.vertices()
            .iter()
            .map(|v| {
                q_v.vertices()
                    .binary_search(v)
                    .expect("slice vertices are vertices of q")
            })
            .collect()
    };
    let idx0 = slice_indices(&f0_poly);
    let idx1 = slice_indices(&f1_poly);
    let count_c = |idx: &[usize]| {
        (0..k)
            .filter(|&f| idx.iter().all(|&v| inc.matrix[v][f]))
            .count()
    };
    let count_d = |idx: &[usize]| {
        (0..k)
            .filter(|&f| idx.iter().all(|&v| !inc.matrix[v][f]))
            .count()
    };
    let (c0, d0) = (count_c(&idx0), count_d(&idx0));
    let (c1, d1) = (count_c(&idx1), count_d(&idx1));

    let ext0 = matches!(extensions::is_extension(&f0_poly, p), Ok(true));
    let ext1 = matches!(extensions::is_extension(&f1_poly, p), Ok(true));

    Ok(SliceLemmaReport {
        k,
        f0,
        f1,
        c0,
        c1,
        d0,
        d1,
        inequality_holds: [f0 + c0 + d0 <= k, f1 + c1 + d1 <= k],
        slices_are_extensions: [ext0, ext1],
    })
}
