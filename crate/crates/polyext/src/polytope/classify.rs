//! Combinatorial classification of 3-polytopes with six facets and at least
//! seven vertices, plus the counting helpers for simplex/halfspace cuts in
//! dimension four.

use serde::Serialize;

use super::{incidence, HPolytope, PolytopeError, VPolytope};

/// The four combinatorial types of 3-polytopes with exactly 6 facets and at
/// least 7 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CombinatorialType3D {
    A,
    B,
    C,
    D,
}

/// Reference vertex-facet structures, one per type, stored as facet vertex
/// sets. Each was generated from a small rational realization by running the
/// hull and reading off the incidence (the realizations live in the test
/// suite and re-derive these tables).
///
/// A: 8 vertices, all facets quadrilaterals (the cube).
/// B: 8 vertices, facet sizes 3,3,4,4,5,5.
/// C: 7 vertices, facet sizes 3,3,3,4,4,5.
/// D: 7 vertices, facet sizes 3,3,4,4,4,4.
const REFERENCES: [(CombinatorialType3D, usize, [&[usize]; 6]); 4] = [
    (
        CombinatorialType3D::A,
        8,
        [
            &[0, 1, 2, 3],
            &[0, 1, 4, 5],
            &[0, 2, 4, 6],
            &[1, 3, 5, 7],
            &[2, 3, 6, 7],
            &[4, 5, 6, 7],
        ],
    ),
    (
        CombinatorialType3D::B,
        8,
        [
            &[0, 1, 2, 3, 4],
            &[0, 1, 5, 6],
            &[0, 4, 5, 7],
            &[1, 2, 6],
            &[2, 3, 5, 6, 7],
            &[3, 4, 7],
        ],
    ),
    (
        CombinatorialType3D::C,
        7,
        [
            &[0, 1, 2, 3, 4],
            &[0, 1, 5],
            &[0, 4, 5],
            &[1, 2, 5, 6],
            &[2, 3, 6],
            &[3, 4, 5, 6],
        ],
    ),
    (
        CombinatorialType3D::D,
        7,
        [
            &[0, 1, 2, 3],
            &[0, 1, 4, 5],
            &[0, 3, 4, 6],
            &[1, 2, 5, 6],
            &[2, 3, 6],
            &[4, 5, 6],
        ],
    ),
];

/// Classifies a 3-polytope with exactly 6 facets and at least 7 vertices by
/// vertex-facet incidence isomorphism against the stored references.
pub fn classify_6facet_3polytope(
    p: &VPolytope,
    h: &HPolytope,
) -> Result<CombinatorialType3D, PolytopeError> {
    if p.affine_dimension() != 3 || h.inequalities.len() != 6 || p.vertex_count() < 7 {
        return Err(PolytopeError::PreconditionViolated(
            "expected a 3-polytope with exactly 6 facets and at least 7 vertices",
        ));
    }
    let inc = incidence(p, h)?;
    let facets: Vec<Vec<usize>> = (0..inc.facet_count())
        .map(|f| inc.facet_vertex_set(f))
        .collect();
    for (ty, nverts, reference) in REFERENCES {
        if p.vertex_count() == nverts && incidence_isomorphic(&facets, nverts, &reference) {
            return Ok(ty);
        }
    }
    // the reference list is exhaustive for this facet/vertex regime
    Err(PolytopeError::UnknownType)
}

fn incidence_isomorphic(facets: &[Vec<usize>], nverts: usize, reference: &[&[usize]]) -> bool {
    incidence_isomorphism(facets, nverts, reference).is_some()
}

/// Bipartite isomorphism between two facet-list descriptions on the same
/// number of vertices: a facet bijection must induce a vertex bijection.
/// Backtracks over facet assignments; at most 6 facets, so brute force is
/// plenty. On success returns the vertex map `local index -> reference label`.
pub(crate) fn incidence_isomorphism(
    facets: &[Vec<usize>],
    nverts: usize,
    reference: &[&[usize]],
) -> Option<Vec<usize>> {
    incidence_isomorphisms(facets, nverts, reference)
        .into_iter()
        .next()
}

/// All vertex maps realizing an incidence isomorphism; distinct maps
/// correspond to the combinatorial automorphisms of the reference.
pub(crate) fn incidence_isomorphisms(
    facets: &[Vec<usize>],
    nverts: usize,
    reference: &[&[usize]],
) -> Vec<Vec<usize>> {
    if facets.len() != reference.len() {
        return Vec::new();
    }
    if reference
        .iter()
        .flat_map(|f| f.iter())
        .any(|&v| v >= nverts)
        || facets.iter().flat_map(|f| f.iter()).any(|&v| v >= nverts)
    {
        return Vec::new();
    }

    fn vertex_map(
        facets: &[Vec<usize>],
        nverts: usize,
        reference: &[&[usize]],
        assignment: &[usize],
    ) -> Option<Vec<usize>> {
        // a vertex is determined by its set of incident facets; the facet
        // bijection must carry each signature onto a unique reference vertex
        let mut ref_by_signature: std::collections::BTreeMap<Vec<usize>, usize> =
            std::collections::BTreeMap::new();
        let mut ref_signatures: Vec<Vec<usize>> = vec![Vec::new(); nverts];
        for (f, verts) in reference.iter().enumerate() {
            for &v in *verts {
                ref_signatures[v].push(f);
            }
        }
        for (v, sig) in ref_signatures.into_iter().enumerate() {
            if ref_by_signature.insert(sig, v).is_some() {
                return None; // degenerate reference
            }
        }
        let mut signatures: Vec<Vec<usize>> = vec![Vec::new(); nverts];
        for (f, verts) in facets.iter().enumerate() {
            for &v in verts {
                signatures[v].push(assignment[f]);
            }
        }
        let mut map = Vec::with_capacity(nverts);
        let mut taken = vec![false; nverts];
        for mut sig in signatures {
            sig.sort_unstable();
            let &target = ref_by_signature.get(&sig)?;
            if taken[target] {
                return None;
            }
            taken[target] = true;
            map.push(target);
        }
        Some(map)
    }

    fn backtrack(
        facets: &[Vec<usize>],
        nverts: usize,
        reference: &[&[usize]],
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        found: &mut Vec<Vec<usize>>,
    ) {
        if depth == facets.len() {
            if let Some(map) = vertex_map(facets, nverts, reference, assignment) {
                found.push(map);
            }
            return;
        }
        for target in 0..reference.len() {
            if used[target] || facets[depth].len() != reference[target].len() {
                continue;
            }
            assignment[depth] = target;
            used[target] = true;
            backtrack(
                facets,
                nverts,
                reference,
                assignment,
                used,
                depth + 1,
                found,
            );
            used[target] = false;
        }
    }

    let mut assignment = vec![0usize; facets.len()];
    let mut used = vec![false; facets.len()];
    let mut found = Vec::new();
    backtrack(
        facets,
        nverts,
        reference,
        &mut assignment,
        &mut used,
        0,
        &mut found,
    );
    found.sort();
    found.dedup();
    found
}

/// Vertex count of a 4-simplex cut by a halfspace, where `k` simplex vertices
/// lie on the boundary hyperplane and `t` lie strictly outside.
pub fn simplex_cut_vertex_count(k: u32, t: u32) -> Result<u32, PolytopeError> {
    if t < 1 || k + t > 5 {
        return Err(PolytopeError::BadParameters);
    }
    Ok((5 - t) + (5 - k - t) * t)
}

/// All `(k, t)` with at least 7 resulting vertices, in `(t, k)` order.
pub fn enumerate_feasible_kt() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for t in 1..=5u32 {
        for k in 0..=(5 - t) {
            if simplex_cut_vertex_count(k, t).expect("in range") >= 7 {
                out.push((k, t));
            }
        }
    }
    out
}
