//! Reverse leapfrog and the parent graph of a Clar cover.

use serde::Serialize;

use super::expand::{expand, FaceOrigin};
use super::TransformError;
use crate::clar::ClarCover;
use crate::embedding::{bipartition, FaceId, RotationSystem, VertexId};
use crate::fullerene::Fullerene;

/// Result of undoing a leapfrog. Vertex `i` of `graph` is the face
/// `vertex_face[i]` of the input; face `j` of `graph` corresponds to the
/// perfect-Clar-structure face `face_face[j]`.
#[derive(Debug, Clone)]
pub struct ReverseLeapfrog {
    pub graph: RotationSystem,
    pub vertex_face: Vec<FaceId>,
    pub face_face: Vec<FaceId>,
}

/// Graph whose leapfrog is `g`, given a perfect Clar structure `pcs` of
/// `g`: one vertex per face outside `pcs`, adjacent across shared edges,
/// with rotations following the face boundaries.
pub fn reverse_leapfrog(g: &RotationSystem, pcs: &[FaceId]) -> Result<ReverseLeapfrog, TransformError> {
    if !g.is_trivalent() || !g.is_perfect_clar_structure(pcs) {
        return Err(TransformError::NotPerfectClarStructure);
    }
    let mut in_pcs = vec![false; g.face_count()];
    for &f in pcs {
        in_pcs[f] = true;
    }
    let vertex_face: Vec<FaceId> = (0..g.face_count()).filter(|&f| !in_pcs[f]).collect();
    let mut new_dart = vec![usize::MAX; g.dart_count()];
    let mut count = 0;
    for d in 0..g.dart_count() {
        if !in_pcs[g.face_of(d)] && !in_pcs[g.face_of(g.twin(d))] {
            new_dart[d] = count;
            count += 1;
        }
    }
    let rot: Vec<Vec<usize>> = vertex_face
        .iter()
        .map(|&f| g.face(f).darts.iter().filter(|&&d| new_dart[d] != usize::MAX).map(|&d| new_dart[d]).collect())
        .collect();
    let mut twin = vec![0; count];
    for d in 0..g.dart_count() {
        if new_dart[d] != usize::MAX {
            twin[new_dart[d]] = new_dart[g.twin(d)];
        }
    }
    let graph = RotationSystem::from_darts(rot, twin)?;
    if !graph.is_simple() {
        return Err(TransformError::ParentNotSimple);
    }

    let mut pcs_at = vec![usize::MAX; g.vertex_count()];
    for &f in pcs {
        for v in g.face_vertices(f) {
            pcs_at[v] = f;
        }
    }
    let mut old_dart = vec![0; count];
    for d in 0..g.dart_count() {
        if new_dart[d] != usize::MAX {
            old_dart[new_dart[d]] = d;
        }
    }
    // a parent face surrounds the pcs face its crossed edges all touch
    let face_face = (0..graph.face_count())
        .map(|pf| {
            let ends = |nd: usize| {
                let d = old_dart[nd];
                [pcs_at[g.tail(d)], pcs_at[g.head(d)]]
            };
            let darts = &graph.face(pf).darts;
            let a = ends(darts[0]);
            let b = ends(darts[1 % darts.len()]);
            if b.contains(&a[0]) {
                a[0]
            } else {
                a[1]
            }
        })
        .collect();
    Ok(ReverseLeapfrog { graph, vertex_face, face_face })
}

/// Structural class of a parent graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParentClass {
    /// All vertices of degree 3: a (4,6)-fullerene.
    Z6,
    /// Two degree-4 vertices, one per partite set, each on at least two
    /// quadrilaterals.
    F4,
    /// Two degree-5 vertices, one per partite set, each on at least four
    /// quadrilaterals.
    F2a,
    /// Two degree-4 vertices in one partite set and a degree-5 vertex in the
    /// other.
    F2b,
    /// Four degree-4 vertices, two per partite set.
    F2c,
    None,
}

impl ParentClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ParentClass::Z6 => "Z6",
            ParentClass::F4 => "F4",
            ParentClass::F2a => "F2-a",
            ParentClass::F2b => "F2-b",
            ParentClass::F2c => "F2-c",
            ParentClass::None => "none",
        }
    }
}

/// A plane graph of quadrilaterals and hexagons, with optional links back
/// to the fullerene and cover it came from.
#[derive(Debug, Clone)]
pub struct ParentGraph {
    pub graph: RotationSystem,
    pub quads: Vec<FaceId>,
    pub hexagons: Vec<FaceId>,
    /// Fullerene face behind each vertex.
    pub vertex_origin: Option<Vec<FaceId>>,
    /// Matching edge behind each quadrilateral, parallel to `quads`.
    pub quad_origin: Option<Vec<(VertexId, VertexId)>>,
    pub class: ParentClass,
}

impl ParentGraph {
    /// Wraps a plane graph read from elsewhere. Faces other than
    /// quadrilaterals and hexagons are allowed but force class `None`.
    pub fn from_graph(graph: RotationSystem) -> Self {
        let quads = (0..graph.face_count()).filter(|&f| graph.face(f).size() == 4).collect();
        let hexagons = (0..graph.face_count()).filter(|&f| graph.face(f).size() == 6).collect();
        let mut p = ParentGraph { graph, quads, hexagons, vertex_origin: None, quad_origin: None, class: ParentClass::None };
        p.class = classify_parent(&p);
        p
    }

    pub fn quad_count(&self) -> usize {
        self.quads.len()
    }

    pub fn hex_count(&self) -> usize {
        self.hexagons.len()
    }

    pub fn degree_census(&self) -> Vec<usize> {
        self.graph.degree_census()
    }

    /// Number of quadrilaterals at each vertex.
    pub fn quad_incidence(&self) -> Vec<usize> {
        let mut inc = vec![0; self.graph.vertex_count()];
        for &q in &self.quads {
            for v in self.graph.face_vertices(q) {
                inc[v] += 1;
            }
        }
        inc
    }
}

/// Expansion followed by reverse leapfrog with the cover faces and the
/// quadrilaterals as perfect Clar structure.
pub fn parent_of(f: &Fullerene, cover: &ClarCover) -> Result<ParentGraph, TransformError> {
    let e = expand(f, cover)?;
    let rl = reverse_leapfrog(&e.graph, &e.clar_structure())?;
    let g = rl.graph;
    let mut quads = Vec::new();
    let mut quad_origin = Vec::new();
    let mut hexagons = Vec::new();
    for (pf, &ef) in rl.face_face.iter().enumerate() {
        match e.provenance[ef] {
            FaceOrigin::MatchingEdge(k) => {
                quads.push(pf);
                quad_origin.push(cover.matching[k]);
            }
            FaceOrigin::Face(_) => hexagons.push(pf),
        }
    }
    let vertex_origin = rl
        .vertex_face
        .iter()
        .map(|&ef| match e.provenance[ef] {
            FaceOrigin::Face(of) => of,
            FaceOrigin::MatchingEdge(_) => unreachable!("quadrilaterals belong to the Clar structure"),
        })
        .collect();
    let mut p = ParentGraph {
        graph: g,
        quads,
        hexagons,
        vertex_origin: Some(vertex_origin),
        quad_origin: Some(quad_origin),
        class: ParentClass::None,
    };
    p.class = classify_parent(&p);
    Ok(p)
}

/// Matches the degree census, quadrilateral incidences and partite-set
/// placement against the known parent classes.
pub fn classify_parent(p: &ParentGraph) -> ParentClass {
    let g = &p.graph;
    if g.faces().iter().any(|f| f.size() != 4 && f.size() != 6) || g.min_degree() < 3 || g.max_degree() > 6 {
        return ParentClass::None;
    }
    let Some(parts) = bipartition(g) else {
        return ParentClass::None;
    };
    let inc = p.quad_incidence();
    let special: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.degree(v) != 3).collect();
    let deg = |v: VertexId| g.degree(v);
    let quads_ok = special.iter().all(|&v| match deg(v) {
        4 => inc[v] >= 2,
        5 => inc[v] >= 4,
        _ => false,
    });
    if !quads_ok && !special.is_empty() {
        return ParentClass::None;
    }
    let side = |v: VertexId| parts.side(v);
    let mut degs: Vec<usize> = special.iter().map(|&v| deg(v)).collect();
    degs.sort_unstable();
    match degs.as_slice() {
        [] => ParentClass::Z6,
        [4, 4] if side(special[0]) != side(special[1]) => ParentClass::F4,
        [5, 5] if side(special[0]) != side(special[1]) => ParentClass::F2a,
        [4, 4, 5] => {
            let five = *special.iter().find(|&&v| deg(v) == 5).unwrap();
            let fours: Vec<VertexId> = special.iter().copied().filter(|&v| deg(v) == 4).collect();
            if side(fours[0]) == side(fours[1]) && side(fours[0]) != side(five) {
                ParentClass::F2b
            } else {
                ParentClass::None
            }
        }
        [4, 4, 4, 4] => {
            let a = special.iter().filter(|&&v| side(v)).count();
            if a == 2 {
                ParentClass::F2c
            } else {
                ParentClass::None
            }
        }
        _ => ParentClass::None,
    }
}
