//! Widening the matching edges of a Clar cover into quadrilaterals, and
//! the associated graph recording which faces those edges join.

use std::collections::BTreeMap;

use super::TransformError;
use crate::clar::{verify_clar_cover, ClarCover};
use crate::embedding::{FaceId, RotationSystem, VertexId};
use crate::fullerene::Fullerene;

/// Where a face of an expansion comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceOrigin {
    /// A face of the fullerene, possibly grown by the widened edges.
    Face(FaceId),
    /// The quadrilateral of the matching edge with this index.
    MatchingEdge(usize),
}

#[derive(Debug, Clone)]
pub struct ExpansionResult {
    pub graph: RotationSystem,
    /// One quadrilateral per matching edge, in matching order.
    pub quads: Vec<FaceId>,
    /// The cover faces, as faces of `graph`.
    pub faces: Vec<FaceId>,
    pub provenance: Vec<FaceOrigin>,
    /// Copy of each vertex: `split[v]` is the new vertex created when `v`
    /// is matched (the other copy keeps id `v`).
    pub split: Vec<Option<VertexId>>,
}

impl ExpansionResult {
    /// Cover faces together with the quadrilaterals.
    pub fn clar_structure(&self) -> Vec<FaceId> {
        let mut all: Vec<FaceId> = self.faces.iter().chain(&self.quads).copied().collect();
        all.sort_unstable();
        all
    }

    /// Face of the expansion a fullerene face grew into.
    pub fn image_of(&self, f: FaceId) -> Option<FaceId> {
        self.provenance.iter().position(|&o| o == FaceOrigin::Face(f))
    }
}

/// Splits every matched vertex in two and turns each matching edge into a
/// quadrilateral. A matched vertex `u` with rotation `[v, a, b]` (`v` its
/// mate) becomes `u` adjacent to `a` and `u'` adjacent to `b`; the faces
/// on either side of `uv` keep their size and the face between `a` and `b`
/// grows by one.
pub fn expand(f: &Fullerene, cover: &ClarCover) -> Result<ExpansionResult, TransformError> {
    let report = verify_clar_cover(f, cover);
    if !report.is_valid() {
        return Err(TransformError::InvalidCover(report));
    }
    let g = f.graph();
    let n = g.vertex_count();
    let mut mate = vec![None; n];
    let mut split = vec![None; n];
    for (k, &(u, v)) in cover.matching.iter().enumerate() {
        mate[u] = Some(v);
        mate[v] = Some(u);
        split[u] = Some(n + 2 * k);
        split[v] = Some(n + 2 * k + 1);
    }

    // copy of x that keeps the edge towards y
    let holder = |x: VertexId, y: VertexId| -> VertexId {
        match mate[x] {
            None => x,
            Some(m) => {
                let i = g.neighbors(x).position(|w| w == m).unwrap();
                let b = g.neighbors(x).nth((i + 2) % 3).unwrap();
                if y == b {
                    split[x].unwrap()
                } else {
                    x
                }
            }
        }
    };

    let total = n + 2 * cover.matching.len();
    let mut rot = vec![Vec::new(); total];
    for x in 0..n {
        match mate[x] {
            None => rot[x] = g.neighbors(x).map(|y| holder(y, x)).collect(),
            Some(m) => {
                let i = g.neighbors(x).position(|w| w == m).unwrap();
                let a = g.neighbors(x).nth((i + 1) % 3).unwrap();
                let b = g.neighbors(x).nth((i + 2) % 3).unwrap();
                let (x2, m2) = (split[x].unwrap(), split[m].unwrap());
                rot[x] = vec![m2, holder(a, x), x2];
                rot[x2] = vec![x, holder(b, x), m];
            }
        }
    }
    let graph = RotationSystem::from_rotations(rot)?;

    let mut provenance = vec![None; graph.face_count()];
    let mut quads = Vec::with_capacity(cover.matching.len());
    for (k, &(u, v)) in cover.matching.iter().enumerate() {
        let d = graph.find_dart(split[v].unwrap(), u).expect("quad side exists");
        let q = graph.face_of(d);
        provenance[q] = Some(FaceOrigin::MatchingEdge(k));
        quads.push(q);
    }
    for d in g.edge_darts() {
        let (x, y) = (g.tail(d), g.head(d));
        if mate[x] == Some(y) {
            continue;
        }
        let (hx, hy) = (holder(x, y), holder(y, x));
        for (s, t, orig) in [(hx, hy, d), (hy, hx, g.twin(d))] {
            let nd = graph.find_dart(s, t).expect("unmatched edge survives");
            provenance[graph.face_of(nd)] = Some(FaceOrigin::Face(g.face_of(orig)));
        }
    }
    let provenance: Vec<FaceOrigin> = provenance.into_iter().map(|o| o.expect("every face has an origin")).collect();
    let mut image = BTreeMap::new();
    for (nf, o) in provenance.iter().enumerate() {
        if let FaceOrigin::Face(of) = o {
            image.insert(*of, nf);
        }
    }
    let faces = cover.faces.iter().map(|h| image[h]).collect();
    Ok(ExpansionResult { graph, quads, faces, provenance, split })
}

/// Graph on the faces of a fullerene that matching edges exit, with one
/// edge per matching edge joining the two faces it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MAssociatedGraph {
    /// Fullerene face behind each vertex, ascending.
    pub vertices: Vec<FaceId>,
    /// Edges as vertex-index pairs, one per matching edge, in matching order.
    pub edges: Vec<(usize, usize)>,
}

impl MAssociatedGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == i || b == i).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// `census[d]` = number of vertices of degree `d`.
    pub fn degree_census(&self) -> Vec<usize> {
        let deg = self.degrees();
        let mut census = vec![0; deg.iter().max().map_or(1, |&m| m + 1)];
        for d in deg {
            census[d] += 1;
        }
        census
    }

    pub fn odd_vertices(&self) -> usize {
        self.degrees().iter().filter(|&&d| d % 2 == 1).count()
    }

    /// Connected components as edge lists over local vertex ids `0..k`.
    pub fn components(&self) -> Vec<super::shapes::SmallGraph> {
        let k = self.vertices.len();
        let mut comp = vec![usize::MAX; k];
        let mut count = 0;
        for s in 0..k {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(a, b) in &self.edges {
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|c| {
                let members: Vec<usize> = (0..k).filter(|&v| comp[v] == c).collect();
                let local = |v: usize| members.iter().position(|&m| m == v).unwrap();
                let edges = self
                    .edges
                    .iter()
                    .filter(|&&(a, _)| comp[a] == c)
                    .map(|&(a, b)| (local(a), local(b)))
                    .collect();
                super::shapes::SmallGraph::new(members.len(), edges)
            })
            .collect()
    }
}

/// Face a matched vertex's edge exits at that vertex: the face not
/// containing the matching edge.
pub(crate) fn exited_face(g: &RotationSystem, u: VertexId, v: VertexId) -> FaceId {
    let d = g.find_dart(u, v).expect("matching edge is an edge");
    g.face_of(g.succ(d))
}

pub fn m_associated(f: &Fullerene, cover: &ClarCover) -> Result<MAssociatedGraph, TransformError> {
    let report = verify_clar_cover(f, cover);
    if !report.is_valid() {
        return Err(TransformError::InvalidCover(report));
    }
    let g = f.graph();
    let ends: Vec<(FaceId, FaceId)> =
        cover.matching.iter().map(|&(u, v)| (exited_face(g, u, v), exited_face(g, v, u))).collect();
    let mut vertices: Vec<FaceId> = ends.iter().flat_map(|&(a, b)| [a, b]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let idx = |x: FaceId| vertices.binary_search(&x).unwrap();
    let mut edges = Vec::with_capacity(ends.len());
    let mut seen = BTreeMap::new();
    for &(a, b) in &ends {
        if a == b {
            return Err(TransformError::NotSimple { first: a, second: b });
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key, ()).is_some() {
            return Err(TransformError::NotSimple { first: key.0, second: key.1 });
        }
        edges.push((idx(a), idx(b)));
    }
    Ok(MAssociatedGraph { vertices, edges })
}
