//! Combinatorial sphere embeddings stored as rotation systems.
//!
//! Every edge is a pair of darts. Each vertex keeps its darts in
//! counterclockwise order; faces are traced with the rule
//! `next(u -> v) = v -> pred_ccw(u)`, which walks each face with its
//! interior on the left. All derived structure (faces, face membership of
//! darts) is computed once at construction and the value is immutable
//! afterwards.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type DartId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    NeighborOutOfRange { vertex: VertexId, neighbor: VertexId },
    #[error("vertex {0} is adjacent to itself")]
    Loop(VertexId),
    #[error("edge {0}-{1} is listed more than once")]
    MultiEdge(VertexId, VertexId),
    #[error("edge {0}-{1} is not listed at both endpoints")]
    Asymmetric(VertexId, VertexId),
    #[error("dart {0} is missing, duplicated, or has an invalid twin")]
    BadDart(DartId),
    #[error("graph is not connected")]
    Disconnected,
    #[error("rotation system is not a sphere embedding (V - E + F = {0})")]
    NotSpherical(i64),
    #[error("operation requires a 2-connected graph")]
    NotTwoConnected,
}

/// A dart seen as (tail vertex, position in the tail's rotation).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart {
    pub vertex: VertexId,
    pub slot: usize,
}

/// A face as the cyclic sequence of darts bounding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<DartId>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.darts.len()
    }
}

#[derive(Clone)]
pub struct RotationSystem {
    rot: Vec<Vec<DartId>>,
    tail: Vec<VertexId>,
    slot: Vec<usize>,
    twin: Vec<DartId>,
    faces: Vec<Face>,
    face_of: Vec<FaceId>,
}

impl fmt::Debug for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RotationSystem")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edge_count())
            .field("faces", &self.face_count())
            .field("rotations", &self.rotations())
            .finish()
    }
}

impl RotationSystem {
    /// Builds a simple graph from per-vertex cyclic neighbor lists
    /// (counterclockwise embedding order).
    pub fn from_rotations(rotations: Vec<Vec<VertexId>>) -> Result<Self, EmbeddingError> {
        let n = rotations.len();
        if n == 0 {
            return Err(EmbeddingError::Empty);
        }
        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0);
        for (v, nbrs) in rotations.iter().enumerate() {
            for (i, &w) in nbrs.iter().enumerate() {
                if w >= n {
                    return Err(EmbeddingError::NeighborOutOfRange { vertex: v, neighbor: w });
                }
                if w == v {
                    return Err(EmbeddingError::Loop(v));
                }
                if nbrs[..i].contains(&w) {
                    return Err(EmbeddingError::MultiEdge(v, w));
                }
            }
            offset.push(offset[v] + nbrs.len());
        }
        let mut rot = Vec::with_capacity(n);
        let mut twin = vec![usize::MAX; offset[n]];
        for (v, nbrs) in rotations.iter().enumerate() {
            rot.push((offset[v]..offset[v + 1]).collect::<Vec<_>>());
            for (i, &w) in nbrs.iter().enumerate() {
                let back = rotations[w]
                    .iter()
                    .position(|&x| x == v)
                    .ok_or(EmbeddingError::Asymmetric(v, w))?;
                twin[offset[v] + i] = offset[w] + back;
            }
        }
        Self::from_darts(rot, twin)
    }

    /// Builds a (possibly non-simple) embedding from explicit darts: the
    /// counterclockwise dart list of every vertex and the twin involution.
    pub fn from_darts(rot: Vec<Vec<DartId>>, twin: Vec<DartId>) -> Result<Self, EmbeddingError> {
        if rot.is_empty() {
            return Err(EmbeddingError::Empty);
        }
        let m = twin.len();
        let mut tail = vec![usize::MAX; m];
        let mut slot = vec![usize::MAX; m];
        for (v, darts) in rot.iter().enumerate() {
            for (i, &d) in darts.iter().enumerate() {
                if d >= m || tail[d] != usize::MAX {
                    return Err(EmbeddingError::BadDart(d));
                }
                tail[d] = v;
                slot[d] = i;
            }
        }
        for d in 0..m {
            let t = twin[d];
            if tail[d] == usize::MAX || t >= m || t == d || twin[t] != d {
                return Err(EmbeddingError::BadDart(d));
            }
        }
        let mut g = RotationSystem { rot, tail, slot, twin, faces: Vec::new(), face_of: Vec::new() };
        if !g.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        g.trace_faces_internal();
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + g.face_count() as i64;
        if chi != 2 {
            return Err(EmbeddingError::NotSpherical(chi));
        }
        Ok(g)
    }

    fn trace_faces_internal(&mut self) {
        let m = self.twin.len();
        let mut face_of = vec![usize::MAX; m];
        let mut faces = Vec::new();
        for start in 0..m {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                darts.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            faces.push(Face { darts });
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in &self.rot[v] {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rot[v].len()
    }

    pub fn darts_at(&self, v: VertexId) -> &[DartId] {
        &self.rot[v]
    }

    /// Neighbors of `v` in counterclockwise order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rot[v].iter().map(move |&d| self.head(d))
    }

    pub fn tail(&self, d: DartId) -> VertexId {
        self.tail[d]
    }

    pub fn head(&self, d: DartId) -> VertexId {
        self.tail[self.twin[d]]
    }

    pub fn twin(&self, d: DartId) -> DartId {
        self.twin[d]
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart { vertex: self.tail[d], slot: self.slot[d] }
    }

    pub fn dart_id(&self, dart: Dart) -> DartId {
        self.rot[dart.vertex][dart.slot]
    }

    /// Next dart counterclockwise around the tail of `d`.
    pub fn succ(&self, d: DartId) -> DartId {
        let v = self.tail[d];
        let k = self.rot[v].len();
        self.rot[v][(self.slot[d] + 1) % k]
    }

    /// Previous dart counterclockwise around the tail of `d`.
    pub fn pred(&self, d: DartId) -> DartId {
        let v = self.tail[d];
        let k = self.rot[v].len();
        self.rot[v][(self.slot[d] + k - 1) % k]
    }

    /// Successor of `d` along the face on its left.
    pub fn next_in_face(&self, d: DartId) -> DartId {
        self.pred(self.twin[d])
    }

    /// Predecessor of `d` along the face on its left.
    pub fn prev_in_face(&self, d: DartId) -> DartId {
        self.twin[self.succ(d)]
    }

    /// The dart `u -> v`, if the edge exists.
    pub fn find_dart(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.rot[u].iter().copied().find(|&d| self.head(d) == v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.find_dart(u, v).is_some()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face_of[d]
    }

    /// Vertices of a face in traversal (counterclockwise) order.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f].darts.iter().map(|&d| self.tail[d]).collect()
    }

    /// Faces incident to `v`, in counterclockwise order.
    pub fn faces_at(&self, v: VertexId) -> impl Iterator<Item = FaceId> + '_ {
        self.rot[v].iter().map(move |&d| self.face_of[d])
    }

    /// One representative dart per edge (the one with the smaller id).
    pub fn edge_darts(&self) -> impl Iterator<Item = DartId> + '_ {
        (0..self.twin.len()).filter(move |&d| d < self.twin[d])
    }

    /// Edges as `(u, v)` pairs, one per edge.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.edge_darts().map(|d| (self.tail(d), self.head(d))).collect()
    }

    /// Per-vertex counterclockwise neighbor lists.
    pub fn rotations(&self) -> Vec<Vec<VertexId>> {
        (0..self.vertex_count()).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn is_simple(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            let nbrs: Vec<_> = self.neighbors(v).collect();
            nbrs.iter().enumerate().all(|(i, &w)| w != v && !nbrs[..i].contains(&w))
        })
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.rot.iter().all(|r| r.len() == k)
    }

    pub fn is_trivalent(&self) -> bool {
        self.is_regular(3)
    }

    pub fn max_degree(&self) -> usize {
        self.rot.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rot.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Histogram of face sizes: `census[k]` faces of size `k`.
    pub fn face_size_census(&self) -> Vec<usize> {
        let max = self.faces.iter().map(Face::size).max().unwrap_or(0);
        let mut census = vec![0; max + 1];
        for f in &self.faces {
            census[f.size()] += 1;
        }
        census
    }

    /// Histogram of vertex degrees.
    pub fn degree_census(&self) -> Vec<usize> {
        let mut census = vec![0; self.max_degree() + 1];
        for r in &self.rot {
            census[r.len()] += 1;
        }
        census
    }

    /// The same graph with every rotation reversed.
    pub fn mirror(&self) -> RotationSystem {
        let rot = self.rot.iter().map(|r| r.iter().rev().copied().collect()).collect();
        RotationSystem::from_darts(rot, self.twin.clone()).expect("mirror of a valid embedding")
    }

    /// Renames vertex `v` to `perm[v]`, keeping every rotation.
    pub fn relabel(&self, perm: &[VertexId]) -> RotationSystem {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n);
        let mut rotations = vec![Vec::new(); n];
        for v in 0..n {
            rotations[perm[v]] = self.neighbors(v).map(|w| perm[w]).collect();
        }
        RotationSystem::from_rotations(rotations).expect("relabeling a simple embedding")
    }

    /// True when no single vertex disconnects the graph.
    pub fn is_two_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 2 {
            return n == 2 || n == 1;
        }
        // iterative Hopcroft-Tarjan articulation point search
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut root_children = 0;
        let mut stack: Vec<(VertexId, DartId, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = 0;
        low[0] = 0;
        time += 1;
        while let Some(&mut (v, parent_dart, ref mut idx)) = stack.last_mut() {
            if *idx < self.rot[v].len() {
                let d = self.rot[v][*idx];
                *idx += 1;
                if parent_dart != usize::MAX && d == self.twin[parent_dart] {
                    continue;
                }
                let w = self.head(d);
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, d, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= disc[p] {
                        return false;
                    }
                }
            }
        }
        root_children <= 1
    }

    /// True when `faces` are pairwise vertex-disjoint and cover every
    /// vertex exactly once.
    pub fn is_perfect_clar_structure(&self, faces: &[FaceId]) -> bool {
        let mut hit = vec![0u8; self.vertex_count()];
        for &f in faces {
            if f >= self.face_count() {
                return false;
            }
            for &d in &self.faces[f].darts {
                hit[self.tail[d]] += 1;
            }
        }
        hit.iter().all(|&h| h == 1)
    }
}

/// Dual embedding: one vertex per face, one edge per edge. Dart ids are
/// preserved, so dart `d` of the dual crosses dart `d` of `g` and leaves
/// the dual vertex of `g.face_of(d)`.
pub fn dual(g: &RotationSystem) -> Result<RotationSystem, EmbeddingError> {
    if !g.is_two_connected() {
        return Err(EmbeddingError::NotTwoConnected);
    }
    let rot = g.faces.iter().map(|f| f.darts.clone()).collect();
    RotationSystem::from_darts(rot, g.twin.clone())
}

/// Truncation: vertex `d` of the result sits on dart `d` of `g`, next to
/// its tail. Vertex `d` is adjacent to `twin(d)` and to the two darts
/// neighboring `d` in its tail's rotation.
pub fn truncate(g: &RotationSystem) -> Result<RotationSystem, EmbeddingError> {
    if !g.is_two_connected() {
        return Err(EmbeddingError::NotTwoConnected);
    }
    let m = g.dart_count();
    // new dart 3t + 0 -> twin(t), 3t + 1 -> succ(t), 3t + 2 -> pred(t)
    let rot = (0..m).map(|t| vec![3 * t, 3 * t + 1, 3 * t + 2]).collect();
    let mut twin = vec![0; 3 * m];
    for t in 0..m {
        twin[3 * t] = 3 * g.twin(t);
        twin[3 * t + 1] = 3 * g.succ(t) + 2;
        twin[3 * t + 2] = 3 * g.pred(t) + 1;
    }
    RotationSystem::from_darts(rot, twin)
}

/// Leapfrog: truncation of the dual. Vertex `d` of the result corresponds
/// to dart `d` of `g`; the faces of `g` reappear as faces spanned by their
/// darts and each vertex of degree `k` becomes a face of size `2k`.
pub fn leapfrog(g: &RotationSystem) -> Result<RotationSystem, EmbeddingError> {
    truncate(&dual(g)?)
}

/// The unique 2-coloring of a connected bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part_a: Vec<VertexId>,
    pub part_b: Vec<VertexId>,
    side: Vec<bool>,
}

impl Bipartition {
    /// `false` for the part containing vertex 0.
    pub fn side(&self, v: VertexId) -> bool {
        self.side[v]
    }
}

pub fn bipartition(g: &RotationSystem) -> Option<Bipartition> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    color[0] = Some(false);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let c = color[v].unwrap();
        for w in g.neighbors(v) {
            match color[w] {
                None => {
                    color[w] = Some(!c);
                    queue.push_back(w);
                }
                Some(cw) if cw == c => return None,
                Some(_) => {}
            }
        }
    }
    let side: Vec<bool> = color.into_iter().map(Option::unwrap).collect();
    let part_a = (0..n).filter(|&v| !side[v]).collect();
    let part_b = (0..n).filter(|&v| side[v]).collect();
    Some(Bipartition { part_a, part_b, side })
}

/// A proper 3-coloring of the faces of a trivalent embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceColoring {
    pub color: Vec<u8>,
}

impl FaceColoring {
    /// Faces of each color, in id order.
    pub fn classes(&self) -> [Vec<FaceId>; 3] {
        let mut classes: [Vec<FaceId>; 3] = Default::default();
        for (f, &c) in self.color.iter().enumerate() {
            classes[c as usize].push(f);
        }
        classes
    }

    pub fn class_of(&self, f: FaceId) -> usize {
        self.color[f] as usize
    }
}

/// Face 3-coloring of a trivalent embedding, present exactly when every
/// face has even size. Colors are normalized so face 0 gets color 0 and the
/// face across its first dart gets color 1; any other valid coloring is a
/// permutation of this one.
pub fn face_three_coloring(g: &RotationSystem) -> Option<FaceColoring> {
    if !g.is_trivalent() || g.faces().iter().any(|f| f.size() % 2 == 1) {
        return None;
    }
    let nf = g.face_count();
    let mut color = vec![u8::MAX; nf];
    color[0] = 0;
    let across = g.face_of(g.twin(g.face(0).darts[0]));
    color[across] = 1;
    // repeatedly complete vertices with two colored faces
    let mut queue: VecDeque<VertexId> = g
        .face(0)
        .darts
        .iter()
        .map(|&d| g.tail(d))
        .chain(g.face(across).darts.iter().map(|&d| g.tail(d)))
        .collect();
    while let Some(v) = queue.pop_front() {
        let fs: Vec<FaceId> = g.faces_at(v).collect();
        let colored: Vec<FaceId> = fs.iter().copied().filter(|&f| color[f] != u8::MAX).collect();
        match colored.len() {
            2 => {
                let (a, b) = (color[colored[0]], color[colored[1]]);
                if a == b {
                    return None;
                }
                let free = fs.iter().copied().find(|&f| color[f] == u8::MAX).unwrap();
                color[free] = 3 - a - b;
                queue.extend(g.face(free).darts.iter().map(|&d| g.tail(d)));
            }
            3 => {
                let mut cs: Vec<u8> = fs.iter().map(|&f| color[f]).collect();
                cs.sort_unstable();
                if cs != [0, 1, 2] {
                    return None;
                }
            }
            _ => {}
        }
    }
    if color.contains(&u8::MAX) {
        return None;
    }
    for v in 0..g.vertex_count() {
        let mut cs: Vec<u8> = g.faces_at(v).map(|f| color[f]).collect();
        cs.sort_unstable();
        if cs != [0, 1, 2] {
            return None;
        }
    }
    Some(FaceColoring { color })
}

/// Isomorphism invariant of an embedded graph (mirror images identified).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(pub Vec<u32>);

impl CanonicalCode {
    /// Compact hexadecimal digest-free rendering, for file output.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|x| format!("{x:x}")).collect::<Vec<_>>().join(".")
    }
}

#[derive(Clone, Copy)]
enum Orientation {
    Ccw,
    Cw,
}

/// BFS code from one start dart; aborts as soon as the code exceeds `best`.
/// Returns `None` when aborted.
fn bfs_code(
    g: &RotationSystem,
    start: DartId,
    orient: Orientation,
    best: Option<&[u32]>,
    number: &mut [u32],
    out: &mut Vec<u32>,
) -> bool {
    out.clear();
    number.iter_mut().for_each(|x| *x = 0);
    let mut queue = VecDeque::new();
    let mut next = 1;
    number[g.tail(start)] = next;
    next += 1;
    queue.push_back(start);
    let mut tie = best.is_some();
    let push = |out: &mut Vec<u32>, x: u32, tie: &mut bool| -> bool {
        if *tie {
            let b = best.unwrap()[out.len()];
            if x > b {
                return false;
            }
            if x < b {
                *tie = false;
            }
        }
        out.push(x);
        true
    };
    while let Some(d0) = queue.pop_front() {
        let k = g.degree(g.tail(d0));
        let mut d = d0;
        for _ in 0..k {
            let w = g.head(d);
            if number[w] == 0 {
                number[w] = next;
                next += 1;
                queue.push_back(g.twin(d));
            }
            if !push(out, number[w], &mut tie) {
                return false;
            }
            d = match orient {
                Orientation::Ccw => g.succ(d),
                Orientation::Cw => g.pred(d),
            };
        }
        if !push(out, 0, &mut tie) {
            return false;
        }
    }
    true
}

/// Lexicographically smallest BFS dart code over all start darts and both
/// orientations. Complete for simple graphs: equal codes iff the
/// embeddings are isomorphic or mirror images.
pub fn canonical_code(g: &RotationSystem) -> CanonicalCode {
    code_over(g, &[Orientation::Ccw, Orientation::Cw])
}

/// Like [`canonical_code`] but keeps orientation, so the two mirror images
/// of a chiral embedding get different codes.
pub fn oriented_canonical_code(g: &RotationSystem) -> CanonicalCode {
    code_over(g, &[Orientation::Ccw])
}

fn code_over(g: &RotationSystem, orients: &[Orientation]) -> CanonicalCode {
    let mut number = vec![0u32; g.vertex_count()];
    let mut best: Option<Vec<u32>> = None;
    let mut buf = Vec::with_capacity(g.dart_count() + g.vertex_count());
    for start in 0..g.dart_count() {
        for &orient in orients {
            if bfs_code(g, start, orient, best.as_deref(), &mut number, &mut buf) {
                if best.as_ref().is_none_or(|b| buf < *b) {
                    best = Some(buf.clone());
                }
            }
        }
    }
    let mut code = vec![g.vertex_count() as u32, g.edge_count() as u32];
    code.extend(best.unwrap_or_default());
    CanonicalCode(code)
}

pub fn isomorphic(a: &RotationSystem, b: &RotationSystem) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.degree_census() == b.degree_census()
        && a.face_size_census() == b.face_size_census()
        && canonical_code(a) == canonical_code(b)
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn cube_faces() {
        let g = cube();
        assert_eq!(g.face_count(), 6);
        assert!(g.faces().iter().all(|f| f.size() == 4));
        assert!(g.is_two_connected());
    }

    #[test]
    fn tetrahedron_self_dual() {
        let t = tetrahedron();
        let d = dual(&t).unwrap();
        assert_eq!(d.vertex_count(), 4);
        assert!(isomorphic(&t, &d));
    }

    #[test]
    fn cube_dual_is_octahedron() {
        let o = dual(&cube()).unwrap();
        assert_eq!(o.vertex_count(), 6);
        assert!(o.is_regular(4));
        assert!(o.faces().iter().all(|f| f.size() == 3));
        assert!(isomorphic(&dual(&o).unwrap(), &cube()));
    }

    #[test]
    fn truncated_tetrahedron_and_cube() {
        let tt = truncate(&tetrahedron()).unwrap();
        assert_eq!(tt.vertex_count(), 12);
        assert!(tt.is_trivalent());
        assert_eq!(tt.face_size_census(), vec![0, 0, 0, 4, 0, 0, 4]);
        let tc = truncate(&cube()).unwrap();
        assert_eq!(tc.vertex_count(), 24);
        let census = tc.face_size_census();
        assert_eq!(census[3], 8);
        assert_eq!(census[8], 6);
    }

    #[test]
    fn bipartition_cube_and_tetrahedron() {
        let b = bipartition(&cube()).unwrap();
        assert_eq!(b.part_a.len(), 4);
        assert!(bipartition(&tetrahedron()).is_none());
    }

    #[test]
    fn cube_face_coloring_pairs_opposite_faces() {
        let g = cube();
        let col = face_three_coloring(&g).unwrap();
        for class in col.classes() {
            assert_eq!(class.len(), 2);
            assert!(g.is_perfect_clar_structure(&class));
        }
        assert!(face_three_coloring(&tetrahedron()).is_none());
    }

    #[test]
    fn canonical_code_relabel_and_mirror() {
        let g = cube();
        let perm = [5, 2, 7, 0, 1, 6, 3, 4];
        assert_eq!(canonical_code(&g), canonical_code(&g.relabel(&perm)));
        assert_eq!(canonical_code(&g), canonical_code(&g.mirror()));
        assert_ne!(canonical_code(&g), canonical_code(&truncate(&tetrahedron()).unwrap()));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            RotationSystem::from_rotations(vec![vec![1], vec![]]).unwrap_err(),
            EmbeddingError::Asymmetric(0, 1)
        );
        assert_eq!(
            RotationSystem::from_rotations(vec![vec![0]]).unwrap_err(),
            EmbeddingError::Loop(0)
        );
        assert!(matches!(
            RotationSystem::from_rotations(vec![vec![1], vec![0], vec![3], vec![2]]),
            Err(EmbeddingError::Disconnected)
        ));
        // K4 with a non-planar rotation
        let bad = RotationSystem::from_rotations(vec![
            vec![1, 2, 3],
            vec![0, 2, 3],
            vec![0, 1, 3],
            vec![0, 1, 2],
        ]);
        assert!(matches!(bad, Err(EmbeddingError::NotSpherical(_))));
    }

    #[test]
    fn path_is_not_two_connected() {
        // a tree is still a valid sphere embedding
        let p = RotationSystem::from_rotations(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(p.face_count(), 1);
        assert!(!p.is_two_connected());
        assert_eq!(dual(&p).unwrap_err(), EmbeddingError::NotTwoConnected);
    }
}
