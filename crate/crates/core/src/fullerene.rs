//! Fullerene validation, face spirals, isomer enumeration and cyclic
//! edge cuts.
//!
//! A face spiral lists the faces of a fullerene so that every face after
//! the second touches the previous one and the oldest face of the open
//! boundary. Wind-up rebuilds the dual triangulation from the sequence of
//! face sizes; the fullerene is its dual.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::embedding::{self, canonical_code, CanonicalCode, EmbeddingError, FaceId, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FullereneError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotTrivalent { vertex: usize, degree: usize },
    #[error("face {face} has size {size}, expected 5 or 6")]
    BadFace { face: FaceId, size: usize },
    #[error("found {0} pentagons, expected 12")]
    PentagonCount(usize),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpiralError {
    #[error("spiral needs 12 strictly increasing pentagon positions in 1..={max}")]
    BadPositions { max: usize },
    #[error("order {0} is not an even number of at least 20")]
    BadOrder(usize),
    #[error("wind-up failed at face {face}: {reason}")]
    Windup { face: usize, reason: &'static str },
    #[error(transparent)]
    Invalid(#[from] FullereneError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {0} is outside the enumeration budget ({1})")]
    Budget(usize, &'static str),
    #[error("cyclic cut search over {subsets} edge subsets exceeds the budget of {budget}")]
    CutBudget { subsets: u128, budget: u128 },
}

/// A validated fullerene: trivalent, only pentagons and hexagons, exactly
/// twelve pentagons.
#[derive(Debug, Clone)]
pub struct Fullerene {
    graph: RotationSystem,
    pentagons: Vec<FaceId>,
    hexagons: Vec<FaceId>,
    label: Option<String>,
}

pub fn validate_fullerene(g: RotationSystem) -> Result<Fullerene, FullereneError> {
    for v in 0..g.vertex_count() {
        if g.degree(v) != 3 {
            return Err(FullereneError::NotTrivalent { vertex: v, degree: g.degree(v) });
        }
    }
    let mut pentagons = Vec::new();
    let mut hexagons = Vec::new();
    for (f, face) in g.faces().iter().enumerate() {
        match face.size() {
            5 => pentagons.push(f),
            6 => hexagons.push(f),
            size => return Err(FullereneError::BadFace { face: f, size }),
        }
    }
    if pentagons.len() != 12 {
        return Err(FullereneError::PentagonCount(pentagons.len()));
    }
    Ok(Fullerene { graph: g, pentagons, hexagons, label: None })
}

impl Fullerene {
    pub fn graph(&self) -> &RotationSystem {
        &self.graph
    }

    pub fn into_graph(self) -> RotationSystem {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn pentagons(&self) -> &[FaceId] {
        &self.pentagons
    }

    pub fn hexagons(&self) -> &[FaceId] {
        &self.hexagons
    }

    pub fn is_pentagon(&self, f: FaceId) -> bool {
        self.graph.face(f).size() == 5
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_code(&self.graph)
    }

    /// Lexicographically smallest face spiral over all starts and both
    /// orientations. `None` only for fullerenes without any spiral.
    pub fn spiral(&self) -> Option<SpiralCode> {
        let tri = embedding::dual(&self.graph).ok()?;
        canonical_spiral(&tri, None).map(|sizes| SpiralCode::from_sizes(&sizes))
    }
}

pub fn is_ipr(f: &Fullerene) -> bool {
    let g = f.graph();
    g.edge_darts().all(|d| {
        !(f.is_pentagon(g.face_of(d)) && f.is_pentagon(g.face_of(g.twin(d))))
    })
}

/// Pentagon positions (1-based) of a face spiral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpiralCode {
    pub pentagons: [usize; 12],
}

impl SpiralCode {
    pub fn new(positions: &[usize]) -> Result<Self, SpiralError> {
        let bad = SpiralError::BadPositions { max: usize::MAX };
        let pentagons: [usize; 12] = positions.try_into().map_err(|_| bad.clone())?;
        if pentagons[0] == 0 || pentagons.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad);
        }
        Ok(SpiralCode { pentagons })
    }

    fn from_sizes(sizes: &[u8]) -> Self {
        let pos: Vec<usize> =
            sizes.iter().enumerate().filter(|(_, &s)| s == 5).map(|(i, _)| i + 1).collect();
        SpiralCode::new(&pos).expect("spiral with twelve pentagons")
    }

    /// Face sizes of the spiral for a fullerene on `n` vertices.
    pub fn face_sizes(&self, n: usize) -> Result<Vec<u8>, SpiralError> {
        if n < 20 || n % 2 == 1 {
            return Err(SpiralError::BadOrder(n));
        }
        let faces = n / 2 + 2;
        if self.pentagons[11] > faces {
            return Err(SpiralError::BadPositions { max: faces });
        }
        let mut sizes = vec![6u8; faces];
        for &p in &self.pentagons {
            sizes[p - 1] = 5;
        }
        Ok(sizes)
    }
}

impl fmt::Display for SpiralCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pentagons.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Incremental wind-up of a face spiral into the dual triangulation.
/// Neighbor lists are kept counterclockwise as ring buffers so that a
/// partial state is a handful of flat vectors, cheap to copy.
#[derive(Clone, Default)]
struct Windup {
    sizes: Vec<u8>,
    rem: Vec<i8>,
    ring: Vec<[u16; RING]>,
    head: Vec<u8>,
    len: Vec<u8>,
    boundary: VecDeque<u16>,
    ipr: bool,
}

const RING: usize = 16;

#[derive(Debug, Clone, Copy)]
struct WindupFailure(&'static str);

impl Windup {
    fn new(capacity: usize, ipr: bool) -> Self {
        Windup {
            sizes: Vec::with_capacity(capacity),
            rem: Vec::with_capacity(capacity),
            ring: Vec::with_capacity(capacity),
            head: Vec::with_capacity(capacity),
            len: Vec::with_capacity(capacity),
            boundary: VecDeque::with_capacity(capacity),
            ipr,
        }
    }

    fn faces(&self) -> usize {
        self.sizes.len()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        let h = self.head[a] as usize;
        (0..self.len[a] as usize).any(|i| self.ring[a][(h + i) % RING] as usize == b)
    }

    fn push_back(&mut self, a: usize, b: usize) {
        let h = self.head[a] as usize;
        let l = self.len[a] as usize;
        self.ring[a][(h + l) % RING] = b as u16;
        self.len[a] += 1;
    }

    fn push_front(&mut self, a: usize, b: usize) {
        let h = (self.head[a] as usize + RING - 1) % RING;
        self.ring[a][h] = b as u16;
        self.head[a] = h as u8;
        self.len[a] += 1;
    }

    /// Joins new face `k` to `other`. `back_side` tells whether `other`
    /// lies clockwise (back of the boundary) or counterclockwise (front)
    /// of the faces `k` already touches.
    fn link(&mut self, k: usize, other: usize, back_side: bool) -> Result<(), WindupFailure> {
        if self.adjacent(k, other) {
            return Err(WindupFailure("face would touch the same neighbor twice"));
        }
        if self.ipr && self.sizes[k] == 5 && self.sizes[other] == 5 {
            return Err(WindupFailure("adjacent pentagons"));
        }
        self.rem[k] -= 1;
        self.rem[other] -= 1;
        if self.rem[k] < 0 || self.rem[other] < 0 {
            return Err(WindupFailure("face exceeds its size"));
        }
        if back_side {
            self.push_front(k, other);
            self.push_back(other, k);
        } else {
            self.push_back(k, other);
            self.push_front(other, k);
        }
        Ok(())
    }

    fn place(&mut self, size: u8) -> Result<(), WindupFailure> {
        if size as usize > RING {
            return Err(WindupFailure("face too large"));
        }
        let k = self.sizes.len();
        self.sizes.push(size);
        self.rem.push(size as i8);
        self.ring.push([0; RING]);
        self.head.push(0);
        self.len.push(0);
        match k {
            0 => {}
            1 => self.link(1, 0, true)?,
            _ => {
                let back = *self.boundary.back().unwrap() as usize;
                let front = *self.boundary.front().unwrap() as usize;
                self.link(k, back, true)?;
                if front != back {
                    self.link(k, front, false)?;
                }
                loop {
                    let front = *self.boundary.front().unwrap() as usize;
                    let back = *self.boundary.back().unwrap() as usize;
                    if self.boundary.len() >= 2 && self.rem[front] == 0 {
                        self.boundary.pop_front();
                        if self.boundary.len() >= 2 {
                            let nf = *self.boundary.front().unwrap() as usize;
                            self.link(k, nf, false)?;
                        }
                        continue;
                    }
                    if self.boundary.len() >= 2 && self.rem[back] == 0 {
                        self.boundary.pop_back();
                        if self.boundary.len() >= 2 {
                            let nb = *self.boundary.back().unwrap() as usize;
                            self.link(k, nb, true)?;
                        }
                        continue;
                    }
                    break;
                }
            }
        }
        self.boundary.push_back(k as u16);
        Ok(())
    }

    fn closed(&self) -> bool {
        self.rem.iter().all(|&r| r == 0)
    }

    fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.faces())
            .map(|a| {
                let h = self.head[a] as usize;
                (0..self.len[a] as usize).map(|i| self.ring[a][(h + i) % RING] as usize).collect()
            })
            .collect()
    }
}

/// Winds up a sequence of face sizes into the dual triangulation (one
/// vertex per face, in spiral order).
pub fn windup(sizes: &[u8]) -> Result<RotationSystem, SpiralError> {
    if sizes.len() < 3 {
        return Err(SpiralError::Windup { face: sizes.len(), reason: "too few faces" });
    }
    let mut state = Windup::new(sizes.len(), false);
    for (i, &s) in sizes.iter().enumerate() {
        if i > 0 && i < sizes.len() && state.faces() > 2 && state.closed() {
            return Err(SpiralError::Windup { face: i + 1, reason: "premature closure" });
        }
        state.place(s).map_err(|e| SpiralError::Windup { face: i + 1, reason: e.0 })?;
    }
    if !state.closed() {
        return Err(SpiralError::Windup { face: sizes.len(), reason: "boundary left open" });
    }
    RotationSystem::from_rotations(state.rotations())
        .map_err(|_| SpiralError::Windup { face: sizes.len(), reason: "not a sphere" })
}

/// Rebuilds a fullerene on `n` vertices from its pentagon positions.
pub fn unwind_spiral(code: &SpiralCode, n: usize) -> Result<Fullerene, SpiralError> {
    let sizes = code.face_sizes(n)?;
    let tri = windup(&sizes)?;
    let g = embedding::dual(&tri).map_err(FullereneError::from)?;
    Ok(validate_fullerene(g)?)
}

/// The spiral of face sizes obtained by starting on dart `start` of the
/// triangulation `tri` (first two faces are its tail and head) and turning
/// to the left or right third face. `bound` aborts early once the sequence
/// exceeds it lexicographically.
fn spiral_from(
    tri: &RotationSystem,
    start: usize,
    left: bool,
    bound: Option<&[u8]>,
    out: &mut Vec<u8>,
) -> bool {
    let nf = tri.vertex_count();
    out.clear();
    let mut placed = vec![false; nf];
    let mut open: Vec<usize> = (0..nf).map(|v| tri.degree(v)).collect();
    let mut boundary: VecDeque<usize> = VecDeque::new();
    let mut tie = bound.is_some();
    let mut emit = |out: &mut Vec<u8>, s: u8| -> bool {
        if tie {
            let b = bound.unwrap()[out.len()];
            if s > b {
                return false;
            }
            if s < b {
                tie = false;
            }
        }
        out.push(s);
        true
    };
    let mut place = |v: usize,
                     placed: &mut Vec<bool>,
                     open: &mut Vec<usize>,
                     boundary: &mut VecDeque<usize>,
                     out: &mut Vec<u8>|
     -> bool {
        if !emit(out, tri.degree(v) as u8) {
            return false;
        }
        placed[v] = true;
        for w in tri.neighbors(v) {
            open[w] -= 1;
        }
        loop {
            if boundary.len() >= 2 && open[*boundary.front().unwrap()] == 0 {
                boundary.pop_front();
                continue;
            }
            if boundary.len() >= 2 && open[*boundary.back().unwrap()] == 0 {
                boundary.pop_back();
                continue;
            }
            break;
        }
        boundary.push_back(v);
        true
    };
    let a = tri.tail(start);
    let b = tri.head(start);
    if !place(a, &mut placed, &mut open, &mut boundary, out) {
        return false;
    }
    if !place(b, &mut placed, &mut open, &mut boundary, out) {
        return false;
    }
    for k in 2..nf {
        let back = *boundary.back().unwrap();
        let front = *boundary.front().unwrap();
        let Some(d) = tri.find_dart(back, front) else { return false };
        let l = tri.head(tri.next_in_face(d));
        let r = tri.head(tri.next_in_face(tri.twin(d)));
        let next = match (placed[l], placed[r]) {
            (false, false) if k == 2 => {
                if left {
                    l
                } else {
                    r
                }
            }
            (false, true) => l,
            (true, false) => r,
            _ => return false,
        };
        if !place(next, &mut placed, &mut open, &mut boundary, out) {
            return false;
        }
    }
    true
}

/// Smallest face-size sequence over every start dart and both turning
/// directions. With `candidate`, returns `None` as soon as some spiral is
/// strictly smaller than it.
fn canonical_spiral(tri: &RotationSystem, candidate: Option<&[u8]>) -> Option<Vec<u8>> {
    let mut best: Option<Vec<u8>> = candidate.map(|c| c.to_vec());
    let mut found_smaller = false;
    let mut buf = Vec::with_capacity(tri.vertex_count());
    for start in 0..tri.dart_count() {
        for left in [true, false] {
            if spiral_from(tri, start, left, best.as_deref(), &mut buf) {
                if best.as_ref().is_none_or(|b| buf < *b) {
                    best = Some(buf.clone());
                    found_smaller = true;
                    if candidate.is_some() {
                        return None;
                    }
                }
            }
        }
    }
    let _ = found_smaller;
    best
}

/// A fullerene found by enumeration, with its canonical spiral.
#[derive(Debug, Clone)]
pub struct EnumeratedIsomer {
    pub spiral: SpiralCode,
    pub code: CanonicalCode,
    pub fullerene: Fullerene,
}

/// Largest order the general enumerator accepts.
pub const GENERAL_ENUMERATION_MAX: usize = 60;

/// Fails when `enumerate_fullerenes(n)` would refuse `n`.
pub fn check_enumerable(n: usize) -> Result<(), EnumerationError> {
    if n % 2 == 1 || !(20..=GENERAL_ENUMERATION_MAX).contains(&n) {
        return Err(EnumerationError::Budget(n, "general enumeration needs an even n in 20..=60"));
    }
    Ok(())
}

/// All fullerene isomers on `n` vertices, sorted by canonical code.
pub fn enumerate_fullerenes(n: usize) -> Result<Vec<Fullerene>, EnumerationError> {
    check_enumerable(n)?;
    let mut isomers = spiral_search(n, false);
    isomers.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(isomers.into_iter().map(|i| i.fullerene).collect())
}

/// Isolated-pentagon isomers on `n` vertices in the order of their
/// canonical spirals; isomer `m` (1-based) is the one usually called
/// `Cn:m`.
pub fn enumerate_ipr_fullerenes(n: usize) -> Result<Vec<EnumeratedIsomer>, EnumerationError> {
    if n % 2 == 1 || !(60..=100).contains(&n) {
        return Err(EnumerationError::Budget(n, "IPR enumeration needs an even n in 60..=100"));
    }
    let mut isomers = spiral_search(n, true);
    isomers.sort_by(|a, b| a.spiral.cmp(&b.spiral));
    Ok(isomers
        .into_iter()
        .enumerate()
        .map(|(i, mut iso)| {
            iso.fullerene = iso.fullerene.with_label(format!("C{n}:{}", i + 1));
            iso
        })
        .collect())
}

/// Exhaustive search over pentagon placements. A complete wind-up is kept
/// only if it is the smallest spiral of its graph, so each isomer is found
/// once; the result is additionally deduplicated by canonical code.
fn spiral_search(n: usize, ipr: bool) -> Vec<EnumeratedIsomer> {
    let faces = n / 2 + 2;
    // split the search tree on its first few levels for the worker pool
    let split = 10.min(faces);
    let mut prefixes: Vec<Windup> = vec![Windup::new(faces, ipr)];
    for _ in 0..split {
        let mut next = Vec::new();
        for st in prefixes {
            for size in [5u8, 6] {
                let mut child = st.clone();
                if feasible_size(&child, size, faces) && child.place(size).is_ok() {
                    next.push(child);
                }
            }
        }
        prefixes = next;
    }
    let found: Vec<EnumeratedIsomer> = prefixes
        .into_par_iter()
        .flat_map_iter(|st| {
            let mut out = Vec::new();
            let mut stack = vec![st; faces + 1];
            dfs(&mut stack, split, faces, &mut out);
            out
        })
        .collect();
    let mut by_code: BTreeMap<CanonicalCode, EnumeratedIsomer> = BTreeMap::new();
    for iso in found {
        by_code
            .entry(iso.code.clone())
            .and_modify(|e| {
                if iso.spiral < e.spiral {
                    *e = iso.clone();
                }
            })
            .or_insert(iso);
    }
    by_code.into_values().collect()
}

fn feasible_size(st: &Windup, size: u8, faces: usize) -> bool {
    let placed = st.faces();
    let pentagons = st.sizes.iter().filter(|&&s| s == 5).count();
    let left_after = faces - placed - 1;
    let p_after = pentagons + usize::from(size == 5);
    p_after <= 12 && 12 - p_after <= left_after
}

fn dfs(stack: &mut [Windup], depth: usize, faces: usize, out: &mut Vec<EnumeratedIsomer>) {
    if depth == faces {
        let st = &stack[depth];
        if !st.closed() {
            return;
        }
        if let Some(iso) = accept(st) {
            out.push(iso);
        }
        return;
    }
    for size in [5u8, 6] {
        let (lo, hi) = stack.split_at_mut(depth + 1);
        let parent = &lo[depth];
        if !feasible_size(parent, size, faces) {
            continue;
        }
        if depth >= 3 && parent.closed() {
            continue;
        }
        hi[0].clone_from(parent);
        if hi[0].place(size).is_ok() {
            dfs(stack, depth + 1, faces, out);
        }
    }
}

fn accept(st: &Windup) -> Option<EnumeratedIsomer> {
    let tri = RotationSystem::from_rotations(st.rotations()).ok()?;
    canonical_spiral(&tri, Some(&st.sizes))?;
    let g = embedding::dual(&tri).ok()?;
    let fullerene = validate_fullerene(g).ok()?;
    Some(EnumeratedIsomer {
        spiral: SpiralCode::from_sizes(&st.sizes),
        code: fullerene.canonical_code(),
        fullerene,
    })
}

/// Result of a cyclic edge-cut search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCutReport {
    /// Largest cut size examined.
    pub searched_up_to: usize,
    /// Size of the smallest cyclic edge cut found, if any.
    pub cut_size: Option<usize>,
    pub witness: Option<Vec<(usize, usize)>>,
}

pub const DEFAULT_CUT_BUDGET: u128 = 50_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Brute force: smallest edge set of size at most `k` whose removal leaves
/// two or more components that each contain a cycle.
pub fn cyclic_cut_at_most(f: &Fullerene, k: usize, budget: u128) -> Result<CyclicCutReport, EnumerationError> {
    let g = f.graph();
    let edges = g.edges();
    let m = edges.len();
    let subsets: u128 = (1..=k).map(|s| binomial(m, s)).sum();
    if subsets > budget {
        return Err(EnumerationError::CutBudget { subsets, budget });
    }
    for size in 1..=k {
        let hit = (0..m).into_par_iter().find_map_first(|first| {
            let mut chosen = vec![first];
            search_cut(g.vertex_count(), &edges, &mut chosen, size)
        });
        if let Some(cut) = hit {
            return Ok(CyclicCutReport {
                searched_up_to: k,
                cut_size: Some(size),
                witness: Some(cut.into_iter().map(|e| edges[e]).collect()),
            });
        }
    }
    Ok(CyclicCutReport { searched_up_to: k, cut_size: None, witness: None })
}

fn search_cut(n: usize, edges: &[(usize, usize)], chosen: &mut Vec<usize>, size: usize) -> Option<Vec<usize>> {
    if chosen.len() == size {
        return is_cyclic_cut(n, edges, chosen).then(|| chosen.clone());
    }
    let start = chosen.last().unwrap() + 1;
    for e in start..edges.len() {
        chosen.push(e);
        if let Some(c) = search_cut(n, edges, chosen, size) {
            return Some(c);
        }
        chosen.pop();
    }
    None
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub(crate) fn is_cyclic_cut(n: usize, edges: &[(usize, usize)], removed: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, &(u, v)) in edges.iter().enumerate() {
        if removed.contains(&i) {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
        }
    }
    let mut verts = vec![0usize; n];
    let mut edge_count = vec![0usize; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        verts[r] += 1;
    }
    for (i, &(u, _)) in edges.iter().enumerate() {
        if !removed.contains(&i) {
            let r = find(&mut parent, u);
            edge_count[r] += 1;
        }
    }
    (0..n).filter(|&r| verts[r] > 0 && edge_count[r] >= verts[r]).count() >= 2
}

impl FromStr for SpiralCode {
    type Err = SpiralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let nums: Result<Vec<usize>, _> = s.split_whitespace().map(str::parse).collect();
        SpiralCode::new(&nums.map_err(|_| SpiralError::BadPositions { max: usize::MAX })?)
    }
}
