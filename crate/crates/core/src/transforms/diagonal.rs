//! Generalized diagonalizations of a parent graph and contraction of its
//! leapfrog back to a fullerene.

use serde::Serialize;

use super::parent::ParentGraph;
use super::TransformError;
use crate::embedding::{leapfrog, RotationSystem, VertexId};
use crate::fullerene::{validate_fullerene, Fullerene};

/// One diagonal per quadrilateral. Choice 0 picks the first and third
/// corner of the face (in traversal order from its first dart), choice 1
/// the second and fourth.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Diagonalization {
    pub choices: Vec<u8>,
}

impl Diagonalization {
    pub fn diagonals(&self, p: &ParentGraph) -> Vec<(VertexId, VertexId)> {
        p.quads
            .iter()
            .zip(&self.choices)
            .map(|(&q, &c)| {
                let vs = p.graph.face_vertices(q);
                let i = c as usize;
                (vs[i], vs[i + 2])
            })
            .collect()
    }

    /// How many times each vertex is chosen.
    pub fn multiplicity(&self, p: &ParentGraph) -> Vec<usize> {
        let mut m = vec![0; p.graph.vertex_count()];
        for (a, b) in self.diagonals(p) {
            m[a] += 1;
            m[b] += 1;
        }
        m
    }

    pub fn is_valid(&self, p: &ParentGraph) -> bool {
        self.choices.len() == p.quads.len()
            && self.choices.iter().all(|&c| c < 2)
            && self
                .multiplicity(p)
                .iter()
                .enumerate()
                .all(|(v, &m)| allowed(p.graph.degree(v)).contains(&m))
    }
}

/// Permitted number of times a vertex of degree `d` may be chosen.
fn allowed(d: usize) -> std::ops::RangeInclusive<usize> {
    match d {
        4 => 2..=3,
        5 => 4..=5,
        6 => 6..=6,
        _ => 0..=1,
    }
}

/// Every generalized diagonalization, in lexicographic order of choices.
pub fn enumerate_diagonalizations(p: &ParentGraph) -> Vec<Diagonalization> {
    let g = &p.graph;
    let corners: Vec<Vec<VertexId>> = p.quads.iter().map(|&q| g.face_vertices(q)).collect();
    let lo: Vec<usize> = (0..g.vertex_count()).map(|v| *allowed(g.degree(v)).start()).collect();
    let hi: Vec<usize> = (0..g.vertex_count()).map(|v| *allowed(g.degree(v)).end()).collect();
    // quads still undecided at each vertex, to keep lower limits reachable
    let mut open = p.quad_incidence();
    let mut count = vec![0; g.vertex_count()];
    let mut choices = Vec::with_capacity(p.quads.len());
    let mut out = Vec::new();

    struct Ctx<'a> {
        corners: &'a [Vec<VertexId>],
        lo: &'a [usize],
        hi: &'a [usize],
    }
    fn rec(
        i: usize,
        ctx: &Ctx,
        open: &mut [usize],
        count: &mut [usize],
        choices: &mut Vec<u8>,
        out: &mut Vec<Diagonalization>,
    ) {
        if i == ctx.corners.len() {
            out.push(Diagonalization { choices: choices.clone() });
            return;
        }
        let vs = &ctx.corners[i];
        for v in vs {
            open[*v] -= 1;
        }
        for c in 0..2u8 {
            let (a, b) = (vs[c as usize], vs[c as usize + 2]);
            let (x, y) = (vs[1 - c as usize], vs[3 - c as usize]);
            count[a] += 1;
            count[b] += 1;
            let ok = [a, b].iter().all(|&v| count[v] <= ctx.hi[v])
                && [a, b, x, y].iter().all(|&v| count[v] + open[v] >= ctx.lo[v]);
            if ok {
                choices.push(c);
                rec(i + 1, ctx, open, count, choices, out);
                choices.pop();
            }
            count[a] -= 1;
            count[b] -= 1;
        }
        for v in vs {
            open[*v] += 1;
        }
    }
    let ctx = Ctx { corners: &corners, lo: &lo, hi: &hi };
    rec(0, &ctx, &mut open, &mut count, &mut choices, &mut out);
    out
}

/// Contracts, in every quadrilateral of the leapfrog of `p`, the two
/// opposite edges lying at the chosen diagonal corners.
pub fn contract(p: &ParentGraph, d: &Diagonalization) -> Result<Fullerene, TransformError> {
    if !d.is_valid(p) {
        return Err(TransformError::InvalidDiagonalization);
    }
    let g = &p.graph;
    let lf = leapfrog(g)?;
    // leapfrog vertex t sits on dart t of g; its rotation is
    // [twin(t), next(t), prev(t)]
    let m = lf.vertex_count();
    let mut rep: Vec<usize> = (0..m).collect();
    let mut merged: Vec<(usize, [usize; 3])> = Vec::new();
    let ext = |t: usize| g.twin(t);
    for (&q, &c) in p.quads.iter().zip(&d.choices) {
        let ds = &g.face(q).darts;
        if ds.len() != 4 {
            return Err(TransformError::InvalidDiagonalization);
        }
        let pairs = if c == 0 { [(ds[3], ds[0]), (ds[1], ds[2])] } else { [(ds[0], ds[1]), (ds[2], ds[3])] };
        let (x, y) = (pairs[0].0, pairs[1].0);
        rep[pairs[0].1] = x;
        rep[pairs[1].1] = y;
        merged.push((x, [y, ext(pairs[0].0), ext(pairs[0].1)]));
        merged.push((y, [x, ext(pairs[1].0), ext(pairs[1].1)]));
    }
    let kept: Vec<usize> = (0..m).filter(|&v| rep[v] == v).collect();
    let mut id = vec![usize::MAX; m];
    for (i, &v) in kept.iter().enumerate() {
        id[v] = i;
    }
    let map = |v: usize| id[rep[v]];
    let mut rot: Vec<Vec<usize>> = kept.iter().map(|&v| lf.neighbors(v).map(map).collect()).collect();
    for (x, r) in merged {
        rot[id[x]] = r.iter().map(|&v| map(v)).collect();
    }
    let graph = RotationSystem::from_rotations(rot)?;
    Ok(validate_fullerene(graph)?)
}

/// The diagonalization that undoes the expansion `p` came from: each
/// quadrilateral takes the diagonal through the two faces its matching
/// edge exits.
pub fn original_diagonalization(p: &ParentGraph, f: &Fullerene) -> Option<Diagonalization> {
    let origin = p.vertex_origin.as_ref()?;
    let qo = p.quad_origin.as_ref()?;
    let choices = p
        .quads
        .iter()
        .zip(qo)
        .map(|(&q, &(u, v))| {
            let exit_u = super::expand::exited_face(f.graph(), u, v);
            let vs = p.graph.face_vertices(q);
            if origin[vs[0]] == exit_u || origin[vs[2]] == exit_u {
                0
            } else {
                1
            }
        })
        .collect();
    Some(Diagonalization { choices })
}
