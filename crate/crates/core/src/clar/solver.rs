//! Branch and bound over hexagon inclusion.
//!
//! A set of pairwise disjoint hexagons is part of a Clar cover exactly when
//! the graph minus their vertices has a perfect matching. That property is
//! inherited by subsets, so an infeasible partial set prunes its whole
//! subtree. The matching of the parent node is kept and only repaired
//! around the six vertices a new hexagon removes.

use std::time::{Duration, Instant};

use thiserror::Error;

use super::matching::Matcher;
use super::{theorem_bound, classical_bound, ClarCover, ClarResult};
use crate::embedding::{FaceId, VertexId};
use crate::fullerene::Fullerene;

/// Cap applied to the search bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundCap {
    /// `theorem_bound(n)`.
    #[default]
    Refined,
    /// `⌊n/6⌋ − 2`.
    Classical,
    /// No cap; used when the bound itself is under test.
    None,
}

#[derive(Debug, Clone, Default)]
pub struct SolverOptions {
    pub cap: BoundCap,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("node budget of {0} exhausted")]
    NodeBudget(u64),
    #[error("time budget of {0:?} exhausted")]
    TimeBudget(Duration),
}

/// Exact Clar number with the refined bound as cap.
///
/// Panics if the result exceeds `theorem_bound(n)`, which the cap makes
/// impossible unless the solver is broken.
pub fn clar_number(f: &Fullerene) -> ClarResult {
    let r = solve(f, &SolverOptions::default()).expect("unbudgeted solve cannot fail");
    assert!(r.clar_number <= theorem_bound(f.n()), "Clar number above the refined bound");
    r
}

/// Exact Clar number. The witness is the lexicographically smallest sorted
/// face-id set among all optimal hexagon sets.
pub fn solve(f: &Fullerene, opts: &SolverOptions) -> Result<ClarResult, SolveError> {
    let n = f.n();
    let cap = match opts.cap {
        BoundCap::Refined => theorem_bound(n),
        BoundCap::Classical => classical_bound(n),
        BoundCap::None => n / 6,
    };
    let mut search = Search::new(f, opts, branching_order(f));
    search.maximize(0, cap)?;
    let best = search.best;
    let nodes_phase1 = search.nodes;

    let mut ordered = Search::new(f, opts, f.hexagons().to_vec());
    ordered.nodes = nodes_phase1;
    let mut found = None;
    ordered.collect(0, best, &mut |faces, m| {
        found = Some(ClarCover { faces: faces.to_vec(), matching: m.edges() });
        false
    })?;
    let witness = found.expect("an optimal set found once is found again");
    Ok(ClarResult { clar_number: best, witness, nodes_explored: ordered.nodes, bound_used: cap })
}

/// Every hexagon set of size `c` that extends to a Clar cover, in
/// lexicographic order. With `c` equal to the Clar number these are the
/// Clar sets.
pub fn all_clar_sets(f: &Fullerene, c: usize, opts: &SolverOptions) -> Result<Vec<ClarCover>, SolveError> {
    let mut search = Search::new(f, opts, f.hexagons().to_vec());
    let mut out = Vec::new();
    search.collect(0, c, &mut |faces, m| {
        out.push(ClarCover { faces: faces.to_vec(), matching: m.edges() });
        true
    })?;
    Ok(out)
}

/// Hexagons by descending number of adjacent pentagons, ties by id.
fn branching_order(f: &Fullerene) -> Vec<FaceId> {
    let g = f.graph();
    let mut order: Vec<(usize, FaceId)> = f
        .hexagons()
        .iter()
        .map(|&h| {
            let p = g.face(h).darts.iter().filter(|&&d| f.is_pentagon(g.face_of(g.twin(d)))).count();
            (p, h)
        })
        .collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    order.into_iter().map(|(_, h)| h).collect()
}

struct Search<'a> {
    opts: &'a SolverOptions,
    start: Instant,
    faces: Vec<FaceId>,
    verts: Vec<[VertexId; 6]>,
    /// Positions (in `faces`) of hexagons sharing a vertex, excluding self.
    conflicts: Vec<Vec<usize>>,
    blocked: Vec<u32>,
    matcher: Matcher,
    chosen: Vec<usize>,
    chosen_faces: Vec<FaceId>,
    mark: Vec<u32>,
    stamp: u32,
    nodes: u64,
    best: usize,
}

impl<'a> Search<'a> {
    fn new(f: &Fullerene, opts: &'a SolverOptions, faces: Vec<FaceId>) -> Self {
        let g = f.graph();
        let verts: Vec<[VertexId; 6]> = faces
            .iter()
            .map(|&h| {
                let vs = g.face_vertices(h);
                [vs[0], vs[1], vs[2], vs[3], vs[4], vs[5]]
            })
            .collect();
        let mut at_vertex = vec![Vec::new(); g.vertex_count()];
        for (i, vs) in verts.iter().enumerate() {
            for &v in vs {
                at_vertex[v].push(i);
            }
        }
        let conflicts = verts
            .iter()
            .enumerate()
            .map(|(i, vs)| {
                let mut c: Vec<usize> = vs.iter().flat_map(|&v| at_vertex[v].iter().copied()).filter(|&j| j != i).collect();
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        let mut matcher = Matcher::for_graph(g);
        matcher.maximize();
        assert!(matcher.is_perfect(), "fullerenes always have a perfect matching");
        Search {
            opts,
            start: Instant::now(),
            blocked: vec![0; faces.len()],
            faces,
            verts,
            conflicts,
            matcher,
            chosen: Vec::new(),
            chosen_faces: Vec::new(),
            mark: vec![0; g.vertex_count()],
            stamp: 0,
            nodes: 0,
            best: 0,
        }
    }

    fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if let Some(limit) = self.opts.node_budget {
            if self.nodes > limit {
                return Err(SolveError::NodeBudget(limit));
            }
        }
        if let Some(limit) = self.opts.time_budget {
            if self.nodes % 1024 == 0 && self.start.elapsed() > limit {
                return Err(SolveError::TimeBudget(limit));
            }
        }
        Ok(())
    }

    /// Upper bound on how many more hexagons fit using positions `i..`:
    /// they are disjoint, so at most a sixth of the vertices they can reach.
    fn remaining_bound(&mut self, i: usize) -> usize {
        self.stamp += 1;
        let mut count = 0;
        for j in i..self.faces.len() {
            if self.blocked[j] != 0 {
                continue;
            }
            for &v in &self.verts[j] {
                if self.mark[v] != self.stamp {
                    self.mark[v] = self.stamp;
                    count += 1;
                }
            }
        }
        count / 6
    }

    /// Adds hexagon `i` if the residual graph keeps a perfect matching.
    /// Returns the saved matching for `undo`, or `None` when infeasible.
    fn try_include(&mut self, i: usize) -> Option<Vec<usize>> {
        let saved = self.matcher.mates().to_vec();
        let mut exposed = Vec::with_capacity(6);
        for &v in &self.verts[i] {
            if let Some(w) = self.matcher.deactivate(v) {
                exposed.push(w);
            }
        }
        let ok = exposed.iter().all(|&w| !self.matcher.is_active(w) || self.matcher.augment(w));
        if !ok {
            for &v in &self.verts[i] {
                self.matcher.activate(v);
            }
            self.matcher.set_mates(&saved);
            return None;
        }
        for k in 0..self.conflicts[i].len() {
            let j = self.conflicts[i][k];
            self.blocked[j] += 1;
        }
        self.chosen.push(i);
        self.chosen_faces.push(self.faces[i]);
        Some(saved)
    }

    fn undo(&mut self, i: usize, saved: Vec<usize>) {
        for k in 0..self.conflicts[i].len() {
            let j = self.conflicts[i][k];
            self.blocked[j] -= 1;
        }
        for &v in &self.verts[i] {
            self.matcher.activate(v);
        }
        self.matcher.set_mates(&saved);
        self.chosen.pop();
        self.chosen_faces.pop();
    }

    fn next_free(&self, mut i: usize) -> usize {
        while i < self.faces.len() && self.blocked[i] != 0 {
            i += 1;
        }
        i
    }

    /// Raises `self.best` to the optimum, stopping early once `cap` is hit.
    fn maximize(&mut self, i: usize, cap: usize) -> Result<(), SolveError> {
        self.tick()?;
        let i = self.next_free(i);
        let have = self.chosen.len();
        if have > self.best {
            self.best = have;
        }
        if i == self.faces.len() || self.best >= cap {
            return Ok(());
        }
        let bound = (have + self.remaining_bound(i)).min(cap);
        if bound <= self.best {
            return Ok(());
        }
        if let Some(saved) = self.try_include(i) {
            let r = self.maximize(i + 1, cap);
            self.undo(i, saved);
            r?;
        }
        if self.best < cap {
            self.maximize(i + 1, cap)?;
        }
        Ok(())
    }

    /// Visits feasible sets of exactly `target` hexagons in lexicographic
    /// order of positions. The visitor returns whether to keep going.
    fn collect(
        &mut self,
        i: usize,
        target: usize,
        visit: &mut dyn FnMut(&[FaceId], &Matcher) -> bool,
    ) -> Result<bool, SolveError> {
        self.tick()?;
        if self.chosen.len() == target {
            let mut faces = self.chosen_faces.clone();
            faces.sort_unstable();
            return Ok(visit(&faces, &self.matcher));
        }
        let i = self.next_free(i);
        if i == self.faces.len() || self.chosen.len() + self.remaining_bound(i) < target {
            return Ok(true);
        }
        if let Some(saved) = self.try_include(i) {
            let r = self.collect(i + 1, target, visit);
            self.undo(i, saved);
            if !r? {
                return Ok(false);
            }
        }
        self.collect(i + 1, target, visit)
    }
}
