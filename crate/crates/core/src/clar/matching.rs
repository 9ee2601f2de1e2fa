//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm), with support for switching vertices off and repairing an
//! existing matching incrementally.

use std::collections::VecDeque;

use crate::embedding::{RotationSystem, VertexId};

const NONE: usize = usize::MAX;

/// Matching state over a fixed graph. Vertices can be deactivated; the
/// matching then lives on the subgraph induced by the active vertices.
#[derive(Debug, Clone)]
pub struct Matcher {
    adj: Vec<Vec<VertexId>>,
    active: Vec<bool>,
    mate: Vec<usize>,
    // scratch buffers for the augmenting path search
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Matcher {
    pub fn new(adj: Vec<Vec<VertexId>>) -> Self {
        let n = adj.len();
        Matcher {
            adj,
            active: vec![true; n],
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    pub fn for_graph(g: &RotationSystem) -> Self {
        Matcher::new(g.rotations())
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        (self.mate[v] != NONE).then_some(self.mate[v])
    }

    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    pub fn set_mates(&mut self, mates: &[usize]) {
        self.mate.copy_from_slice(mates);
    }

    pub fn is_active(&self, v: VertexId) -> bool {
        self.active[v]
    }

    /// Switches `v` off, unmatching its partner. Returns the partner left
    /// exposed, if any.
    pub fn deactivate(&mut self, v: VertexId) -> Option<VertexId> {
        self.active[v] = false;
        let m = self.mate[v];
        self.mate[v] = NONE;
        if m != NONE {
            self.mate[m] = NONE;
            Some(m)
        } else {
            None
        }
    }

    pub fn activate(&mut self, v: VertexId) {
        self.active[v] = true;
    }

    /// Matched edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.len()).filter(|&v| self.mate[v] != NONE && v < self.mate[v]).map(|v| (v, self.mate[v])).collect()
    }

    /// True when every active vertex is matched.
    pub fn is_perfect(&self) -> bool {
        (0..self.len()).all(|v| !self.active[v] || self.mate[v] != NONE)
    }

    /// Grows the current matching to maximum cardinality.
    pub fn maximize(&mut self) -> usize {
        // greedy start
        for v in 0..self.len() {
            if !self.active[v] || self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| self.active[w] && self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for v in 0..self.len() {
            if self.active[v] && self.mate[v] == NONE {
                self.augment(v);
            }
        }
        self.edges().len()
    }

    /// Tries to match the exposed vertex `root` along an augmenting path.
    pub fn augment(&mut self, root: VertexId) -> bool {
        if !self.active[root] || self.mate[root] != NONE {
            return self.mate[root] != NONE;
        }
        let n = self.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if !self.active[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(root, v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.active[i] && self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        let mut u = to;
                        while u != NONE {
                            let pu = self.parent[u];
                            let next = self.mate[pu];
                            self.mate[u] = pu;
                            self.mate[pu] = u;
                            u = next;
                        }
                        return true;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        false
    }

    fn lca(&mut self, root: usize, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if a == root || self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }
}

/// Perfect matching of `g` minus `excluded`, if one exists.
pub fn perfect_matching_exists(
    g: &RotationSystem,
    excluded: &[VertexId],
) -> Option<Vec<(VertexId, VertexId)>> {
    let mut m = Matcher::for_graph(g);
    for &v in excluded {
        m.deactivate(v);
    }
    let active = (0..g.vertex_count()).filter(|&v| m.is_active(v)).count();
    if active % 2 == 1 {
        return None;
    }
    m.maximize();
    m.is_perfect().then(|| m.edges())
}
