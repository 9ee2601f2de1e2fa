//! Small component shapes of associated graphs and the counting equations
//! over them.

use std::fmt;

use serde::Serialize;

/// A small simple graph given by its edge list over vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SmallGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        SmallGraph { n, edges }
    }

    pub fn path(vertices: usize) -> Self {
        SmallGraph::new(vertices, (1..vertices).map(|i| (i - 1, i)).collect())
    }

    pub fn cycle(vertices: usize) -> Self {
        SmallGraph::new(vertices, (0..vertices).map(|i| (i, (i + 1) % vertices)).collect())
    }

    pub fn star(leaves: usize) -> Self {
        SmallGraph::new(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())
    }

    /// Two adjacent centers carrying `a` and `b` leaves.
    pub fn double_star(a: usize, b: usize) -> Self {
        let mut edges = vec![(0, 1)];
        edges.extend((0..a).map(|i| (0, 2 + i)));
        edges.extend((0..b).map(|i| (1, 2 + a + i)));
        SmallGraph::new(a + b + 2, edges)
    }

    pub fn complete(vertices: usize) -> Self {
        let edges = (0..vertices).flat_map(|i| (i + 1..vertices).map(move |j| (i, j))).collect();
        SmallGraph::new(vertices, edges)
    }

    /// Triangle with `k` pendant edges on one corner.
    pub fn fan_triangle(k: usize) -> Self {
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.extend((0..k).map(|i| (0, 3 + i)));
        SmallGraph::new(k + 3, edges)
    }

    /// `K4` minus an edge.
    pub fn diamond() -> Self {
        SmallGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn odd_vertices(&self) -> usize {
        self.degrees().iter().filter(|&&d| d % 2 == 1).count()
    }

    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    /// True when some simple path with `k` vertices occurs as a subgraph.
    pub fn contains_path(&self, k: usize) -> bool {
        fn grow(adj: &[u64], v: usize, used: u64, left: usize) -> bool {
            if left == 0 {
                return true;
            }
            let mut next = adj[v] & !used;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                if grow(adj, w, used | 1 << w, left - 1) {
                    return true;
                }
            }
            false
        }
        if k == 0 {
            return true;
        }
        let adj = self.adjacency();
        (0..self.n).any(|v| grow(&adj, v, 1 << v, k - 1))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen.count_ones() as usize == self.n
    }

    pub fn is_isomorphic(&self, other: &SmallGraph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let (da, db) = (self.degrees(), other.degrees());
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
        let (aa, ab) = (self.adjacency(), other.adjacency());
        let mut map = vec![usize::MAX; self.n];
        fn extend(i: usize, map: &mut Vec<usize>, used: u64, aa: &[u64], ab: &[u64], da: &[usize], db: &[usize]) -> bool {
            if i == map.len() {
                return true;
            }
            for j in 0..ab.len() {
                if used & (1 << j) != 0 || da[i] != db[j] {
                    continue;
                }
                let ok = (0..i).all(|k| ((aa[i] >> k) & 1) == ((ab[j] >> map[k]) & 1));
                if ok {
                    map[i] = j;
                    if extend(i + 1, map, used | 1 << j, aa, ab, da, db) {
                        return true;
                    }
                }
            }
            map[i] = usize::MAX;
            false
        }
        extend(0, &mut map, 0, &aa, &ab, &da, &db)
    }
}

/// A named component shape with its edge count `l` and number `k` of odd
/// vertices.
#[derive(Debug, Clone, Serialize)]
pub struct Shape {
    pub name: String,
    pub graph: SmallGraph,
}

impl Shape {
    pub fn new(name: impl Into<String>, graph: SmallGraph) -> Self {
        Shape { name: name.into(), graph }
    }

    pub fn edges(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn odd(&self) -> usize {
        self.graph.odd_vertices()
    }
}

/// Shapes for matchings with 7 edges: `P2`, `P3`, `K1,3`.
pub fn shapes_for_seven_edges() -> Vec<Shape> {
    vec![
        Shape::new("P2", SmallGraph::path(2)),
        Shape::new("P3", SmallGraph::path(3)),
        Shape::new("K1,3", SmallGraph::star(3)),
    ]
}

/// Shapes for matchings with 8 edges: paths up to `P4` and stars up to
/// `K1,5`.
pub fn shapes_for_eight_edges() -> Vec<Shape> {
    vec![
        Shape::new("P2", SmallGraph::path(2)),
        Shape::new("P3", SmallGraph::path(3)),
        Shape::new("P4", SmallGraph::path(4)),
        Shape::new("K1,3", SmallGraph::star(3)),
        Shape::new("K1,4", SmallGraph::star(4)),
        Shape::new("K1,5", SmallGraph::star(5)),
    ]
}

/// The 22 shapes `N1..N22` for matchings with 10 edges. `S(a,b)` is the
/// double star with `a` and `b` leaves on its two centers.
pub fn shapes_for_ten_edges() -> Vec<Shape> {
    let g = |name: &str, graph| Shape::new(name, graph);
    vec![
        g("N1 triangle", SmallGraph::cycle(3)),
        g("N2 C4", SmallGraph::cycle(4)),
        g("N3 P2", SmallGraph::path(2)),
        g("N4 P3", SmallGraph::path(3)),
        g("N5 P4", SmallGraph::path(4)),
        g("N6 paw", SmallGraph::fan_triangle(1)),
        g("N7 diamond", SmallGraph::diamond()),
        g("N8 triangle+2", SmallGraph::fan_triangle(2)),
        g("N9 K1,3", SmallGraph::star(3)),
        g("N10 K1,4", SmallGraph::star(4)),
        g("N11 S(2,1)", SmallGraph::double_star(2, 1)),
        g("N12 S(3,1)", SmallGraph::double_star(3, 1)),
        g("N13 K4", SmallGraph::complete(4)),
        g("N14 triangle+3", SmallGraph::fan_triangle(3)),
        g("N15 K1,5", SmallGraph::star(5)),
        g("N16 S(4,1)", SmallGraph::double_star(4, 1)),
        g("N17 K1,6", SmallGraph::star(6)),
        g("N18 S(5,1)", SmallGraph::double_star(5, 1)),
        g("N19 S(4,2)", SmallGraph::double_star(4, 2)),
        g("N20 S(5,2)", SmallGraph::double_star(5, 2)),
        g("N21 S(4,3)", SmallGraph::double_star(4, 3)),
        g("N22 S(4,4)", SmallGraph::double_star(4, 4)),
    ]
}

/// Every connected simple graph without a 5-vertex path whose edge count
/// `l` and odd-vertex count `k` can occur as a component when the whole
/// graph has `total_edges` edges and `total_odd` odd vertices, with
/// maximum degree at most 6. The rest of the graph needs at least
/// `(total_odd - k) / 2` edges, which bounds `l`.
pub fn derive_path_free_shapes(total_edges: usize, total_odd: usize) -> Vec<Shape> {
    let mut layer = vec![SmallGraph::path(2)];
    let mut all: Vec<SmallGraph> = layer.clone();
    for _ in 1..total_edges {
        let mut next: Vec<SmallGraph> = Vec::new();
        for g in &layer {
            let adj = g.adjacency();
            let mut candidates = Vec::new();
            for a in 0..g.n {
                for b in a + 1..g.n {
                    if adj[a] & (1 << b) == 0 {
                        let mut e = g.edges.clone();
                        e.push((a, b));
                        candidates.push(SmallGraph::new(g.n, e));
                    }
                }
                let mut e = g.edges.clone();
                e.push((a, g.n));
                candidates.push(SmallGraph::new(g.n + 1, e));
            }
            for c in candidates {
                if c.degrees().iter().any(|&d| d > 6) || c.contains_path(5) {
                    continue;
                }
                if !next.iter().any(|h| h.is_isomorphic(&c)) {
                    next.push(c);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter()
        .filter(|g| {
            let k = g.odd_vertices();
            k <= total_odd && g.edge_count() + (total_odd - k) / 2 <= total_edges
        })
        .map(|g| {
            let name = format!("l{}k{}v{}", g.edge_count(), g.odd_vertices(), g.n);
            Shape::new(name, g)
        })
        .collect()
}

/// Index of the catalog shape isomorphic to `g`.
pub fn identify(g: &SmallGraph, shapes: &[Shape]) -> Option<usize> {
    shapes.iter().position(|s| s.graph.is_isomorphic(g))
}

/// Multiplicity of each catalog shape among the components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ComponentMultiset {
    pub counts: Vec<usize>,
}

impl ComponentMultiset {
    /// Nonzero entries as `(shape index, count)`, highest index first.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.counts.iter().enumerate().rev().filter(|&(_, &c)| c > 0).map(|(i, &c)| (i, c)).collect()
    }

    pub fn describe(&self, shapes: &[Shape]) -> String {
        self.support()
            .iter()
            .map(|&(i, c)| format!("{}x{}", c, shapes[i].name.split_whitespace().next().unwrap_or("")))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for ComponentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.support().iter().map(|&(i, c)| format!("n{}={}", i + 1, c)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// All nonnegative solutions of `Σ n_i l_i = m_edges`, `Σ n_i k_i = odd`.
/// Ordered by the counts read from the last shape down, largest first.
pub fn component_multiset_solutions(m_edges: usize, odd: usize, shapes: &[Shape]) -> Vec<ComponentMultiset> {
    fn rec(i: usize, e: usize, k: usize, shapes: &[Shape], counts: &mut Vec<usize>, out: &mut Vec<ComponentMultiset>) {
        if i == 0 {
            if e == 0 && k == 0 {
                out.push(ComponentMultiset { counts: counts.clone() });
            }
            return;
        }
        let s = &shapes[i - 1];
        let (l, o) = (s.edges(), s.odd());
        let mut c = e / l.max(1);
        if o > 0 {
            c = c.min(k / o);
        }
        loop {
            counts[i - 1] = c;
            rec(i - 1, e - c * l, k - c * o, shapes, counts, out);
            if c == 0 {
                break;
            }
            c -= 1;
        }
        counts[i - 1] = 0;
    }
    let mut out = Vec::new();
    let mut counts = vec![0; shapes.len()];
    rec(shapes.len(), m_edges, odd, shapes, &mut counts, &mut out);
    out
}

/// True when the graph has no path on five vertices.
pub fn forbidden_subpath_check(g: &SmallGraph) -> bool {
    !g.contains_path(5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphism_distinguishes_double_stars() {
        assert!(SmallGraph::double_star(2, 1).is_isomorphic(&SmallGraph::double_star(1, 2)));
        assert!(!SmallGraph::double_star(3, 1).is_isomorphic(&SmallGraph::double_star(2, 2)));
        assert!(SmallGraph::path(4).is_isomorphic(&SmallGraph::double_star(1, 1)));
    }

    #[test]
    fn paths_in_small_graphs() {
        assert!(!forbidden_subpath_check(&SmallGraph::path(5)));
        assert!(forbidden_subpath_check(&SmallGraph::star(5)));
        assert!(forbidden_subpath_check(&SmallGraph::double_star(4, 4)));
        assert!(!forbidden_subpath_check(&SmallGraph::cycle(5)));
    }

    #[test]
    fn catalog_invariants() {
        let shapes = shapes_for_ten_edges();
        let lk: Vec<(usize, usize)> = shapes.iter().map(|s| (s.edges(), s.odd())).collect();
        assert_eq!(
            lk,
            vec![
                (3, 0), (4, 0), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2), (5, 2), (3, 4), (4, 4), (4, 4),
                (5, 4), (6, 4), (6, 4), (5, 6), (6, 6), (6, 6), (7, 6), (7, 8), (8, 8), (8, 8), (9, 10),
            ]
        );
        for s in &shapes {
            assert!(s.graph.is_connected() && forbidden_subpath_check(&s.graph), "{}", s.name);
        }
    }

    #[test]
    fn small_systems() {
        assert_eq!(component_multiset_solutions(7, 12, &shapes_for_seven_edges()).len(), 2);
        assert_eq!(component_multiset_solutions(8, 12, &shapes_for_eight_edges()).len(), 6);
        assert_eq!(component_multiset_solutions(10, 12, &shapes_for_ten_edges()).len(), 45);
    }
}
