//! Clar numbers: bounds, perfect matchings, the exact solver, an
//! enumeration oracle and Clar cover verification.

mod matching;
mod oracle;
mod solver;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::{FaceId, RotationSystem, VertexId};
use crate::fullerene::{check_enumerable, enumerate_fullerenes, EnumerationError, Fullerene};

pub use matching::{perfect_matching_exists, Matcher};
pub use oracle::{clar_number_oracle, OracleError, ORACLE_MAX_ORDER};
pub use solver::{all_clar_sets, clar_number, solve, BoundCap, SolveError, SolverOptions};

/// Matching edges as `(u, v)` pairs with `u < v`.
pub type PerfectMatching = Vec<(VertexId, VertexId)>;

/// Independent face set plus a perfect matching of the vertices the faces
/// leave uncovered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClarCover {
    pub faces: Vec<FaceId>,
    pub matching: PerfectMatching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClarResult {
    pub clar_number: usize,
    pub witness: ClarCover,
    pub nodes_explored: u64,
    /// Upper bound the search was capped at.
    pub bound_used: usize,
}

/// Refined upper bound on the Clar number of an `n`-vertex fullerene.
pub fn theorem_bound(n: usize) -> usize {
    let base = n / 6;
    if n % 6 == 2 {
        base.saturating_sub(3)
    } else {
        base.saturating_sub(2)
    }
}

/// The older bound `⌊n/6⌋ − 2`, valid for every order.
pub fn classical_bound(n: usize) -> usize {
    (n / 6).saturating_sub(2)
}

/// Faces with exactly half their boundary edges in `m`.
pub fn alternating_faces(g: &RotationSystem, m: &[(VertexId, VertexId)]) -> Vec<FaceId> {
    let mut mate = vec![usize::MAX; g.vertex_count()];
    for &(u, v) in m {
        mate[u] = v;
        mate[v] = u;
    }
    (0..g.face_count())
        .filter(|&f| {
            let face = g.face(f);
            if face.size() % 2 == 1 {
                return false;
            }
            let hits = face.darts.iter().filter(|&&d| mate[g.tail(d)] == g.head(d)).count();
            hits * 2 == face.size()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CoverViolation {
    OddFace { face: FaceId },
    UnknownFace { face: FaceId },
    SharedVertex { first: FaceId, second: FaceId, vertex: VertexId },
    NotAnEdge { u: VertexId, v: VertexId },
    Uncovered { vertex: VertexId },
    CoveredTwice { vertex: VertexId },
    /// A face whose number of exiting matching edges has the wrong parity
    /// (hexagons need an even count, pentagons an odd one).
    ExitParity { face: FaceId, exits: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub violations: Vec<CoverViolation>,
}

impl CoverReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks independence, exact coverage and the exit parity of every face.
/// An edge exits a face when exactly one of its endpoints lies on it.
pub fn verify_clar_cover(f: &Fullerene, cover: &ClarCover) -> CoverReport {
    let g = f.graph();
    let n = g.vertex_count();
    let mut violations = Vec::new();
    let mut owner: Vec<Option<FaceId>> = vec![None; n];
    let mut hits = vec![0usize; n];

    for &face in &cover.faces {
        if face >= g.face_count() {
            violations.push(CoverViolation::UnknownFace { face });
            continue;
        }
        if g.face(face).size() % 2 == 1 {
            violations.push(CoverViolation::OddFace { face });
        }
        for v in g.face_vertices(face) {
            if let Some(first) = owner[v] {
                violations.push(CoverViolation::SharedVertex { first, second: face, vertex: v });
            }
            owner[v] = Some(face);
            hits[v] += 1;
        }
    }
    for &(u, v) in &cover.matching {
        if u >= n || v >= n || !g.has_edge(u, v) {
            violations.push(CoverViolation::NotAnEdge { u, v });
            continue;
        }
        hits[u] += 1;
        hits[v] += 1;
    }
    for (v, &h) in hits.iter().enumerate() {
        match h {
            0 => violations.push(CoverViolation::Uncovered { vertex: v }),
            1 => {}
            _ => violations.push(CoverViolation::CoveredTwice { vertex: v }),
        }
    }

    let mut on_face = vec![false; n];
    for face in 0..g.face_count() {
        let verts = g.face_vertices(face);
        for &v in &verts {
            on_face[v] = true;
        }
        let exits = cover
            .matching
            .iter()
            .filter(|&&(u, v)| u < n && v < n && on_face[u] != on_face[v])
            .count();
        let want_odd = g.face(face).size() % 2 == 1;
        if (exits % 2 == 1) != want_odd {
            violations.push(CoverViolation::ExitParity { face, exits });
        }
        for &v in &verts {
            on_face[v] = false;
        }
    }
    CoverReport { violations }
}

/// One isomer whose Clar number reaches the refined bound.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalIsomer {
    pub n: usize,
    /// Position of the isomer in canonical-code order for its order.
    pub index: usize,
    pub spiral: Option<String>,
    pub clar_number: usize,
    pub witness: ClarCover,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundViolation {
    pub n: usize,
    pub index: usize,
    pub clar_number: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    pub isomers: usize,
    pub bound: usize,
    pub max_clar: usize,
    pub extremal: usize,
    /// Isomers reaching `⌊n/6⌋ − 2`; must stay empty when `n ≡ 2 (mod 6)`.
    pub classical_hits: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct BoundReport {
    pub orders: Vec<OrderSummary>,
    pub violations: Vec<BoundViolation>,
    pub extremal: Vec<ExtremalIsomer>,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
            && self.orders.iter().all(|o| o.n % 6 != 2 || o.classical_hits == 0)
    }
}

/// Solves every isomer with `n_min ≤ n ≤ n_max` without capping the search
/// at the bound being checked, and collects violations and extremal
/// isomers.
pub fn verify_bound_range(n_min: usize, n_max: usize) -> Result<BoundReport, EnumerationError> {
    let mut report = BoundReport::default();
    let opts = SolverOptions { cap: BoundCap::None, ..SolverOptions::default() };
    let lo = n_min.max(20);
    let lo = lo + lo % 2;
    // refuse the whole range before spending time on its feasible part
    if n_max >= lo {
        check_enumerable(n_max - n_max % 2)?;
    }
    for n in (lo..=n_max).step_by(2) {
        let isomers = enumerate_fullerenes(n)?;
        let bound = theorem_bound(n);
        let results: Vec<ClarResult> = isomers
            .par_iter()
            .map(|f| solve(f, &opts).expect("unbudgeted solve cannot fail"))
            .collect();
        let mut summary = OrderSummary {
            n,
            isomers: isomers.len(),
            bound,
            max_clar: 0,
            extremal: 0,
            classical_hits: 0,
        };
        for (index, (f, r)) in isomers.iter().zip(results).enumerate() {
            summary.max_clar = summary.max_clar.max(r.clar_number);
            if r.clar_number >= classical_bound(n) {
                summary.classical_hits += 1;
            }
            if r.clar_number > bound {
                report.violations.push(BoundViolation { n, index, clar_number: r.clar_number, bound });
            } else if r.clar_number == bound {
                summary.extremal += 1;
                report.extremal.push(ExtremalIsomer {
                    n,
                    index,
                    spiral: f.spiral().map(|s| s.to_string()),
                    clar_number: r.clar_number,
                    witness: r.witness,
                });
            }
        }
        report.orders.push(summary);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::leapfrog;
    use crate::fullerene::fixtures::{c20, c60_ih};
    use crate::fullerene::validate_fullerene;

    #[test]
    fn bounds_by_residue() {
        assert_eq!(theorem_bound(20), 0);
        assert_eq!(theorem_bound(60), 8);
        assert_eq!(theorem_bound(70), 9);
        assert_eq!(theorem_bound(80), 10);
        assert_eq!(theorem_bound(26), 1);
        assert_eq!(classical_bound(32), 3);
        assert_eq!(theorem_bound(32), 2);
    }

    #[test]
    fn dodecahedron_minus_pentagon_has_no_matching() {
        let f = c20();
        let gone = f.graph().face_vertices(f.pentagons()[0]);
        assert!(perfect_matching_exists(f.graph(), &gone).is_none());
        assert!(perfect_matching_exists(f.graph(), &[]).is_some());
    }

    #[test]
    fn dodecahedron_has_no_alternating_faces() {
        let f = c20();
        let m = perfect_matching_exists(f.graph(), &[]).unwrap();
        assert!(alternating_faces(f.graph(), &m).is_empty());
        assert_eq!(clar_number(&f).clar_number, 0);
    }

    #[test]
    fn buckminsterfullerene_witness_is_valid() {
        let f = validate_fullerene(leapfrog(c20().graph()).unwrap()).unwrap();
        let r = clar_number(&f);
        assert_eq!(r.clar_number, 8);
        assert!(verify_clar_cover(&f, &r.witness).is_valid());
        assert_eq!(r.witness.matching.len(), 6);

        // the full Kekulé structure of the witness alternates on every chosen hexagon
        let mut m = r.witness.matching.clone();
        for &h in &r.witness.faces {
            let d0 = f.graph().face(h).darts[0];
            let mut d = d0;
            loop {
                let (u, v) = (f.graph().tail(d), f.graph().head(d));
                m.push((u.min(v), u.max(v)));
                d = f.graph().next_in_face(f.graph().next_in_face(d));
                if d == d0 {
                    break;
                }
            }
        }
        let alt = alternating_faces(f.graph(), &m);
        assert!(alt.len() >= 8);
        assert!(alt.iter().all(|&h| !f.is_pentagon(h)));
    }

    #[test]
    fn negative_covers_are_reported() {
        let f = c60_ih();
        let r = clar_number(&f);
        let mut missing = r.witness.clone();
        missing.matching.pop();
        let report = verify_clar_cover(&f, &missing);
        assert!(report.violations.iter().any(|v| matches!(v, CoverViolation::Uncovered { .. })));

        let g = f.graph();
        let h = f.hexagons()[0];
        let d = g.face(h).darts[0];
        let neighbor = g.face_of(g.twin(d));
        let h2 = if f.is_pentagon(neighbor) {
            let d = g.face(h).darts.iter().copied().find(|&d| !f.is_pentagon(g.face_of(g.twin(d)))).unwrap();
            g.face_of(g.twin(d))
        } else {
            neighbor
        };
        let adjacent = ClarCover { faces: vec![h, h2], matching: Vec::new() };
        let report = verify_clar_cover(&f, &adjacent);
        assert!(report.violations.iter().any(|v| matches!(v, CoverViolation::SharedVertex { .. })));
    }
}
