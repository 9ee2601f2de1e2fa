//! End-to-end acceptance run. Prints one PASS/FAIL/SKIP line per criterion
//! and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clarion::clar::{
    clar_number_oracle, solve, theorem_bound, verify_bound_range, verify_clar_cover, BoundCap, ClarCover,
    SolverOptions,
};
use clarion::embedding::{bipartition, face_three_coloring, leapfrog, RotationSystem};
use clarion::fullerene::{
    cyclic_cut_at_most, enumerate_fullerenes, is_ipr, validate_fullerene, Fullerene, DEFAULT_CUT_BUDGET,
};
use clarion::io::{named_isomer, read_fullerenes, read_graph_json};
use clarion::transforms::shapes::{
    shapes_for_eight_edges, shapes_for_seven_edges, shapes_for_ten_edges, Shape,
};
use clarion::transforms::{
    component_multiset_solutions, contract, enumerate_diagonalizations, expand, m_associated, parent_of,
    pipeline, ParentClass, ParentGraph,
};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn uncapped() -> SolverOptions {
    SolverOptions { cap: BoundCap::None, ..SolverOptions::default() }
}

fn clar(f: &Fullerene) -> (usize, ClarCover) {
    let r = solve(f, &uncapped()).expect("no budget set");
    (r.clar_number, r.witness)
}

fn named(label: &str) -> Fullerene {
    named_isomer(label).unwrap_or_else(|| panic!("{label} is bundled"))
}

fn dodecahedron() -> Fullerene {
    read_fullerenes("20 : 1 2 3 4 5 6 7 8 9 10 11 12\n").unwrap().remove(0)
}

fn leapfrog_c20() -> Fullerene {
    validate_fullerene(leapfrog(dodecahedron().graph()).unwrap()).unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("{what} took {t:.1?}, limit {limit:?}"));
    }
    Ok(())
}

fn c78_table() -> Outcome {
    let spirals = "\
78 : 1 7 9 11 13 20 25 28 32 34 36 38
78 : 1 7 9 11 13 24 27 30 32 36 38 40
78 : 1 7 9 11 14 22 26 28 30 34 39 41
78 : 1 7 9 11 15 18 22 25 33 37 39 41
78 : 1 7 9 12 14 21 26 28 30 34 39 41
";
    let start = Instant::now();
    let got: Vec<usize> = read_fullerenes(spirals).map_err(|e| e.to_string())?.iter().map(|f| clar(f).0).collect();
    within(start, Duration::from_secs(60), "C78 isomers")?;
    if got != [11, 10, 9, 11, 8] {
        return Err(format!("got {got:?}"));
    }
    Ok(format!("{got:?} in {:.2?}", start.elapsed()))
}

fn named_extremal() -> Outcome {
    let cases = [
        ("leapfrog(C20)", leapfrog_c20(), 8),
        ("C80:1", named("C80:1"), 10),
        ("C80:2", named("C80:2"), 10),
        ("C70:1", named("C70:1"), 9),
    ];
    let mut parts = Vec::new();
    for (label, f, want) in cases {
        let start = Instant::now();
        let (c, _) = clar(&f);
        within(start, Duration::from_secs(60), label)?;
        if c != want {
            return Err(format!("{label}: clar {c}, expected {want}"));
        }
        parts.push(format!("{label}={c}"));
    }
    Ok(parts.join(" "))
}

fn bound_exhaustive() -> Outcome {
    let start = Instant::now();
    let report = verify_bound_range(20, 40).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(600), "bound check")?;
    if !report.violations.is_empty() {
        return Err(format!("{} violations, first {:?}", report.violations.len(), report.violations[0]));
    }
    for o in &report.orders {
        if [20, 26, 32, 38].contains(&o.n) && o.classical_hits > 0 {
            return Err(format!("n={}: {} isomers reach floor(n/6)-2", o.n, o.classical_hits));
        }
    }
    let isomers: usize = report.orders.iter().map(|o| o.isomers).sum();
    Ok(format!("{isomers} isomers, {} extremal, {:.1?}", report.extremal.len(), start.elapsed()))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in (20..=30).step_by(2) {
        let isomers = enumerate_fullerenes(n).map_err(|e| e.to_string())?;
        let mismatches: Vec<(usize, usize, usize)> = isomers
            .par_iter()
            .enumerate()
            .filter_map(|(i, f)| {
                let exact = clar_number_oracle(f).expect("small enough for the oracle");
                let c = clar(f).0;
                (exact != c).then_some((i, c, exact))
            })
            .collect();
        if let Some((i, c, exact)) = mismatches.first() {
            return Err(format!("n={n} isomer {i}: solver {c}, oracle {exact}"));
        }
        checked += isomers.len();
    }
    within(start, Duration::from_secs(600), "oracle comparison")?;
    Ok(format!("{checked} isomers agree"))
}

/// Expected solutions as (1-based shape index, count) pairs.
fn as_counts(shapes: &[Shape], sol: &[(usize, usize)]) -> Vec<usize> {
    let mut v = vec![0; shapes.len()];
    for &(i, k) in sol {
        v[i - 1] = k;
    }
    v
}

fn equation_systems() -> Outcome {
    let seven: &[&[(usize, usize)]] = &[&[(1, 5), (2, 1)], &[(1, 4), (3, 1)]];
    let eight: &[&[(usize, usize)]] = &[
        &[(6, 1), (1, 3)],
        &[(5, 1), (1, 4)],
        &[(4, 2), (1, 2)],
        &[(4, 1), (2, 1), (1, 3)],
        &[(3, 1), (1, 5)],
        &[(2, 2), (1, 4)],
    ];
    // (18), (41), (43) and (45) carry printing slips; these are the forms
    // that satisfy both equations
    let ten: &[&[(usize, usize)]] = &[
        &[(22, 1), (3, 1)],
        &[(21, 1), (3, 2)],
        &[(20, 1), (3, 2)],
        &[(19, 1), (9, 1)],
        &[(19, 1), (4, 1), (3, 1)],
        &[(18, 1), (3, 3)],
        &[(17, 1), (9, 1), (3, 1)],
        &[(17, 1), (4, 1), (3, 2)],
        &[(16, 1), (9, 1), (3, 1)],
        &[(16, 1), (4, 1), (3, 2)],
        &[(15, 2)],
        &[(15, 1), (11, 1), (3, 1)],
        &[(15, 1), (10, 1), (3, 1)],
        &[(15, 1), (9, 1), (4, 1)],
        &[(15, 1), (5, 1), (3, 2)],
        &[(15, 1), (4, 2), (3, 1)],
        &[(14, 1), (3, 4)],
        &[(13, 1), (3, 4)],
        &[(12, 1), (9, 1), (3, 2)],
        &[(12, 1), (4, 1), (3, 3)],
        &[(11, 2), (3, 2)],
        &[(11, 1), (10, 1), (3, 2)],
        &[(11, 1), (9, 2)],
        &[(11, 1), (9, 1), (4, 1), (3, 1)],
        &[(11, 1), (5, 1), (3, 3)],
        &[(11, 1), (4, 2), (3, 2)],
        &[(10, 2), (3, 2)],
        &[(10, 1), (9, 2)],
        &[(10, 1), (9, 1), (4, 1), (3, 1)],
        &[(10, 1), (5, 1), (3, 3)],
        &[(10, 1), (4, 2), (3, 2)],
        &[(9, 2), (5, 1), (3, 1)],
        &[(9, 2), (4, 2)],
        &[(9, 1), (6, 1), (3, 3)],
        &[(9, 1), (5, 1), (4, 1), (3, 2)],
        &[(9, 1), (4, 3), (3, 1)],
        &[(8, 1), (3, 5)],
        &[(7, 1), (3, 5)],
        &[(6, 1), (4, 1), (3, 4)],
        &[(5, 2), (3, 4)],
        &[(5, 1), (4, 2), (3, 3)],
        &[(4, 4), (3, 2)],
        &[(2, 1), (3, 6)],
        &[(1, 1), (9, 1), (3, 4)],
        &[(1, 1), (4, 1), (3, 5)],
    ];
    let systems = [
        (7, shapes_for_seven_edges(), seven, 2),
        (8, shapes_for_eight_edges(), eight, 6),
        (10, shapes_for_ten_edges(), ten, 45),
    ];
    let mut sizes = Vec::new();
    for (m, shapes, listed, count) in systems {
        let got: BTreeSet<Vec<usize>> =
            component_multiset_solutions(m, 12, &shapes).into_iter().map(|s| s.counts).collect();
        let want: BTreeSet<Vec<usize>> = listed.iter().map(|s| as_counts(&shapes, s)).collect();
        if got.len() != count || got != want {
            let extra: Vec<_> = got.difference(&want).collect();
            let missing: Vec<_> = want.difference(&got).collect();
            return Err(format!("|M|={m}: {} solutions, extra {extra:?}, missing {missing:?}", got.len()));
        }
        sizes.push(got.len().to_string());
    }
    Ok(format!("{} solutions", sizes.join("/")))
}

fn expected_parent_order(n: usize) -> usize {
    match n % 6 {
        0 => n / 3 + 4,
        4 => (n + 14) / 3,
        _ => (n + 16) / 3,
    }
}

fn parent_identities() -> Outcome {
    let mut cases: Vec<(String, Fullerene)> = vec![
        ("leapfrog(C20)".into(), leapfrog_c20()),
        ("C80:1".into(), named("C80:1")),
        ("C80:2".into(), named("C80:2")),
        ("C70:1".into(), named("C70:1")),
    ];
    let report = verify_bound_range(20, 40).map_err(|e| e.to_string())?;
    let by_order: Vec<(usize, Vec<Fullerene>)> = (20..=40)
        .step_by(2)
        .map(|n| (n, enumerate_fullerenes(n).unwrap()))
        .collect();
    for x in &report.extremal {
        let (_, isomers) = by_order.iter().find(|(n, _)| *n == x.n).unwrap();
        cases.push((format!("n={} #{}", x.n, x.index), isomers[x.index].clone()));
    }
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(label, f)| {
            let (c, cover) = clar(f);
            if c != theorem_bound(f.n()) {
                return Some(format!("{label}: not extremal"));
            }
            let p = match parent_of(f, &cover) {
                Ok(p) => p,
                Err(e) => return Some(format!("{label}: {e}")),
            };
            let census = p.graph.face_size_census();
            let only_4_6 = census.iter().enumerate().all(|(s, &k)| k == 0 || s == 4 || s == 6);
            let want = expected_parent_order(f.n());
            if p.graph.vertex_count() != want {
                Some(format!("{label}: parent has {} vertices, expected {want}", p.graph.vertex_count()))
            } else if !only_4_6 || p.quad_count() != cover.matching.len() {
                Some(format!("{label}: faces {census:?}, {} quads for |M|={}", p.quad_count(), cover.matching.len()))
            } else if p.class == ParentClass::None {
                Some(format!("{label}: parent unclassified"))
            } else {
                None
            }
        })
        .collect();
    if !failures.is_empty() {
        return Err(failures.join("; "));
    }
    Ok(format!("{} extremal witnesses", cases.len()))
}

fn round_trip() -> Outcome {
    let mut parts = Vec::new();
    for label in ["C70:1", "C80:1"] {
        let f = named(label);
        let start = Instant::now();
        let (_, cover) = clar(&f);
        let out = pipeline(&f, &cover).map_err(|e| format!("{label}: {e}"))?;
        within(start, Duration::from_secs(300), label)?;
        let r = &out.report;
        if !r.round_trip || r.diagonalizations == 0 || r.non_extremal_outputs > 0 {
            return Err(format!(
                "{label}: {} diagonalizations, {} off-bound outputs, input recovered: {}",
                r.diagonalizations, r.non_extremal_outputs, r.round_trip
            ));
        }
        parts.push(format!("{label}: {} -> {} distinct", r.diagonalizations, r.distinct_fullerenes));
    }
    Ok(parts.join(", "))
}

/// A plane graph is bipartite exactly when all its faces are even.
fn bipartite_iff_even_faces(g: &RotationSystem) -> bool {
    let even = g.faces().iter().all(|f| f.size() % 2 == 0);
    bipartition(g).is_some() == even
}

fn corpus() -> Vec<(String, Fullerene)> {
    let mut all = Vec::new();
    for n in (20..=40).step_by(2) {
        for (i, f) in enumerate_fullerenes(n).unwrap().into_iter().enumerate() {
            all.push((format!("n={n} #{i}"), f));
        }
    }
    for label in ["C60:1", "C70:1", "C76:1", "C78:1", "C78:2", "C78:3", "C78:4", "C78:5", "C80:1", "C80:2"] {
        all.push((label.to_string(), named(label)));
    }
    all
}

fn property_suites() -> Outcome {
    let corpus = corpus();
    let failures: Vec<String> = corpus
        .par_iter()
        .flat_map_iter(|(label, f)| {
            let mut bad = Vec::new();
            let (_, cover) = clar(f);
            let report = verify_clar_cover(f, &cover);
            if !report.is_valid() {
                bad.push(format!("{label}: witness fails {:?}", report.violations));
            }
            if !bipartite_iff_even_faces(f.graph()) {
                bad.push(format!("{label}: bipartite/even-face mismatch"));
            }
            match expand(f, &cover) {
                Ok(e) => {
                    let g = &e.graph;
                    if !(g.is_trivalent() && bipartition(g).is_some() && face_three_coloring(g).is_some()) {
                        bad.push(format!("{label}: expansion not trivalent, bipartite and 3-colorable"));
                    }
                    if !bipartite_iff_even_faces(g) {
                        bad.push(format!("{label}: expansion bipartite/even-face mismatch"));
                    }
                }
                Err(e) => bad.push(format!("{label}: expansion failed: {e}")),
            }
            if let Err(e) = m_associated(f, &cover) {
                bad.push(format!("{label}: associated graph: {e}"));
            }
            if let Ok(p) = parent_of(f, &cover) {
                if !bipartite_iff_even_faces(&p.graph) {
                    bad.push(format!("{label}: parent bipartite/even-face mismatch"));
                }
            }
            if f.n() <= 40 {
                match validate_fullerene(leapfrog(f.graph()).unwrap()) {
                    Ok(lf) if is_ipr(&lf) => {}
                    _ => bad.push(format!("{label}: leapfrog is not an IPR fullerene")),
                }
            }
            if f.n() <= 26 {
                match cyclic_cut_at_most(f, 5, DEFAULT_CUT_BUDGET) {
                    Ok(r) if r.cut_size == Some(5) => {}
                    Ok(r) => bad.push(format!("{label}: smallest cyclic cut {:?}", r.cut_size)),
                    Err(e) => bad.push(format!("{label}: {e}")),
                }
            }
            bad.into_iter()
        })
        .collect();
    if !failures.is_empty() {
        return Err(format!("{} failures: {}", failures.len(), failures.join("; ")));
    }
    Ok(format!("{} fullerenes", corpus.len()))
}

/// Reads an encoded parent graph from `data/diagonalization_example.json`
/// when present; without it the criterion is inactive.
fn diagonalization_example() -> Option<Outcome> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/diagonalization_example.json");
    let text = std::fs::read_to_string(path).ok()?;
    Some((|| {
        let p = ParentGraph::from_graph(read_graph_json(&text).map_err(|e| e.to_string())?);
        let ds = enumerate_diagonalizations(&p);
        let outs: Vec<Fullerene> = ds.iter().map(|d| contract(&p, d)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let codes: BTreeSet<_> = outs.iter().map(Fullerene::canonical_code).collect();
        let c70 = named("C70:1").canonical_code();
        let all_extremal = outs.iter().all(|f| clar(f).0 == theorem_bound(f.n()));
        if ds.len() == 64 && codes.len() == 28 && codes.contains(&c70) && all_extremal {
            Ok("64 diagonalizations, 28 fullerenes".to_string())
        } else {
            Err(format!(
                "{} diagonalizations, {} fullerenes, contains C70:1: {}, all extremal: {all_extremal}",
                ds.len(),
                codes.len(),
                codes.contains(&c70)
            ))
        }
    })())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("C78 Clar numbers", c78_table),
        ("named extremal isomers", named_extremal),
        ("refined bound for 20 <= n <= 40", bound_exhaustive),
        ("solver agrees with oracle for n <= 30", oracle_equivalence),
        ("component equation systems", equation_systems),
        ("parent graph identities", parent_identities),
        ("construction round trip", round_trip),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{:.1?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    match diagonalization_example() {
        None => println!("criterion 9: SKIP  diagonalization example: no encoded graph supplied (inactive)"),
        Some(Ok(detail)) => println!("criterion 9: PASS  diagonalization example: {detail}"),
        Some(Err(why)) => {
            failed += 1;
            println!("criterion 9: FAIL  diagonalization example: {why}");
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
