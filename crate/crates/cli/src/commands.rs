use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use clarion::clar::{solve, theorem_bound, verify_bound_range, BoundCap, ClarResult, SolveError, SolverOptions};
use clarion::fullerene::{EnumerationError, Fullerene};
use clarion::io::{graph_to_json, named_isomer, parent_to_json, read_fullerenes, spiral_line, to_dot};
use clarion::transforms::{self, original_diagonalization, shapes};
use rayon::prelude::*;
use serde::Serialize;

use crate::{Budget, Format, Inputs, Range};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        CliError { code: EXIT_PARSE, message: message.into() }
    }

    fn budget(message: impl Into<String>) -> Self {
        CliError { code: EXIT_BUDGET, message: message.into() }
    }

    fn other(message: impl Into<String>) -> Self {
        CliError { code: EXIT_VIOLATION, message: message.into() }
    }
}

fn load(inputs: &Inputs) -> Result<Vec<(String, Fullerene)>, CliError> {
    let mut out = Vec::new();
    for path in &inputs.paths {
        let text = fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
        let fs = read_fullerenes(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
        for (i, f) in fs.into_iter().enumerate() {
            let label = match f.label() {
                Some(l) => l.split_whitespace().next().unwrap_or(l).to_string(),
                None => format!("{}#{}", path.display(), i + 1),
            };
            out.push((label, f));
        }
    }
    for name in &inputs.named {
        let f = named_isomer(name).ok_or_else(|| CliError::parse(format!("unknown isomer label `{name}`")))?;
        out.push((name.clone(), f));
    }
    if out.is_empty() {
        return Err(CliError::parse("no input: pass --input FILE or --named LABEL"));
    }
    Ok(out)
}

/// Machine-readable solver result.
#[derive(Debug, Serialize)]
struct ClarRecord {
    label: String,
    n: usize,
    clar_number: usize,
    bound: usize,
    witness_faces: Vec<usize>,
    witness_matching: Vec<(usize, usize)>,
    nodes_explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u128>,
}

pub fn clar(inputs: &Inputs, budget: &Budget, format: Format, timing: bool) -> Result<u8, CliError> {
    let isomers = load(inputs)?;
    let opts = SolverOptions { cap: BoundCap::None, node_budget: budget.budget_nodes, time_budget: budget.budget_seconds };
    let solved: Vec<Result<(ClarResult, u128), SolveError>> = isomers
        .par_iter()
        .map(|(_, f)| {
            let t = Instant::now();
            solve(f, &opts).map(|r| (r, t.elapsed().as_millis()))
        })
        .collect();
    let mut records = Vec::new();
    for ((label, f), r) in isomers.iter().zip(solved) {
        let (r, ms) = r.map_err(|e| CliError::budget(format!("{label}: {e}")))?;
        records.push(ClarRecord {
            label: label.clone(),
            n: f.n(),
            clar_number: r.clar_number,
            bound: theorem_bound(f.n()),
            witness_faces: r.witness.faces,
            witness_matching: r.witness.matching,
            nodes_explored: r.nodes_explored,
            wall_time_ms: timing.then_some(ms),
        });
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&records).expect("records serialize")),
        Format::Dot => {
            for ((_, f), rec) in isomers.iter().zip(&records) {
                print!("{}", to_dot(f.graph(), &rec.witness_faces, &[]));
            }
        }
        Format::Table => {
            let mut rows = vec![vec![
                "isomer".to_string(),
                "n".into(),
                "clar".into(),
                "bound".into(),
                "extremal".into(),
                "nodes".into(),
            ]];
            if timing {
                rows[0].push("ms".into());
            }
            for rec in &records {
                let mut row = vec![
                    rec.label.clone(),
                    rec.n.to_string(),
                    rec.clar_number.to_string(),
                    rec.bound.to_string(),
                    if rec.clar_number == rec.bound { "yes" } else { "no" }.to_string(),
                    rec.nodes_explored.to_string(),
                ];
                if let Some(ms) = rec.wall_time_ms {
                    row.push(ms.to_string());
                }
                rows.push(row);
            }
            print!("{}", table(&rows));
        }
    }
    let violated = records.iter().any(|r| r.clar_number > r.bound);
    Ok(if violated { EXIT_VIOLATION } else { EXIT_OK })
}

pub fn verify_bound(range: Range, format: Format) -> Result<u8, CliError> {
    let report = verify_bound_range(range.lo, range.hi).map_err(|e| match e {
        EnumerationError::Budget(..) | EnumerationError::CutBudget { .. } => CliError::budget(e.to_string()),
    })?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
        Format::Table | Format::Dot => {
            let mut rows = vec![["n", "isomers", "bound", "max clar", "extremal", "at old bound"].map(String::from).to_vec()];
            for o in &report.orders {
                rows.push(vec![
                    o.n.to_string(),
                    o.isomers.to_string(),
                    o.bound.to_string(),
                    o.max_clar.to_string(),
                    o.extremal.to_string(),
                    o.classical_hits.to_string(),
                ]);
            }
            print!("{}", table(&rows));
            for v in &report.violations {
                println!("VIOLATION n={} isomer #{}: clar {} > bound {}", v.n, v.index, v.clar_number, v.bound);
            }
            println!(
                "{} extremal isomers, {} violations",
                report.extremal.len(),
                report.violations.len()
            );
        }
    }
    Ok(if report.holds() { EXIT_OK } else { EXIT_VIOLATION })
}

pub fn pipeline(inputs: &Inputs, out_dir: Option<&Path>, format: Format) -> Result<u8, CliError> {
    let isomers = load(inputs)?;
    let (label, f) = &isomers[0];
    let r = solve(f, &SolverOptions { cap: BoundCap::None, ..SolverOptions::default() })
        .map_err(|e| CliError::budget(format!("clar: {e}")))?;
    let out = transforms::pipeline(f, &r.witness).map_err(|e| CliError::other(e.to_string()))?;
    let rep = &out.report;

    if let Some(dir) = out_dir {
        write_artifacts(dir, f, &r, &out).map_err(|e| CliError::parse(format!("{}: {e}", dir.display())))?;
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(rep).expect("report serializes")),
        Format::Dot => {
            let d = original_diagonalization(&out.parent, f);
            let diagonals = d.map(|d| d.diagonals(&out.parent)).unwrap_or_default();
            print!("{}", to_dot(&out.parent.graph, &out.parent.quads, &diagonals));
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = vec![
                vec!["isomer".into(), label.clone()],
                vec!["n".into(), rep.n.to_string()],
                vec!["clar number".into(), rep.clar_number.to_string()],
                vec!["bound".into(), rep.bound.to_string()],
                vec!["matching edges".into(), rep.matching_size.to_string()],
                vec!["expansion vertices".into(), rep.expansion_vertices.to_string()],
                vec!["components".into(), rep.components.join(", ")],
                vec!["parent vertices".into(), rep.parent_vertices.to_string()],
                vec!["parent degrees".into(), census(&rep.parent_degrees)],
                vec!["quadrilaterals".into(), rep.quad_count.to_string()],
                vec!["hexagons".into(), rep.hex_count.to_string()],
                vec!["class".into(), rep.class.as_str().into()],
                vec!["diagonalizations".into(), rep.diagonalizations.to_string()],
                vec!["distinct fullerenes".into(), rep.distinct_fullerenes.to_string()],
                vec!["non-extremal outputs".into(), rep.non_extremal_outputs.to_string()],
                vec!["input recovered".into(), rep.round_trip.to_string()],
            ];
            print!("{}", table(&rows));
        }
    }
    if !rep.extremal {
        eprintln!("not extremal: clar number {} < bound {}; contraction skipped", rep.clar_number, rep.bound);
    }
    Ok(EXIT_OK)
}

fn write_artifacts(
    dir: &Path,
    f: &Fullerene,
    r: &ClarResult,
    out: &transforms::PipelineOutput,
) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let json = |v: &dyn erased::Json| v.render();
    fs::write(dir.join("witness.json"), json(r))?;
    fs::write(dir.join("report.json"), json(&out.report))?;
    fs::write(dir.join("expansion.json"), graph_to_json(&out.expansion.graph))?;
    fs::write(dir.join("expansion.dot"), to_dot(&out.expansion.graph, &out.expansion.clar_structure(), &[]))?;
    let d = original_diagonalization(&out.parent, f);
    fs::write(dir.join("parent.json"), parent_to_json(&out.parent, d.as_ref()))?;
    let diagonals = d.as_ref().map(|d| d.diagonals(&out.parent)).unwrap_or_default();
    fs::write(dir.join("parent.dot"), to_dot(&out.parent.graph, &out.parent.quads, &diagonals))?;

    // one line per distinct contraction, ordered by canonical code
    let mut distinct = BTreeMap::new();
    for c in &out.contractions {
        distinct.entry(c.code.clone()).or_insert(c);
    }
    let own = f.canonical_code();
    let mut text = String::new();
    for (code, c) in distinct {
        let mut label = format!("clar={}", c.clar_number);
        if code == own {
            label.push_str(" input");
        }
        let line = match c.fullerene.spiral() {
            Some(s) => spiral_line(c.fullerene.n(), &s, Some(&label)),
            None => format!("# {} without spiral, code {} {label}", c.fullerene.n(), code.to_hex()),
        };
        let _ = writeln!(text, "{line}");
    }
    fs::write(dir.join("contractions.txt"), text)?;
    Ok(())
}

mod erased {
    pub trait Json {
        fn render(&self) -> String;
    }

    impl<T: serde::Serialize> Json for T {
        fn render(&self) -> String {
            serde_json::to_string_pretty(self).expect("plain data serializes")
        }
    }
}

pub fn solutions(edges: usize, derived: bool, format: Format) -> Result<u8, CliError> {
    let catalog = match (edges, derived) {
        (7, false) => shapes::shapes_for_seven_edges(),
        (8, false) => shapes::shapes_for_eight_edges(),
        (10, false) => shapes::shapes_for_ten_edges(),
        (10, true) => shapes::derive_path_free_shapes(10, 12),
        _ => return Err(CliError::parse(format!("no shape list for {edges} edges (use 7, 8 or 10)"))),
    };
    let sols = transforms::component_multiset_solutions(edges, 12, &catalog);
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                counts: Vec<usize>,
                components: String,
            }
            let rows: Vec<Row> =
                sols.iter().map(|s| Row { counts: s.counts.clone(), components: s.describe(&catalog) }).collect();
            println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
        }
        Format::Table | Format::Dot => {
            let mut rows = vec![vec!["#".to_string(), "counts".into(), "components".into()]];
            for (i, s) in sols.iter().enumerate() {
                rows.push(vec![format!("({})", i + 1), s.to_string(), s.describe(&catalog)]);
            }
            print!("{}", table(&rows));
            println!("{} solutions", sols.len());
        }
    }
    Ok(EXIT_OK)
}

fn census(c: &[usize]) -> String {
    c.iter()
        .enumerate()
        .filter(|&(_, &k)| k > 0)
        .map(|(d, k)| format!("{k}x deg {d}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Left-aligned columns separated by two spaces.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}
