//! File formats: adjacency JSON, spiral text and DOT.
//!
//! Adjacency JSON is `{"n": 4, "rotations": [[1, 2, 3], ...]}` with each
//! list giving a vertex's neighbors in counterclockwise order. Parent
//! graphs may add `"quads"` (vertex lists of the quadrilaterals) and
//! `"diagonals"` (chosen vertex pairs). Spiral text has one isomer per
//! line, `n : p1 ... p12 [label]`; `#` starts a comment.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::{EmbeddingError, FaceId, RotationSystem, VertexId};
use crate::fullerene::{unwind_spiral, validate_fullerene, Fullerene, FullereneError, SpiralCode, SpiralError};
use crate::transforms::{Diagonalization, ParentGraph};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("line {line}: {source}")]
    Spiral { line: usize, source: SpiralError },
    #[error("vertex count {n} does not match {rows} rotation lists")]
    CountMismatch { n: usize, rows: usize },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Fullerene(#[from] FullereneError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyJson {
    pub n: usize,
    pub rotations: Vec<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quads: Option<Vec<Vec<VertexId>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonals: Option<Vec<(VertexId, VertexId)>>,
}

impl AdjacencyJson {
    pub fn from_graph(g: &RotationSystem) -> Self {
        AdjacencyJson { n: g.vertex_count(), rotations: g.rotations(), quads: None, diagonals: None }
    }

    pub fn from_parent(p: &ParentGraph, d: Option<&Diagonalization>) -> Self {
        let mut a = AdjacencyJson::from_graph(&p.graph);
        a.quads = Some(p.quads.iter().map(|&q| p.graph.face_vertices(q)).collect());
        a.diagonals = d.map(|d| d.diagonals(p));
        a
    }

    pub fn to_graph(&self) -> Result<RotationSystem, IoError> {
        if self.n != self.rotations.len() {
            return Err(IoError::CountMismatch { n: self.n, rows: self.rotations.len() });
        }
        Ok(RotationSystem::from_rotations(self.rotations.clone())?)
    }
}

pub fn read_graph_json(text: &str) -> Result<RotationSystem, IoError> {
    serde_json::from_str::<AdjacencyJson>(text)?.to_graph()
}

pub fn graph_to_json(g: &RotationSystem) -> String {
    serde_json::to_string(&AdjacencyJson::from_graph(g)).expect("plain data serializes")
}

pub fn parent_to_json(p: &ParentGraph, d: Option<&Diagonalization>) -> String {
    serde_json::to_string(&AdjacencyJson::from_parent(p, d)).expect("plain data serializes")
}

/// One line of a spiral file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiralEntry {
    pub n: usize,
    pub code: SpiralCode,
    pub label: Option<String>,
}

impl SpiralEntry {
    pub fn unwind(&self) -> Result<Fullerene, SpiralError> {
        let f = unwind_spiral(&self.code, self.n)?;
        Ok(match &self.label {
            Some(l) => f.with_label(l.clone()),
            None => f,
        })
    }
}

pub fn parse_spiral_file(text: &str) -> Result<Vec<SpiralEntry>, IoError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (n, rest) = content
            .split_once(':')
            .ok_or_else(|| IoError::Format { line, message: "expected `n : p1 ... p12 [label]`".into() })?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| IoError::Format { line, message: format!("bad vertex count `{}`", n.trim()) })?;
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        if tokens.len() < 12 {
            return Err(IoError::Format { line, message: format!("expected 12 pentagon positions, found {}", tokens.len()) });
        }
        let code: SpiralCode = tokens[..12].join(" ").parse().map_err(|source| IoError::Spiral { line, source })?;
        let label = (tokens.len() > 12).then(|| tokens[12..].join(" "));
        out.push(SpiralEntry { n, code, label });
    }
    Ok(out)
}

pub fn spiral_line(n: usize, code: &SpiralCode, label: Option<&str>) -> String {
    match label {
        Some(l) => format!("{n} : {code} {l}"),
        None => format!("{n} : {code}"),
    }
}

/// Reads fullerenes from either adjacency JSON (one object or an array of
/// objects) or spiral text.
pub fn read_fullerenes(text: &str) -> Result<Vec<Fullerene>, IoError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let graphs: Vec<AdjacencyJson> = if trimmed.starts_with('[') {
            serde_json::from_str(text)?
        } else {
            vec![serde_json::from_str(text)?]
        };
        return graphs.iter().map(|a| Ok(validate_fullerene(a.to_graph()?)?)).collect();
    }
    parse_spiral_file(text)?
        .iter()
        .enumerate()
        .map(|(i, e)| e.unwind().map_err(|source| IoError::Spiral { line: i + 1, source }))
        .collect()
}

/// Undirected DOT rendering. `faces` are listed as comments, `diagonals`
/// drawn as dashed chords.
pub fn to_dot(g: &RotationSystem, faces: &[FaceId], diagonals: &[(VertexId, VertexId)]) -> String {
    let mut s = String::from("graph G {\n  node [shape=point];\n");
    for &f in faces {
        let vs: Vec<String> = g.face_vertices(f).iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "  // face {f}: {}", vs.join(" "));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    for &(u, v) in diagonals {
        let _ = writeln!(s, "  {u} -- {v} [style=dashed];");
    }
    s.push_str("}\n");
    s
}

const NAMED: &str = include_str!("../data/named_isomers.txt");

/// Experimentally relevant IPR isomers keyed by atlas label (`C70:1`, ...).
pub fn named_isomers() -> Vec<(String, Fullerene)> {
    parse_spiral_file(NAMED)
        .expect("bundled spiral file parses")
        .into_iter()
        .map(|e| {
            let label = e.label.clone().unwrap_or_default();
            let key = label.split_whitespace().next().unwrap_or("").to_string();
            (key, e.unwind().expect("bundled spirals wind up"))
        })
        .collect()
}

pub fn named_isomer(label: &str) -> Option<Fullerene> {
    named_isomers().into_iter().find(|(k, _)| k == label).map(|(_, f)| f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{fixtures::cube, isomorphic};

    #[test]
    fn json_round_trip() {
        let g = cube();
        let text = graph_to_json(&g);
        let back = read_graph_json(&text).unwrap();
        assert_eq!(back.rotations(), g.rotations());
        assert!(matches!(read_graph_json("{\"n\": 3"), Err(IoError::Json(_))));
        assert!(matches!(read_graph_json("{\"n\": 3, \"rotations\": []}"), Err(IoError::CountMismatch { .. })));
    }

    #[test]
    fn spiral_lines() {
        let text = "# comment\n\n20 : 1 2 3 4 5 6 7 8 9 10 11 12 C20 Ih\n";
        let entries = parse_spiral_file(text).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].label.as_deref(), Some("C20 Ih"));
        let line = spiral_line(20, &entries[0].code, Some("C20"));
        assert_eq!(line, "20 : 1 2 3 4 5 6 7 8 9 10 11 12 C20");
        let err = parse_spiral_file("20 : 1 2 3\n").unwrap_err();
        assert!(matches!(err, IoError::Format { line: 1, .. }));
    }

    #[test]
    fn named_isomers_load() {
        let all = named_isomers();
        assert_eq!(all.len(), 13);
        let c60 = named_isomer("C60:1").unwrap();
        let again = read_fullerenes(&graph_to_json(c60.graph())).unwrap();
        assert!(isomorphic(again[0].graph(), c60.graph()));
    }

    #[test]
    fn dot_marks_diagonals() {
        let dot = to_dot(&cube(), &[0], &[(0, 2)]);
        assert!(dot.contains("0 -- 2 [style=dashed];"));
        assert_eq!(dot.matches(" -- ").count(), 13);
    }
}
