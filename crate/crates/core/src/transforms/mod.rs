//! From a Clar structure of a fullerene to its parent graph and back.
//!
//! Widening every matching edge of a Clar cover into a quadrilateral gives
//! a leapfrog graph whose perfect Clar structure is the cover faces plus
//! the new quadrilaterals. Undoing the leapfrog yields the parent, a plane
//! graph of quadrilaterals and hexagons. Choosing a diagonal in each
//! quadrilateral and contracting the leapfrog of the parent accordingly
//! produces fullerenes again.

mod diagonal;
mod expand;
mod parent;
pub mod shapes;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::clar::{clar_number, theorem_bound, ClarCover, CoverReport};
use crate::embedding::{CanonicalCode, EmbeddingError, FaceId};
use crate::fullerene::{Fullerene, FullereneError};

pub use diagonal::{contract, enumerate_diagonalizations, original_diagonalization, Diagonalization};
pub use expand::{expand, m_associated, ExpansionResult, FaceOrigin, MAssociatedGraph};
pub use parent::{classify_parent, parent_of, reverse_leapfrog, ParentClass, ParentGraph, ReverseLeapfrog};
pub use shapes::{component_multiset_solutions, forbidden_subpath_check, ComponentMultiset, Shape, SmallGraph};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error("invalid Clar cover: {} violations", .0.violations.len())]
    InvalidCover(CoverReport),
    #[error("associated graph is not simple at faces {first} and {second}")]
    NotSimple { first: FaceId, second: FaceId },
    #[error("faces do not form a perfect Clar structure of a trivalent graph")]
    NotPerfectClarStructure,
    #[error("reverse leapfrog produced parallel edges")]
    ParentNotSimple,
    #[error("diagonalization violates the multiplicity rules")]
    InvalidDiagonalization,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("contraction is not a fullerene: {0}")]
    Contraction(#[from] FullereneError),
}

/// A pipeline failure together with the stage that raised it.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{stage}: {source}")]
pub struct PipelineError {
    pub stage: &'static str,
    pub source: TransformError,
}

fn at(stage: &'static str) -> impl Fn(TransformError) -> PipelineError {
    move |source| PipelineError { stage, source }
}

/// One fullerene obtained by contraction.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub diagonalization: Diagonalization,
    pub fullerene: Fullerene,
    pub code: CanonicalCode,
    pub clar_number: usize,
}

/// Contracts every diagonalization of `p` and solves each result.
/// Output order follows the diagonalization order.
pub fn contract_all(p: &ParentGraph) -> Result<Vec<Contraction>, TransformError> {
    enumerate_diagonalizations(p)
        .into_par_iter()
        .map(|d| {
            let f = contract(p, &d)?;
            let code = f.canonical_code();
            let c = clar_number(&f).clar_number;
            Ok(Contraction { diagonalization: d, fullerene: f, code, clar_number: c })
        })
        .collect()
}

/// Summary of the whole pipeline on one fullerene and one Clar cover.
#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub n: usize,
    pub clar_number: usize,
    pub bound: usize,
    pub matching_size: usize,
    pub expansion_vertices: usize,
    pub associated_degrees: Vec<usize>,
    pub components: Vec<String>,
    pub parent_vertices: usize,
    pub parent_degrees: Vec<usize>,
    pub quad_count: usize,
    pub hex_count: usize,
    pub class: ParentClass,
    /// Whether the cover reaches the refined bound. Contraction only runs
    /// for extremal covers with a classified parent.
    pub extremal: bool,
    pub diagonalizations: usize,
    pub distinct_fullerenes: usize,
    /// Contractions whose Clar number differs from the bound.
    pub non_extremal_outputs: usize,
    /// Whether the input reappears among the contractions.
    pub round_trip: bool,
}

/// Everything the pipeline builds along the way.
#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub report: PipelineReport,
    pub expansion: ExpansionResult,
    pub parent: ParentGraph,
    /// Contractions in diagonalization order; empty when skipped.
    pub contractions: Vec<Contraction>,
}

/// Runs expansion, association, parent, classification, diagonalization
/// and contraction for `cover`, which must be a Clar cover of `f`.
pub fn pipeline(f: &Fullerene, cover: &ClarCover) -> Result<PipelineOutput, PipelineError> {
    let e = expand(f, cover).map_err(at("expand"))?;
    let assoc = m_associated(f, cover).map_err(at("associate"))?;
    let p = parent_of(f, cover).map_err(at("parent"))?;
    let extremal = cover.faces.len() == theorem_bound(f.n());
    let catalog = shapes::shapes_for_ten_edges();
    let components = assoc
        .components()
        .iter()
        .map(|c| match shapes::identify(c, &catalog) {
            Some(i) => catalog[i].name.clone(),
            None => format!("unlisted(l={},k={})", c.edge_count(), c.odd_vertices()),
        })
        .collect();
    let outs = if p.class == ParentClass::None || !extremal {
        Vec::new()
    } else {
        contract_all(&p).map_err(at("contract"))?
    };
    let codes: BTreeSet<&CanonicalCode> = outs.iter().map(|c| &c.code).collect();
    let bound = theorem_bound(f.n());
    let own = f.canonical_code();
    let report = PipelineReport {
        n: f.n(),
        clar_number: cover.faces.len(),
        bound: theorem_bound(f.n()),
        matching_size: cover.matching.len(),
        expansion_vertices: e.graph.vertex_count(),
        associated_degrees: assoc.degree_census(),
        components,
        parent_vertices: p.graph.vertex_count(),
        parent_degrees: p.degree_census(),
        quad_count: p.quad_count(),
        hex_count: p.hex_count(),
        class: p.class,
        extremal,
        diagonalizations: outs.len(),
        distinct_fullerenes: codes.len(),
        non_extremal_outputs: outs.iter().filter(|c| c.clar_number != bound).count(),
        round_trip: codes.contains(&own),
    };
    Ok(PipelineOutput { report, expansion: e, parent: p, contractions: outs })
}
