//! Independent Clar number: enumerate every perfect matching, take the
//! largest set of pairwise disjoint faces alternating in it.

use thiserror::Error;

use super::alternating_faces;
use crate::embedding::RotationSystem;
use crate::fullerene::Fullerene;

pub const ORACLE_MAX_ORDER: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("{0} alternating faces exceed the bitmask width")]
    TooManyFaces(usize),
}

pub fn clar_number_oracle(f: &Fullerene) -> Result<usize, OracleError> {
    let n = f.n();
    if n > ORACLE_MAX_ORDER {
        return Err(OracleError::TooLarge { n, max: ORACLE_MAX_ORDER });
    }
    let g = f.graph();
    let mut mate = vec![usize::MAX; n];
    let mut best = 0;
    let mut err = None;
    for_each_perfect_matching(g, &mut mate, &mut |mate| {
        let m: Vec<(usize, usize)> = (0..n).filter(|&v| v < mate[v]).map(|v| (v, mate[v])).collect();
        let alt = alternating_faces(g, &m);
        match max_disjoint(g, &alt) {
            Some(k) => best = best.max(k),
            None => err = Some(OracleError::TooManyFaces(alt.len())),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(best),
    }
}

fn for_each_perfect_matching(g: &RotationSystem, mate: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    let Some(v) = mate.iter().position(|&m| m == usize::MAX) else {
        visit(mate);
        return;
    };
    for w in g.neighbors(v) {
        if mate[w] == usize::MAX {
            mate[v] = w;
            mate[w] = v;
            for_each_perfect_matching(g, mate, visit);
            mate[v] = usize::MAX;
            mate[w] = usize::MAX;
        }
    }
}

/// Maximum number of pairwise vertex-disjoint faces among `faces`, by
/// branching on bitmasks.
fn max_disjoint(g: &RotationSystem, faces: &[usize]) -> Option<usize> {
    let k = faces.len();
    if k > 64 {
        return None;
    }
    let verts: Vec<Vec<usize>> = faces.iter().map(|&f| g.face_vertices(f)).collect();
    let mut clash = vec![0u64; k];
    for i in 0..k {
        for j in 0..k {
            if i != j && verts[i].iter().any(|v| verts[j].contains(v)) {
                clash[i] |= 1u64 << j;
            }
        }
    }
    Some(max_independent(&clash, if k == 64 { u64::MAX } else { (1u64 << k) - 1 }))
}

fn max_independent(clash: &[u64], cand: u64) -> usize {
    if cand == 0 {
        return 0;
    }
    let i = cand.trailing_zeros() as usize;
    let bit = 1u64 << i;
    let take = 1 + max_independent(clash, cand & !bit & !clash[i]);
    if take > (cand & !bit).count_ones() as usize {
        return take;
    }
    take.max(max_independent(clash, cand & !bit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clar::clar_number;
    use crate::fullerene::enumerate_fullerenes;
    use crate::fullerene::fixtures::{c20, c60_ih};

    #[test]
    fn small_orders_agree_with_solver() {
        assert_eq!(clar_number_oracle(&c20()), Ok(0));
        for n in [24, 26, 28] {
            for f in enumerate_fullerenes(n).unwrap() {
                assert_eq!(clar_number_oracle(&f).unwrap(), clar_number(&f).clar_number, "n={n}");
            }
        }
    }

    #[test]
    fn refuses_large_inputs() {
        assert_eq!(clar_number_oracle(&c60_ih()), Err(OracleError::TooLarge { n: 60, max: 40 }));
    }
}
