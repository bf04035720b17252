//! Brute-force reference enumeration for cross-checking the engine.
//!
//! Deliberately naive: subsets are swept as bitmasks and every candidate is
//! rechecked from scratch. Shares nothing with the search modules so that a
//! bug there cannot hide here.

use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// Largest vertex count the subset sweep accepts.
pub const MAX_ORACLE_VERTICES: usize = 22;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(
        "graph has {n} vertices; the reference enumerator accepts at most {MAX_ORACLE_VERTICES}"
    )]
    TooLarge { n: usize },
}

/// Lists every maximal k-plex of `g` with at least `min_size` vertices
/// (`min_size = 0` applies no floor). Each plex is sorted ascending and the
/// result list is in canonical (lexicographic) order.
///
/// Maximality is decided before the size floor is applied, so a small
/// maximal plex is filtered out rather than replaced by a larger non-plex.
pub fn brute_list(g: &Graph, k: u32, min_size: u32) -> Result<Vec<Vec<VertexId>>, OracleError> {
    let n = g.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return Err(OracleError::TooLarge { n });
    }

    let adj: Vec<u32> = (0..n as VertexId)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |mask, &u| mask | (1 << u))
        })
        .collect();

    let is_plex = |mask: u32| -> bool {
        let size = mask.count_ones();
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Non-neighbors inside the set, counting v itself.
            if size - (adj[v] & mask).count_ones() > k {
                return false;
            }
        }
        true
    };

    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut out = Vec::new();
    for mask in 1u32..=full {
        if !is_plex(mask) {
            continue;
        }
        let mut grow = full & !mask;
        let mut maximal = true;
        while grow != 0 {
            let u = grow.trailing_zeros();
            grow &= grow - 1;
            if is_plex(mask | (1 << u)) {
                maximal = false;
                break;
            }
        }
        if !maximal || mask.count_ones() < min_size {
            continue;
        }
        let members: Vec<VertexId> = (0..n as VertexId)
            .filter(|&v| mask & (1 << v) != 0)
            .collect();
        out.push(members);
    }
    out.sort_unstable();
    Ok(out)
}
