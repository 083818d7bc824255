use super::{check_r, Certificate, DetectError};
use crate::hypercore::Hypergraph;

/// Largest edge count [`brute_force_regular`] accepts.
pub const BRUTE_FORCE_MAX_EDGES: usize = 25;

/// Ground-truth oracle: walks every nonempty edge subset in reflected Gray code
/// order and returns the first one that is `r`-regular.
///
/// Consecutive subsets differ in one edge, so degrees are updated in `O(k)` per
/// step while `off` counts vertices whose degree is neither 0 nor `r`.
pub fn brute_force_regular(h: &Hypergraph, r: usize) -> Result<Option<Certificate>, DetectError> {
    check_r(r)?;
    let m = h.num_edges();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(DetectError::TooManyEdges {
            got: m,
            max: BRUTE_FORCE_MAX_EDGES,
        });
    }
    let members: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
    let mut degree = vec![0usize; h.n()];
    let mut off = 0usize;
    let mut covered = 0usize;
    let mut chosen = 0u32;
    for step in 1u32..(1u32 << m) {
        let flip = step.trailing_zeros() as usize;
        let adding = chosen & (1 << flip) == 0;
        chosen ^= 1 << flip;
        for &v in &members[flip] {
            let before = degree[v];
            let after = if adding { before + 1 } else { before - 1 };
            degree[v] = after;
            let was_off = before != 0 && before != r;
            let is_off = after != 0 && after != r;
            off = off + usize::from(is_off) - usize::from(was_off);
            if before == 0 {
                covered += 1;
            }
            if after == 0 {
                covered -= 1;
            }
        }
        if off == 0 && covered > 0 && members.iter().enumerate().all(|(i, e)| chosen & (1 << i) == 0 || !e.is_empty()) {
            let edges = (0..m).filter(|&i| chosen & (1 << i) != 0).collect();
            return Ok(Some(Certificate::from_edges(h, edges, r)));
        }
    }
    Ok(None)
}
