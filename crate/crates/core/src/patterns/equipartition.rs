use std::collections::HashSet;

use super::PatternError;
use crate::hypercore::Edge;

/// Largest ground set [`equipartitions`] enumerates.
pub const EQUIPARTITION_MAX_K: usize = 12;

fn check(k: usize, r: usize) -> Result<(), PatternError> {
    if r == 0 || k == 0 || !k.is_multiple_of(r) {
        return Err(PatternError::InvalidArgument(format!("r must divide k, got k={k}, r={r}")));
    }
    if k > EQUIPARTITION_MAX_K {
        return Err(PatternError::InvalidArgument(format!(
            "equipartitions are enumerated only for k <= {EQUIPARTITION_MAX_K}, got {k}"
        )));
    }
    Ok(())
}

/// Every partition of `0..k` into `r` parts of size `k / r`, each listed once.
/// Parts appear in order of their smallest element.
pub fn equipartitions(k: usize, r: usize) -> Result<Vec<Vec<Edge>>, PatternError> {
    check(k, r)?;
    let size = k / r;
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fill(k, size, (1u32 << k) - 1, &mut parts, &mut out);
    Ok(out)
}

/// Opens the next part at the smallest free element and completes it with
/// every choice of `size − 1` further free elements.
fn fill(k: usize, size: usize, free: u32, parts: &mut Vec<u32>, out: &mut Vec<Vec<Edge>>) {
    if free == 0 {
        out.push(
            parts
                .iter()
                .map(|&m| Edge::from_vertices((0..k).filter(|&v| m >> v & 1 == 1)))
                .collect(),
        );
        return;
    }
    let first = free.trailing_zeros();
    let rest = free & !(1 << first);
    let pool: Vec<u32> = (0..k as u32).filter(|&v| rest >> v & 1 == 1).collect();
    choose(&pool, size - 1, 0, 1 << first, &mut |part| {
        parts.push(part);
        fill(k, size, free & !part, parts, out);
        parts.pop();
    });
}

fn choose(pool: &[u32], need: usize, start: usize, acc: u32, f: &mut dyn FnMut(u32)) {
    if need == 0 {
        f(acc);
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < need {
            break;
        }
        choose(pool, need - 1, i + 1, acc | 1 << pool[i], f);
    }
}

/// Does every `r`-equipartition of `0..k` have a part in `family`?
pub fn check_equipartition_hitting(k: usize, r: usize, family: &[Edge]) -> Result<bool, PatternError> {
    check(k, r)?;
    let size = k / r;
    if let Some(bad) = family.iter().find(|e| e.len() != size || e.max_vertex().is_some_and(|v| v >= k)) {
        return Err(PatternError::InvalidArgument(format!("{{{bad}}} is not a {size}-subset of 0..{k}")));
    }
    let members: HashSet<&Edge> = family.iter().collect();
    Ok(equipartitions(k, r)?
        .iter()
        .all(|parts| parts.iter().any(|p| members.contains(p))))
}
