use fixedbitset::FixedBitSet;
use itertools::Itertools;

use super::ExtremalError;
use crate::hypercore::Edge;
use crate::patterns::equipartitions;
use crate::util::binomial;

/// Smallest family of `k/r`-subsets of `0..k` meeting every `r`-equipartition in a part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingReport {
    pub k: usize,
    pub r: usize,
    pub size: usize,
    pub family: Vec<Edge>,
    pub nodes: u64,
}

struct Cover {
    /// Equipartition -> indices of its parts among the candidate sets.
    options: Vec<Vec<usize>>,
    /// Candidate set -> equipartitions containing it.
    covers: Vec<Vec<usize>>,
    best: Vec<usize>,
    nodes: u64,
}

impl Cover {
    /// Greedy packing bound: uncovered equipartitions that pairwise share no
    /// usable part each need their own set.
    fn packing_bound(&self, covered: &[u32], banned: &FixedBitSet) -> usize {
        let mut used = FixedBitSet::with_capacity(self.covers.len());
        let mut count = 0;
        for (u, opts) in self.options.iter().enumerate() {
            if covered[u] > 0 {
                continue;
            }
            let live: Vec<usize> = opts.iter().copied().filter(|&s| !banned[s]).collect();
            if live.iter().all(|&s| !used[s]) {
                count += 1;
                for s in live {
                    used.insert(s);
                }
            }
        }
        count
    }

    fn search(&mut self, chosen: &mut Vec<usize>, covered: &mut Vec<u32>, banned: &mut FixedBitSet) {
        self.nodes += 1;
        let Some(u) = (0..self.options.len())
            .filter(|&u| covered[u] == 0)
            .min_by_key(|&u| self.options[u].iter().filter(|&&s| !banned[s]).count())
        else {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        };
        if chosen.len() + self.packing_bound(covered, banned) >= self.best.len() {
            return;
        }
        let opts: Vec<usize> = self.options[u].iter().copied().filter(|&s| !banned[s]).collect();
        let mut newly_banned = Vec::new();
        for s in opts {
            chosen.push(s);
            for &e in &self.covers[s] {
                covered[e] += 1;
            }
            self.search(chosen, covered, banned);
            for &e in &self.covers[s] {
                covered[e] -= 1;
            }
            chosen.pop();
            // Later branches leave `s` out: families with `s` were just covered.
            banned.insert(s);
            newly_banned.push(s);
        }
        for s in newly_banned {
            banned.set(s, false);
        }
    }
}

/// Exact minimum hitting family by branch and bound over set covers.
///
/// Starts from the sets through vertex 0, which always hit, and looks for a
/// strictly smaller family: branch on the uncovered equipartition with the
/// fewest usable parts, prune with a packing bound. The counting bound
/// `C(k, k')/r` is not used, so the search confirms it independently.
pub fn min_hitting_family(k: usize, r: usize) -> Result<HittingReport, ExtremalError> {
    let parts = equipartitions(k, r)?;
    let kp = k / r;
    let sets: Vec<Edge> = (0..k).combinations(kp).map(Edge::from_vertices).collect();
    let index = |e: &Edge| sets.binary_search_by(|s| s.to_vec().cmp(&e.to_vec())).expect("part is a k'-set");
    let options: Vec<Vec<usize>> = parts.iter().map(|p| p.iter().map(index).sorted().collect()).collect();
    let mut covers = vec![Vec::new(); sets.len()];
    for (u, opts) in options.iter().enumerate() {
        for &s in opts {
            covers[s].push(u);
        }
    }
    let star: Vec<usize> = (0..sets.len()).filter(|&s| sets[s].contains(0)).collect();
    debug_assert_eq!(star.len() as u128, binomial(k - 1, kp - 1));
    let mut cover = Cover {
        options,
        covers,
        best: star,
        nodes: 0,
    };
    let mut covered = vec![0u32; parts.len()];
    let mut banned = FixedBitSet::with_capacity(sets.len());
    cover.search(&mut Vec::new(), &mut covered, &mut banned);
    let mut family: Vec<Edge> = cover.best.iter().map(|&s| sets[s].clone()).collect();
    family.sort();
    Ok(HittingReport {
        k,
        r,
        size: family.len(),
        family,
        nodes: cover.nodes,
    })
}
