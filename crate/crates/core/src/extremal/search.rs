use std::time::{Duration, Instant};

use itertools::Itertools;

use super::ExtremalError;
use crate::hypercore::{Edge, Hypergraph};
use crate::regdetect::{find_regular, Detection, Solver, SolverBudget};
use crate::util::binomial;

/// Largest number of candidate edges `C(n, k)` [`extremal_search`] accepts.
pub const SEARCH_MAX_EDGES: usize = 64;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Caps on search-tree nodes and wall time. Hitting either leaves the
    /// report incomplete.
    pub budget: SolverBudget,
    /// Skip subtrees that only contain hypergraphs isomorphic to ones already
    /// covered. Changes node counts, never the optimum or witness.
    pub isomorph_reject: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub optimum: usize,
    pub witness: Hypergraph,
    /// The whole tree was explored, so `optimum` is exact.
    pub complete: bool,
    pub nodes: u64,
    /// Nodes spent inside the regular-subgraph checks.
    pub solver_nodes: u64,
    pub elapsed: Duration,
    /// An independent solver run confirmed the witness has no `r`-regular subgraph.
    pub witness_verified: bool,
}

struct Dfs<'h> {
    m: usize,
    solver: Solver<'h>,
    chosen: Vec<usize>,
    best: usize,
    best_set: Option<Vec<usize>>,
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    stopped: bool,
}

impl Dfs<'_> {
    /// Does `chosen ∪ {e}` contain an `r`-regular subgraph? Only subgraphs
    /// through `e` need checking: the rest were ruled out when `chosen` was built.
    fn closes_regular(&mut self, e: usize) -> bool {
        let keep: Vec<usize> = (0..self.m)
            .filter(|i| *i != e && self.chosen.binary_search(i).is_err())
            .collect();
        let det = self
            .solver
            .run_with(&[e], &keep, SolverBudget::unbounded())
            .expect("indices are in range");
        det.is_found()
    }

    fn visit(&mut self, i: usize) {
        if self.stopped {
            return;
        }
        self.nodes += 1;
        if self.max_nodes.is_some_and(|cap| self.nodes > cap)
            || (self.nodes.is_multiple_of(64) && self.deadline.is_some_and(|d| Instant::now() >= d))
        {
            self.stopped = true;
            return;
        }
        if self.chosen.len() + (self.m - i) <= self.best {
            return;
        }
        if i == self.m {
            self.best = self.chosen.len();
            self.best_set = Some(self.chosen.clone());
            return;
        }
        if !self.closes_regular(i) {
            self.chosen.push(i);
            self.visit(i + 1);
            self.chosen.pop();
        }
        self.visit(i + 1);
    }
}

/// Exact `ex(n, k, r)`: the largest set of `k`-subsets of `0..n` with no
/// `r`-regular subgraph.
///
/// Depth-first over the candidate edges in colex order, "include" before
/// "exclude". An edge is included only if no `r`-regular subgraph passes
/// through it; since containing one is monotone, a rejected edge is excluded
/// for the whole subtree. Subtrees that cannot beat the incumbent are cut. The
/// witness is the first optimal set in this order.
pub fn extremal_search(n: usize, k: usize, r: usize, options: SearchOptions) -> Result<SearchReport, ExtremalError> {
    if r < 2 {
        return Err(ExtremalError::RegularityTooSmall(r));
    }
    if k == 0 || k > n {
        return Err(ExtremalError::InvalidArgument(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let total = binomial(n, k);
    if total > SEARCH_MAX_EDGES as u128 {
        return Err(ExtremalError::GuardExceeded {
            n,
            k,
            edges: total,
            max: SEARCH_MAX_EDGES,
        });
    }
    options
        .budget
        .validate()
        .map_err(|e| ExtremalError::InvalidArgument(e.to_string()))?;
    let start = Instant::now();
    let complete_graph = Hypergraph::complete(n, k);
    let m = complete_graph.num_edges();
    // The full star is always a candidate, so only strictly larger sets can
    // displace it; starting one below keeps an equal-size earlier set first.
    let star = binomial(n - 1, k - 1) as usize;
    let mut dfs = Dfs {
        m,
        solver: Solver::new(&complete_graph, r).expect("r checked"),
        chosen: Vec::new(),
        best: star - 1,
        best_set: None,
        nodes: 0,
        max_nodes: options.budget.max_nodes,
        deadline: options.budget.max_millis.map(|ms| start + Duration::from_millis(ms)),
        stopped: false,
    };
    if options.isomorph_reject && m > 0 {
        // Every nonempty hypergraph has a relabeling that contains the first
        // edge, so the branch excluding it adds nothing. Include-first order
        // visits the included branch first anyway, so the witness is unchanged.
        dfs.nodes += 1;
        dfs.chosen.push(0);
        dfs.visit(1);
        dfs.chosen.pop();
    } else {
        dfs.visit(0);
    }

    let complete = !dfs.stopped;
    let (optimum, witness) = match dfs.best_set {
        Some(set) => {
            let edges = set.iter().map(|&i| complete_graph[i].clone()).collect();
            (set.len(), Hypergraph::from_edge_set(n, edges))
        }
        None => {
            let edges = (1..n)
                .combinations(k - 1)
                .map(|c| Edge::from_vertices(c.into_iter().chain([0])))
                .collect();
            (star, Hypergraph::from_edge_set(n, edges))
        }
    };
    let solver_nodes = dfs.solver.nodes();
    let witness_verified = matches!(
        find_regular(&witness, r, SolverBudget::unbounded()),
        Ok(Detection::NoneExists)
    );
    Ok(SearchReport {
        n,
        k,
        r,
        optimum,
        witness,
        complete,
        nodes: dfs.nodes,
        solver_nodes,
        elapsed: start.elapsed(),
        witness_verified,
    })
}
