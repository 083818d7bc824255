use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::{check_r, Certificate, DetectError, Detection, SolverBudget};
use crate::hypercore::{Hypergraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Undecided,
    Included,
    Excluded,
}

enum Step {
    Found,
    Fail,
    OutOfBudget,
}

/// Branch-and-propagate search for one `r`-regular subgraph.
///
/// Vertex states are implicit in two counters: `deg` (chosen edges through the
/// vertex) and `cand` (undecided edges through it). A vertex is untouched at
/// `deg == 0`, active for `0 < deg < r`, closed at `r` once `deg == r`, and closed
/// at 0 when untouched with fewer than `r` candidates left. Propagation:
///
/// * closed vertices exclude all their remaining candidates;
/// * an active vertex with `deg + cand < r` is a dead end;
/// * an active vertex with `deg + cand == r` forces all its candidates in.
///
/// On top of that, every pair of active vertices `u, w` must satisfy
/// `need(w) <= |C(w) \ C(u)| + min(need(u), |C(w) ∩ C(u)|)`, where `C` is the
/// candidate set and `need = r - deg`. This is what makes stars collapse fast:
/// once the center has few slots left, nothing that depends on it can be
/// completed.
///
/// Branching picks the active vertex with the fewest candidates (lowest id on
/// ties) and its colex-least candidate edge, trying "include" before "exclude".
/// With no active vertex the colex-least undecided edge is branched on.
pub struct Solver<'h> {
    host: &'h Hypergraph,
    r: usize,
    members: Vec<Vec<Vertex>>,
    state: Vec<EdgeState>,
    deg: Vec<usize>,
    cand: Vec<usize>,
    cand_bits: Vec<FixedBitSet>,
    trail: Vec<usize>,
    queue: Vec<Vertex>,
    included: usize,
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    found: Option<Vec<usize>>,
}

impl<'h> Solver<'h> {
    pub fn new(host: &'h Hypergraph, r: usize) -> Result<Solver<'h>, DetectError> {
        check_r(r)?;
        let n = host.n();
        let m = host.num_edges();
        let members: Vec<Vec<Vertex>> = host.edges().iter().map(|e| e.to_vec()).collect();
        let mut cand = vec![0usize; n];
        let mut cand_bits = vec![FixedBitSet::with_capacity(m); n];
        let mut state = vec![EdgeState::Undecided; m];
        for (i, verts) in members.iter().enumerate() {
            if verts.is_empty() {
                state[i] = EdgeState::Excluded;
            }
            for &v in verts {
                cand[v] += 1;
                cand_bits[v].insert(i);
            }
        }
        Ok(Solver {
            host,
            r,
            members,
            state,
            deg: vec![0; n],
            cand,
            cand_bits,
            trail: Vec::new(),
            queue: (0..n).collect(),
            included: 0,
            nodes: 0,
            max_nodes: None,
            deadline: None,
            found: None,
        })
    }

    /// Search nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn include(&mut self, e: usize) {
        debug_assert_eq!(self.state[e], EdgeState::Undecided);
        self.state[e] = EdgeState::Included;
        self.trail.push(e);
        self.included += 1;
        for &v in &self.members[e] {
            self.deg[v] += 1;
            self.cand[v] -= 1;
            self.cand_bits[v].set(e, false);
            self.queue.push(v);
        }
    }

    fn exclude(&mut self, e: usize) {
        debug_assert_eq!(self.state[e], EdgeState::Undecided);
        self.state[e] = EdgeState::Excluded;
        self.trail.push(e);
        for &v in &self.members[e] {
            self.cand[v] -= 1;
            self.cand_bits[v].set(e, false);
            self.queue.push(v);
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            let was_included = self.state[e] == EdgeState::Included;
            if was_included {
                self.included -= 1;
            }
            for &v in &self.members[e] {
                if was_included {
                    self.deg[v] -= 1;
                }
                self.cand[v] += 1;
                self.cand_bits[v].insert(e);
            }
            self.state[e] = EdgeState::Undecided;
        }
    }

    fn candidates(&self, v: Vertex) -> Vec<usize> {
        self.cand_bits[v].ones().collect()
    }

    /// Runs the propagation rules to a fixpoint. `false` means a dead end.
    fn propagate(&mut self) -> bool {
        let r = self.r;
        while let Some(v) = self.queue.pop() {
            let (d, c) = (self.deg[v], self.cand[v]);
            if d > r {
                self.queue.clear();
                return false;
            }
            if d == r || (d == 0 && c < r) {
                for e in self.candidates(v) {
                    if self.state[e] == EdgeState::Undecided {
                        self.exclude(e);
                    }
                }
            } else if d > 0 {
                if d + c < r {
                    self.queue.clear();
                    return false;
                }
                if d + c == r {
                    for e in self.candidates(v) {
                        if self.state[e] == EdgeState::Undecided {
                            self.include(e);
                        }
                    }
                }
            }
        }
        true
    }

    fn active(&self) -> Vec<Vertex> {
        (0..self.host.n())
            .filter(|&v| self.deg[v] > 0 && self.deg[v] < self.r)
            .collect()
    }

    fn pair_bound_holds(&self, active: &[Vertex]) -> bool {
        for &w in active {
            let need_w = self.r - self.deg[w];
            for &u in active {
                if u == w {
                    continue;
                }
                let need_u = self.r - self.deg[u];
                let shared = self.cand_bits[w].intersection_count(&self.cand_bits[u]);
                let own = self.cand[w] - shared;
                if need_w > own + need_u.min(shared) {
                    return false;
                }
            }
        }
        true
    }

    fn out_of_budget(&self) -> bool {
        if self.max_nodes.is_some_and(|cap| self.nodes > cap) {
            return true;
        }
        match self.deadline {
            Some(t) if self.nodes.is_multiple_of(256) => Instant::now() >= t,
            _ => false,
        }
    }

    fn search(&mut self) -> Step {
        self.nodes += 1;
        if self.out_of_budget() {
            return Step::OutOfBudget;
        }
        let mark = self.trail.len();
        if !self.propagate() {
            self.undo_to(mark);
            return Step::Fail;
        }
        let active = self.active();
        if !self.pair_bound_holds(&active) {
            self.undo_to(mark);
            return Step::Fail;
        }
        let branch_edge = match active.iter().min_by_key(|&&v| (self.cand[v], v)) {
            Some(&v) => self.cand_bits[v].ones().next(),
            None if self.included > 0 => {
                let chosen = (0..self.state.len())
                    .filter(|&e| self.state[e] == EdgeState::Included)
                    .collect();
                self.found = Some(chosen);
                self.undo_to(mark);
                return Step::Found;
            }
            None => self.state.iter().position(|&s| s == EdgeState::Undecided),
        };
        let Some(e) = branch_edge else {
            self.undo_to(mark);
            return Step::Fail;
        };

        let inner = self.trail.len();
        self.include(e);
        match self.search() {
            Step::Fail => {}
            other => {
                self.undo_to(mark);
                return other;
            }
        }
        self.undo_to(inner);
        self.exclude(e);
        let step = self.search();
        self.undo_to(mark);
        step
    }

    /// Runs the search with some edges fixed in advance.
    pub fn run_with(
        &mut self,
        include: &[usize],
        exclude: &[usize],
        budget: SolverBudget,
    ) -> Result<Detection, DetectError> {
        budget.validate()?;
        for &e in include.iter().chain(exclude) {
            if e >= self.state.len() {
                return Err(DetectError::EdgeIndexOutOfRange(e));
            }
        }
        self.max_nodes = budget.max_nodes;
        self.deadline = budget.time_limit().map(|d| Instant::now() + d);
        self.found = None;

        let mark = self.trail.len();
        let mut consistent = true;
        for &e in exclude {
            match self.state[e] {
                EdgeState::Undecided => self.exclude(e),
                EdgeState::Included => consistent = false,
                EdgeState::Excluded => {}
            }
        }
        for &e in include {
            match self.state[e] {
                EdgeState::Undecided => self.include(e),
                EdgeState::Included => {}
                EdgeState::Excluded => consistent = false,
            }
        }
        let step = if consistent { self.search() } else { Step::Fail };
        self.undo_to(mark);
        self.queue.clear();
        self.queue.extend(0..self.host.n());

        Ok(match step {
            Step::Found => {
                let edges = self.found.take().unwrap();
                Detection::Found(Certificate::from_edges(self.host, edges, self.r))
            }
            Step::Fail => Detection::NoneExists,
            Step::OutOfBudget => Detection::BudgetExhausted { nodes: self.nodes },
        })
    }

    pub fn run(&mut self, budget: SolverBudget) -> Result<Detection, DetectError> {
        self.run_with(&[], &[], budget)
    }
}

/// Searches `h` for an `r`-regular subgraph.
pub fn find_regular(h: &Hypergraph, r: usize, budget: SolverBudget) -> Result<Detection, DetectError> {
    Solver::new(h, r)?.run(budget)
}

/// Searches for an `r`-regular subgraph that uses edge `edge`.
pub fn find_regular_through(
    h: &Hypergraph,
    r: usize,
    edge: usize,
    budget: SolverBudget,
) -> Result<Detection, DetectError> {
    Solver::new(h, r)?.run_with(&[edge], &[], budget)
}

/// Splits the search by the colex-least edge of the subgraph and runs the
/// branches on `workers` threads.
///
/// Branch `i` fixes edge `i` in and every earlier edge out. The reported
/// certificate comes from the lowest branch that finds one, so the answer does
/// not depend on `workers`. A node cap applies to each branch separately; if a
/// branch before the first success runs out, the result is `BudgetExhausted`
/// with the node total of the branches up to and including it.
pub fn find_regular_parallel(
    h: &Hypergraph,
    r: usize,
    budget: SolverBudget,
    workers: usize,
) -> Result<Detection, DetectError> {
    check_r(r)?;
    budget.validate()?;
    let m = h.num_edges();
    let first_hit = AtomicUsize::new(usize::MAX);
    let run_branch = |i: usize| -> Option<(Detection, u64)> {
        if i > first_hit.load(Ordering::Relaxed) {
            return None;
        }
        let mut solver = Solver::new(h, r).expect("r already checked");
        let earlier: Vec<usize> = (0..i).collect();
        let det = solver.run_with(&[i], &earlier, budget).expect("budget already checked");
        if det.is_found() {
            first_hit.fetch_min(i, Ordering::Relaxed);
        }
        Some((det, solver.nodes()))
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<Option<(Detection, u64)>> = pool.install(|| (0..m).into_par_iter().map(run_branch).collect());

    let mut total = 0u64;
    for res in results {
        // Branches are only skipped past a success, so this never hits a gap first.
        let Some((det, nodes)) = res else { break };
        total += nodes;
        match det {
            Detection::NoneExists => continue,
            Detection::BudgetExhausted { .. } => return Ok(Detection::BudgetExhausted { nodes: total }),
            found => return Ok(found),
        }
    }
    Ok(Detection::NoneExists)
}
