//! Shared search bookkeeping and the baseline MC solver.

use std::time::{Duration, Instant};

use crate::graph::Graph;

/// Result of one maximum clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub max_size: usize,
    /// Members of the best clique found, ascending original vertex ids.
    pub solution: Vec<usize>,
    /// Number of expand calls.
    pub nodes: u64,
    /// Wall time of the search phase (setup and ordering included,
    /// parsing excluded).
    pub elapsed_millis: u64,
    /// False iff the time limit aborted the search.
    pub completed: bool,
}

/// Time budget for a search; `None` means unlimited.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchBudget {
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget { time_limit: None }
    }

    /// 0 means unlimited.
    pub fn from_millis(ms: u64) -> Self {
        SearchBudget {
            time_limit: (ms > 0).then(|| Duration::from_millis(ms)),
        }
    }

    pub fn from_secs(s: u64) -> Self {
        Self::from_millis(s.saturating_mul(1000))
    }
}

/// Mutable state every solver shares: the champion clique, the node
/// counter and the clock. Single-threaded by construction.
pub(crate) struct SearchState {
    pub nodes: u64,
    pub max_size: usize,
    pub best: Vec<usize>,
    started: Instant,
    deadline: Option<Instant>,
    pub aborted: bool,
}

impl SearchState {
    pub fn start(budget: SearchBudget) -> Self {
        let started = Instant::now();
        SearchState {
            nodes: 0,
            max_size: 0,
            best: Vec::new(),
            started,
            deadline: budget.time_limit.map(|d| started + d),
            aborted: false,
        }
    }

    /// Checked once per expand entry; granularity is one node.
    pub fn out_of_time(&mut self) -> bool {
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.aborted = true;
                return true;
            }
        }
        false
    }

    /// Record `clique` as the new champion. Callers only invoke this on a
    /// strict improvement.
    pub fn save_solution(&mut self, clique: &[usize]) {
        debug_assert!(clique.len() > self.max_size);
        self.max_size = clique.len();
        self.best = clique.to_vec();
    }

    pub fn finish(mut self) -> SearchOutcome {
        self.best.sort_unstable();
        SearchOutcome {
            max_size: self.max_size,
            solution: self.best,
            nodes: self.nodes,
            elapsed_millis: self.started.elapsed().as_millis() as u64,
            completed: !self.aborted,
        }
    }
}

struct McSearch<'a> {
    g: &'a Graph,
    state: SearchState,
    /// Debug switch; disabling it exposes the raw binomial search tree.
    cutoff_enabled: bool,
    /// Iterations of the top-level loop, for the binomial-tree sanity check.
    root_iterations: u64,
}

impl<'a> McSearch<'a> {
    fn expand(&mut self, c: &mut Vec<usize>, p: &mut Vec<usize>, depth: usize) {
        if self.state.out_of_time() {
            return;
        }
        self.state.nodes += 1;
        for i in (0..p.len()).rev() {
            if self.cutoff_enabled && c.len() + p.len() <= self.state.max_size {
                return;
            }
            if depth == 0 {
                self.root_iterations += 1;
            }
            let v = p[i];
            c.push(v);
            let mut new_p = Vec::with_capacity(i);
            for &w in &p[..i] {
                if self.g.adjacent(v, w) {
                    new_p.push(w);
                }
            }
            if new_p.is_empty() && c.len() > self.state.max_size {
                self.state.save_solution(c);
            }
            if !new_p.is_empty() {
                self.expand(c, &mut new_p, depth + 1);
            }
            c.pop();
            p.pop();
        }
    }
}

fn mc_search_inner(g: &Graph, budget: SearchBudget, cutoff: bool) -> (SearchOutcome, u64) {
    let mut search = McSearch {
        g,
        state: SearchState::start(budget),
        cutoff_enabled: cutoff,
        root_iterations: 0,
    };
    let mut c = Vec::with_capacity(g.n());
    let mut p: Vec<usize> = (0..g.n()).collect();
    search.expand(&mut c, &mut p, 0);
    let iters = search.root_iterations;
    (search.state.finish(), iters)
}

/// The basic binomial backtracking solver: no colouring, only the
/// `|C| + |P|` cut-off. Candidate vertices are taken in index order.
pub fn mc_search(g: &Graph, budget: SearchBudget) -> SearchOutcome {
    mc_search_inner(g, budget, true).0
}
