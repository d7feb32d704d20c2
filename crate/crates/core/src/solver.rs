//! Exact parity chromatic number of small connected graphs.
//!
//! [`chromatic_number`] runs iterative deepening on the palette size with a
//! depth-first assignment, first-occurrence symmetry breaking and incremental
//! parity-path pruning. [`brute_force_chromatic`] is an independent oracle that
//! enumerates every canonical colouring and calls the full verifier.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::constructions::colour_tree_centroid;
use crate::error::{invalid_input, invalid_param, Error, Result};
use crate::graph::Graph;
use crate::parity::{verify_colouring, Colouring, Verdict, DEFAULT_EXPANSION_BUDGET};

/// Largest graph the solver accepts; parity vectors are packed into a `u64`.
pub const MAX_SOLVER_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Colouring,
    pub stats: SolverStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Exact(ChromaticResult),
    /// Time ran out: no colouring with fewer than `lo` colours exists and `witness`
    /// uses `hi` colours.
    Bounds {
        lo: usize,
        hi: usize,
        witness: Colouring,
        stats: SolverStats,
    },
}

impl SolveOutcome {
    pub fn exact(&self) -> Option<&ChromaticResult> {
        match self {
            SolveOutcome::Exact(r) => Some(r),
            SolveOutcome::Bounds { .. } => None,
        }
    }

    pub fn chi(&self) -> Option<usize> {
        self.exact().map(|r| r.chi)
    }

    pub fn witness(&self) -> &Colouring {
        match self {
            SolveOutcome::Exact(r) => &r.witness,
            SolveOutcome::Bounds { witness, .. } => witness,
        }
    }

    pub fn stats(&self) -> &SolverStats {
        match self {
            SolveOutcome::Exact(r) => &r.stats,
            SolveOutcome::Bounds { stats, .. } => stats,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (chi, lo, hi, status) = match self {
            SolveOutcome::Exact(r) => (Some(r.chi), r.chi, r.chi, "exact"),
            SolveOutcome::Bounds { lo, hi, .. } => (None, *lo, *hi, "bounds"),
        };
        serde_json::json!({
            "chi": chi,
            "lo": lo,
            "hi": hi,
            "witness": self.witness().colours(),
            "nodes": self.stats().nodes,
            "status": status,
        })
    }
}

/// `chi_p(G)` for a connected graph with at most [`MAX_SOLVER_VERTICES`] vertices.
pub fn chromatic_number(graph: &Graph, time_budget: Option<Duration>) -> Result<SolveOutcome> {
    if !graph.is_connected() {
        return invalid_input("chromatic_number needs a connected graph; see chromatic_number_by_components");
    }
    if graph.n() > MAX_SOLVER_VERTICES {
        return invalid_param(format!("solver is limited to {MAX_SOLVER_VERTICES} vertices"));
    }
    let started = Instant::now();
    let deadline = time_budget.map(|d| started + d);
    let mut search = Search::new(graph, deadline);
    for k in 1..=graph.n() {
        match search.run(k) {
            Some(true) => {
                let witness = search.witness(k);
                let stats = SolverStats { nodes: search.nodes, elapsed: started.elapsed() };
                return Ok(SolveOutcome::Exact(ChromaticResult { chi: k, witness, stats }));
            }
            Some(false) => {}
            None => {
                let witness = upper_bound_colouring(graph)?;
                let stats = SolverStats { nodes: search.nodes, elapsed: started.elapsed() };
                return Ok(SolveOutcome::Bounds { lo: k, hi: witness.colours_used(), witness, stats });
            }
        }
    }
    Err(Error::Internal("the rainbow colouring is always a parity colouring".into()))
}

/// Applies [`chromatic_number`] to every component and takes the maximum.
pub fn chromatic_number_by_components(graph: &Graph, time_budget: Option<Duration>) -> Result<Option<usize>> {
    let mut best = 0;
    for comp in graph.components() {
        let mut keep = vec![false; graph.n()];
        comp.iter().for_each(|&v| keep[v] = true);
        let (sub, _) = graph.induced_subgraph(&keep);
        match chromatic_number(&sub, time_budget)?.chi() {
            Some(chi) => best = best.max(chi),
            None => return Ok(None),
        }
    }
    Ok(Some(best))
}

fn upper_bound_colouring(graph: &Graph) -> Result<Colouring> {
    if graph.is_tree() {
        return Ok(colour_tree_centroid(graph)?.colouring);
    }
    Colouring::new(graph.n(), (1..=graph.n()).collect())
}

/// Connected branching order: start at a maximum-degree vertex, then repeatedly take the
/// frontier vertex with most coloured neighbours, then highest degree, then smallest id.
fn branching_order(graph: &Graph) -> Vec<usize> {
    let n = graph.n();
    let mut placed = vec![false; n];
    let mut coloured_nbrs = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (coloured_nbrs[v], graph.degree(v), std::cmp::Reverse(v)))
            .expect("vertices remain");
        placed[next] = true;
        order.push(next);
        for &w in graph.neighbours(next) {
            coloured_nbrs[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    graph: &'a Graph,
    is_tree: bool,
    order: Vec<usize>,
    colour: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
    seen: HashSet<u64>,
    branch: Vec<u64>,
    on_arm: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, deadline: Option<Instant>) -> Self {
        Search {
            graph,
            is_tree: graph.is_tree(),
            order: branching_order(graph),
            colour: vec![0; graph.n()],
            nodes: 0,
            deadline,
            timed_out: false,
            seen: HashSet::new(),
            branch: Vec::new(),
            on_arm: vec![false; graph.n()],
        }
    }

    /// `Some(found)` or `None` on timeout.
    fn run(&mut self, k: usize) -> Option<bool> {
        self.colour.iter_mut().for_each(|c| *c = 0);
        let found = self.assign(0, 0, k);
        if self.timed_out {
            None
        } else {
            Some(found)
        }
    }

    fn witness(&self, k: usize) -> Colouring {
        Colouring::new(k, self.colour.clone()).expect("solver colours lie in 1..=k")
    }

    fn assign(&mut self, i: usize, max_used: usize, k: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return false;
        }
        let v = self.order[i];
        for c in 1..=k.min(max_used + 1) {
            self.colour[v] = c;
            if !self.closes_parity_path(v) && self.assign(i + 1, max_used.max(c), k) {
                return true;
            }
            if self.timed_out {
                break;
            }
        }
        self.colour[v] = 0;
        false
    }

    fn bit(&self, v: usize) -> u64 {
        1 << (self.colour[v] - 1)
    }

    /// Whether the coloured subgraph has a parity path through the newly coloured `v`.
    fn closes_parity_path(&mut self, v: usize) -> bool {
        if self.is_tree {
            self.closes_in_tree(v)
        } else {
            self.closes_in_graph(v)
        }
    }

    /// Tree case: split paths through `v` into branches hanging off `v`. With `x(u)` the
    /// vector of `v..u`, a path `u1..u2` through `v` is parity iff `x(u1) ^ x(u2) = e(v)`.
    fn closes_in_tree(&mut self, v: usize) -> bool {
        let ev = self.bit(v);
        self.seen.clear();
        let graph = self.graph;
        for &w in graph.neighbours(v) {
            if self.colour[w] == 0 {
                continue;
            }
            self.branch.clear();
            let mut stack = vec![(w, v, ev ^ self.bit(w))];
            while let Some((u, from, x)) = stack.pop() {
                if x == 0 || self.seen.contains(&(x ^ ev)) {
                    return true;
                }
                self.branch.push(x);
                for &y in graph.neighbours(u) {
                    if y != from && self.colour[y] != 0 {
                        stack.push((y, u, x ^ self.bit(y)));
                    }
                }
            }
            self.seen.extend(self.branch.iter().copied());
        }
        false
    }

    /// General case: enumerate a first arm `v..a` and, for each, second arms leaving `v`
    /// through a larger neighbour and avoiding the first arm.
    fn closes_in_graph(&mut self, v: usize) -> bool {
        self.on_arm[v] = true;
        let found = self.first_arm(v, v, self.bit(v), usize::MAX);
        self.on_arm[v] = false;
        found
    }

    fn first_arm(&mut self, v: usize, end: usize, x: u64, first: usize) -> bool {
        if end != v && x == 0 {
            return true;
        }
        if end != v && self.second_arm(v, v, x, first) {
            return true;
        }
        let graph = self.graph;
        for &w in graph.neighbours(end) {
            if self.colour[w] == 0 || self.on_arm[w] {
                continue;
            }
            self.on_arm[w] = true;
            let found = self.first_arm(v, w, x ^ self.bit(w), if end == v { w } else { first });
            self.on_arm[w] = false;
            if found {
                return true;
            }
        }
        false
    }

    fn second_arm(&mut self, v: usize, end: usize, x: u64, first: usize) -> bool {
        let graph = self.graph;
        for &w in graph.neighbours(end) {
            if self.colour[w] == 0 || self.on_arm[w] || (end == v && w < first) {
                continue;
            }
            let y = x ^ self.bit(w);
            if y == 0 {
                return true;
            }
            self.on_arm[w] = true;
            let found = self.second_arm(v, w, y, first);
            self.on_arm[w] = false;
            if found {
                return true;
            }
        }
        false
    }
}

/// Oracle: minimal `k <= k_max` admitting a parity colouring, found by enumerating every
/// colouring in first-occurrence canonical form and checking it with the full verifier.
pub fn brute_force_chromatic(graph: &Graph, k_max: usize) -> Result<Option<ChromaticResult>> {
    let started = Instant::now();
    let n = graph.n();
    if n == 0 {
        return invalid_input("brute_force_chromatic needs at least one vertex");
    }
    let mut checked = 0u64;
    for k in 1..=k_max {
        let mut colours = vec![1usize; n];
        loop {
            checked += 1;
            let colouring = Colouring::new(k, colours.clone())?;
            match verify_colouring(graph, &colouring, Some(DEFAULT_EXPANSION_BUDGET))? {
                Verdict::Valid => {
                    let stats = SolverStats { nodes: checked, elapsed: started.elapsed() };
                    return Ok(Some(ChromaticResult { chi: k, witness: colouring, stats }));
                }
                Verdict::Invalid(_) => {}
                Verdict::Indeterminate { .. } => {
                    return Err(Error::Internal("oracle verification ran out of budget".into()));
                }
            }
            if !next_restricted_growth(&mut colours, k) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances to the next string with `s[0] = 1`, `s[i] <= 1 + max(s[..i])`, values `<= k`.
fn next_restricted_growth(s: &mut [usize], k: usize) -> bool {
    let n = s.len();
    let mut prefix_max = vec![0usize; n];
    let mut m = 0;
    for i in 0..n {
        prefix_max[i] = m;
        m = m.max(s[i]);
    }
    for i in (1..n).rev() {
        if s[i] < k && s[i] <= prefix_max[i] {
            s[i] += 1;
            for x in &mut s[i + 1..] {
                *x = 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete_binary_tree, make_cycle, make_path, make_t33};

    fn chi(g: &Graph) -> usize {
        chromatic_number(g, None).unwrap().chi().unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(chi(&make_path(7).unwrap()), 3);
        assert_eq!(chi(&make_cycle(5).unwrap()), 4);
        assert_eq!(chi(&make_complete_binary_tree(4).unwrap().to_graph()), 3);
        assert_eq!(chi(&make_t33()), 4);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_force_chromatic(&make_path(4).unwrap(), 3).unwrap().unwrap().chi, 3);
        assert_eq!(brute_force_chromatic(&make_path(1).unwrap(), 1).unwrap().unwrap().chi, 1);
        assert_eq!(brute_force_chromatic(&make_cycle(3).unwrap(), 3).unwrap().unwrap().chi, 3);
        assert!(brute_force_chromatic(&make_cycle(5).unwrap(), 3).unwrap().is_none());
    }

    #[test]
    fn restricted_growth_counts_match_bell_numbers() {
        for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
            let mut s = vec![1; n];
            let mut count = 1;
            while next_restricted_growth(&mut s, n) {
                count += 1;
            }
            assert_eq!(count, bell);
        }
    }

    #[test]
    fn rejects_disconnected_input() {
        assert!(chromatic_number(&Graph::empty(2), None).is_err());
        let two_paths = Graph::new(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(chromatic_number_by_components(&two_paths, None).unwrap(), Some(2));
    }

    #[test]
    fn witness_is_valid_and_json_shape() {
        let out = chromatic_number(&make_cycle(6).unwrap(), None).unwrap();
        let r = out.exact().unwrap();
        assert!(crate::parity::is_parity_vertex_colouring(&make_cycle(6).unwrap(), &r.witness).unwrap().is_valid());
        let json = out.to_json();
        assert_eq!(json["status"], "exact");
        assert_eq!(json["chi"], 4);
    }

    #[test]
    fn zero_budget_reports_bounds() {
        let out = chromatic_number(&make_t33(), Some(Duration::ZERO)).unwrap();
        if let SolveOutcome::Bounds { lo, hi, .. } = out {
            assert!(lo <= 4 && hi >= 4);
        }
    }
}
