use std::time::Instant;

use super::{Colouring, ParityPathCertificate};
use crate::error::Result;
use crate::graph::Graph;

pub const DEFAULT_EXPANSION_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralSearch {
    Found(ParityPathCertificate),
    NotFound { expansions: u64 },
    BudgetExhausted { expansions: u64 },
}

/// Exhaustive search over simple paths for a parity path.
///
/// Paths grow from a start vertex `s` (ascending) by extending the far end with
/// neighbours in ascending order; a path is tested only when its end exceeds `s`, so
/// every path is tested once. A branch is cut when some colour of odd parity has no
/// unvisited vertex reachable from the current end through unvisited vertices, since
/// no extension could then make that colour even.
pub fn find_parity_path_general(graph: &Graph, colouring: &Colouring, budget: Option<u64>) -> Result<GeneralSearch> {
    find_parity_path_general_until(graph, colouring, budget, None)
}

/// [`find_parity_path_general`] that also stops at `deadline` (checked every 4096 expansions).
pub fn find_parity_path_general_until(
    graph: &Graph,
    colouring: &Colouring,
    budget: Option<u64>,
    deadline: Option<Instant>,
) -> Result<GeneralSearch> {
    colouring.check_domain(graph.n())?;
    let mut search = Search {
        graph,
        colouring,
        words: colouring.k().div_ceil(64),
        budget: budget.unwrap_or(u64::MAX),
        deadline,
        expansions: 0,
        path: Vec::new(),
        on_path: vec![false; graph.n()],
        pv: vec![0; colouring.k().div_ceil(64)],
        reach_mark: vec![0; graph.n()],
        reach_stamp: 0,
        queue: Vec::with_capacity(graph.n()),
        seen_colour: vec![0; colouring.k() + 1],
    };
    for s in 0..graph.n() {
        match search.extend_from(s, s) {
            Step::Continue => {}
            Step::Found => return Ok(GeneralSearch::Found(ParityPathCertificate::new(search.path, colouring))),
            Step::OutOfBudget => return Ok(GeneralSearch::BudgetExhausted { expansions: search.expansions }),
        }
    }
    Ok(GeneralSearch::NotFound { expansions: search.expansions })
}

enum Step {
    Continue,
    Found,
    OutOfBudget,
}

struct Search<'a> {
    graph: &'a Graph,
    colouring: &'a Colouring,
    words: usize,
    budget: u64,
    deadline: Option<Instant>,
    expansions: u64,
    path: Vec<usize>,
    on_path: Vec<bool>,
    pv: Vec<u64>,
    reach_mark: Vec<u32>,
    reach_stamp: u32,
    queue: Vec<usize>,
    seen_colour: Vec<u32>,
}

impl Search<'_> {
    fn toggle(&mut self, v: usize) {
        let c = self.colouring.colour(v) - 1;
        self.pv[c / 64] ^= 1 << (c % 64);
    }

    fn extend_from(&mut self, start: usize, v: usize) -> Step {
        if self.expansions >= self.budget {
            return Step::OutOfBudget;
        }
        if self.expansions.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Step::OutOfBudget;
        }
        self.expansions += 1;
        self.path.push(v);
        self.on_path[v] = true;
        self.toggle(v);

        if v > start && self.path.len().is_multiple_of(2) && self.pv.iter().all(|&w| w == 0) {
            return Step::Found;
        }
        if self.can_still_close(v) {
            let graph = self.graph;
            for &w in graph.neighbours(v) {
                if self.on_path[w] {
                    continue;
                }
                match self.extend_from(start, w) {
                    Step::Continue => {}
                    other => return other,
                }
            }
        }

        self.toggle(v);
        self.on_path[v] = false;
        self.path.pop();
        Step::Continue
    }

    /// Every odd colour must still be available among vertices reachable from `end`
    /// without touching the current path.
    fn can_still_close(&mut self, end: usize) -> bool {
        if self.pv.iter().all(|&w| w == 0) {
            return true;
        }
        self.reach_stamp += 1;
        let stamp = self.reach_stamp;
        self.queue.clear();
        for &w in self.graph.neighbours(end) {
            if !self.on_path[w] && self.reach_mark[w] != stamp {
                self.reach_mark[w] = stamp;
                self.queue.push(w);
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            self.seen_colour[self.colouring.colour(u)] = stamp;
            for &w in self.graph.neighbours(u) {
                if !self.on_path[w] && self.reach_mark[w] != stamp {
                    self.reach_mark[w] = stamp;
                    self.queue.push(w);
                }
            }
        }
        for wi in 0..self.words {
            let mut word = self.pv[wi];
            while word != 0 {
                let colour = wi * 64 + word.trailing_zeros() as usize + 1;
                if self.seen_colour[colour] != stamp {
                    return false;
                }
                word &= word - 1;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path};

    fn col(k: usize, c: &[usize]) -> Colouring {
        Colouring::new(k, c.to_vec()).unwrap()
    }

    #[test]
    fn four_cycle_alternating_is_found() {
        let c4 = make_cycle(4).unwrap();
        let c = col(2, &[1, 2, 1, 2]);
        match find_parity_path_general(&c4, &c, None).unwrap() {
            GeneralSearch::Found(cert) => {
                assert_eq!(cert.path.vertices(), &[0, 1, 2, 3]);
                assert!(cert.is_valid_for(&c4, &c));
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
    }

    #[test]
    fn rainbow_triangle_is_valid() {
        let c3 = make_cycle(3).unwrap();
        assert!(matches!(
            find_parity_path_general(&c3, &col(3, &[1, 2, 3]), None).unwrap(),
            GeneralSearch::NotFound { .. }
        ));
    }

    #[test]
    fn p2_monochrome() {
        let p2 = make_path(2).unwrap();
        assert!(matches!(find_parity_path_general(&p2, &col(1, &[1, 1]), None).unwrap(), GeneralSearch::Found(_)));
    }

    #[test]
    fn deadline_is_reported() {
        let c = make_cycle(10).unwrap();
        let colouring = col(10, &(1..=10).collect::<Vec<_>>());
        let past = Some(Instant::now());
        assert_eq!(
            find_parity_path_general_until(&c, &colouring, None, past).unwrap(),
            GeneralSearch::BudgetExhausted { expansions: 0 }
        );
    }

    #[test]
    fn budget_is_reported() {
        let c = make_cycle(10).unwrap();
        let colouring = col(10, &(1..=10).collect::<Vec<_>>());
        assert_eq!(
            find_parity_path_general(&c, &colouring, Some(5)).unwrap(),
            GeneralSearch::BudgetExhausted { expansions: 5 }
        );
    }
}
