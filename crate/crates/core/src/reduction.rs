//! The Hamiltonian-path gadget: a graph `G` on `n` vertices becomes a coloured graph
//! `G*` whose colouring is a parity vertex colouring exactly when `G` has no
//! Hamiltonian path.
//!
//! `G*` has two copies `G'` and `G''` of `G`, and for every `i` a path `P_i` from `v'_i`
//! to `v''_i` through the inner vertices `v_{i,j}`, `j != i`, in increasing `j`.
//!
//! Ids (0-indexed `i`, `j`): `v'_i = i`, `v''_i = n + i`, and
//! `v_{i,j} = 2n + i(n-1) + (j if j < i else j - 1)`.

use std::time::{Duration, Instant};

use serde_json::json;

use crate::error::{invalid_input, invalid_param, Result};
use crate::graph::Graph;
use crate::parity::{verify_colouring_until, Colouring, ParityPathCertificate, Verdict};

/// Largest source graph accepted by [`hamiltonian_path`].
pub const MAX_HAMILTONIAN_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub source: Graph,
    pub host: Graph,
    pub colouring: Colouring,
}

impl GadgetInstance {
    pub fn n(&self) -> usize {
        self.source.n()
    }

    /// `v'_i`.
    pub fn first_copy(&self, i: usize) -> usize {
        i
    }

    /// `v''_i`.
    pub fn second_copy(&self, i: usize) -> usize {
        self.n() + i
    }

    /// `v_{i,j}` for `i != j`.
    pub fn inner(&self, i: usize, j: usize) -> usize {
        inner_id(self.n(), i, j)
    }

    /// `P_i` from `v'_i` to `v''_i`.
    pub fn connecting_path(&self, i: usize) -> Vec<usize> {
        let n = self.n();
        let mut p = vec![self.first_copy(i)];
        p.extend((0..n).filter(|&j| j != i).map(|j| self.inner(i, j)));
        p.push(self.second_copy(i));
        p
    }

    /// Structural invariants; returns the first one that fails.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n();
        let fail = |msg: String| invalid_input(format!("gadget invariant: {msg}"));
        if self.host.n() != n * n + n {
            return fail(format!("{} vertices, expected {}", self.host.n(), n * n + n));
        }
        if self.host.num_edges() != 2 * self.source.num_edges() + n * n {
            return fail(format!("{} edges", self.host.num_edges()));
        }
        let mut uses = vec![0usize; self.colouring.k() + 1];
        for &c in self.colouring.colours() {
            uses[c] += 1;
        }
        if uses.iter().any(|&u| u != 0 && u != 2) {
            return fail("some colour is not used exactly twice".into());
        }
        let inner_colours: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let p = self.connecting_path(i);
                p[1..p.len() - 1].iter().map(|&v| self.colouring.colour(v)).collect()
            })
            .collect();
        for (i, ci) in inner_colours.iter().enumerate() {
            let mut sorted = ci.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != ci.len() {
                return fail(format!("inner colours of P_{i} repeat"));
            }
            for (j, cj) in inner_colours.iter().enumerate().skip(i + 1) {
                let shared = ci.iter().filter(|c| cj.contains(c)).count();
                if shared != 1 {
                    return fail(format!("P_{i} and P_{j} share {shared} inner colours"));
                }
            }
        }
        Ok(())
    }
}

fn inner_id(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    2 * n + i * (n - 1) + if j < i { j } else { j - 1 }
}

pub fn build_hampath_gadget(g: &Graph) -> Result<GadgetInstance> {
    let n = g.n();
    if n < 2 {
        return invalid_param(format!("the gadget needs at least 2 vertices, got {n}"));
    }
    let mut edges = Vec::with_capacity(2 * g.num_edges() + n * n);
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((n + u, n + v));
    }
    let mut colours = vec![0; n * n + n];
    for i in 0..n {
        let mut prev = i;
        for j in (0..n).filter(|&j| j != i) {
            let x = inner_id(n, i, j);
            edges.push((prev, x));
            prev = x;
            // 1-indexed (a - 1) n + b with a > b
            let (a, b) = (i.max(j) + 1, i.min(j) + 1);
            colours[x] = (a - 1) * n + b;
        }
        edges.push((prev, n + i));
        colours[i] = i + 1;
        colours[n + i] = i + 1;
    }
    let host = Graph::new(n * n + n, &edges)?;
    let colouring = Colouring::new(n * n - 1, colours)?;
    Ok(GadgetInstance { source: g.clone(), host, colouring })
}

/// A Hamiltonian path, by dynamic programming over vertex subsets.
pub fn hamiltonian_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > MAX_HAMILTONIAN_VERTICES {
        return invalid_param(format!("Hamiltonian path search is limited to {MAX_HAMILTONIAN_VERTICES} vertices"));
    }
    if n == 0 {
        return Ok(None);
    }
    let full = (1usize << n) - 1;
    // ends[mask]: bitset of vertices v such that some path covers exactly `mask` and ends at v
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in (0..n).filter(|&v| e >> v & 1 == 1) {
            for &w in g.neighbours(v) {
                if mask >> w & 1 == 0 {
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    let Some(mut last) = (0..n).find(|&v| ends[full] >> v & 1 == 1) else {
        return Ok(None);
    };
    let mut path = vec![last];
    let mut mask = full;
    while mask.count_ones() > 1 {
        let rest = mask & !(1 << last);
        let prev = g
            .neighbours(last)
            .iter()
            .copied()
            .find(|&u| ends[rest] >> u & 1 == 1)
            .expect("a predecessor exists for every reachable state");
        path.push(prev);
        mask = rest;
        last = prev;
    }
    path.reverse();
    Ok(Some(path))
}

pub fn has_hamiltonian_path(g: &Graph) -> Result<bool> {
    Ok(hamiltonian_path(g)?.is_some())
}

/// The parity path of `G*` built from a Hamiltonian path of `G`: each `v_i` is replaced
/// by `P_i` or its reverse, starting in `G'` and alternating copies so consecutive paths
/// join along an edge of one copy. Every colour then appears exactly twice.
pub fn parity_path_from_hamiltonian(inst: &GadgetInstance, ham: &[usize]) -> Result<ParityPathCertificate> {
    let mut walk = Vec::with_capacity(inst.host.n());
    for (step, &v) in ham.iter().enumerate() {
        let mut p = inst.connecting_path(v);
        if step % 2 == 1 {
            p.reverse();
        }
        walk.extend(p);
    }
    let cert = ParityPathCertificate::new(walk, &inst.colouring);
    if !cert.is_valid_for(&inst.host, &inst.colouring) {
        return invalid_input("the given sequence is not a Hamiltonian path of the source graph");
    }
    Ok(cert)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    /// The gadget colouring is valid exactly when no Hamiltonian path exists.
    Consistent,
    Inconsistent,
    /// The parity-path search ran out of budget and no certificate settled it.
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct ReductionReport {
    pub outcome: Consistency,
    pub hamiltonian_path: Option<Vec<usize>>,
    /// Verdict of the independent parity-path search on the gadget.
    pub search: Verdict,
    /// Parity path built from the Hamiltonian path, when there is one.
    pub constructed: Option<ParityPathCertificate>,
}

impl ReductionReport {
    pub fn to_json(&self) -> serde_json::Value {
        let outcome = match self.outcome {
            Consistency::Consistent => "consistent",
            Consistency::Inconsistent => "inconsistent",
            Consistency::Inconclusive => "inconclusive",
        };
        let search = match &self.search {
            Verdict::Valid => json!({"status": "valid"}),
            Verdict::Invalid(c) => json!({"status": "invalid", "certificate": c.to_json()}),
            Verdict::Indeterminate { expansions } => json!({"status": "indeterminate", "expansions": expansions}),
        };
        json!({
            "outcome": outcome,
            "hamiltonian_path": self.hamiltonian_path.as_ref().map(|p| p.iter().map(|v| v + 1).collect::<Vec<_>>()),
            "gadget_search": search,
            "constructed_parity_path": self.constructed.as_ref().map(|c| c.to_json()),
        })
    }
}

/// Compares Hamiltonicity of `g` with validity of its gadget colouring.
///
/// `budget` caps the expansions and `time` the wall-clock time of the parity-path search.
/// If either runs out, a constructed certificate still settles the invalid side;
/// otherwise the result is inconclusive.
pub fn check_reduction_equivalence(g: &Graph, budget: Option<u64>, time: Option<Duration>) -> Result<ReductionReport> {
    let deadline = time.map(|t| Instant::now() + t);
    let inst = build_hampath_gadget(g)?;
    let ham = hamiltonian_path(g)?;
    let constructed = ham.as_deref().map(|h| parity_path_from_hamiltonian(&inst, h)).transpose()?;
    let search = verify_colouring_until(&inst.host, &inst.colouring, budget, deadline)?;
    let gadget_valid = match &search {
        Verdict::Valid => Some(true),
        Verdict::Invalid(c) => {
            if !c.is_valid_for(&inst.host, &inst.colouring) {
                return Err(crate::Error::Internal("search returned an invalid certificate".into()));
            }
            Some(false)
        }
        Verdict::Indeterminate { .. } => constructed.as_ref().map(|_| false),
    };
    let outcome = match gadget_valid {
        None => Consistency::Inconclusive,
        Some(valid) if valid == ham.is_none() => Consistency::Consistent,
        Some(_) => Consistency::Inconsistent,
    };
    Ok(ReductionReport { outcome, hamiltonian_path: ham, search, constructed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path, make_star};

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn gadget_sizes() {
        let p3 = build_hampath_gadget(&make_path(3).unwrap()).unwrap();
        assert_eq!((p3.host.n(), p3.host.num_edges()), (12, 13));
        assert_eq!(p3.colouring.colours_used(), 6);
        p3.check_invariants().unwrap();
        assert_eq!(build_hampath_gadget(&make_star(4).unwrap()).unwrap().host.n(), 20);
        assert!(build_hampath_gadget(&make_path(1).unwrap()).is_err());
    }

    #[test]
    fn id_layout_is_bijective() {
        for n in 2..=8 {
            let mut seen = vec![false; n * n + n];
            for i in 0..n {
                for j in (0..n).filter(|&j| j != i) {
                    let x = inner_id(n, i, j);
                    assert!(!seen[x]);
                    seen[x] = true;
                }
            }
            assert!(seen[..2 * n].iter().all(|&s| !s));
            assert!(seen[2 * n..].iter().all(|&s| s));
        }
    }

    #[test]
    fn colour_formula() {
        let g = build_hampath_gadget(&make_path(3).unwrap()).unwrap();
        // i = 2, j = 1 (1-indexed): (2 - 1) * 3 + 1 = 4
        assert_eq!(g.colouring.colour(g.inner(1, 0)), 4);
        assert_eq!(g.colouring.colour(g.inner(0, 1)), 4);
        assert_eq!(g.colouring.colour(g.inner(2, 1)), 8);
        assert_eq!(g.colouring.colour(g.second_copy(2)), 3);
    }

    #[test]
    fn hamiltonian_examples() {
        assert!(has_hamiltonian_path(&make_path(3).unwrap()).unwrap());
        assert!(!has_hamiltonian_path(&make_star(4).unwrap()).unwrap());
        let c5 = make_cycle(5).unwrap();
        let p = hamiltonian_path(&c5).unwrap().unwrap();
        assert!(crate::graph::Path(p).is_valid_in(&c5));
        assert!(!has_hamiltonian_path(&Graph::empty(2)).unwrap());
    }

    #[test]
    fn equivalence_examples() {
        for (g, ham) in [(make_path(3).unwrap(), true), (make_star(4).unwrap(), false), (complete(3), true)] {
            let r = check_reduction_equivalence(&g, None, None).unwrap();
            assert_eq!(r.outcome, Consistency::Consistent);
            assert_eq!(r.hamiltonian_path.is_some(), ham);
            assert_eq!(r.constructed.is_some(), ham);
        }
    }

    #[test]
    fn constructed_path_rejects_non_paths() {
        let g = build_hampath_gadget(&make_star(4).unwrap()).unwrap();
        assert!(parity_path_from_hamiltonian(&g, &[1, 0, 2, 3]).is_err());
    }
}
