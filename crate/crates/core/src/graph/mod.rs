//! Simple undirected graphs and rooted binary trees.
//!
//! Vertices are the integers `0..n`. Generators number vertices in BFS order
//! from the root so that text dumps are stable across runs.

mod canon;
mod enumerate;
mod format;
mod generate;
mod tree;

pub use canon::{canonical_form, rooted_tree_code, tree_code};
pub use enumerate::{connected_graphs_up_to_iso, free_trees, random_binary_tree, random_connected_graph, random_tree};
pub use format::{graph_from_text, graph_to_text, rooted_tree_from_text, rooted_tree_to_text};
pub use generate::{
    make_complete_binary_tree, make_cycle, make_path, make_star, make_t33, subdivide, subdivide_random, t33_rooted,
    EdgeLengths, DEFAULT_MAX_SUBDIVISION_LENGTH,
};
pub use tree::RootedBinaryTree;

use std::collections::VecDeque;

use crate::error::{invalid_input, invalid_param, Result};

/// Finite simple undirected graph with adjacency lists kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range ids.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return invalid_input(format!("edge ({u}, {v}) out of range for {n} vertices"));
            }
            if u == v {
                return invalid_input(format!("self-loop at vertex {u}"));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return invalid_input(format!("parallel edge at vertex {v}"));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.m
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Subgraph induced by `keep`; returns the graph and the old id of each new vertex.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (new_id[u], new_id[v]))
            .collect();
        (Graph::new(old.len(), &edges).expect("induced subgraph of a simple graph"), old)
    }

    /// Spanning subgraph keeping only the edges accepted by `keep`.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let edges: Vec<_> = self.edges().into_iter().filter(|&(u, v)| keep(u, v)).collect();
        Graph::new(self.n(), &edges).expect("edge subgraph of a simple graph")
    }

    /// Contracts the edge `{u, v}`. The merged vertex takes id `min(u, v)`; ids above
    /// `max(u, v)` shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return invalid_param(format!("({u}, {v}) is not an edge"));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let map = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (map(a), map(b)))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Graph::new(self.n() - 1, &edges)
    }

    /// Relabels vertices in BFS order from `root` (neighbours visited in ascending id).
    /// Returns the new graph and `order[new] = old`.
    pub fn relabel_bfs(&self, root: usize) -> Result<(Graph, Vec<usize>)> {
        if !self.is_connected() || root >= self.n() {
            return invalid_input("BFS relabelling needs a connected graph and a valid root");
        }
        let order = self.bfs_order(root);
        let mut new_id = vec![0; self.n()];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(a, b)| (new_id[a], new_id[b])).collect();
        Ok((Graph::new(self.n(), &edges)?, order))
    }

    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = vec![root];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }
}

/// A simple path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Non-empty, no repeated vertex, consecutive vertices adjacent in `graph`.
    pub fn is_valid_in(&self, graph: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= graph.n()) {
            return false;
        }
        let mut seen = vec![false; graph.n()];
        for &v in &self.0 {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.0.windows(2).all(|w| graph.has_edge(w[0], w[1]))
    }
}
