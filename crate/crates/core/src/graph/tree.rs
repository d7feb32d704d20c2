use std::collections::VecDeque;

use super::Graph;
use crate::error::{invalid_input, Result};

/// Rooted tree in which every vertex has at most two ordered children.
///
/// Trees produced by subdivision additionally carry main-vertex marks
/// (the vertices of the tree that was subdivided).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedBinaryTree {
    root: usize,
    children: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    main: Option<Vec<bool>>,
}

impl RootedBinaryTree {
    /// Builds a tree from ordered child lists, checking every structural invariant.
    pub fn from_children(root: usize, children: Vec<Vec<usize>>) -> Result<Self> {
        let n = children.len();
        if root >= n {
            return invalid_input(format!("root {root} out of range for {n} vertices"));
        }
        let mut parent = vec![None; n];
        for (p, kids) in children.iter().enumerate() {
            if kids.len() > 2 {
                return invalid_input(format!("vertex {p} has {} children", kids.len()));
            }
            for &c in kids {
                if c >= n || c == root {
                    return invalid_input(format!("bad child {c} of vertex {p}"));
                }
                if parent[c].replace(p).is_some() {
                    return invalid_input(format!("vertex {c} has two parents"));
                }
            }
        }
        let tree = RootedBinaryTree { root, children, parent, main: None };
        if tree.bfs_order().len() != n {
            return invalid_input("tree is not connected from its root");
        }
        Ok(tree)
    }

    /// Roots a tree-shaped graph at `root`, keeping vertex ids; children ascend by id.
    pub fn from_graph(graph: &Graph, root: usize) -> Result<Self> {
        if !graph.is_tree() {
            return invalid_input("graph is not a tree");
        }
        if root >= graph.n() {
            return invalid_input(format!("root {root} out of range"));
        }
        let mut children = vec![Vec::new(); graph.n()];
        let mut seen = vec![false; graph.n()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbours(u) {
                if !seen[w] {
                    seen[w] = true;
                    children[u].push(w);
                    queue.push_back(w);
                }
            }
        }
        Self::from_children(root, children)
    }

    pub fn with_main_marks(mut self, main: Vec<bool>) -> Result<Self> {
        if main.len() != self.len() {
            return invalid_input("main-vertex mark vector has the wrong length");
        }
        self.main = Some(main);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    pub fn is_branched(&self, v: usize) -> bool {
        self.children[v].len() >= 2
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn main_marks(&self) -> Option<&[bool]> {
        self.main.as_deref()
    }

    pub fn is_main(&self, v: usize) -> bool {
        self.main.as_ref().is_some_and(|m| m[v])
    }

    /// Vertices of the original tree, for trees produced by subdivision.
    pub fn main_vertices(&self) -> Result<Vec<usize>> {
        match &self.main {
            Some(marks) => Ok((0..self.len()).filter(|&v| marks[v]).collect()),
            None => invalid_input("tree carries no main-vertex marks"),
        }
    }

    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = vec![self.root];
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            order.extend_from_slice(&self.children[u]);
        }
        order
    }

    /// Children-before-parent order.
    pub fn postorder(&self) -> Vec<usize> {
        let mut order = self.bfs_order();
        order.reverse();
        order
    }

    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for u in self.bfs_order() {
            for &c in &self.children[u] {
                depth[c] = depth[u] + 1;
            }
        }
        depth
    }

    /// Number of layers (`1 + ` maximum depth).
    pub fn layers(&self) -> usize {
        self.depths().into_iter().max().map_or(0, |d| d + 1)
    }

    /// `v` and all its descendants.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut head = 0;
        while head < out.len() {
            let u = out[head];
            head += 1;
            out.extend_from_slice(&self.children[u]);
        }
        out
    }

    /// Path from ancestor `a` down to `v`, inclusive; `None` if `a` is not an ancestor of `v`.
    pub fn path_from_ancestor(&self, a: usize, v: usize) -> Option<Vec<usize>> {
        let mut path = vec![v];
        let mut cur = v;
        while cur != a {
            cur = self.parent[cur]?;
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = (0..self.len()).filter_map(|v| self.parent[v].map(|p| (p.min(v), p.max(v)))).collect();
        Graph::new(self.len(), &edges).expect("tree edges form a simple graph")
    }

    /// Renumbers vertices in BFS order (children in stored order); marks follow their vertices.
    pub fn relabel_bfs(&self) -> RootedBinaryTree {
        let order = self.bfs_order();
        let mut new_id = vec![0; self.len()];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let children = order.iter().map(|&v| self.children[v].iter().map(|&c| new_id[c]).collect()).collect();
        let mut tree = Self::from_children(0, children).expect("relabelling preserves shape");
        tree.main = self.main.as_ref().map(|m| order.iter().map(|&v| m[v]).collect());
        tree
    }

    /// Tree on the main vertices obtained by contracting every replacement path.
    pub fn contract_to_main(&self) -> Result<RootedBinaryTree> {
        let marks = match &self.main {
            Some(m) => m,
            None => return invalid_input("tree carries no main-vertex marks"),
        };
        if !marks[self.root] {
            return invalid_input("root is not a main vertex");
        }
        let main: Vec<usize> = self.bfs_order().into_iter().filter(|&v| marks[v]).collect();
        let mut new_id = vec![usize::MAX; self.len()];
        for (i, &v) in main.iter().enumerate() {
            new_id[v] = i;
        }
        let mut children = vec![Vec::new(); main.len()];
        for &v in &main[1..] {
            let mut p = self.parent[v].expect("non-root has a parent");
            while !marks[p] {
                p = self.parent[p].expect("root is main");
            }
            children[new_id[p]].push(new_id[v]);
        }
        Self::from_children(0, children)
    }
}
