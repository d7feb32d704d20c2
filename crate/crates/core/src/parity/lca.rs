use crate::graph::Graph;

/// Lowest common ancestors by binary lifting on a tree rooted at a chosen vertex.
#[derive(Debug, Clone)]
pub struct Lca {
    up: Vec<Vec<usize>>,
    depth: Vec<usize>,
    parent: Vec<Option<usize>>,
    order: Vec<usize>,
}

impl Lca {
    /// `tree` must be connected and acyclic.
    pub fn new(tree: &Graph, root: usize) -> Self {
        let n = tree.n();
        let order = tree.bfs_order(root);
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        for &u in &order {
            for &w in tree.neighbours(u) {
                if Some(w) != parent[u] {
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                }
            }
        }
        let levels = (usize::BITS - n.max(1).leading_zeros()) as usize;
        let mut up = vec![(0..n).map(|v| parent[v].unwrap_or(v)).collect::<Vec<_>>()];
        for j in 1..levels {
            let prev = &up[j - 1];
            let next = (0..n).map(|v| prev[prev[v]]).collect();
            up.push(next);
        }
        Lca { up, depth, parent, order }
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Vertices in BFS order from the root.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn lca(&self, mut a: usize, mut b: usize) -> usize {
        if self.depth[a] < self.depth[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let mut diff = self.depth[a] - self.depth[b];
        let mut j = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                a = self.up[j][a];
            }
            diff >>= 1;
            j += 1;
        }
        if a == b {
            return a;
        }
        for j in (0..self.up.len()).rev() {
            if self.up[j][a] != self.up[j][b] {
                a = self.up[j][a];
                b = self.up[j][b];
            }
        }
        self.up[0][a]
    }

    /// The unique path from `a` to `b`.
    pub fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let l = self.lca(a, b);
        let mut left = vec![a];
        let mut cur = a;
        while cur != l {
            cur = self.parent[cur].expect("walks up to the lca");
            left.push(cur);
        }
        let mut right = Vec::new();
        let mut cur = b;
        while cur != l {
            right.push(cur);
            cur = self.parent[cur].expect("walks up to the lca");
        }
        left.extend(right.into_iter().rev());
        left
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_complete_binary_tree;

    #[test]
    fn lca_on_complete_tree() {
        let g = make_complete_binary_tree(4).unwrap().to_graph();
        let lca = Lca::new(&g, 0);
        assert_eq!(lca.lca(7, 8), 3);
        assert_eq!(lca.lca(7, 14), 0);
        assert_eq!(lca.lca(3, 8), 3);
        assert_eq!(lca.path(7, 4), vec![7, 3, 1, 4]);
        assert_eq!(lca.path(5, 5), vec![5]);
    }

    #[test]
    fn lca_matches_naive_walk_on_paths() {
        let g = crate::graph::make_path(37).unwrap();
        let lca = Lca::new(&g, 17);
        for a in 0..37 {
            for b in 0..37 {
                let expect = if (a <= 17) == (b <= 17) {
                    if a <= 17 {
                        a.max(b)
                    } else {
                        a.min(b)
                    }
                } else {
                    17
                };
                assert_eq!(lca.lca(a, b), expect, "{a} {b}");
            }
        }
    }
}
