use crate::graph::RootedBinaryTree;
use crate::parity::Colouring;

const NONE: usize = usize::MAX;

/// For each vertex `v` and colour `c`: the largest number of nicely coloured vertices
/// in a compatible nicely coloured subtree of `T_v` with nice colour `c`, plus the root
/// of one maximiser.
///
/// Bottom-up: for `w` of colour `c`, `f_c(w) = 1 + best_c(left) + best_c(right)`, and
/// `best_c(T_x)` is the maximum of `f_c` over `T_x` (0 when no vertex has colour `c`).
#[derive(Debug, Clone)]
pub struct NiceSubtreeTable {
    k: usize,
    best: Vec<usize>,
    arg: Vec<usize>,
}

/// A maximum nicely coloured compatible subtree, as a vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceSubtree {
    pub root: usize,
    pub colour: usize,
    pub vertices: Vec<usize>,
    pub nice_vertices: Vec<usize>,
}

impl NiceSubtreeTable {
    /// Assumes a valid parity colouring; [`super::nice_subtree_table`] checks it.
    pub(crate) fn build(tree: &RootedBinaryTree, colouring: &Colouring) -> Self {
        let (n, k) = (tree.len(), colouring.k());
        let mut best = vec![0; n * k];
        let mut arg = vec![NONE; n * k];
        for v in tree.postorder() {
            for c in 1..=k {
                let idx = v * k + c - 1;
                // Candidates: v itself (if coloured c) and the maximisers of its children.
                let mut cand: Option<(usize, usize)> = None;
                let mut consider = |value: usize, root: usize| {
                    if value == 0 {
                        return;
                    }
                    cand = match cand {
                        Some((bv, br)) if bv > value || (bv == value && br < root) => Some((bv, br)),
                        _ => Some((value, root)),
                    };
                };
                if colouring.colour(v) == c {
                    let f = 1 + tree.children(v).iter().map(|&s| best[s * k + c - 1]).sum::<usize>();
                    consider(f, v);
                }
                for &s in tree.children(v) {
                    consider(best[s * k + c - 1], arg[s * k + c - 1]);
                }
                if let Some((value, root)) = cand {
                    best[idx] = value;
                    arg[idx] = root;
                }
            }
        }
        NiceSubtreeTable { k, best, arg }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `g_c(T_v)`.
    pub fn g(&self, v: usize, c: usize) -> usize {
        self.best[v * self.k + c - 1]
    }

    /// Root of the chosen maximiser `G_c(T_v)`, if `g_c(T_v) > 0`.
    pub fn maximiser_root(&self, v: usize, c: usize) -> Option<usize> {
        match self.arg[v * self.k + c - 1] {
            NONE => None,
            r => Some(r),
        }
    }

    /// Reconstructs `G_c(T_v)`: its root, the connecting paths, and the recursively chosen
    /// maximisers below every structural vertex.
    pub fn nice_subtree(
        &self,
        tree: &RootedBinaryTree,
        colouring: &Colouring,
        v: usize,
        c: usize,
    ) -> Option<NiceSubtree> {
        let root = self.maximiser_root(v, c)?;
        let mut vertices = Vec::new();
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            vertices.push(u);
            for &s in tree.children(u) {
                if let Some(w) = self.maximiser_root(s, c) {
                    let path = tree.path_from_ancestor(s, w).expect("maximiser lies below its subtree root");
                    vertices.extend_from_slice(&path[..path.len() - 1]);
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        let nice_vertices = vertices.iter().copied().filter(|&x| colouring.colour(x) == c).collect();
        Some(NiceSubtree { root, colour: c, vertices, nice_vertices })
    }

    /// Vertices `v` with two children where `g_c(T_v) != g_c(T_s) + g_c(T_t) + 1`, `c` the
    /// colour of `v`. Empty for every table this type builds.
    pub fn identity_violations(&self, tree: &RootedBinaryTree, colouring: &Colouring) -> Vec<usize> {
        (0..tree.len())
            .filter(|&v| {
                let kids = tree.children(v);
                if kids.len() != 2 {
                    return false;
                }
                let c = colouring.colour(v);
                self.g(v, c) != self.g(kids[0], c) + self.g(kids[1], c) + 1
            })
            .collect()
    }
}
