use super::{Graph, RootedBinaryTree};
use crate::error::{invalid_input, invalid_param, Result};

/// Unordered AHU code of a rooted tree. Two rooted trees are isomorphic iff their codes match.
pub fn rooted_tree_code(tree: &RootedBinaryTree) -> String {
    let mut code = vec![String::new(); tree.len()];
    for v in tree.postorder() {
        let mut parts: Vec<String> = tree.children(v).iter().map(|&c| std::mem::take(&mut code[c])).collect();
        parts.sort();
        code[v] = format!("({})", parts.concat());
    }
    std::mem::take(&mut code[tree.root()])
}

fn rooted_code_in_graph(g: &Graph, root: usize) -> String {
    fn go(g: &Graph, v: usize, parent: usize) -> String {
        let mut parts: Vec<String> = g.neighbours(v).iter().filter(|&&w| w != parent).map(|&w| go(g, w, v)).collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    go(g, root, usize::MAX)
}

/// Isomorphism-invariant code of an unrooted tree (minimum over its centres).
pub fn tree_code(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return invalid_input("tree_code needs a tree");
    }
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbours(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    Ok(layer.iter().map(|&c| rooted_code_in_graph(g, c)).min().expect("a tree has a centre"))
}

/// Canonical labelled form of a small graph: the lexicographically smallest sorted edge
/// list over all vertex permutations. Exponential; limited to 9 vertices.
pub fn canonical_form(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let n = g.n();
    if n > 9 {
        return invalid_param(format!("canonical_form is brute force and limited to 9 vertices, got {n}"));
    }
    let edges = g.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut relabelled = |perm: &[usize]| {
        let mut e: Vec<_> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
    };
    // Heap's algorithm.
    let mut c = vec![0; n];
    relabelled(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            relabelled(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best.unwrap_or_default())
}
