//! Explicit parity vertex colourings meeting the known upper bounds.

use crate::error::{invalid_input, invalid_param, Result};
use crate::graph::Graph;
use crate::parity::Colouring;

/// A colouring together with the number of colours its construction guarantees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouringWithBound {
    pub colouring: Colouring,
    pub claimed_bound: usize,
}

fn floor_log2(n: usize) -> usize {
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        floor_log2(n - 1) + 1
    }
}

/// Ruler colouring of `P_n`: the vertex at 1-indexed position `i` gets
/// `trailing_zeros(i) + 1`. Uses `floor(log2 n) + 1` colours and is unique-maximum.
pub fn colour_path(n: usize) -> Result<ColouringWithBound> {
    if n == 0 {
        return invalid_param("colour_path needs n >= 1");
    }
    let k = floor_log2(n) + 1;
    let colours = (1..=n).map(|i| i.trailing_zeros() as usize + 1).collect();
    Ok(ColouringWithBound { colouring: Colouring::new(k, colours)?, claimed_bound: k })
}

/// `C_n`: ruler colouring on the first `n - 1` vertices and a fresh colour on the last,
/// for `ceil(log2 n) + 1` colours in total.
pub fn colour_cycle(n: usize) -> Result<ColouringWithBound> {
    if n < 3 {
        return invalid_param(format!("colour_cycle needs n >= 3, got {n}"));
    }
    let mut colours = colour_path(n - 1)?.colouring.colours().to_vec();
    let fresh = floor_log2(n - 1) + 2;
    colours.push(fresh);
    debug_assert_eq!(fresh, ceil_log2(n) + 1);
    Ok(ColouringWithBound { colouring: Colouring::new(fresh, colours)?, claimed_bound: fresh })
}

/// Recursive centroid colouring of a tree. The centroid of each remaining component
/// gets the colour of its recursion level (level 1 = colour 1), so on every path the
/// smallest colour is unique. At most `floor(log2 n) + 1` colours.
pub fn colour_tree_centroid(tree: &Graph) -> Result<ColouringWithBound> {
    if !tree.is_tree() {
        return invalid_input("centroid colouring needs a tree");
    }
    let n = tree.n();
    let mut colour = vec![0usize; n];
    let mut removed = vec![false; n];
    // (representative vertex, level)
    let mut stack = vec![(0usize, 1usize)];
    let mut size = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    while let Some((rep, level)) = stack.pop() {
        let comp = component(tree, rep, &removed, &mut parent);
        for &v in comp.iter().rev() {
            size[v] = 1 + tree
                .neighbours(v)
                .iter()
                .filter(|&&w| !removed[w] && parent[w] == v)
                .map(|&w| size[w])
                .sum::<usize>();
        }
        let total = comp.len();
        let centroid = comp
            .iter()
            .copied()
            .map(|v| {
                let largest = tree
                    .neighbours(v)
                    .iter()
                    .filter(|&&w| !removed[w])
                    .map(|&w| if parent[w] == v { size[w] } else { total - size[v] })
                    .max()
                    .unwrap_or(0);
                (largest, v)
            })
            .min()
            .expect("components are non-empty")
            .1;
        colour[centroid] = level;
        removed[centroid] = true;
        for &w in tree.neighbours(centroid) {
            if !removed[w] {
                stack.push((w, level + 1));
            }
        }
    }
    let k = colour.iter().copied().max().unwrap_or(1);
    Ok(ColouringWithBound { colouring: Colouring::new(k, colour)?, claimed_bound: floor_log2(n) + 1 })
}

/// Vertices of the component of `rep` avoiding `removed`, in BFS order; fills `parent`.
fn component(tree: &Graph, rep: usize, removed: &[bool], parent: &mut [usize]) -> Vec<usize> {
    parent[rep] = usize::MAX;
    let mut order = vec![rep];
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in tree.neighbours(u) {
            if !removed[w] && w != parent[u] {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    order
}
