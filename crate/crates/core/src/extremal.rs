//! `A(l, d)`: the largest rooted binary tree with at most `l` layers that contains no
//! subdivision of `B_{d+1}` as a compatible subgraph.
//!
//! Counts are exact `u128` values; every operation refuses parameters whose results
//! would not fit.

use std::collections::HashMap;

use crate::error::{invalid_param, Error, Result};
use crate::graph::{make_complete_binary_tree, RootedBinaryTree};

/// Largest `l` whose counts fit in a `u128`.
pub const MAX_LAYERS: usize = 127;
/// Largest `l` for which [`extremal_tree`] materialises a tree.
pub const MAX_TREE_LAYERS: usize = 24;
/// Largest `l` [`brute_force_extremal`] accepts without an override.
pub const BRUTE_FORCE_LAYER_LIMIT: usize = 5;

fn check_layers(l: usize) -> Result<()> {
    if l > MAX_LAYERS {
        return invalid_param(format!("l = {l} exceeds {MAX_LAYERS}"));
    }
    Ok(())
}

/// `A(l, d)` by the recursion `A(l, d) = A(l-1, d-1) + A(l-1, d) + 1` with
/// `A(l, 0) = 0` and `A(l, d) = 2^l - 1` for `d >= l`.
pub fn extremal_count(l: usize, d: usize) -> Result<u128> {
    check_layers(l)?;
    let mut memo = HashMap::new();
    Ok(count_memo(l, d.min(l), &mut memo))
}

fn count_memo(l: usize, d: usize, memo: &mut HashMap<(usize, usize), u128>) -> u128 {
    if d == 0 {
        return 0;
    }
    if d >= l {
        return (1u128 << l) - 1;
    }
    if let Some(&v) = memo.get(&(l, d)) {
        return v;
    }
    let v = count_memo(l - 1, d - 1, memo) + count_memo(l - 1, d, memo) + 1;
    memo.insert((l, d), v);
    v
}

/// `C(n, r)`, or `None` on overflow.
pub fn binomial(n: usize, r: usize) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Closed form `sum_{i=0}^{d} (2^i - 1) C(l-i-1, l-d-1) + C(l, d) - 1`, for `l > d`.
pub fn extremal_count_closed(l: usize, d: usize) -> Result<u128> {
    if l <= d {
        return Err(Error::Domain(format!("closed form needs l > d, got l = {l}, d = {d}")));
    }
    check_layers(l)?;
    let overflow = || Error::Domain(format!("A({l}, {d}) overflows"));
    let mut sum: u128 = 0;
    for i in 0..=d {
        let term = ((1u128 << i) - 1).checked_mul(binomial(l - i - 1, l - d - 1).ok_or_else(overflow)?);
        sum = sum.checked_add(term.ok_or_else(overflow)?).ok_or_else(overflow)?;
    }
    let c = binomial(l, d).ok_or_else(overflow)?;
    Ok(sum + c - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    /// `d = 0` or `d >= l`.
    BaseCase,
    Recursion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalEntry {
    pub value: u128,
    pub derivation: Derivation,
    /// Present when `l > d`; always equal to `value` in a constructed table.
    pub closed_form: Option<u128>,
}

/// `A(l, d)` for `0 <= l, d <= l_max`.
#[derive(Debug, Clone)]
pub struct ExtremalTable {
    l_max: usize,
    entries: Vec<ExtremalEntry>,
}

impl ExtremalTable {
    /// Fills the table by recursion and cross-checks every entry with `l > d` against the
    /// closed form; a disagreement is an internal error.
    pub fn new(l_max: usize) -> Result<Self> {
        check_layers(l_max)?;
        let w = l_max + 1;
        let mut entries = Vec::with_capacity(w * w);
        for l in 0..=l_max {
            for d in 0..=l_max {
                let (value, derivation) = if d == 0 {
                    (0, Derivation::BaseCase)
                } else if d >= l {
                    ((1u128 << l) - 1, Derivation::BaseCase)
                } else {
                    let e: &ExtremalEntry = &entries[(l - 1) * w + d - 1];
                    let f: &ExtremalEntry = &entries[(l - 1) * w + d];
                    (e.value + f.value + 1, Derivation::Recursion)
                };
                let closed_form = if l > d { Some(extremal_count_closed(l, d)?) } else { None };
                if closed_form.is_some_and(|c| c != value) {
                    return Err(Error::Internal(format!(
                        "A({l}, {d}): recursion {value} != closed form {closed_form:?}"
                    )));
                }
                entries.push(ExtremalEntry { value, derivation, closed_form });
            }
        }
        Ok(ExtremalTable { l_max, entries })
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    pub fn get(&self, l: usize, d: usize) -> Option<&ExtremalEntry> {
        (l <= self.l_max && d <= self.l_max).then(|| &self.entries[l * (self.l_max + 1) + d])
    }

    /// Tab-separated rows `l d A derivation closed_form`, with a header.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("l\td\tA\tderivation\tclosed_form\n");
        for l in 0..=self.l_max {
            for d in 0..=self.l_max {
                let e = self.get(l, d).expect("in range");
                let der = match e.derivation {
                    Derivation::BaseCase => "base",
                    Derivation::Recursion => "recursion",
                };
                let closed = e.closed_form.map_or("-".to_string(), |c| c.to_string());
                out.push_str(&format!("{l}\t{d}\t{}\t{der}\t{closed}\n", e.value));
            }
        }
        out
    }
}

/// A tree with `A(l, d)` vertices and at most `l` layers avoiding `B_{d+1}`; `None` is
/// the empty tree. For `0 < d < l` the root gets the subtrees for `(l-1, d)` and
/// `(l-1, d-1)`.
pub fn extremal_tree(l: usize, d: usize) -> Result<Option<RootedBinaryTree>> {
    if l > MAX_TREE_LAYERS {
        return invalid_param(format!("extremal trees are built only for l <= {MAX_TREE_LAYERS}"));
    }
    if d == 0 || l == 0 {
        return Ok(None);
    }
    if d >= l {
        return make_complete_binary_tree(l).map(Some);
    }
    let mut children: Vec<Vec<usize>> = Vec::new();
    build_into(l, d, &mut children);
    Ok(Some(RootedBinaryTree::from_children(0, children)?.relabel_bfs()))
}

/// Appends the tree for `(l, d)` and returns its root, or `None` if it is empty.
fn build_into(l: usize, d: usize, children: &mut Vec<Vec<usize>>) -> Option<usize> {
    if d == 0 || l == 0 {
        return None;
    }
    let root = children.len();
    children.push(Vec::new());
    if d >= l {
        // B_l in heap layout, offset by root
        let n = (1usize << l) - 1;
        children.truncate(root);
        children.extend((0..n).map(
            |i| {
                if 2 * i + 2 < n {
                    vec![root + 2 * i + 1, root + 2 * i + 2]
                } else {
                    Vec::new()
                }
            },
        ));
        return Some(root);
    }
    let kids: Vec<usize> =
        [build_into(l - 1, d, children), build_into(l - 1, d - 1, children)].into_iter().flatten().collect();
    children[root] = kids;
    Some(root)
}

/// Largest `s` such that some subdivision of `B_s` is a compatible subgraph.
///
/// Leaf: 1. One child: the child's value. Two children with values `a >= b`: `a` if
/// `a > b`, else `a + 1`.
pub fn max_complete_subdivision(tree: &RootedBinaryTree) -> usize {
    let mut value = vec![0usize; tree.len()];
    for v in tree.postorder() {
        value[v] = match *tree.children(v) {
            [] => 1,
            [c] => value[c],
            [a, b] => {
                let (hi, lo) = (value[a].max(value[b]), value[a].min(value[b]));
                if hi > lo {
                    hi
                } else {
                    hi + 1
                }
            }
            _ => unreachable!("binary tree"),
        };
    }
    value[tree.root()]
}

/// `A(l, d)` by enumerating every binary tree (left and right positions, either may be
/// empty) with at most `l` layers. There are `T(l) = 1 + T(l-1)^2` of them, `T(0) = 1`,
/// counting the empty tree; 458330 at `l = 5`. Larger `l` needs `allow_large`.
pub fn brute_force_extremal(l: usize, d: usize, allow_large: bool) -> Result<usize> {
    if l > BRUTE_FORCE_LAYER_LIMIT && !allow_large {
        return invalid_param(format!(
            "brute force over trees with {l} layers is refused above {BRUTE_FORCE_LAYER_LIMIT}; pass the override"
        ));
    }
    let shapes = enumerate_shapes(l);
    let mut best = 0;
    for top in shapes.top_level() {
        if let Some(tree) = shapes.to_tree(top) {
            if tree.len() > best && max_complete_subdivision(&tree) <= d {
                best = tree.len();
            }
        }
    }
    Ok(best)
}

/// Number of binary trees with at most `l` layers, the empty tree included.
pub fn count_shapes(l: usize) -> usize {
    enumerate_shapes(l).top_level().len()
}

/// Arena of shapes: entry 0 is the empty tree, others are `(left, right)` pairs.
struct Shapes {
    nodes: Vec<(usize, usize)>,
    by_layers: Vec<std::ops::Range<usize>>,
}

impl Shapes {
    /// Ids of every shape with at most the enumerated number of layers.
    fn top_level(&self) -> Vec<usize> {
        let mut ids = vec![0];
        for r in &self.by_layers {
            ids.extend(r.clone());
        }
        ids
    }

    fn to_tree(&self, id: usize) -> Option<RootedBinaryTree> {
        if id == 0 {
            return None;
        }
        let mut children: Vec<Vec<usize>> = vec![Vec::new()];
        let mut stack = vec![(id, 0usize)];
        while let Some((s, v)) = stack.pop() {
            let (a, b) = self.nodes[s];
            for sub in [a, b] {
                if sub != 0 {
                    let c = children.len();
                    children.push(Vec::new());
                    children[v].push(c);
                    stack.push((sub, c));
                }
            }
        }
        Some(RootedBinaryTree::from_children(0, children).expect("arena shapes are trees"))
    }
}

/// Shapes with exactly `j` layers occupy `by_layers[j - 1]`.
fn enumerate_shapes(l: usize) -> Shapes {
    let mut nodes = vec![(0, 0)];
    let mut by_layers = Vec::new();
    for j in 1..=l {
        let smaller: Vec<usize> =
            std::iter::once(0).chain(by_layers.iter().flat_map(|r: &std::ops::Range<usize>| r.clone())).collect();
        let exact_prev = if j == 1 { 0..1 } else { by_layers[j - 2].clone() };
        let start = nodes.len();
        for &a in &smaller {
            for &b in &smaller {
                // at least one side has exactly j - 1 layers
                if exact_prev.contains(&a) || exact_prev.contains(&b) {
                    nodes.push((a, b));
                }
            }
        }
        by_layers.push(start..nodes.len());
    }
    Shapes { nodes, by_layers }
}

/// Smallest `b` with `2^(b^3) > n`: every parity vertex colouring of an `n`-vertex
/// binary tree uses at least `b` colours, i.e. more than `cbrt(log2 n)`.
pub fn binary_tree_lower_bound(n: usize) -> Result<usize> {
    if n == 0 {
        return invalid_param("n must be at least 1");
    }
    Ok((0usize..)
        .find(|&b| {
            let e = b * b * b;
            e >= usize::BITS as usize || (1usize << e) > n
        })
        .expect("terminates once b^3 reaches the word size"))
}
