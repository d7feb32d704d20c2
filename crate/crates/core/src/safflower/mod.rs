//! Nicely coloured subtrees, main safflowers and the lower bounds they certify.
//!
//! A tree is nicely coloured when its root, leaves and branched vertices all share
//! one colour. A safflower is a path (the stem) whose vertices are the roots of
//! disjoint nicely coloured trees. In a parity vertex colouring with `k` colours a
//! safflower has at most `2^k - 1` nicely coloured vertices, because the paths from
//! the first stem vertex to them have pairwise distinct nonzero parity vectors.

mod bounds;
mod table;

pub use bounds::{
    depth_lower_bound, lower_bound_certificate, partition_implication_counterexamples, partition_implication_holds,
    partitions, stem_doubling_violations, LowerBoundCertificate,
};
pub use table::{NiceSubtree, NiceSubtreeTable};

use std::collections::HashMap;

use crate::error::{invalid_input, Error, Result};
use crate::graph::{Graph, RootedBinaryTree};
use crate::parity::{find_parity_path_tree, Colouring, Lca, ParityVector};

/// One nicely coloured tree hanging off the stem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OriginalTree {
    pub root: usize,
    pub nice_colour: usize,
    /// Sorted vertex ids in the host tree.
    pub vertices: Vec<usize>,
    /// Sorted ids of the vertices coloured `nice_colour`.
    pub nice_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Safflower {
    /// Root-to-leaf path of the host tree; `stem[i]` is the root of `trees[i]`.
    pub stem: Vec<usize>,
    pub trees: Vec<OriginalTree>,
    /// Entry `i - 1` counts stem vertices of colour `i` (main vertices only, when the
    /// host carries main marks).
    pub stem_colour_counts: Vec<usize>,
}

impl Safflower {
    /// `Num(F)`: total number of nicely coloured vertices.
    pub fn num_nice(&self) -> usize {
        self.trees.iter().map(|t| t.nice_vertices.len()).sum()
    }

    pub fn original_tree_roots(&self) -> Vec<usize> {
        self.trees.iter().map(|t| t.root).collect()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.trees.iter().flat_map(|t| t.vertices.iter().copied()).collect();
        all.sort_unstable();
        all
    }
}

/// A failed safflower check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SafflowerViolation {
    NotNicelyColoured { root: usize },
    WrongNiceColour { root: usize },
    NiceSetMismatch { root: usize },
    ZeroRootVector { vertex: usize },
    EqualRootVectors { a: usize, b: usize },
    TooManyNice { num: usize, max: u128 },
    InducedColouringInvalid,
}

pub(crate) fn require_valid(tree: &RootedBinaryTree, colouring: &Colouring) -> Result<()> {
    colouring.check_domain(tree.len())?;
    if let Some(cert) = find_parity_path_tree(&tree.to_graph(), colouring)? {
        return invalid_input(format!("colouring has a parity path through vertices {:?}", cert.path.vertices()));
    }
    Ok(())
}

/// The nice colour of a validly coloured tree, if it is nicely coloured.
pub fn is_nicely_coloured(tree: &RootedBinaryTree, colouring: &Colouring) -> Result<Option<usize>> {
    require_valid(tree, colouring)?;
    let c = colouring.colour(tree.root());
    let nice = (0..tree.len()).filter(|&v| tree.is_leaf(v) || tree.is_branched(v)).all(|v| colouring.colour(v) == c);
    Ok(nice.then_some(c))
}

pub fn nice_subtree_table(tree: &RootedBinaryTree, colouring: &Colouring) -> Result<NiceSubtreeTable> {
    require_valid(tree, colouring)?;
    Ok(NiceSubtreeTable::build(tree, colouring))
}

/// Extracts `Saff(T)`.
///
/// Walking down from the root: a leaf ends the stem; a vertex with one child is a
/// single-vertex original tree; at a vertex `r` with two children the child `s`
/// with larger `g_c` (`c` the colour of `r`, ties to the smaller id) donates
/// `G_c(T_s)`, joined to `r` by the tree path, and the stem continues into the other.
pub fn build_main_safflower(tree: &RootedBinaryTree, colouring: &Colouring) -> Result<Safflower> {
    let table = nice_subtree_table(tree, colouring)?;
    Ok(build_with_table(tree, colouring, &table))
}

pub(crate) fn build_with_table(tree: &RootedBinaryTree, colouring: &Colouring, table: &NiceSubtreeTable) -> Safflower {
    let mut stem = Vec::new();
    let mut trees = Vec::new();
    let mut r = tree.root();
    loop {
        stem.push(r);
        let c = colouring.colour(r);
        let mut vertices = vec![r];
        let next = match *tree.children(r) {
            [] => None,
            [only] => Some(only),
            [a, b] => {
                let (s, t) = if table.g(a, c) > table.g(b, c) || (table.g(a, c) == table.g(b, c) && a < b) {
                    (a, b)
                } else {
                    (b, a)
                };
                if let Some(sub) = table.nice_subtree(tree, colouring, s, c) {
                    let path = tree.path_from_ancestor(s, sub.root).expect("maximiser lies below s");
                    vertices.extend_from_slice(&path[..path.len() - 1]);
                    vertices.extend(sub.vertices);
                }
                Some(t)
            }
            _ => unreachable!("binary tree"),
        };
        vertices.sort_unstable();
        let nice_vertices = vertices.iter().copied().filter(|&v| colouring.colour(v) == c).collect();
        trees.push(OriginalTree { root: r, nice_colour: c, vertices, nice_vertices });
        match next {
            Some(t) => r = t,
            None => break,
        }
    }
    let mut stem_colour_counts = vec![0; colouring.k()];
    for &v in &stem {
        if tree.main_marks().is_none() || tree.is_main(v) {
            stem_colour_counts[colouring.colour(v) - 1] += 1;
        }
    }
    Safflower { stem, trees, stem_colour_counts }
}

/// Checks that the original trees are nicely coloured, that the paths from the first
/// stem vertex to the nicely coloured vertices have pairwise distinct nonzero parity
/// vectors, and that `Num(F) <= 2^k - 1`.
pub fn verify_safflower(tree: &RootedBinaryTree, colouring: &Colouring, saff: &Safflower) -> Result<bool> {
    Ok(safflower_violations(tree, colouring, saff)?.is_empty())
}

/// Every failed check. Structural problems (overlapping trees, a broken stem, stray
/// edges) make the certificate malformed and are reported as errors instead.
pub fn safflower_violations(
    tree: &RootedBinaryTree,
    colouring: &Colouring,
    saff: &Safflower,
) -> Result<Vec<SafflowerViolation>> {
    colouring.check_domain(tree.len())?;
    let host = tree.to_graph();
    let owner = check_structure(&host, saff)?;
    let mut out = Vec::new();

    for (i, t) in saff.trees.iter().enumerate() {
        if t.nice_colour != colouring.colour(t.root) {
            out.push(SafflowerViolation::WrongNiceColour { root: t.root });
        }
        let nice: Vec<usize> = t.vertices.iter().copied().filter(|&v| colouring.colour(v) == t.nice_colour).collect();
        if nice != t.nice_vertices {
            out.push(SafflowerViolation::NiceSetMismatch { root: t.root });
        }
        let structural_ok = t.vertices.iter().all(|&v| {
            let deg_in_tree = host.neighbours(v).iter().filter(|&&w| owner.get(&w) == Some(&i)).count();
            let children = if v == t.root { deg_in_tree } else { deg_in_tree - 1 };
            let structural = v == t.root || children == 0 || children >= 2;
            !structural || colouring.colour(v) == colouring.colour(t.root)
        });
        if !structural_ok {
            out.push(SafflowerViolation::NotNicelyColoured { root: t.root });
        }
    }

    let lca = Lca::new(&host, saff.stem[0]);
    let mut prefix = vec![ParityVector::zero(colouring.k()); tree.len()];
    for &v in lca.order() {
        if let Some(p) = lca.parent(v) {
            prefix[v] = prefix[p].clone();
        }
        prefix[v].toggle(colouring.colour(v));
    }
    let mut seen: HashMap<&ParityVector, usize> = HashMap::new();
    for t in &saff.trees {
        for &e in &t.nice_vertices {
            let pv = &prefix[e];
            if pv.is_zero() {
                out.push(SafflowerViolation::ZeroRootVector { vertex: e });
            }
            if let Some(&other) = seen.get(pv) {
                out.push(SafflowerViolation::EqualRootVectors { a: other, b: e });
            } else {
                seen.insert(pv, e);
            }
        }
    }

    let max = max_nice(colouring.k());
    let num = saff.num_nice();
    if num as u128 > max {
        out.push(SafflowerViolation::TooManyNice { num, max });
    }

    let keep: Vec<bool> = (0..tree.len()).map(|v| owner.contains_key(&v)).collect();
    let (sub, old_ids) = host.induced_subgraph(&keep);
    if find_parity_path_tree(&sub, &colouring.restrict(&old_ids))?.is_some() {
        out.push(SafflowerViolation::InducedColouringInvalid);
    }
    Ok(out)
}

/// `2^k - 1`, saturating.
pub(crate) fn max_nice(k: usize) -> u128 {
    if k >= 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}

/// Maps each safflower vertex to the index of its original tree, after checking the
/// certificate is well formed within the host.
fn check_structure(host: &Graph, saff: &Safflower) -> Result<HashMap<usize, usize>> {
    let malformed = |msg: String| Err(Error::InvalidInput(format!("malformed safflower: {msg}")));
    if saff.stem.is_empty() {
        return malformed("empty stem".into());
    }
    if saff.stem.len() != saff.trees.len() {
        return malformed("stem and original trees differ in length".into());
    }
    for w in saff.stem.windows(2) {
        if w[0] >= host.n() || w[1] >= host.n() || !host.has_edge(w[0], w[1]) {
            return malformed(format!("stem step {} - {} is not an edge", w[0], w[1]));
        }
    }
    let mut owner = HashMap::new();
    for (i, t) in saff.trees.iter().enumerate() {
        if t.root != saff.stem[i] {
            return malformed(format!("tree {i} is not rooted at stem vertex {}", saff.stem[i]));
        }
        for &v in &t.vertices {
            if v >= host.n() {
                return malformed(format!("vertex {v} out of range"));
            }
            if owner.insert(v, i).is_some() {
                return malformed(format!("vertex {v} lies in two original trees"));
            }
        }
        if !t.vertices.contains(&t.root) {
            return malformed(format!("tree {i} misses its root"));
        }
    }
    for (i, t) in saff.trees.iter().enumerate() {
        // connected within the host
        let mut seen = vec![t.root];
        let mut head = 0;
        while head < seen.len() {
            let u = seen[head];
            head += 1;
            for &w in host.neighbours(u) {
                if owner.get(&w) == Some(&i) && !seen.contains(&w) {
                    seen.push(w);
                }
            }
        }
        if seen.len() != t.vertices.len() {
            return malformed(format!("tree {i} is not connected"));
        }
        for &v in &t.vertices {
            for &w in host.neighbours(v) {
                match owner.get(&w) {
                    Some(&j) if j != i => {
                        let stem_edge = j.abs_diff(i) == 1 && v == saff.stem[i] && w == saff.stem[j];
                        if !stem_edge {
                            return malformed(format!("edge {v} - {w} joins two original trees off the stem"));
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(owner)
}

/// Pairs of nicely coloured vertices `(e1, e2)` where neither endpoint shares the
/// colour of the last common vertex of their paths from the first stem vertex.
pub fn stem_vertex_violations(
    tree: &RootedBinaryTree,
    colouring: &Colouring,
    saff: &Safflower,
) -> Result<Vec<(usize, usize)>> {
    colouring.check_domain(tree.len())?;
    let host = tree.to_graph();
    check_structure(&host, saff)?;
    let lca = Lca::new(&host, saff.stem[0]);
    let nice: Vec<usize> = saff.trees.iter().flat_map(|t| t.nice_vertices.iter().copied()).collect();
    let mut out = Vec::new();
    for (i, &a) in nice.iter().enumerate() {
        for &b in &nice[i + 1..] {
            let c = colouring.colour(lca.lca(a, b));
            if colouring.colour(a) != c && colouring.colour(b) != c {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// Stem vertices `v` that are leaves or branched and whose original tree has
/// `2 Num(G) < g_c(T_v) + 1`, `c` the colour of `v`.
pub fn original_tree_violations(
    tree: &RootedBinaryTree,
    colouring: &Colouring,
    saff: &Safflower,
    table: &NiceSubtreeTable,
) -> Vec<usize> {
    saff.trees
        .iter()
        .filter(|t| tree.is_leaf(t.root) || tree.is_branched(t.root))
        .filter(|t| 2 * t.nice_vertices.len() < table.g(t.root, colouring.colour(t.root)) + 1)
        .map(|t| t.root)
        .collect()
}
