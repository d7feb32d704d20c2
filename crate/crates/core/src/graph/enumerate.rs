use std::collections::BTreeSet;

use rand::Rng;

use super::{canonical_form, tree_code, Graph};
use crate::error::{invalid_param, Result};

/// All free (unrooted) trees on `n` vertices up to isomorphism, grown leaf by leaf.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            let mut edges = t.edges();
            for v in 0..size - 1 {
                edges.push((v, size - 1));
                let g = Graph::new(size, &edges).expect("adding a leaf keeps the graph simple");
                edges.pop();
                if seen.insert(tree_code(&g).expect("still a tree")) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// All connected graphs on `n` vertices up to isomorphism (brute force, `n <= 6`).
pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 6 {
        return invalid_param(format!("connected graph enumeration supports 1..=6 vertices, got {n}"));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::new(n, &edges)?;
        if g.is_connected() && seen.insert(canonical_form(&g)?) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Random labelled tree: vertex `i > 0` attaches to a uniform earlier vertex.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return invalid_param("random_tree needs n >= 1");
    }
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::new(n, &edges)
}

/// Random tree of maximum degree 3; vertex 0 has degree at most 2 so it can serve as a
/// binary root.
pub fn random_binary_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return invalid_param("random_binary_tree needs n >= 1");
    }
    let mut deg = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let open: Vec<usize> = (0..i).filter(|&v| deg[v] < if v == 0 { 2 } else { 3 }).collect();
        let p = open[rng.gen_range(0..open.len())];
        deg[p] += 1;
        deg[i] += 1;
        edges.push((p, i));
    }
    Graph::new(n, &edges)
}

/// Random connected graph: a random spanning tree plus each other pair with probability `p`.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let tree = random_tree(n, rng)?;
    let mut edges = tree.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn free_tree_counts() {
        // OEIS A000055
        let counts: Vec<usize> = (1..=10).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs_up_to_iso(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn random_generators_produce_valid_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..30 {
            assert!(random_tree(n, &mut rng).unwrap().is_tree());
            let b = random_binary_tree(n, &mut rng).unwrap();
            assert!(b.is_tree() && b.max_degree() <= 3 && b.degree(0) <= 2);
            assert!(random_connected_graph(n, 0.3, &mut rng).unwrap().is_connected());
        }
    }
}
