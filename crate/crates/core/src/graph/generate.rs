use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, RootedBinaryTree};
use crate::error::{invalid_param, Result};

pub const DEFAULT_MAX_SUBDIVISION_LENGTH: usize = 4;

/// `P_n`: vertices `0..n`, edges `{i, i+1}`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid_param("a path needs at least one vertex");
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// `C_n`: edges `{i, (i+1) mod n}`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid_param(format!("a cycle needs at least 3 vertices, got {n}"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `K_{1,n-1}` with centre 0.
pub fn make_star(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid_param("a star needs at least one vertex");
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges)
}

/// `B_d`, the complete binary tree with `d` layers; vertex `i` has children `2i+1, 2i+2`.
pub fn make_complete_binary_tree(d: usize) -> Result<RootedBinaryTree> {
    if d == 0 {
        return invalid_param("B_d needs d >= 1");
    }
    if d >= usize::BITS as usize - 1 {
        return invalid_param(format!("B_{d} is too large"));
    }
    let n = (1usize << d) - 1;
    let children = (0..n).map(|i| if 2 * i + 2 < n { vec![2 * i + 1, 2 * i + 2] } else { Vec::new() }).collect();
    RootedBinaryTree::from_children(0, children)
}

/// `T_{3,3}`: two copies of `B_3` whose roots are joined by an edge.
///
/// Vertex 0 is the root of the first copy; ids follow BFS from it. The two
/// copy roots have degree 3, so this is returned as a plain graph. Use
/// [`t33_rooted`] for a binary rooted view.
pub fn make_t33() -> Graph {
    let mut edges = vec![(0, 7)];
    for offset in [0, 7] {
        for i in 0..3 {
            edges.push((offset + i, offset + 2 * i + 1));
            edges.push((offset + i, offset + 2 * i + 2));
        }
    }
    let g = Graph::new(14, &edges).expect("T33 edges are simple");
    g.relabel_bfs(0).expect("T33 is connected").0
}

/// `T_{3,3}` rooted at its smallest leaf, which leaves every vertex with at most two children.
pub fn t33_rooted() -> RootedBinaryTree {
    let g = make_t33();
    let leaf = (0..g.n()).find(|&v| g.degree(v) == 1).expect("T33 has leaves");
    RootedBinaryTree::from_graph(&g, leaf).expect("T33 rooted at a leaf is binary").relabel_bfs()
}

/// Replacement-path lengths for a subdivision, keyed by tree edge `(parent, child)`.
#[derive(Debug, Clone)]
pub enum EdgeLengths {
    /// Edges missing from the map keep length 1.
    Explicit(BTreeMap<(usize, usize), usize>),
    /// Each edge length drawn uniformly from `1..=max_len`.
    Random { max_len: usize, seed: u64 },
}

/// Replaces every tree edge by a path with the given number of edges.
///
/// The result is relabelled in BFS order and carries main-vertex marks on the
/// original vertices.
pub fn subdivide(tree: &RootedBinaryTree, lengths: &EdgeLengths) -> Result<RootedBinaryTree> {
    let order = tree.bfs_order();
    let edge_list: Vec<(usize, usize)> =
        order.iter().flat_map(|&p| tree.children(p).iter().map(move |&c| (p, c))).collect();
    let len_of: Vec<usize> = match lengths {
        EdgeLengths::Explicit(map) => {
            for (&(p, c), &l) in map {
                if c >= tree.len() || tree.parent(c) != Some(p) {
                    return invalid_param(format!("({p}, {c}) is not a tree edge"));
                }
                if l == 0 {
                    return invalid_param(format!("edge ({p}, {c}) has length 0"));
                }
            }
            edge_list.iter().map(|e| map.get(e).copied().unwrap_or(1)).collect()
        }
        EdgeLengths::Random { max_len, seed } => {
            if *max_len == 0 {
                return invalid_param("maximum subdivision length must be at least 1");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            edge_list.iter().map(|_| rng.gen_range(1..=*max_len)).collect()
        }
    };

    // Original vertices keep their ids; path vertices are appended.
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); tree.len()];
    let mut main = vec![true; tree.len()];
    for (&(p, c), &l) in edge_list.iter().zip(&len_of) {
        let mut prev = p;
        for _ in 1..l {
            let x = children.len();
            children.push(Vec::new());
            main.push(false);
            children[prev].push(x);
            prev = x;
        }
        children[prev].push(c);
    }
    let sub = RootedBinaryTree::from_children(tree.root(), children)?.with_main_marks(main)?;
    Ok(sub.relabel_bfs())
}

/// Subdivision with lengths drawn from `1..=max_len` using a seeded generator.
pub fn subdivide_random(tree: &RootedBinaryTree, max_len: usize, seed: u64) -> Result<RootedBinaryTree> {
    subdivide(tree, &EdgeLengths::Random { max_len, seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::rooted_tree_code;

    #[test]
    fn path_and_cycle_counts() {
        for (n, m) in [(1, 0), (2, 1), (7, 6)] {
            let p = make_path(n).unwrap();
            assert_eq!((p.n(), p.num_edges()), (n, m));
        }
        for n in [3, 4, 10] {
            let c = make_cycle(n).unwrap();
            assert_eq!((c.n(), c.num_edges()), (n, n));
        }
        assert!(make_path(0).is_err());
        assert!(make_cycle(2).is_err());
        assert!(make_complete_binary_tree(0).is_err());
    }

    #[test]
    fn complete_tree_sizes() {
        assert_eq!(make_complete_binary_tree(1).unwrap().len(), 1);
        assert_eq!(make_complete_binary_tree(4).unwrap().len(), 15);
        let b3 = make_complete_binary_tree(3).unwrap();
        assert_eq!((b3.len(), b3.leaves().len()), (7, 4));
    }

    #[test]
    fn t33_structure() {
        let t = make_t33();
        assert_eq!((t.n(), t.num_edges()), (14, 13));
        assert!(t.is_tree());
        // copy roots are 0 and 3 after BFS relabelling
        assert!(t.has_edge(0, 3));
        assert_eq!((t.degree(0), t.degree(3)), (3, 3));
        assert_eq!((0..14).filter(|&v| t.degree(v) == 1).count(), 8);
        let rooted = t33_rooted();
        assert_eq!(rooted.len(), 14);
        assert_eq!(rooted.children(rooted.root()).len(), 1);
    }

    #[test]
    fn t33_contains_p6() {
        // leaf - mid - root1 - root2 - mid - leaf
        let t = make_t33();
        let p6 = crate::graph::Path(crate::parity::Lca::new(&t, 0).path(7, 13));
        assert!(p6.is_valid_in(&t));
        assert_eq!(p6.len(), 6);
    }

    #[test]
    fn subdivision_vertex_counts() {
        let b2 = make_complete_binary_tree(2).unwrap();
        let same = subdivide(&b2, &EdgeLengths::Explicit(BTreeMap::new())).unwrap();
        assert_eq!(same.len(), 3);
        assert_eq!(rooted_tree_code(&same), rooted_tree_code(&b2));

        let twos = BTreeMap::from([((0, 1), 2), ((0, 2), 2)]);
        assert_eq!(subdivide(&b2, &EdgeLengths::Explicit(twos)).unwrap().len(), 5);

        let b3 = make_complete_binary_tree(3).unwrap();
        let threes = (1..7).map(|c| (((c - 1) / 2, c), 3)).collect();
        assert_eq!(subdivide(&b3, &EdgeLengths::Explicit(threes)).unwrap().len(), 19);
    }

    #[test]
    fn subdivision_errors() {
        let b2 = make_complete_binary_tree(2).unwrap();
        assert!(subdivide(&b2, &EdgeLengths::Explicit(BTreeMap::from([((0, 1), 0)]))).is_err());
        assert!(subdivide(&b2, &EdgeLengths::Explicit(BTreeMap::from([((1, 2), 2)]))).is_err());
        assert!(subdivide_random(&b2, 0, 1).is_err());
    }

    #[test]
    fn main_vertices_of_subdivisions() {
        let b3 = make_complete_binary_tree(3).unwrap();
        let twos = (1..7).map(|c| (((c - 1) / 2, c), 2)).collect();
        assert_eq!(subdivide(&b3, &EdgeLengths::Explicit(twos)).unwrap().main_vertices().unwrap().len(), 7);
        let b1 = make_complete_binary_tree(1).unwrap();
        assert_eq!(subdivide(&b1, &EdgeLengths::Explicit(BTreeMap::new())).unwrap().main_vertices().unwrap().len(), 1);
        let b4 = make_complete_binary_tree(4).unwrap();
        let sub = subdivide_random(&b4, DEFAULT_MAX_SUBDIVISION_LENGTH, 11).unwrap();
        let main = sub.main_vertices().unwrap();
        assert_eq!(main.len(), 15);
        // For a complete tree the main vertices are exactly the root, leaves and branched vertices.
        let structural: Vec<_> =
            (0..sub.len()).filter(|&v| v == sub.root() || sub.is_leaf(v) || sub.is_branched(v)).collect();
        assert_eq!(main, structural);
        assert!(b4.main_vertices().is_err());
    }

    #[test]
    fn random_subdivision_is_deterministic() {
        let b3 = make_complete_binary_tree(3).unwrap();
        assert_eq!(subdivide_random(&b3, 4, 7).unwrap(), subdivide_random(&b3, 4, 7).unwrap());
    }
}
