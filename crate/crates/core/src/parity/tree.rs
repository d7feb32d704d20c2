use super::{Colouring, Lca, ParityPathCertificate};
use crate::error::{invalid_input, Result};
use crate::graph::{Graph, RootedBinaryTree};

/// Searches a tree for a parity path.
///
/// With `P(v)` the parity vector of the root-to-`v` path, the path `u..v` has vector
/// `P(u) ^ P(v) ^ e(colour(lca(u, v)))`. All pairs are scanned in ascending order, so
/// the first certificate is deterministic. `O(n^2 k / 64)` after `O(n log n)` set-up.
pub fn find_parity_path_tree(tree: &Graph, colouring: &Colouring) -> Result<Option<ParityPathCertificate>> {
    if !tree.is_tree() {
        return invalid_input("tree verifier needs a connected acyclic graph");
    }
    colouring.check_domain(tree.n())?;
    let n = tree.n();
    let words = colouring.k().div_ceil(64);
    let lca = Lca::new(tree, 0);

    let mut prefix = vec![0u64; n * words];
    for &v in lca.order() {
        if let Some(p) = lca.parent(v) {
            prefix.copy_within(p * words..(p + 1) * words, v * words);
        }
        let c = colouring.colour(v) - 1;
        prefix[v * words + c / 64] ^= 1 << (c % 64);
    }

    for u in 0..n {
        let pu = &prefix[u * words..(u + 1) * words];
        for v in u + 1..n {
            let pv = &prefix[v * words..(v + 1) * words];
            // The xor must be a single bit for the lca to cancel it.
            let mut ones = 0;
            let mut bit = 0;
            for (w, (a, b)) in pu.iter().zip(pv).enumerate() {
                let x = a ^ b;
                ones += x.count_ones();
                if x != 0 {
                    bit = w * 64 + x.trailing_zeros() as usize;
                }
            }
            if ones != 1 {
                continue;
            }
            let l = lca.lca(u, v);
            if colouring.colour(l) - 1 == bit {
                return Ok(Some(ParityPathCertificate::new(lca.path(u, v), colouring)));
            }
        }
    }
    Ok(None)
}

/// Path between `a` and `b` in a rooted tree.
pub fn tree_path(tree: &RootedBinaryTree, a: usize, b: usize) -> Option<Vec<usize>> {
    if a >= tree.len() || b >= tree.len() {
        return None;
    }
    let depths = tree.depths();
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while x != y {
        if depths[x] >= depths[y] {
            x = tree.parent(x)?;
            left.push(x);
        } else {
            y = tree.parent(y)?;
            right.push(y);
        }
    }
    right.pop();
    left.extend(right.into_iter().rev());
    Some(left)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path, make_star};

    fn col(k: usize, c: &[usize]) -> Colouring {
        Colouring::new(k, c.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let p2 = make_path(2).unwrap();
        let cert = find_parity_path_tree(&p2, &col(1, &[1, 1])).unwrap().unwrap();
        assert_eq!(cert.path.vertices(), &[0, 1]);

        assert!(find_parity_path_tree(&make_path(3).unwrap(), &col(2, &[1, 2, 1])).unwrap().is_none());
        assert!(find_parity_path_tree(&make_star(4).unwrap(), &col(2, &[1, 2, 2, 2])).unwrap().is_none());
    }

    #[test]
    fn finds_path_through_lca() {
        // vertices 1..=4 carry 1, 2, 2, 1
        let p = make_path(5).unwrap();
        let c = col(3, &[3, 1, 2, 2, 1]);
        let cert = find_parity_path_tree(&p, &c).unwrap().unwrap();
        assert!(cert.is_valid_for(&p, &c));
    }

    #[test]
    fn rejects_non_trees() {
        assert!(find_parity_path_tree(&make_cycle(3).unwrap(), &col(3, &[1, 2, 3])).is_err());
        assert!(find_parity_path_tree(&Graph::empty(2), &col(2, &[1, 2])).is_err());
    }

    #[test]
    fn tree_path_goes_through_lca() {
        let b3 = crate::graph::make_complete_binary_tree(3).unwrap();
        assert_eq!(tree_path(&b3, 3, 6), Some(vec![3, 1, 0, 2, 6]));
        assert_eq!(tree_path(&b3, 0, 4), Some(vec![0, 1, 4]));
    }
}
