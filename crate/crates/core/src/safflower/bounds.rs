use serde_json::json;

use super::{build_with_table, max_nice, nice_subtree_table, NiceSubtreeTable, Safflower};
use crate::error::{invalid_input, invalid_param, Error, Result};
use crate::graph::{make_complete_binary_tree, rooted_tree_code, RootedBinaryTree};
use crate::parity::Colouring;

pub const CERTIFICATE_SCHEMA: &str = "parity-colouring/lower-bound/1";

/// Lower bound on the colours needed by a subdivision of `B_d`, read off its main safflower.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundCertificate {
    pub d: usize,
    pub k: usize,
    /// `a[i - 1]`: main stem vertices of colour `i`; sums to `d`.
    pub a: Vec<usize>,
    pub num_nice: usize,
    pub bound: f64,
    pub safflower: Safflower,
}

impl LowerBoundCertificate {
    /// `sum_i (2^{a_i} - 1)`, the guaranteed number of nicely coloured vertices.
    pub fn guaranteed_nice(&self) -> u128 {
        self.a.iter().map(|&ai| max_nice(ai)).fold(0u128, u128::saturating_add)
    }

    /// Vertex ids are 1-indexed, as in the text formats.
    pub fn to_json(&self) -> serde_json::Value {
        let one = |v: &Vec<usize>| v.iter().map(|x| x + 1).collect::<Vec<_>>();
        json!({
            "schema": CERTIFICATE_SCHEMA,
            "d": self.d,
            "k": self.k,
            "a": self.a,
            "num_nice": self.num_nice,
            "bound": self.bound,
            "stem": one(&self.safflower.stem),
            "nice_vertices": self.safflower.trees.iter().map(|t| one(&t.nice_vertices)).collect::<Vec<_>>(),
        })
    }
}

/// `max(sqrt d, sqrt d + log2(d)/4 - 1/2)`. Every parity vertex colouring of a
/// subdivision of `B_d` uses at least this many colours.
pub fn depth_lower_bound(d: usize) -> Result<f64> {
    if d == 0 {
        return invalid_param("depth must be at least 1");
    }
    let s = (d as f64).sqrt();
    Ok(s.max(s + 0.25 * (d as f64).log2() - 0.5))
}

/// Builds and checks the certificate for a main-marked subdivision of `B_d`.
///
/// Any failed inequality is an invariant breach and returns [`Error::Internal`].
pub fn lower_bound_certificate(subdivided: &RootedBinaryTree, colouring: &Colouring) -> Result<LowerBoundCertificate> {
    let contracted = subdivided.contract_to_main()?;
    let d = contracted.layers();
    if rooted_tree_code(&contracted) != rooted_tree_code(&make_complete_binary_tree(d)?) {
        return invalid_input("main vertices do not form a complete binary tree");
    }
    let table = nice_subtree_table(subdivided, colouring)?;
    let safflower = build_with_table(subdivided, colouring, &table);
    let k = colouring.k();
    let a = safflower.stem_colour_counts.clone();
    let breach = |msg: String| Err(Error::Internal(msg));
    if a.iter().sum::<usize>() != d {
        return breach(format!("stem carries {} main vertices, expected {d}", a.iter().sum::<usize>()));
    }
    let bound = depth_lower_bound(d)?;
    let cert = LowerBoundCertificate { d, k, a, num_nice: safflower.num_nice(), bound, safflower };
    if (cert.num_nice as u128) < cert.guaranteed_nice() {
        return breach(format!("{} nice vertices, fewer than {}", cert.num_nice, cert.guaranteed_nice()));
    }
    if cert.num_nice as u128 > max_nice(k) {
        return breach(format!("{} nice vertices exceed 2^{k} - 1", cert.num_nice));
    }
    if bound > k as f64 {
        return breach(format!("bound {bound} exceeds the {k} colours of a valid colouring"));
    }
    Ok(cert)
}

/// Main stem vertices `m` with `g_c(T_m) < 2^j - 1`, where `c` is the colour of `m` and
/// `j` counts main stem vertices of colour `c` at or below `m`.
pub fn stem_doubling_violations(
    tree: &RootedBinaryTree,
    colouring: &Colouring,
    saff: &Safflower,
    table: &NiceSubtreeTable,
) -> Vec<usize> {
    let main: Vec<usize> = saff.stem.iter().copied().filter(|&v| tree.is_main(v)).collect();
    let mut below = vec![0usize; colouring.k()];
    let mut out = Vec::new();
    for &m in main.iter().rev() {
        let c = colouring.colour(m);
        below[c - 1] += 1;
        if (table.g(m, c) as u128) < max_nice(below[c - 1]) {
            out.push(m);
        }
    }
    out.reverse();
    out
}

/// Whether `sum_i (2^{a_i} - 1) <= 2^k - 1` implies `k >= depth_lower_bound(n)`.
pub fn partition_implication_holds(n: usize, k: usize, a: &[usize]) -> Result<bool> {
    if a.iter().sum::<usize>() != n {
        return invalid_param(format!("parts sum to {}, not {n}", a.iter().sum::<usize>()));
    }
    if a.iter().filter(|&&x| x > 0).count() > k {
        return invalid_param(format!("more than {k} nonzero parts"));
    }
    let lhs = a.iter().map(|&ai| max_nice(ai)).fold(0u128, u128::saturating_add);
    let premise = lhs <= max_nice(k);
    Ok(!premise || k as f64 >= depth_lower_bound(n)?)
}

/// Partitions of `n` into at most `max_parts` parts, each non-increasing.
pub fn partitions(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, parts_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Every `(n, k, a)` with `1 <= n <= n_max`, `1 <= k <= k_max` and `a` a partition of `n`
/// into at most `k` parts for which the implication fails.
pub fn partition_implication_counterexamples(n_max: usize, k_max: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 1..=k_max {
            for a in partitions(n, k) {
                if !partition_implication_holds(n, k, &a).expect("partitions are well formed") {
                    out.push((n, k, a));
                }
            }
        }
    }
    out
}
