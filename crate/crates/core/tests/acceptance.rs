//! Acceptance suite: ten criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so every line is printed; exits nonzero when any criterion fails.

use std::collections::{HashSet, VecDeque};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use parity_colouring::constructions::{colour_cycle, colour_path, colour_tree_centroid};
use parity_colouring::extremal::{brute_force_extremal, extremal_count, extremal_count_closed, extremal_tree};
use parity_colouring::graph::{
    connected_graphs_up_to_iso, free_trees, make_complete_binary_tree, make_cycle, make_path, make_t33,
    random_connected_graph, random_tree, subdivide_random, Graph, RootedBinaryTree,
};
use parity_colouring::mso::{
    emit_parity_colourable, parse_sexpr, parse_text, render_sexpr, render_text, structural_check, Formula,
};
use parity_colouring::parity::Colouring;
use parity_colouring::reduction::{build_hampath_gadget, check_reduction_equivalence, Consistency};
use parity_colouring::safflower::{
    depth_lower_bound, lower_bound_certificate, nice_subtree_table, original_tree_violations,
    partition_implication_holds, safflower_violations, stem_doubling_violations, stem_vertex_violations, Safflower,
};
use parity_colouring::solver::{brute_force_chromatic, chromatic_number};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = started.elapsed();
    ensure(t <= limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn chi(g: &Graph) -> Option<usize> {
    chromatic_number(g, None).expect("connected input").chi()
}

// ---- local oracles ----

fn mask(c: usize) -> u64 {
    1u64 << (c - 1)
}

/// Parity path check on a tree: xor of colour bits from every root.
fn tree_has_parity_path(g: &Graph, colours: &[usize]) -> bool {
    (0..g.n()).any(|s| {
        let mut acc = vec![None; g.n()];
        acc[s] = Some(mask(colours[s]));
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbours(v) {
                if acc[w].is_none() {
                    let m = acc[v].unwrap() ^ mask(colours[w]);
                    if m == 0 {
                        return true;
                    }
                    acc[w] = Some(m);
                    queue.push_back(w);
                }
            }
        }
        false
    })
}

/// Every simple path by DFS; for small graphs only.
fn graph_has_parity_path(g: &Graph, colours: &[usize]) -> bool {
    fn dfs(g: &Graph, colours: &[usize], v: usize, m: u64, seen: &mut [bool]) -> bool {
        g.neighbours(v).iter().any(|&w| {
            if seen[w] {
                return false;
            }
            let m2 = m ^ mask(colours[w]);
            if m2 == 0 {
                return true;
            }
            seen[w] = true;
            let found = dfs(g, colours, w, m2, seen);
            seen[w] = false;
            found
        })
    }
    (0..g.n()).any(|s| {
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        dfs(g, colours, s, mask(colours[s]), &mut seen)
    })
}

/// Smallest k admitting a parity colouring, by trying every colour assignment.
fn exhaustive_chi(g: &Graph) -> usize {
    let n = g.n();
    for k in 1..=n {
        let mut colours = vec![1; n];
        loop {
            if !graph_has_parity_path(g, &colours) {
                return k;
            }
            let mut i = 0;
            while i < n && colours[i] == k {
                colours[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            colours[i] += 1;
        }
    }
    n
}

fn floor_log2(n: usize) -> usize {
    let mut r = 0;
    while (2usize << r) <= n {
        r += 1;
    }
    r
}

fn ceil_log2(n: usize) -> usize {
    let mut r = 0;
    while (1usize << r) < n {
        r += 1;
    }
    r
}

/// Largest `j` with a compatible subdivision of `B_j` in the subtree of `v`.
fn complete_depth(t: &RootedBinaryTree, v: usize) -> usize {
    let kids: Vec<usize> = t.children(v).iter().map(|&c| complete_depth(t, c)).collect();
    let mut best = kids.iter().copied().max().unwrap_or(0).max(1);
    if kids.len() == 2 {
        best = best.max(1 + kids[0].min(kids[1]));
    }
    best
}

fn layers(t: &RootedBinaryTree, v: usize) -> usize {
    1 + t.children(v).iter().map(|&c| layers(t, c)).max().unwrap_or(0)
}

/// `(size, complete depth)` of every positional binary tree with at most `l` layers.
fn all_trees(l: usize) -> Vec<(usize, usize)> {
    let mut level = vec![(0usize, 0usize)];
    for _ in 0..l {
        let mut next = vec![(0, 0)];
        for &(sa, da) in &level {
            for &(sb, db) in &level {
                let depth = match (sa > 0, sb > 0) {
                    (true, true) => da.max(db).max(1 + da.min(db)),
                    _ => da.max(db).max(1),
                };
                next.push((1 + sa + sb, depth));
            }
        }
        level = next;
    }
    level
}

fn binom(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn closed_form(l: usize, d: usize) -> u128 {
    (0..=d).map(|i| ((1u128 << i) - 1) * binom(l - i - 1, l - d - 1)).sum::<u128>() + binom(l, d) - 1
}

fn has_ham_path(g: &Graph) -> bool {
    let mut order: Vec<usize> = (0..g.n()).collect();
    fn permute(g: &Graph, order: &mut Vec<usize>, i: usize) -> bool {
        if i == order.len() {
            return order.windows(2).all(|w| g.has_edge(w[0], w[1]));
        }
        for j in i..order.len() {
            order.swap(i, j);
            let prefix_ok = i == 0 || g.has_edge(order[i - 1], order[i]);
            if prefix_ok && permute(g, order, i + 1) {
                return true;
            }
            order.swap(i, j);
        }
        false
    }
    permute(g, &mut order, 0)
}

// ---- criteria ----

fn exact_values() -> Check {
    let started = Instant::now();
    for n in 1..=12 {
        let got = chi(&make_path(n).unwrap());
        ensure(got == Some(floor_log2(n) + 1), || format!("P{n}: {got:?}"))?;
    }
    for n in 3..=10 {
        let got = chi(&make_cycle(n).unwrap());
        ensure(got == Some(ceil_log2(n) + 1), || format!("C{n}: {got:?}"))?;
    }
    let b4 = chi(&make_complete_binary_tree(4).unwrap().to_graph());
    let t33 = chi(&make_t33());
    ensure(b4 == Some(3) && t33 == Some(4), || format!("B4 {b4:?}, T33 {t33:?}"))?;
    within(started, Duration::from_secs(300), "exact values")?;
    Ok("P1..P12, C3..C10, B4 = 3, T33 = 4".into())
}

fn constructions() -> Check {
    let started = Instant::now();
    for n in 1..=256 {
        let c = colour_path(n).map_err(|e| e.to_string())?.colouring;
        let cs = c.colours();
        let mut prefix = vec![0u64];
        for &x in cs {
            prefix.push(prefix.last().unwrap() ^ mask(x));
        }
        let bad = (0..n).any(|i| (i + 1..=n).any(|j| prefix[j] == prefix[i]));
        ensure(!bad && c.colours_used() == floor_log2(n) + 1, || format!("path {n}"))?;
    }
    for n in 3..=64 {
        let c = colour_cycle(n).map_err(|e| e.to_string())?.colouring;
        let cs = c.colours();
        // every arc of the cycle: start i, length 1..n
        let bad = (0..n).any(|i| {
            let mut m = 0u64;
            (0..n).any(|len| {
                m ^= mask(cs[(i + len) % n]);
                m == 0
            })
        });
        ensure(!bad && c.colours_used() == ceil_log2(n) + 1, || format!("cycle {n}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n = rng.gen_range(1..=200);
        let t = random_tree(n, &mut rng).unwrap();
        let c = colour_tree_centroid(&t).map_err(|e| e.to_string())?.colouring;
        let ok = !tree_has_parity_path(&t, c.colours()) && c.colours_used() <= floor_log2(n) + 1;
        ensure(ok, || format!("centroid colouring of a tree with {n} vertices"))?;
    }
    within(started, Duration::from_secs(120), "constructions")?;
    Ok("paths n <= 256, cycles n <= 64, 200 random trees n <= 200".into())
}

fn minor_non_monotonicity() -> Check {
    let b4 = make_complete_binary_tree(4).unwrap();
    let root = b4.root();
    let minor = b4.to_graph().contract_edge(root, b4.children(root)[0]).unwrap();
    // T33: two copies of B3 whose roots are joined by an edge
    let is_b3_from = |root: usize, other: usize| {
        let kids: Vec<usize> = minor.neighbours(root).iter().copied().filter(|&w| w != other).collect();
        kids.len() == 2
            && kids.iter().all(|&k| {
                let grand: Vec<usize> = minor.neighbours(k).iter().copied().filter(|&w| w != root).collect();
                grand.len() == 2 && grand.iter().all(|&x| minor.degree(x) == 1)
            })
    };
    let is_t33 = minor.n() == 14
        && minor.is_tree()
        && minor.edges().into_iter().any(|(u, v)| is_b3_from(u, v) && is_b3_from(v, u));
    ensure(is_t33, || "contracted graph is not T33".into())?;
    let (big, small) = (exhaustive_chi(&b4.to_graph()), exhaustive_chi(&minor));
    ensure(big == 3 && small == 4, || format!("exhaustive chi: B4 {big}, minor {small}"))?;
    ensure(chi(&minor) == Some(4) && chi(&b4.to_graph()) == Some(3), || "solver disagrees".into())?;
    Ok("chi(T33) = 4 > 3 = chi(B4), T33 = B4 / root edge".into())
}

fn local_g(tree: &RootedBinaryTree, c: &Colouring) -> Vec<Vec<usize>> {
    let k = c.k();
    let mut g = vec![vec![0usize; k + 1]; tree.len()];
    for v in tree.postorder() {
        let kids = tree.children(v);
        let row: Vec<usize> = (0..=k)
            .map(|col| {
                let below = kids.iter().map(|&s| g[s][col]).max().unwrap_or(0);
                if col > 0 && c.colour(v) == col {
                    below.max(1 + kids.iter().map(|&s| g[s][col]).sum::<usize>())
                } else {
                    below
                }
            })
            .collect();
        g[v] = row;
    }
    g
}

fn check_saff_instance(sub: &RootedBinaryTree, c: &Colouring, d: usize) -> Result<(), String> {
    let host = sub.to_graph();
    ensure(!tree_has_parity_path(&host, c.colours()), || "colouring is not a parity colouring".into())?;
    let cert = lower_bound_certificate(sub, c).map_err(|e| e.to_string())?;
    let saff: &Safflower = &cert.safflower;
    ensure(safflower_violations(sub, c, saff).map_err(|e| e.to_string())?.is_empty(), || {
        "safflower violations".into()
    })?;

    // root vectors from stem[0], recomputed here
    let mut acc = vec![None; host.n()];
    acc[saff.stem[0]] = Some(mask(c.colour(saff.stem[0])));
    let mut queue = VecDeque::from([saff.stem[0]]);
    while let Some(v) = queue.pop_front() {
        for &w in host.neighbours(v) {
            if acc[w].is_none() {
                acc[w] = Some(acc[v].unwrap() ^ mask(c.colour(w)));
                queue.push_back(w);
            }
        }
    }
    let nice: Vec<usize> = saff.trees.iter().flat_map(|t| t.nice_vertices.iter().copied()).collect();
    let vectors: HashSet<u64> = nice.iter().map(|&v| acc[v].unwrap()).collect();
    ensure(vectors.len() == nice.len() && !vectors.contains(&0), || "root vectors not distinct and nonzero".into())?;
    let num = nice.len() as u128;
    ensure(num < (1u128 << c.k()), || format!("Num = {num} exceeds 2^k - 1"))?;

    let mut a = vec![0usize; c.k()];
    for &v in saff.stem.iter().filter(|&&v| sub.is_main(v)) {
        a[c.colour(v) - 1] += 1;
    }
    ensure(a == cert.a && a.iter().sum::<usize>() == d, || format!("stem colour counts {a:?}"))?;
    let guaranteed: u128 = a.iter().map(|&x| (1u128 << x) - 1).sum();
    ensure(num >= guaranteed, || format!("Num = {num} < {guaranteed}"))?;

    let g = local_g(sub, c);
    for v in 0..sub.len() {
        let kids = sub.children(v);
        if kids.len() == 2 {
            let col = c.colour(v);
            ensure(g[v][col] == g[kids[0]][col] + g[kids[1]][col] + 1, || format!("identity fails at {v}"))?;
        }
    }
    for t in &saff.trees {
        let v = t.root;
        if sub.is_main(v) {
            let need = g[v][c.colour(v)] + 1;
            ensure(2 * t.nice_vertices.len() >= need, || format!("original tree at {v} too small"))?;
        }
    }
    let table = nice_subtree_table(sub, c).map_err(|e| e.to_string())?;
    ensure(table.identity_violations(sub, c).is_empty(), || "table identity".into())?;
    ensure(original_tree_violations(sub, c, saff, &table).is_empty(), || "original trees".into())?;
    ensure(stem_doubling_violations(sub, c, saff, &table).is_empty(), || "stem doubling".into())?;
    ensure(stem_vertex_violations(sub, c, saff).map_err(|e| e.to_string())?.is_empty(), || "stem vertices".into())?;
    Ok(())
}

fn safflower_suite() -> Check {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut instances = 0;
    for d in 1..=5 {
        let b = make_complete_binary_tree(d).unwrap();
        for i in 0..110u64 {
            let sub = subdivide_random(&b, 4, 1_000 * d as u64 + i).unwrap();
            let g = sub.to_graph();
            let centroid = colour_tree_centroid(&g).map_err(|e| e.to_string())?.colouring;
            let mut perm: Vec<usize> = (1..=centroid.k()).collect();
            perm.shuffle(&mut rng);
            let mut colourings = vec![centroid.permute_colours(&perm).unwrap(), centroid];
            if d <= 4 {
                colourings.push(chromatic_number(&g, Some(Duration::from_secs(30))).unwrap().witness().clone());
            }
            for c in colourings {
                instances += 1;
                check_saff_instance(&sub, &c, d).map_err(|e| format!("d = {d}, seed {i}: {e}"))?;
            }
        }
    }
    ensure(instances >= 1000, || format!("only {instances} instances"))?;
    within(started, Duration::from_secs(300), "safflower suite")?;
    Ok(format!("{instances} coloured subdivisions of B1..B5, zero violations"))
}

fn partition_inequality() -> Check {
    fn go(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in (0..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut checked = 0;
    for n in 1..=12usize {
        for k in 1..=12usize {
            let mut all = Vec::new();
            go(n, n, k, &mut Vec::new(), &mut all);
            for a in all {
                let lhs: u64 = a.iter().map(|&x| (1u64 << x) - 1).sum();
                let premise = lhs < (1u64 << k);
                let s = (n as f64).sqrt();
                let local = !premise || k as f64 >= s.max(s + (n as f64).log2() / 4.0 - 0.5);
                let parts: Vec<usize> = a.iter().copied().filter(|&x| x > 0).collect();
                let lib = partition_implication_holds(n, k, &parts).map_err(|e| e.to_string())?;
                ensure(local && lib, || format!("n = {n}, k = {k}, a = {a:?}: local {local}, library {lib}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, k, a) triples, zero violations"))
}

fn extremal_suite() -> Check {
    for l in 1..=20 {
        for d in 0..l {
            let rec = extremal_count(l, d).map_err(|e| e.to_string())?;
            let closed = extremal_count_closed(l, d).map_err(|e| e.to_string())?;
            ensure(rec == closed && rec == closed_form(l, d), || format!("A({l}, {d}) = {rec}, closed {closed}"))?;
        }
        for d in 0..=l {
            let a = extremal_count(l, d).map_err(|e| e.to_string())?;
            ensure(a <= (l as u128).pow(d as u32), || format!("A({l}, {d}) = {a} > l^d"))?;
        }
    }
    let started = Instant::now();
    let trees5 = all_trees(5);
    ensure(trees5.len() == 458_330, || format!("{} trees with at most 5 layers", trees5.len()))?;
    let mut pairs: Vec<(usize, usize)> = (0..=4).flat_map(|l| (0..=l).map(move |d| (l, d))).collect();
    pairs.extend([(5, 1), (5, 2)]);
    for (l, d) in pairs {
        let local = all_trees(l).iter().filter(|t| t.1 <= d).map(|t| t.0).max().unwrap_or(0) as u128;
        let rec = extremal_count(l, d).map_err(|e| e.to_string())?;
        let lib = brute_force_extremal(l, d, true).map_err(|e| e.to_string())? as u128;
        ensure(rec == local && lib == local, || {
            format!("A({l}, {d}): recursion {rec}, enumeration {local}, library {lib}")
        })?;
    }
    within(started, Duration::from_secs(600), "brute force")?;
    for l in 1..=12 {
        for d in 0..=l {
            let want = extremal_count(l, d).map_err(|e| e.to_string())?;
            let t = extremal_tree(l, d).map_err(|e| e.to_string())?;
            let (size, depth, lay) =
                t.map_or((0, 0, 0), |t| (t.len(), complete_depth(&t, t.root()), layers(&t, t.root())));
            ensure(size as u128 == want && depth <= d && lay <= l, || format!("extremal tree ({l}, {d})"))?;
        }
    }
    Ok("closed form l <= 20, brute force l <= 4 and (5, 1), (5, 2), explicit trees l <= 12".into())
}

fn reduction_suite() -> Check {
    let counts = [1, 2, 6, 21];
    for n in 2..=5 {
        let graphs = connected_graphs_up_to_iso(n).map_err(|e| e.to_string())?;
        ensure(graphs.len() == counts[n - 2], || format!("{} connected graphs on {n} vertices", graphs.len()))?;
        for g in graphs {
            let r = check_reduction_equivalence(&g, None, None).map_err(|e| e.to_string())?;
            let ham = has_ham_path(&g);
            ensure(r.outcome == Consistency::Consistent && r.hamiltonian_path.is_some() == ham, || {
                format!("{:?}: {:?}, local Hamiltonian path {ham}", g.edges(), r.outcome)
            })?;
            if n <= 4 {
                let inst = build_hampath_gadget(&g).unwrap();
                let invalid = graph_has_parity_path(&inst.host, inst.colouring.colours());
                ensure(invalid == ham, || format!("{:?}: local gadget check disagrees", g.edges()))?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut concluded = 0;
    for _ in 0..25 {
        let g = random_connected_graph(6, 0.3, &mut rng).unwrap();
        let r = check_reduction_equivalence(&g, None, Some(Duration::from_secs(60))).map_err(|e| e.to_string())?;
        ensure(r.outcome != Consistency::Inconsistent, || format!("inconsistent on {:?}", g.edges()))?;
        if r.outcome == Consistency::Consistent {
            ensure(r.hamiltonian_path.is_some() == has_ham_path(&g), || "Hamiltonian oracle disagrees".into())?;
            concluded += 1;
        }
    }
    ensure(concluded >= 20, || format!("{concluded} of 25 six-vertex instances concluded"))?;
    for n in 2..=8 {
        for _ in 0..5 {
            let g = random_connected_graph(n, 0.4, &mut rng).unwrap();
            let inst = build_hampath_gadget(&g).unwrap();
            inst.check_invariants().map_err(|e| e.to_string())?;
            let mut uses = vec![0; inst.colouring.k() + 1];
            inst.colouring.colours().iter().for_each(|&c| uses[c] += 1);
            let ok = inst.host.n() == n * n + n
                && inst.colouring.k() == n * n - 1
                && uses[1..].iter().all(|&u| u == 0 || u == 2)
                && inst.host.num_edges() == 2 * g.num_edges() + n * n;
            ensure(ok, || format!("gadget invariants for n = {n}"))?;
        }
    }
    Ok(format!("all 30 connected graphs on 2..5 vertices, {concluded}/25 six-vertex instances concluded"))
}

fn bound_consistency() -> Check {
    let mut solved = 0;
    for d in 1..=4 {
        let b = make_complete_binary_tree(d).unwrap();
        let s = (d as f64).sqrt();
        let need = s.max(s + (d as f64).log2() / 4.0 - 0.5).ceil() as usize;
        ensure(depth_lower_bound(d).unwrap().ceil() as usize == need, || format!("bound for d = {d}"))?;
        for i in 0..30 {
            let sub = subdivide_random(&b, 4, 77 + 100 * d as u64 + i).unwrap();
            if let Some(x) = chromatic_number(&sub.to_graph(), Some(Duration::from_secs(30))).unwrap().chi() {
                solved += 1;
                ensure(x >= need, || format!("d = {d}: chi {x} < {need}"))?;
            }
        }
    }
    let max_deg3 = [1, 1, 1, 2, 2, 4, 6, 11, 18, 37, 66, 135];
    let mut trees = 0;
    for n in 1..=12 {
        let bin: Vec<Graph> = free_trees(n).into_iter().filter(|g| g.max_degree() <= 3).collect();
        ensure(bin.len() == max_deg3[n - 1], || format!("{} binary trees on {n} vertices", bin.len()))?;
        // smallest b with 2^(b^3) > n
        let need = (1..).find(|&b: &u32| b.pow(3) >= 64 || (1u64 << b.pow(3)) > n as u64).unwrap() as usize;
        for g in bin {
            trees += 1;
            let x = chi(&g).unwrap();
            ensure(x >= need, || format!("n = {n}: chi {x} < {need}"))?;
        }
    }
    Ok(format!("{solved} subdivisions solved, {trees} binary trees, zero violations"))
}

fn count_nodes(f: &Formula, in_partition: bool, excl: &mut usize, odd: &mut usize) {
    let mut inside = in_partition;
    match f {
        Formula::Labelled { label, .. } => {
            if label == "Oddtimes" {
                *odd += 1;
            }
            inside |= label == "Partition";
        }
        Formula::Or(fs)
            if in_partition
                && fs.len() == 2
                && fs.iter().all(|g| matches!(g, Formula::Not(h) if matches!(**h, Formula::In(..)))) =>
        {
            *excl += 1;
        }
        _ => {}
    }
    let children: Vec<&Formula> = match f {
        Formula::And(fs) | Formula::Or(fs) => fs.iter().collect(),
        Formula::Not(g) => vec![g],
        Formula::Implies(a, b) => vec![a, b],
        Formula::Quant { body, .. } | Formula::Labelled { body, .. } => vec![body],
        _ => vec![],
    };
    for g in children {
        count_nodes(g, inside, excl, odd);
    }
}

fn mso_suite() -> Check {
    for k in 1..=10 {
        let s = emit_parity_colourable(k).map_err(|e| e.to_string())?;
        let (mut excl, mut odd) = (0, 0);
        count_nodes(&s.formula, false, &mut excl, &mut odd);
        ensure(excl == k * (k - 1) / 2 && odd == k, || format!("k = {k}: {excl} exclusions, {odd} Oddtimes"))?;
        let report = structural_check(&s);
        ensure(report.passes(), || format!("k = {k}: {:?}", report.diagnostics))?;
        let sexpr = parse_sexpr(&render_sexpr(&s.formula)).map_err(|e| e.to_string())?;
        let text = parse_text(&render_text(&s.formula)).map_err(|e| e.to_string())?;
        ensure(sexpr == s.formula && text == s.formula, || format!("k = {k}: round trip"))?;
    }
    Ok("k = 1..10: counts and both round trips exact".into())
}

fn oracle_equivalence() -> Check {
    let tree_counts = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    let mut graphs = Vec::new();
    for n in 1..=10 {
        let trees = free_trees(n);
        ensure(trees.len() == tree_counts[n - 1], || format!("{} trees on {n} vertices", trees.len()))?;
        graphs.extend(trees);
        graphs.push(make_path(n).unwrap());
        if n >= 3 {
            graphs.push(make_cycle(n).unwrap());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.7);
        graphs.push(random_connected_graph(n, p, &mut rng).unwrap());
    }
    for g in &graphs {
        let fast = chi(g);
        let slow = brute_force_chromatic(g, g.n()).map_err(|e| e.to_string())?.map(|r| r.chi);
        ensure(fast == slow, || format!("{:?}: solver {fast:?}, oracle {slow:?}", g.edges()))?;
    }
    Ok(format!("{} graphs agree", graphs.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("exact values", exact_values),
        ("constructions", constructions),
        ("minor non-monotonicity", minor_non_monotonicity),
        ("safflower certificates", safflower_suite),
        ("partition inequality", partition_inequality),
        ("extremal trees", extremal_suite),
        ("reduction gadget", reduction_suite),
        ("lower-bound consistency", bound_consistency),
        ("MSO emitter", mso_suite),
        ("oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = run();
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
