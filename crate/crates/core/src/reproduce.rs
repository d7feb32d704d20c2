//! End-to-end experiment suites: exact values, constructions, minor non-monotonicity,
//! safflower certificates, the partition inequality, the extremal calculus, the
//! Hamiltonian-path gadget, lower-bound consistency, the MSO emitter and the solver
//! oracle. Each suite reports its checks and every failure; reports render as Markdown
//! and JSON with timings kept apart from results.

use std::fmt::Write;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::constructions::{colour_cycle, colour_path, colour_tree_centroid};
use crate::error::Result;
use crate::extremal::{
    binary_tree_lower_bound, brute_force_extremal, extremal_count, extremal_count_closed, extremal_tree,
    max_complete_subdivision,
};
use crate::graph::{
    connected_graphs_up_to_iso, free_trees, make_complete_binary_tree, make_cycle, make_path, make_t33,
    random_connected_graph, random_tree, subdivide_random, tree_code, Graph, RootedBinaryTree,
};
use crate::mso::{emit_parity_colourable, parse_sexpr, parse_text, render_sexpr, render_text, structural_check};
use crate::parity::{is_parity_vertex_colouring, Colouring};
use crate::reduction::{build_hampath_gadget, check_reduction_equivalence, Consistency};
use crate::safflower::{
    depth_lower_bound, lower_bound_certificate, nice_subtree_table, original_tree_violations,
    partition_implication_counterexamples, safflower_violations, stem_doubling_violations, stem_vertex_violations,
};
use crate::solver::{brute_force_chromatic, chromatic_number};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Reduced sample sizes; finishes in seconds.
    Quick,
    /// The sizes of the acceptance suite.
    Full,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Reproduction {
    pub mode: Mode,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    /// Results only; identical for identical mode and seed.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "mode": if self.mode == Mode::Quick { "quick" } else { "full" },
            "seed": self.seed,
            "passed": self.passed(),
            "suites": self.suites.iter().map(|s| json!({
                "name": s.name,
                "passed": s.passed(),
                "checks": s.checks,
                "failures": s.failures,
                "notes": s.notes,
            })).collect::<Vec<_>>(),
        })
    }

    /// Wall-clock seconds per suite, kept out of [`Reproduction::to_json`].
    pub fn timings_json(&self) -> serde_json::Value {
        json!(self
            .suites
            .iter()
            .map(|s| json!({"name": s.name, "seconds": s.elapsed.as_secs_f64()}))
            .collect::<Vec<_>>())
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Reproduction report\n\n");
        let mode = if self.mode == Mode::Quick { "quick" } else { "full" };
        writeln!(out, "Mode: {mode}, seed: {}\n", self.seed).expect("string write");
        out.push_str("| suite | result | checks | time (s) |\n|---|---|---|---|\n");
        for s in &self.suites {
            let result = if s.passed() { "pass" } else { "FAIL" };
            writeln!(out, "| {} | {result} | {} | {:.2} |", s.name, s.checks, s.elapsed.as_secs_f64())
                .expect("string write");
        }
        for s in &self.suites {
            if s.notes.is_empty() && s.failures.is_empty() {
                continue;
            }
            writeln!(out, "\n## {}\n", s.name).expect("string write");
            for n in &s.notes {
                writeln!(out, "- {n}").expect("string write");
            }
            for f in &s.failures {
                writeln!(out, "- FAILURE: {f}").expect("string write");
            }
        }
        out
    }
}

struct Suite {
    report: SuiteReport,
    started: Instant,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            report: SuiteReport { name, checks: 0, failures: Vec::new(), notes: Vec::new(), elapsed: Duration::ZERO },
            started: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !ok {
            self.report.failures.push(what());
        }
    }

    fn note(&mut self, s: String) {
        self.report.notes.push(s);
    }

    fn finish(mut self) -> SuiteReport {
        self.report.elapsed = self.started.elapsed();
        self.report
    }
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

/// Runs every suite in a fixed order.
pub fn reproduce(mode: Mode, seed: u64) -> Result<Reproduction> {
    let suites = vec![
        exact_values()?,
        constructions(mode, seed)?,
        minor_non_monotonicity()?,
        safflower_sweep(mode, seed)?,
        partition_inequality()?,
        extremal(mode)?,
        reduction(mode, seed)?,
        bound_consistency(mode, seed)?,
        mso()?,
        oracle_equivalence(mode, seed)?,
    ];
    Ok(Reproduction { mode, seed, suites })
}

fn solve(g: &Graph) -> Result<Option<usize>> {
    Ok(chromatic_number(g, None)?.chi())
}

pub fn exact_values() -> Result<SuiteReport> {
    let mut s = Suite::new("exact values");
    for n in 1..=12 {
        let chi = solve(&make_path(n)?)?;
        s.check(chi == Some(floor_log2(n) + 1), || format!("P{n}: got {chi:?}"));
    }
    for n in 3..=10 {
        let chi = solve(&make_cycle(n)?)?;
        s.check(chi == Some(ceil_log2(n) + 1), || format!("C{n}: got {chi:?}"));
    }
    let b4 = solve(&make_complete_binary_tree(4)?.to_graph())?;
    s.check(b4 == Some(3), || format!("B4: got {b4:?}"));
    let t33 = solve(&make_t33())?;
    s.check(t33 == Some(4), || format!("T33: got {t33:?}"));
    Ok(s.finish())
}

pub fn constructions(mode: Mode, seed: u64) -> Result<SuiteReport> {
    let mut s = Suite::new("constructions");
    let (path_max, cycle_max, trees, tree_max) = match mode {
        Mode::Quick => (64, 32, 20, 60),
        Mode::Full => (256, 64, 200, 200),
    };
    for n in 1..=path_max {
        let c = colour_path(n)?;
        let valid = is_parity_vertex_colouring(&make_path(n)?, &c.colouring)?.is_valid();
        s.check(valid && c.colouring.colours_used() == floor_log2(n) + 1, || format!("path colouring of P{n}"));
    }
    for n in 3..=cycle_max {
        let c = colour_cycle(n)?;
        let valid = is_parity_vertex_colouring(&make_cycle(n)?, &c.colouring)?.is_valid();
        s.check(valid && c.colouring.colours_used() == ceil_log2(n) + 1, || format!("cycle colouring of C{n}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trees {
        let n = rng.gen_range(1..=tree_max);
        let t = random_tree(n, &mut rng)?;
        let c = colour_tree_centroid(&t)?;
        let valid = is_parity_vertex_colouring(&t, &c.colouring)?.is_valid();
        s.check(valid && c.colouring.colours_used() <= floor_log2(n) + 1, || format!("centroid colouring, n = {n}"));
    }
    Ok(s.finish())
}

pub fn minor_non_monotonicity() -> Result<SuiteReport> {
    let mut s = Suite::new("minor non-monotonicity");
    let b4 = make_complete_binary_tree(4)?.to_graph();
    let contracted = b4.contract_edge(0, 1)?;
    s.check(tree_code(&contracted)? == tree_code(&make_t33())?, || {
        "contracting a root edge of B4 does not give T33".into()
    });
    let (big, small) = (solve(&b4)?, solve(&contracted)?);
    s.check(big == Some(3) && small == Some(4), || format!("chi(B4) = {big:?}, chi(T33) = {small:?}"));
    s.note(format!("chi(T33) = {small:?} > chi(B4) = {big:?}, although T33 is a minor of B4"));
    Ok(s.finish())
}

fn permuted(c: &Colouring, rng: &mut ChaCha8Rng) -> Result<Colouring> {
    let mut perm: Vec<usize> = (1..=c.k()).collect();
    perm.shuffle(rng);
    c.permute_colours(&perm)
}

/// Subdivisions of `B_d` with colourings from the centroid construction (as built and with
/// permuted colours) and from solver witnesses.
pub fn safflower_sweep(mode: Mode, seed: u64) -> Result<SuiteReport> {
    let mut s = Suite::new("safflower certificates");
    let per_depth = if mode == Mode::Quick { 12 } else { 110 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5aff);
    let mut instances = 0;
    for d in 1..=5 {
        let b = make_complete_binary_tree(d)?;
        for i in 0..per_depth {
            let sub = subdivide_random(&b, 4, seed.wrapping_mul(1000).wrapping_add((d * 10_000 + i) as u64))?;
            let g = sub.to_graph();
            let centroid = colour_tree_centroid(&g)?.colouring;
            let mut colourings = vec![permuted(&centroid, &mut rng)?, centroid];
            if d <= 4 {
                colourings.push(chromatic_number(&g, Some(Duration::from_secs(10)))?.witness().clone());
            }
            for c in colourings {
                instances += 1;
                check_safflower_instance(&mut s, &sub, &c, d)?;
            }
        }
    }
    s.note(format!("{instances} coloured subdivisions, depths 1 to 5, edge lengths 1 to 4"));
    Ok(s.finish())
}

fn check_safflower_instance(s: &mut Suite, sub: &RootedBinaryTree, c: &Colouring, d: usize) -> Result<()> {
    let table = nice_subtree_table(sub, c)?;
    let identity = table.identity_violations(sub, c);
    s.check(identity.is_empty(), || format!("d = {d}: table identity fails at {identity:?}"));
    match lower_bound_certificate(sub, c) {
        Ok(cert) => {
            let saff = &cert.safflower;
            let v = safflower_violations(sub, c, saff)?;
            s.check(v.is_empty(), || format!("d = {d}: safflower violations {v:?}"));
            let v = stem_vertex_violations(sub, c, saff)?;
            s.check(v.is_empty(), || format!("d = {d}: stem-vertex property fails for {v:?}"));
            let v = original_tree_violations(sub, c, saff, &table);
            s.check(v.is_empty(), || format!("d = {d}: original trees too small at {v:?}"));
            let v = stem_doubling_violations(sub, c, saff, &table);
            s.check(v.is_empty(), || format!("d = {d}: stem doubling fails at {v:?}"));
            s.check(cert.a.iter().sum::<usize>() == d, || format!("d = {d}: a = {:?}", cert.a));
        }
        Err(e) => s.check(false, || format!("d = {d}: certificate failed: {e}")),
    }
    Ok(())
}

pub fn partition_inequality() -> Result<SuiteReport> {
    let mut s = Suite::new("partition inequality");
    let bad = partition_implication_counterexamples(12, 12);
    s.check(bad.is_empty(), || format!("counterexamples: {bad:?}"));
    s.note("all partitions of n <= 12 into at most k <= 12 parts".into());
    Ok(s.finish())
}

pub fn extremal(mode: Mode) -> Result<SuiteReport> {
    let mut s = Suite::new("extremal trees");
    for l in 1..=20 {
        for d in 0..l {
            let (rec, closed) = (extremal_count(l, d)?, extremal_count_closed(l, d)?);
            s.check(rec == closed, || format!("A({l}, {d}): recursion {rec}, closed form {closed}"));
        }
        for d in 0..=l {
            let a = extremal_count(l, d)?;
            s.check(a <= (l as u128).pow(d as u32), || format!("A({l}, {d}) = {a} exceeds l^d"));
        }
    }
    for l in 0..=4 {
        for d in 0..=l {
            let (rec, brute) = (extremal_count(l, d)?, brute_force_extremal(l, d, false)? as u128);
            s.check(rec == brute, || format!("A({l}, {d}): recursion {rec}, brute force {brute}"));
        }
    }
    if mode == Mode::Full {
        for d in [1, 2] {
            let (rec, brute) = (extremal_count(5, d)?, brute_force_extremal(5, d, false)? as u128);
            s.check(rec == brute, || format!("A(5, {d}): recursion {rec}, brute force {brute}"));
        }
    }
    for l in 1..=12 {
        for d in 0..=l {
            let t = extremal_tree(l, d)?;
            let (size, mcs) = t.as_ref().map_or((0, 0), |t| (t.len(), max_complete_subdivision(t)));
            let layers = t.as_ref().map_or(0, |t| t.layers());
            let want = extremal_count(l, d)?;
            s.check(size as u128 == want && mcs <= d && layers <= l, || {
                format!("extremal tree ({l}, {d}): {size} vertices, contains B_{mcs}, {layers} layers")
            });
        }
    }
    Ok(s.finish())
}

pub fn reduction(mode: Mode, seed: u64) -> Result<SuiteReport> {
    let mut s = Suite::new("Hamiltonian path gadget");
    for n in 2..=5 {
        for g in connected_graphs_up_to_iso(n)? {
            let r = check_reduction_equivalence(&g, None, None)?;
            s.check(r.outcome == Consistency::Consistent, || format!("{:?} on {:?}", r.outcome, g.edges()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4a41);
    let randoms = if mode == Mode::Quick { 5 } else { 25 };
    let mut concluded = 0;
    for _ in 0..randoms {
        let g = random_connected_graph(6, 0.3, &mut rng)?;
        let r = check_reduction_equivalence(&g, None, Some(Duration::from_secs(60)))?;
        s.check(r.outcome != Consistency::Inconsistent, || format!("inconsistent on {:?}", g.edges()));
        if r.outcome == Consistency::Consistent {
            concluded += 1;
        }
    }
    s.check(concluded * 5 >= randoms * 4, || format!("only {concluded} of {randoms} six-vertex instances concluded"));
    s.note(format!("{concluded} of {randoms} random six-vertex instances concluded"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1e7);
    for n in 2..=8 {
        for _ in 0..10 {
            let g = random_connected_graph(n, 0.4, &mut rng)?;
            let inv = build_hampath_gadget(&g)?.check_invariants();
            s.check(inv.is_ok(), || format!("n = {n}: {inv:?}"));
        }
    }
    Ok(s.finish())
}

pub fn bound_consistency(mode: Mode, seed: u64) -> Result<SuiteReport> {
    let mut s = Suite::new("lower-bound consistency");
    let per_depth = if mode == Mode::Quick { 5 } else { 30 };
    let mut solved = 0;
    for d in 1..=4 {
        let b = make_complete_binary_tree(d)?;
        let need = depth_lower_bound(d)?.ceil() as usize;
        for i in 0..per_depth {
            let sub = subdivide_random(&b, 4, seed.wrapping_add((d * 1000 + i) as u64))?;
            if let Some(chi) = chromatic_number(&sub.to_graph(), Some(Duration::from_secs(10)))?.chi() {
                solved += 1;
                s.check(chi >= need, || format!("d = {d}: chi {chi} below {need}"));
            }
        }
    }
    s.note(format!("{solved} subdivisions of B_1..B_4 solved exactly"));
    let mut trees = 0;
    for n in 1..=12 {
        for g in free_trees(n).into_iter().filter(|g| g.max_degree() <= 3) {
            trees += 1;
            let chi = solve(&g)?;
            let need = binary_tree_lower_bound(n)?;
            s.check(chi.is_some_and(|c| c >= need), || format!("n = {n}: chi {chi:?} below {need}"));
        }
    }
    s.note(format!("{trees} binary trees with at most 12 vertices"));
    Ok(s.finish())
}

pub fn mso() -> Result<SuiteReport> {
    let mut s = Suite::new("MSO sentence");
    let mut lengths = Vec::new();
    for k in 1..=10 {
        let sentence = emit_parity_colourable(k)?;
        let r = structural_check(&sentence);
        s.check(r.passes(), || format!("k = {k}: {:?}", r.diagnostics));
        s.check(r.exclusion_clauses == k * (k - 1) / 2 && r.oddtimes_disjuncts == k, || format!("k = {k}: counts"));
        let sexpr = render_sexpr(&sentence.formula);
        let text = render_text(&sentence.formula);
        s.check(parse_sexpr(&sexpr)? == sentence.formula, || format!("k = {k}: s-expression round trip"));
        s.check(parse_text(&text)? == sentence.formula, || format!("k = {k}: text round trip"));
        lengths.push(sexpr.len());
    }
    for (i, w) in lengths.windows(3).enumerate() {
        s.check(w[2] + w[0] > 2 * w[1], || format!("serialised length not convex at k = {}", i + 2));
    }
    s.note(format!("s-expression lengths for k = 1..10: {lengths:?}"));
    Ok(s.finish())
}

pub fn oracle_equivalence(mode: Mode, seed: u64) -> Result<SuiteReport> {
    let mut s = Suite::new("solver oracle");
    let n_max = if mode == Mode::Quick { 8 } else { 10 };
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 1..=n_max {
        graphs.extend(free_trees(n));
        if n >= 3 {
            graphs.push(make_cycle(n)?);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0c1e);
    let randoms = if mode == Mode::Quick { 10 } else { 50 };
    for _ in 0..randoms {
        let n = rng.gen_range(1..=8);
        graphs.push(random_connected_graph(n, 0.35, &mut rng)?);
    }
    for g in &graphs {
        let fast = solve(g)?;
        let slow = brute_force_chromatic(g, g.n())?.map(|r| r.chi);
        s.check(fast == slow, || format!("{:?}: solver {fast:?}, oracle {slow:?}", g.edges()));
    }
    s.note(format!("{} graphs (every tree with at most {n_max} vertices, paths, cycles, random graphs)", graphs.len()));
    Ok(s.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for r in [exact_values().unwrap(), minor_non_monotonicity().unwrap(), mso().unwrap()] {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn report_formats() {
        let rep = Reproduction { mode: Mode::Quick, seed: 3, suites: vec![minor_non_monotonicity().unwrap()] };
        assert!(rep.to_markdown().contains("| minor non-monotonicity | pass |"));
        assert_eq!(rep.to_json()["suites"][0]["passed"], true);
        assert!(rep.to_json().get("seconds").is_none());
    }
}
