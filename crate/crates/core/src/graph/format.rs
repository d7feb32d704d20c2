//! Line-oriented text format for graphs and rooted trees.
//!
//! ```text
//! p edge <n> <m>
//! e <u> <v>          m lines, 1-indexed, u < v, ascending
//! r <root>           rooted trees only
//! t <child> <parent> one per non-root vertex, ascending by child
//! m <v>              main vertices of a subdivision, ascending
//! ```
//!
//! Blank lines and lines starting with `c` are ignored when reading. Child order
//! of a rooted tree is ascending by id after a round trip.

use std::fmt::Write as _;

use super::{Graph, RootedBinaryTree};
use crate::error::{Error, Result};

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.num_edges());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn rooted_tree_to_text(t: &RootedBinaryTree) -> String {
    let mut out = graph_to_text(&t.to_graph());
    writeln!(out, "r {}", t.root() + 1).unwrap();
    for v in 0..t.len() {
        if let Some(p) = t.parent(v) {
            writeln!(out, "t {} {}", v + 1, p + 1).unwrap();
        }
    }
    if let Some(marks) = t.main_marks() {
        for v in (0..t.len()).filter(|&v| marks[v]) {
            writeln!(out, "m {}", v + 1).unwrap();
        }
    }
    out
}

struct Parsed {
    graph: Graph,
    root: Option<usize>,
    parents: Vec<(usize, usize)>,
    main: Vec<usize>,
}

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn parse(text: &str) -> Result<Parsed> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut root = None;
    let mut parents = Vec::new();
    let mut main = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut it = line.split_whitespace();
        let tag = it.next().unwrap_or_default();
        let rest: Vec<&str> = it.collect();
        if tag == "p" {
            if header.is_some() {
                return perr(lineno, "duplicate header");
            }
            if rest.len() != 3 || rest[0] != "edge" {
                return perr(lineno, "expected `p edge <n> <m>`");
            }
            let n = rest[1].parse().or_else(|_| perr(lineno, "bad vertex count"))?;
            let m = rest[2].parse().or_else(|_| perr(lineno, "bad edge count"))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return perr(lineno, "data before `p edge` header");
        };
        let ids: Vec<usize> = rest
            .iter()
            .map(|s| match s.parse::<usize>() {
                Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                _ => perr(lineno, format!("bad vertex id `{s}`")),
            })
            .collect::<Result<_>>()?;
        match (tag, ids.as_slice()) {
            ("e", &[u, v]) => edges.push((u, v)),
            ("r", &[r]) => {
                if root.replace(r).is_some() {
                    return perr(lineno, "duplicate root line");
                }
            }
            ("t", &[c, p]) => parents.push((c, p)),
            ("m", &[v]) => main.push(v),
            _ => return perr(lineno, format!("unrecognised line `{line}`")),
        }
    }
    let Some((n, m)) = header else {
        return perr(0, "missing `p edge` header");
    };
    if edges.len() != m {
        return perr(0, format!("header announces {m} edges, found {}", edges.len()));
    }
    let graph = Graph::new(n, &edges).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    Ok(Parsed { graph, root, parents, main })
}

pub fn graph_from_text(text: &str) -> Result<Graph> {
    Ok(parse(text)?.graph)
}

pub fn rooted_tree_from_text(text: &str) -> Result<RootedBinaryTree> {
    let Parsed { graph, root, mut parents, main } = parse(text)?;
    let Some(root) = root else {
        return perr(0, "missing `r <root>` line");
    };
    let n = graph.n();
    parents.sort_unstable();
    let mut children = vec![Vec::new(); n];
    for &(c, p) in &parents {
        if !graph.has_edge(c, p) {
            return perr(0, format!("t line ({}, {}) is not an edge", c + 1, p + 1));
        }
        children[p].push(c);
    }
    if parents.len() + 1 != n || parents.len() != graph.num_edges() {
        return perr(0, "every non-root vertex needs exactly one `t` line");
    }
    let tree =
        RootedBinaryTree::from_children(root, children).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    if main.is_empty() {
        return Ok(tree);
    }
    let mut marks = vec![false; n];
    for v in main {
        marks[v] = true;
    }
    tree.with_main_marks(marks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete_binary_tree, make_cycle, subdivide_random};

    #[test]
    fn graph_text_is_exact() {
        let g = make_cycle(3).unwrap();
        assert_eq!(graph_to_text(&g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn rooted_tree_text_is_exact() {
        let b2 = make_complete_binary_tree(2).unwrap();
        assert_eq!(rooted_tree_to_text(&b2), "p edge 3 2\ne 1 2\ne 1 3\nr 1\nt 2 1\nt 3 1\n");
    }

    #[test]
    fn subdivision_survives_round_trip() {
        let t = subdivide_random(&make_complete_binary_tree(3).unwrap(), 3, 2).unwrap();
        let back = rooted_tree_from_text(&rooted_tree_to_text(&t)).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(graph_from_text("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(graph_from_text("p edge 2 1\ne 1 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(graph_from_text("p edge 2 2\ne 1 2\n").is_err());
        assert!(graph_from_text("p edge 2 1\ne 1 1\n").is_err());
        assert!(rooted_tree_from_text("p edge 2 1\ne 1 2\n").is_err());
        assert!(graph_from_text("c comment\np edge 2 1\n\ne 1 2\n").is_ok());
    }
}
