//! The monadic second-order sentence `ParityColorable_k`, true in a graph exactly when
//! it has a parity vertex colouring with `k` colours:
//!
//! ```text
//! ∃ X1..Xk ⊆ V [ Partition(X1..Xk) ∧ ∀ P ⊆ V [ Path(P) ⇒ (Oddtimes(X1, P) ∨ … ∨ Oddtimes(Xk, P)) ] ]
//! ```
//!
//! Every auxiliary subformula is expanded in place and wrapped in a [`Formula::Labelled`]
//! node so the output stays readable; [`erase_labels`] removes them. Bound variable
//! names are unique across the whole sentence. The sentence is emitted, rendered,
//! parsed and structurally checked, never evaluated.

mod check;
mod render;

pub use check::{free_variables, structural_check, StructuralReport};
pub use render::{parse_sexpr, parse_text, render, render_sexpr, render_text, Syntax};

use std::collections::HashMap;

use crate::error::{invalid_param, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Exists,
    ForAll,
}

/// What a quantifier ranges over: elements of, or subsets of, its domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Binding {
    Element,
    Set,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Domain {
    Vertices,
    Edges,
    /// A bound set variable.
    Var(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Quant {
        quantifier: Quantifier,
        binding: Binding,
        vars: Vec<String>,
        domain: Domain,
        body: Box<Formula>,
    },
    /// `x ∈ X`
    In(String, String),
    /// `a = b`
    Eq(String, String),
    /// Edge `e` is incident with vertex `v`.
    Inc(String, String),
    /// The set has even cardinality.
    Even(String),
    /// A named auxiliary subformula applied to `args`, already expanded into `body`.
    Labelled {
        label: String,
        args: Vec<String>,
        body: Box<Formula>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MsoSentence {
    pub k: usize,
    pub formula: Formula,
}

impl Formula {
    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::And(fs) | Formula::Or(fs) => fs.iter().collect(),
            Formula::Not(f) => vec![f],
            Formula::Implies(a, b) => vec![a, b],
            Formula::Quant { body, .. } | Formula::Labelled { body, .. } => vec![body],
            _ => Vec::new(),
        }
    }
}

/// Replaces every labelled node by its body.
pub fn erase_labels(f: &Formula) -> Formula {
    match f {
        Formula::Labelled { body, .. } => erase_labels(body),
        Formula::And(fs) => Formula::And(fs.iter().map(erase_labels).collect()),
        Formula::Or(fs) => Formula::Or(fs.iter().map(erase_labels).collect()),
        Formula::Not(g) => Formula::Not(Box::new(erase_labels(g))),
        Formula::Implies(a, b) => Formula::Implies(Box::new(erase_labels(a)), Box::new(erase_labels(b))),
        Formula::Quant { quantifier, binding, vars, domain, body } => Formula::Quant {
            quantifier: *quantifier,
            binding: *binding,
            vars: vars.clone(),
            domain: domain.clone(),
            body: Box::new(erase_labels(body)),
        },
        atom => atom.clone(),
    }
}

struct Names(HashMap<&'static str, usize>);

impl Names {
    fn fresh(&mut self, base: &'static str) -> String {
        let n = self.0.entry(base).or_insert(0);
        *n += 1;
        format!("{base}{n}")
    }
}

fn and(fs: Vec<Formula>) -> Formula {
    if fs.len() == 1 {
        fs.into_iter().next().expect("one element")
    } else {
        Formula::And(fs)
    }
}

fn or(fs: Vec<Formula>) -> Formula {
    if fs.len() == 1 {
        fs.into_iter().next().expect("one element")
    } else {
        Formula::Or(fs)
    }
}

fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

fn implies(a: Formula, b: Formula) -> Formula {
    Formula::Implies(Box::new(a), Box::new(b))
}

fn quant(quantifier: Quantifier, binding: Binding, vars: &[&String], domain: Domain, body: Formula) -> Formula {
    Formula::Quant {
        quantifier,
        binding,
        vars: vars.iter().map(|s| s.to_string()).collect(),
        domain,
        body: Box::new(body),
    }
}

fn exists(vars: &[&String], domain: Domain, body: Formula) -> Formula {
    quant(Quantifier::Exists, Binding::Element, vars, domain, body)
}

fn forall(vars: &[&String], domain: Domain, body: Formula) -> Formula {
    quant(Quantifier::ForAll, Binding::Element, vars, domain, body)
}

fn within(x: &str) -> Domain {
    Domain::Var(x.to_string())
}

fn is_in(x: &str, set: &str) -> Formula {
    Formula::In(x.into(), set.into())
}

fn eq(a: &str, b: &str) -> Formula {
    Formula::Eq(a.into(), b.into())
}

fn inc(e: &str, v: &str) -> Formula {
    Formula::Inc(e.into(), v.into())
}

fn label(name: &str, args: &[&str], body: Formula) -> Formula {
    Formula::Labelled { label: name.into(), args: args.iter().map(|s| s.to_string()).collect(), body: Box::new(body) }
}

/// Builds `ParityColorable_k` with every subformula expanded.
pub fn emit_parity_colourable(k: usize) -> Result<MsoSentence> {
    if k == 0 {
        return invalid_param("k must be at least 1");
    }
    let mut names = Names(HashMap::new());
    let xs: Vec<String> = (0..k).map(|_| names.fresh("X")).collect();
    let partition = partition(&mut names, &xs);
    let p = names.fresh("P");
    let path = path(&mut names, &p);
    let odd = or(xs.iter().map(|x| oddtimes(&mut names, x, &p)).collect());
    let every_path = quant(Quantifier::ForAll, Binding::Set, &[&p], Domain::Vertices, implies(path, odd));
    let xs_ref: Vec<&String> = xs.iter().collect();
    let formula = quant(Quantifier::Exists, Binding::Set, &xs_ref, Domain::Vertices, and(vec![partition, every_path]));
    Ok(MsoSentence { k, formula })
}

fn partition(names: &mut Names, xs: &[String]) -> Formula {
    let x = names.fresh("x");
    let mut clauses = vec![or(xs.iter().map(|s| is_in(&x, s)).collect())];
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            clauses.push(Formula::Or(vec![not(is_in(&x, &xs[i])), not(is_in(&x, &xs[j]))]));
        }
    }
    let args: Vec<&str> = xs.iter().map(String::as_str).collect();
    label("Partition", &args, forall(&[&x], Domain::Vertices, and(clauses)))
}

fn path(names: &mut Names, set: &str) -> Formula {
    let f = names.fresh("F");
    let (a, b, y) = (names.fresh("x"), names.fresh("x"), names.fresh("x"));
    let inner = and(vec![
        not(eq(&a, &b)),
        conn(names, set, &f),
        deg1(names, &a, &f),
        deg1(names, &b, &f),
        forall(&[&y], within(set), implies(and(vec![not(eq(&y, &a)), not(eq(&y, &b))]), deg2(names, &y, &f))),
    ]);
    let body = quant(Quantifier::Exists, Binding::Set, &[&f], Domain::Edges, exists(&[&a, &b], within(set), inner));
    label("Path", &[set], body)
}

fn conn(names: &mut Names, set: &str, edges: &str) -> Formula {
    let part = names.fresh("A");
    let (u, v) = (names.fresh("x"), names.fresh("x"));
    let e = names.fresh("e");
    let (u2, v2) = (names.fresh("x"), names.fresh("x"));
    let split =
        and(vec![exists(&[&u], within(set), is_in(&u, &part)), exists(&[&v], within(set), not(is_in(&v, &part)))]);
    let crossing = exists(
        &[&e],
        within(edges),
        exists(
            &[&u2, &v2],
            within(set),
            and(vec![inc(&e, &u2), inc(&e, &v2), is_in(&u2, &part), not(is_in(&v2, &part))]),
        ),
    );
    let body = quant(Quantifier::ForAll, Binding::Set, &[&part], within(set), implies(split, crossing));
    label("Conn", &[set, edges], body)
}

fn deg1(names: &mut Names, x: &str, edges: &str) -> Formula {
    let (e1, e) = (names.fresh("e"), names.fresh("e"));
    let body = exists(
        &[&e1],
        within(edges),
        and(vec![inc(&e1, x), forall(&[&e], within(edges), implies(not(eq(&e, &e1)), not(inc(&e, x))))]),
    );
    label("Deg1", &[x, edges], body)
}

fn deg2(names: &mut Names, x: &str, edges: &str) -> Formula {
    let (e1, e2, e) = (names.fresh("e"), names.fresh("e"), names.fresh("e"));
    let others = forall(&[&e], within(edges), implies(and(vec![not(eq(&e, &e1)), not(eq(&e, &e2))]), not(inc(&e, x))));
    let body = exists(&[&e1, &e2], within(edges), and(vec![inc(&e1, x), inc(&e2, x), not(eq(&e1, &e2)), others]));
    label("Deg2", &[x, edges], body)
}

fn oddtimes(names: &mut Names, set: &str, path: &str) -> Formula {
    let a = names.fresh("A");
    let x = names.fresh("x");
    let agree = forall(
        &[&x],
        within(set),
        and(vec![implies(is_in(&x, &a), is_in(&x, path)), implies(not(is_in(&x, &a)), not(is_in(&x, path)))]),
    );
    let body =
        quant(Quantifier::Exists, Binding::Set, &[&a], within(set), and(vec![not(Formula::Even(a.clone())), agree]));
    label("Oddtimes", &[set, path], body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn top_level_shape() {
        let s = emit_parity_colourable(3).unwrap();
        match &s.formula {
            Formula::Quant {
                quantifier: Quantifier::Exists,
                binding: Binding::Set,
                vars,
                domain: Domain::Vertices,
                ..
            } => {
                assert_eq!(vars, &["X1", "X2", "X3"]);
            }
            other => panic!("unexpected top level {other:?}"),
        }
        assert!(emit_parity_colourable(0).is_err());
    }

    #[test]
    fn erasing_labels_keeps_structure() {
        let s = emit_parity_colourable(2).unwrap();
        let erased = erase_labels(&s.formula);
        let labels = s.formula.size() - erased.size();
        // Partition, Path, Conn, Deg1 x2, Deg2, Oddtimes x2
        assert_eq!(labels, 8);
        assert_eq!(erase_labels(&erased), erased);
    }

    #[test]
    fn size_grows_quadratically() {
        let sizes: Vec<usize> = (1..=10).map(|k| emit_parity_colourable(k).unwrap().formula.size()).collect();
        for w in sizes.windows(3) {
            assert!(w[2] - w[1] > w[1] - w[0]);
        }
    }
}
