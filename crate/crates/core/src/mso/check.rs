use std::collections::{BTreeSet, HashSet};

use super::{Binding, Domain, Formula, MsoSentence, Quantifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sort {
    Vertex,
    Edge,
    VertexSet,
    EdgeSet,
}

impl Sort {
    fn element(self) -> Option<Sort> {
        match self {
            Sort::VertexSet => Some(Sort::Vertex),
            Sort::EdgeSet => Some(Sort::Edge),
            _ => None,
        }
    }

    fn is_set(self) -> bool {
        self.element().is_some()
    }
}

/// Outcome of [`structural_check`]; the sentence passes when `diagnostics` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub diagnostics: Vec<String>,
    pub top_level_set_variables: usize,
    pub exclusion_clauses: usize,
    pub oddtimes_disjuncts: usize,
    pub even_only_in_oddtimes: bool,
    pub size: usize,
}

impl StructuralReport {
    pub fn passes(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

struct Walker {
    scope: Vec<(String, Sort)>,
    bound: HashSet<String>,
    diagnostics: Vec<String>,
    labels: Vec<String>,
    exclusion_clauses: usize,
    oddtimes: usize,
    even_outside: usize,
}

impl Walker {
    fn lookup(&mut self, x: &str) -> Option<Sort> {
        let found = self.scope.iter().rev().find(|(n, _)| n == x).map(|(_, s)| *s);
        if found.is_none() {
            self.diagnostics.push(format!("free variable {x}"));
        }
        found
    }

    fn inside(&self, label: &str) -> bool {
        self.labels.iter().any(|l| l == label)
    }

    fn walk(&mut self, f: &Formula) {
        match f {
            Formula::In(x, s) => {
                if let (Some(xs), Some(ss)) = (self.lookup(x), self.lookup(s)) {
                    if ss.element() != Some(xs) {
                        self.diagnostics.push(format!("sort mismatch in {x} ∈ {s}"));
                    }
                }
            }
            Formula::Eq(a, b) => {
                if let (Some(sa), Some(sb)) = (self.lookup(a), self.lookup(b)) {
                    if sa != sb {
                        self.diagnostics.push(format!("sort mismatch in {a} = {b}"));
                    }
                }
            }
            Formula::Inc(e, v) => {
                if let (Some(se), Some(sv)) = (self.lookup(e), self.lookup(v)) {
                    if se != Sort::Edge || sv != Sort::Vertex {
                        self.diagnostics.push(format!("inc({e}, {v}) needs an edge and a vertex"));
                    }
                }
            }
            Formula::Even(a) => {
                if !self.inside("Oddtimes") {
                    self.even_outside += 1;
                }
                if let Some(s) = self.lookup(a) {
                    if !s.is_set() {
                        self.diagnostics.push(format!("Even({a}) needs a set"));
                    }
                }
            }
            Formula::And(fs) => fs.iter().for_each(|g| self.walk(g)),
            Formula::Or(fs) => {
                let exclusion =
                    fs.len() == 2 && fs.iter().all(|g| matches!(g, Formula::Not(h) if matches!(**h, Formula::In(..))));
                if exclusion && self.inside("Partition") {
                    self.exclusion_clauses += 1;
                }
                fs.iter().for_each(|g| self.walk(g));
            }
            Formula::Not(g) => self.walk(g),
            Formula::Implies(a, b) => {
                self.walk(a);
                self.walk(b);
            }
            Formula::Quant { binding, vars, domain, body, .. } => {
                let set_sort = match domain {
                    Domain::Vertices => Some(Sort::VertexSet),
                    Domain::Edges => Some(Sort::EdgeSet),
                    Domain::Var(x) => match self.lookup(x) {
                        Some(s) if s.is_set() => Some(s),
                        Some(_) => {
                            self.diagnostics.push(format!("quantifier domain {x} is not a set"));
                            None
                        }
                        None => None,
                    },
                };
                let sort = set_sort.map(|s| match binding {
                    Binding::Set => s,
                    Binding::Element => s.element().expect("set sort"),
                });
                if vars.is_empty() {
                    self.diagnostics.push("quantifier binds no variables".into());
                }
                for v in vars {
                    if !self.bound.insert(v.clone()) {
                        self.diagnostics.push(format!("variable {v} bound twice"));
                    }
                    // an unknown sort still binds the name, so its uses are not reported as free
                    self.scope.push((v.clone(), sort.unwrap_or(Sort::Vertex)));
                }
                self.walk(body);
                self.scope.truncate(self.scope.len() - vars.len());
            }
            Formula::Labelled { label, args, body } => {
                if label == "Oddtimes" {
                    self.oddtimes += 1;
                }
                let free = free_variables(body);
                let declared: BTreeSet<String> = args.iter().cloned().collect();
                if free != declared {
                    self.diagnostics.push(format!("{label} declares {declared:?} but its body uses {free:?}"));
                }
                self.labels.push(label.clone());
                self.walk(body);
                self.labels.pop();
            }
        }
    }
}

/// Free variables of a formula (quantifier domains count as uses).
pub fn free_variables(f: &Formula) -> BTreeSet<String> {
    fn go(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut use_var = |x: &String, bound: &Vec<String>| {
            if !bound.contains(x) {
                out.insert(x.clone());
            }
        };
        match f {
            Formula::In(a, b) | Formula::Eq(a, b) | Formula::Inc(a, b) => {
                use_var(a, bound);
                use_var(b, bound);
            }
            Formula::Even(a) => use_var(a, bound),
            Formula::Quant { vars, domain, body, .. } => {
                if let Domain::Var(x) = domain {
                    use_var(x, bound);
                }
                bound.extend(vars.iter().cloned());
                go(body, bound, out);
                bound.truncate(bound.len() - vars.len());
            }
            other => other.children().into_iter().for_each(|g| go(g, bound, out)),
        }
    }
    let mut out = BTreeSet::new();
    go(f, &mut Vec::new(), &mut out);
    out
}

/// Checks closedness, sorts of atoms and quantifier domains, unique bound names, label
/// signatures, and the counts expected for `k`: `k` top-level colour sets,
/// `k(k-1)/2` exclusion clauses, `k` Oddtimes disjuncts, and `Even` only inside Oddtimes.
pub fn structural_check(sentence: &MsoSentence) -> StructuralReport {
    let k = sentence.k;
    let mut w = Walker {
        scope: Vec::new(),
        bound: HashSet::new(),
        diagnostics: Vec::new(),
        labels: Vec::new(),
        exclusion_clauses: 0,
        oddtimes: 0,
        even_outside: 0,
    };
    w.walk(&sentence.formula);
    let top = match &sentence.formula {
        Formula::Quant {
            quantifier: Quantifier::Exists,
            binding: Binding::Set,
            vars,
            domain: Domain::Vertices,
            ..
        } => vars.len(),
        _ => 0,
    };
    let mut diagnostics = w.diagnostics;
    if top != k {
        diagnostics.push(format!("{top} top-level colour sets, expected {k}"));
    }
    if w.exclusion_clauses != k * (k.saturating_sub(1)) / 2 {
        diagnostics.push(format!(
            "{} exclusion clauses, expected {}",
            w.exclusion_clauses,
            k * (k.saturating_sub(1)) / 2
        ));
    }
    if w.oddtimes != k {
        diagnostics.push(format!("{} Oddtimes disjuncts, expected {k}", w.oddtimes));
    }
    if w.even_outside > 0 {
        diagnostics.push("Even used outside Oddtimes".into());
    }
    StructuralReport {
        diagnostics,
        top_level_set_variables: top,
        exclusion_clauses: w.exclusion_clauses,
        oddtimes_disjuncts: w.oddtimes,
        even_only_in_oddtimes: w.even_outside == 0,
        size: sentence.formula.size(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mso::{emit_parity_colourable, parse_sexpr};

    #[test]
    fn emitted_sentences_pass() {
        let r = structural_check(&emit_parity_colourable(1).unwrap());
        assert!(r.passes(), "{:?}", r.diagnostics);
        assert_eq!((r.top_level_set_variables, r.exclusion_clauses, r.oddtimes_disjuncts), (1, 0, 1));
        let r = structural_check(&emit_parity_colourable(3).unwrap());
        assert_eq!((r.exclusion_clauses, r.oddtimes_disjuncts), (3, 3));
        let r = structural_check(&emit_parity_colourable(4).unwrap());
        assert!(r.passes());
        assert_eq!(r.exclusion_clauses, 6);
    }

    #[test]
    fn injected_defects_are_reported() {
        let free = MsoSentence { k: 1, formula: parse_sexpr("(forall (x1) V (in x1 X))").unwrap() };
        let r = structural_check(&free);
        assert!(!r.passes());
        assert!(r.diagnostics.iter().any(|d| d.contains("free variable X")));

        let sorts =
            MsoSentence { k: 1, formula: parse_sexpr("(exists-set (X1) V (forall (e1) E (in e1 X1)))").unwrap() };
        assert!(structural_check(&sorts).diagnostics.iter().any(|d| d.contains("sort mismatch")));

        let stray = MsoSentence { k: 1, formula: parse_sexpr("(exists-set (X1) V (even X1))").unwrap() };
        assert!(!structural_check(&stray).even_only_in_oddtimes);

        let twice = MsoSentence { k: 1, formula: parse_sexpr("(exists (x) V (exists (x) V (eq x x)))").unwrap() };
        assert!(structural_check(&twice).diagnostics.iter().any(|d| d.contains("bound twice")));
    }

    #[test]
    fn free_variables_of_subformulas() {
        let f = parse_sexpr("(exists (e1) F1 (inc e1 x3))").unwrap();
        assert_eq!(free_variables(&f), ["F1".to_string(), "x3".to_string()].into());
    }
}
