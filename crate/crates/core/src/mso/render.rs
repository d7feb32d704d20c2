//! Two concrete syntaxes for [`Formula`], each with a parser that inverts its renderer.
//! The grammar is documented in `MSO_GRAMMAR.md` at the crate root.

use std::fmt::Write;

use super::{Binding, Domain, Formula, MsoSentence, Quantifier};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Syntax {
    Sexpr,
    Text,
}

pub fn render(sentence: &MsoSentence, syntax: Syntax) -> String {
    match syntax {
        Syntax::Sexpr => render_sexpr(&sentence.formula),
        Syntax::Text => render_text(&sentence.formula),
    }
}

fn domain_name(d: &Domain) -> &str {
    match d {
        Domain::Vertices => "V",
        Domain::Edges => "E",
        Domain::Var(x) => x,
    }
}

fn is_atom(f: &Formula) -> bool {
    matches!(f, Formula::In(..) | Formula::Eq(..) | Formula::Inc(..) | Formula::Even(_))
}

/// S-expression form; nodes whose children are all atoms stay on one line, others put
/// each child on its own indented line.
pub fn render_sexpr(f: &Formula) -> String {
    let mut out = String::new();
    sexpr_into(f, 0, &mut out);
    out.push('\n');
    out
}

fn sexpr_into(f: &Formula, indent: usize, out: &mut String) {
    let (head, kids): (String, Vec<&Formula>) = match f {
        Formula::In(x, s) => return write!(out, "(in {x} {s})").expect("string write"),
        Formula::Eq(a, b) => return write!(out, "(eq {a} {b})").expect("string write"),
        Formula::Inc(e, v) => return write!(out, "(inc {e} {v})").expect("string write"),
        Formula::Even(a) => return write!(out, "(even {a})").expect("string write"),
        Formula::And(fs) => ("and".into(), fs.iter().collect()),
        Formula::Or(fs) => ("or".into(), fs.iter().collect()),
        Formula::Not(g) => ("not".into(), vec![g]),
        Formula::Implies(a, b) => ("implies".into(), vec![a, b]),
        Formula::Quant { quantifier, binding, vars, domain, body } => {
            let q = match (quantifier, binding) {
                (Quantifier::Exists, Binding::Element) => "exists",
                (Quantifier::ForAll, Binding::Element) => "forall",
                (Quantifier::Exists, Binding::Set) => "exists-set",
                (Quantifier::ForAll, Binding::Set) => "forall-set",
            };
            (format!("{q} ({}) {}", vars.join(" "), domain_name(domain)), vec![body])
        }
        Formula::Labelled { label, args, body } => (format!("def {label} ({})", args.join(" ")), vec![body]),
    };
    out.push('(');
    out.push_str(&head);
    let inline = kids.iter().all(|k| is_atom(k));
    for k in kids {
        if inline {
            out.push(' ');
        } else {
            out.push('\n');
            out.push_str(&"  ".repeat(indent + 1));
        }
        sexpr_into(k, indent + 1, out);
    }
    out.push(')');
}

/// Fully parenthesised Unicode text on a single line.
pub fn render_text(f: &Formula) -> String {
    let mut out = String::new();
    text_into(f, &mut out);
    out.push('\n');
    out
}

fn text_into(f: &Formula, out: &mut String) {
    match f {
        Formula::In(x, s) => write!(out, "{x} ∈ {s}").expect("string write"),
        Formula::Eq(a, b) => write!(out, "{a} = {b}").expect("string write"),
        Formula::Inc(e, v) => write!(out, "inc({e}, {v})").expect("string write"),
        Formula::Even(a) => write!(out, "Even({a})").expect("string write"),
        Formula::And(fs) | Formula::Or(fs) => {
            let op = if matches!(f, Formula::And(_)) { " ∧ " } else { " ∨ " };
            out.push('(');
            for (i, g) in fs.iter().enumerate() {
                if i > 0 {
                    out.push_str(op);
                }
                text_into(g, out);
            }
            out.push(')');
        }
        Formula::Not(g) => {
            out.push('¬');
            text_into(g, out);
        }
        Formula::Implies(a, b) => {
            out.push('(');
            text_into(a, out);
            out.push_str(" ⇒ ");
            text_into(b, out);
            out.push(')');
        }
        Formula::Quant { quantifier, binding, vars, domain, body } => {
            let q = if *quantifier == Quantifier::Exists { '∃' } else { '∀' };
            let rel = if *binding == Binding::Set { '⊆' } else { '∈' };
            write!(out, "{q}{} {rel} {} [", vars.join(", "), domain_name(domain)).expect("string write");
            text_into(body, out);
            out.push(']');
        }
        Formula::Labelled { label, args, body } => {
            write!(out, "⟦{label}({}) ≡ ", args.join(", ")).expect("string write");
            text_into(body, out);
            out.push('⟧');
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Token {
    text: String,
    line: usize,
}

fn tokenize(src: &str, symbols: &[char]) -> Vec<Token> {
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let mut word = String::new();
        for ch in line.chars() {
            if ch.is_whitespace() || symbols.contains(&ch) {
                if !word.is_empty() {
                    out.push(Token { text: std::mem::take(&mut word), line: ln + 1 });
                }
                if !ch.is_whitespace() {
                    out.push(Token { text: ch.to_string(), line: ln + 1 });
                }
            } else {
                word.push(ch);
            }
        }
        if !word.is_empty() {
            out.push(Token { text: word, line: ln + 1 });
        }
    }
    out
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let line = self.tokens.get(self.pos).or(self.tokens.last()).map_or(1, |t| t.line);
        Err(Error::Parse { line, msg: msg.into() })
    }

    fn peek(&self) -> Option<&str> {
        self.tokens.get(self.pos).map(|t| t.text.as_str())
    }

    fn next(&mut self) -> Result<String> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.text.clone())
            }
            None => self.err("unexpected end of input"),
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        match self.peek() {
            Some(t) if t == s => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let t = t.to_string();
                self.err(format!("expected `{s}`, found `{t}`"))
            }
            None => self.err(format!("expected `{s}`, found end of input")),
        }
    }

    fn ident(&mut self) -> Result<String> {
        let t = self.next()?;
        let mut chars = t.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            self.pos -= 1;
            return self.err(format!("expected an identifier, found `{t}`"));
        }
        Ok(t)
    }

    fn domain(&mut self) -> Result<Domain> {
        let d = self.ident()?;
        Ok(match d.as_str() {
            "V" => Domain::Vertices,
            "E" => Domain::Edges,
            _ => Domain::Var(d),
        })
    }

    fn finish(&self) -> Result<()> {
        if self.pos != self.tokens.len() {
            return self.err("trailing input after the formula");
        }
        Ok(())
    }
}

pub fn parse_sexpr(src: &str) -> Result<Formula> {
    let mut p = Parser { tokens: tokenize(src, &['(', ')']), pos: 0 };
    let f = sexpr(&mut p)?;
    p.finish()?;
    Ok(f)
}

fn sexpr(p: &mut Parser) -> Result<Formula> {
    p.expect("(")?;
    let head = p.next()?;
    let f = match head.as_str() {
        "in" => Formula::In(p.ident()?, p.ident()?),
        "eq" => Formula::Eq(p.ident()?, p.ident()?),
        "inc" => Formula::Inc(p.ident()?, p.ident()?),
        "even" => Formula::Even(p.ident()?),
        "and" | "or" => {
            let mut fs = Vec::new();
            while p.peek() == Some("(") {
                fs.push(sexpr(p)?);
            }
            if head == "and" {
                Formula::And(fs)
            } else {
                Formula::Or(fs)
            }
        }
        "not" => Formula::Not(Box::new(sexpr(p)?)),
        "implies" => Formula::Implies(Box::new(sexpr(p)?), Box::new(sexpr(p)?)),
        "exists" | "forall" | "exists-set" | "forall-set" => {
            let quantifier = if head.starts_with("exists") { Quantifier::Exists } else { Quantifier::ForAll };
            let binding = if head.ends_with("-set") { Binding::Set } else { Binding::Element };
            let vars = ident_list(p)?;
            let domain = p.domain()?;
            Formula::Quant { quantifier, binding, vars, domain, body: Box::new(sexpr(p)?) }
        }
        "def" => {
            let label = p.ident()?;
            let args = ident_list(p)?;
            Formula::Labelled { label, args, body: Box::new(sexpr(p)?) }
        }
        other => {
            p.pos -= 1;
            return p.err(format!("unknown form `{other}`"));
        }
    };
    p.expect(")")?;
    Ok(f)
}

fn ident_list(p: &mut Parser) -> Result<Vec<String>> {
    p.expect("(")?;
    let mut out = Vec::new();
    while p.peek() != Some(")") {
        out.push(p.ident()?);
    }
    p.expect(")")?;
    if out.is_empty() {
        return p.err("empty variable list");
    }
    Ok(out)
}

const TEXT_SYMBOLS: [char; 16] = ['(', ')', '[', ']', '⟦', '⟧', ',', '∧', '∨', '¬', '⇒', '∃', '∀', '∈', '⊆', '≡'];

pub fn parse_text(src: &str) -> Result<Formula> {
    let mut symbols = TEXT_SYMBOLS.to_vec();
    symbols.push('=');
    let mut p = Parser { tokens: tokenize(src, &symbols), pos: 0 };
    let f = text(&mut p)?;
    p.finish()?;
    Ok(f)
}

fn text(p: &mut Parser) -> Result<Formula> {
    match p.peek() {
        Some("(") => {
            p.expect("(")?;
            let mut fs = vec![text(p)?];
            let mut op: Option<String> = None;
            while p.peek() != Some(")") {
                let o = p.next()?;
                if !matches!(o.as_str(), "∧" | "∨" | "⇒") {
                    p.pos -= 1;
                    return p.err(format!("expected a connective, found `{o}`"));
                }
                if op.as_ref().is_some_and(|prev| *prev != o) {
                    p.pos -= 1;
                    return p.err("mixed connectives need parentheses");
                }
                op = Some(o);
                fs.push(text(p)?);
            }
            p.expect(")")?;
            match op.as_deref() {
                None => Ok(fs.pop().expect("one operand")),
                Some("∧") => Ok(Formula::And(fs)),
                Some("∨") => Ok(Formula::Or(fs)),
                _ if fs.len() == 2 => {
                    let b = fs.pop().expect("two operands");
                    let a = fs.pop().expect("two operands");
                    Ok(Formula::Implies(Box::new(a), Box::new(b)))
                }
                _ => p.err("⇒ takes exactly two operands"),
            }
        }
        Some("¬") => {
            p.expect("¬")?;
            Ok(Formula::Not(Box::new(text(p)?)))
        }
        Some(q @ ("∃" | "∀")) => {
            let quantifier = if q == "∃" { Quantifier::Exists } else { Quantifier::ForAll };
            p.pos += 1;
            let mut vars = vec![p.ident()?];
            while p.peek() == Some(",") {
                p.pos += 1;
                vars.push(p.ident()?);
            }
            let binding = match p.next()?.as_str() {
                "∈" => Binding::Element,
                "⊆" => Binding::Set,
                other => {
                    let other = other.to_string();
                    p.pos -= 1;
                    return p.err(format!("expected ∈ or ⊆, found `{other}`"));
                }
            };
            let domain = p.domain()?;
            p.expect("[")?;
            let body = text(p)?;
            p.expect("]")?;
            Ok(Formula::Quant { quantifier, binding, vars, domain, body: Box::new(body) })
        }
        Some("⟦") => {
            p.pos += 1;
            let label = p.ident()?;
            p.expect("(")?;
            let mut args = vec![p.ident()?];
            while p.peek() == Some(",") {
                p.pos += 1;
                args.push(p.ident()?);
            }
            p.expect(")")?;
            p.expect("≡")?;
            let body = text(p)?;
            p.expect("⟧")?;
            Ok(Formula::Labelled { label, args, body: Box::new(body) })
        }
        Some("inc") => {
            p.pos += 1;
            p.expect("(")?;
            let e = p.ident()?;
            p.expect(",")?;
            let v = p.ident()?;
            p.expect(")")?;
            Ok(Formula::Inc(e, v))
        }
        Some("Even") => {
            p.pos += 1;
            p.expect("(")?;
            let a = p.ident()?;
            p.expect(")")?;
            Ok(Formula::Even(a))
        }
        Some(_) => {
            let x = p.ident()?;
            match p.next()?.as_str() {
                "∈" => Ok(Formula::In(x, p.ident()?)),
                "=" => Ok(Formula::Eq(x, p.ident()?)),
                other => {
                    let other = other.to_string();
                    p.pos -= 1;
                    p.err(format!("expected ∈ or = after `{x}`, found `{other}`"))
                }
            }
        }
        None => p.err("unexpected end of input"),
    }
}
