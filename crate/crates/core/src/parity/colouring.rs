use std::fmt::Write as _;

use crate::error::{invalid_input, invalid_param, Error, Result};

/// Total vertex colouring with colours in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    k: usize,
    colours: Vec<usize>,
}

impl Colouring {
    pub fn new(k: usize, colours: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return invalid_param("a colouring needs k >= 1");
        }
        if let Some((v, &c)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return invalid_input(format!("vertex {v} has colour {c} outside 1..={k}"));
        }
        Ok(Colouring { k, colours })
    }

    /// Uses `k = ` the largest colour present.
    pub fn from_colours(colours: Vec<usize>) -> Result<Self> {
        let k = colours.iter().copied().max().unwrap_or(1);
        Self::new(k, colours)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    /// Number of distinct colours that actually occur.
    pub fn colours_used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        self.colours.iter().filter(|&&c| !std::mem::replace(&mut seen[c], true)).count()
    }

    pub(crate) fn check_domain(&self, n: usize) -> Result<()> {
        if self.colours.len() != n {
            return invalid_input(format!("colouring covers {} vertices, graph has {n}", self.colours.len()));
        }
        Ok(())
    }

    /// Colouring of the vertices `old_ids` (in that order).
    pub fn restrict(&self, old_ids: &[usize]) -> Colouring {
        Colouring { k: self.k, colours: old_ids.iter().map(|&v| self.colours[v]).collect() }
    }

    /// Applies a permutation of the palette, `perm[c - 1]` being the new colour of `c`.
    pub fn permute_colours(&self, perm: &[usize]) -> Result<Colouring> {
        if perm.len() != self.k {
            return invalid_param("palette permutation has the wrong length");
        }
        Self::new(self.k, self.colours.iter().map(|&c| perm[c - 1]).collect())
    }

    /// `k <k>` followed by one `v <vertex> <colour>` line per vertex, 1-indexed.
    pub fn to_text(&self) -> String {
        let mut out = format!("k {}\n", self.k);
        for (v, c) in self.colours.iter().enumerate() {
            writeln!(out, "v {} {}", v + 1, c).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        let mut k = None;
        let mut entries: Vec<Option<usize>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["k", x] => {
                    let val: usize = x.parse().map_err(|_| perr(lineno, format!("bad colour count `{x}`")))?;
                    if k.replace(val).is_some() {
                        return Err(perr(lineno, "duplicate `k` line".into()));
                    }
                }
                ["v", v, c] => {
                    if k.is_none() {
                        return Err(perr(lineno, "`v` line before `k` line".into()));
                    }
                    let v: usize = v.parse().map_err(|_| perr(lineno, format!("bad vertex `{v}`")))?;
                    let c: usize = c.parse().map_err(|_| perr(lineno, format!("bad colour `{c}`")))?;
                    if v == 0 {
                        return Err(perr(lineno, "vertices are 1-indexed".into()));
                    }
                    if entries.len() < v {
                        entries.resize(v, None);
                    }
                    if entries[v - 1].replace(c).is_some() {
                        return Err(perr(lineno, format!("vertex {v} coloured twice")));
                    }
                }
                _ => return Err(perr(lineno, format!("unrecognised line `{line}`"))),
            }
        }
        let k = k.ok_or_else(|| perr(0, "missing `k` line".into()))?;
        let colours = entries
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| perr(0, format!("vertex {} has no colour", v + 1))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, colours).map_err(|e| perr(0, e.to_string()))
    }
}
