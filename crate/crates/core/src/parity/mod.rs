//! Colourings, parity vectors and parity-path detection.
//!
//! A parity path is a non-empty path on which every colour occurs an even
//! number of times. A colouring is a parity vertex colouring exactly when no
//! parity path exists.

mod colouring;
mod general;
mod lca;
mod tree;
mod vector;

pub use colouring::Colouring;
pub use general::{find_parity_path_general, find_parity_path_general_until, GeneralSearch, DEFAULT_EXPANSION_BUDGET};
pub use lca::Lca;
pub use tree::{find_parity_path_tree, tree_path};
pub use vector::{parity_vector, ParityVector};

use std::time::Instant;

use serde_json::json;

use crate::error::Result;
use crate::graph::{Graph, Path};

/// A path whose parity vector is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityPathCertificate {
    pub path: Path,
    pub vector: ParityVector,
}

impl ParityPathCertificate {
    pub(crate) fn new(path: Vec<usize>, colouring: &Colouring) -> Self {
        let vector = parity_vector(colouring, &path).expect("certificate vertices are coloured");
        ParityPathCertificate { path: Path(path), vector }
    }

    /// Re-validates the certificate from scratch against `graph` and `colouring`.
    pub fn is_valid_for(&self, graph: &Graph, colouring: &Colouring) -> bool {
        if !self.path.is_valid_in(graph) || !self.path.len().is_multiple_of(2) {
            return false;
        }
        parity_vector(colouring, self.path.vertices()).is_ok_and(|pv| pv.is_zero() && pv == self.vector)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": "parity_path",
            "vertices": self.path.vertices().iter().map(|v| v + 1).collect::<Vec<_>>(),
        })
    }
}

/// Result of checking a colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(ParityPathCertificate),
    /// The general search ran out of budget before deciding.
    Indeterminate {
        expansions: u64,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn certificate(&self) -> Option<&ParityPathCertificate> {
        match self {
            Verdict::Invalid(c) => Some(c),
            _ => None,
        }
    }
}

/// Checks a colouring with the default search budget.
pub fn is_parity_vertex_colouring(graph: &Graph, colouring: &Colouring) -> Result<Verdict> {
    verify_colouring(graph, colouring, Some(DEFAULT_EXPANSION_BUDGET))
}

/// Checks a colouring. Trees use the polynomial prefix-vector verifier; every other
/// graph falls back to the exhaustive path search limited to `budget` expansions.
pub fn verify_colouring(graph: &Graph, colouring: &Colouring, budget: Option<u64>) -> Result<Verdict> {
    verify_colouring_until(graph, colouring, budget, None)
}

/// [`verify_colouring`] whose general search also stops at `deadline`.
pub fn verify_colouring_until(
    graph: &Graph,
    colouring: &Colouring,
    budget: Option<u64>,
    deadline: Option<Instant>,
) -> Result<Verdict> {
    colouring.check_domain(graph.n())?;
    if graph.is_tree() {
        return Ok(match find_parity_path_tree(graph, colouring)? {
            Some(cert) => Verdict::Invalid(cert),
            None => Verdict::Valid,
        });
    }
    Ok(match find_parity_path_general_until(graph, colouring, budget, deadline)? {
        GeneralSearch::Found(cert) => Verdict::Invalid(cert),
        GeneralSearch::NotFound { .. } => Verdict::Valid,
        GeneralSearch::BudgetExhausted { expansions } => Verdict::Indeterminate { expansions },
    })
}
