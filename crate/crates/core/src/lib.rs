//! Parity vertex colourings of graphs.
//!
//! A vertex colouring is a *parity vertex colouring* when every path contains some
//! colour an odd number of times. This crate provides verifiers, constructions, an
//! exact solver for the parity chromatic number, lower-bound certificates for
//! subdivided complete binary trees, the extremal-tree calculus, a Hamiltonian-path
//! reduction gadget, and an emitter for the CMSO2 sentence expressing
//! "parity colourable with k colours".

pub mod constructions;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod mso;
pub mod parity;
pub mod reduction;
pub mod reproduce;
pub mod safflower;
pub mod solver;

pub use error::{Error, Result};
