//! Spanning rooted forest polynomials of labeled graphs.
//!
//! [`forest::f_poly`] sums one monomial per rooted spanning tree of the
//! extended graph. [`bijection`] implements the encoding `phi` of a tree
//! with an operational set as a complement-graph tree with a weight
//! sequence, and its inverse `psi`. [`reciprocity`] checks
//! `f_G(x; x1..xn) = (-1)^(n-1) f_Gbar(-x - x1 - ... - xn; x1..xn)` and the
//! term-by-term cancellation behind it, and [`oracle`] is an independent
//! Kirchhoff determinant cross-check.

pub mod bijection;
pub mod cli;
pub mod error;
pub mod forest;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod prufer;
pub mod reciprocity;

pub use error::{Error, Result};
pub use forest::RootedTree;
pub use graph::Graph;
pub use poly::{Monomial, Polynomial};
