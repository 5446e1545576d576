//! Simple undirected labeled graphs on vertices `1..=n`.
//!
//! Vertex `0` is reserved for the root of the extended graph and never
//! appears in a [`Graph`]'s edge set. The extended graph is the view
//! [`Extended`], in which `{0, v}` is an edge for every `v`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple graph. Edges are stored as `(min, max)` pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph from arbitrary pairs, normalizing order and dropping
    /// duplicates.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 1 {
            return Err(Error::NoVertices);
        }
        let mut edges = BTreeSet::new();
        for (u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u < 1 || v < 1 || u > n || v > n {
                return Err(Error::OutOfRange { u, v, n });
            }
            edges.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graph must have at least one vertex");
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v, v + 1))).expect("path edges are in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&u| u != v && self.has_edge(u, v))
    }

    pub fn complement(&self) -> Graph {
        let edges = all_pairs(self.n).filter(|e| !self.edges.contains(e)).collect();
        Graph { n: self.n, edges }
    }

    /// Disjoint union with the vertices of `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + offset, v + offset)))
            .collect();
        Graph { n: self.n + other.n, edges }
    }

    pub fn extended(&self) -> Extended<'_> {
        Extended(self)
    }

    /// Materializes the extended graph as an ordinary graph on `n + 1`
    /// vertices, with the root relabeled to `n + 1`.
    pub fn extended_materialized(&self) -> Graph {
        let root = self.n + 1;
        let edges = self.edges().chain((1..=self.n).map(|v| (v, root))).collect();
        Graph { n: root, edges }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph{{n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("]}")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// All unordered pairs `(u, v)` with `1 <= u < v <= n`, lexicographically.
pub fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |u| (u + 1..=n).map(move |v| (u, v)))
}

/// Every labeled graph on `n` vertices. Graph `i` contains the `j`-th pair
/// of [`all_pairs`] iff bit `j` of `i` is set.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<_> = all_pairs(n).collect();
    assert!(pairs.len() < 64, "too many vertices to enumerate all graphs");
    (0u64..1 << pairs.len()).map(move |mask| Graph {
        n,
        edges: pairs
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, &e)| e)
            .collect(),
    })
}

/// The extended graph: `g` plus a root `0` adjacent to every vertex.
#[derive(Clone, Copy, Debug)]
pub struct Extended<'a>(&'a Graph);

impl<'a> Extended<'a> {
    pub fn base(&self) -> &'a Graph {
        self.0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        if u == 0 || v == 0 {
            return u.max(v) <= self.0.n;
        }
        self.0.has_edge(u, v)
    }

    /// Neighbors of `v` in ascending order, `0` first for `v >= 1`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        if v == 0 {
            return (1..=self.0.n).collect();
        }
        std::iter::once(0).chain(self.0.neighbors(v)).collect()
    }
}
