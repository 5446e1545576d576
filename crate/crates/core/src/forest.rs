//! Rooted spanning trees of the extended graph and the forest polynomials
//! built from them.
//!
//! A [`RootedTree`] on `n` vertices is a parent map `u -> parent(u)` with
//! every path leading to the root `0`. Dropping the edges into `0` leaves a
//! spanning rooted forest whose roots are the vertices with parent `0`.
//! Directed edges are always written `(child, parent)`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{Monomial, Polynomial};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawTree", into = "RawTree")]
pub struct RootedTree {
    // parent[u - 1] is the parent of u
    parent: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawTree {
    n: usize,
    parent: Vec<usize>,
}

impl TryFrom<RawTree> for RootedTree {
    type Error = Error;

    fn try_from(raw: RawTree) -> Result<Self> {
        if raw.parent.len() != raw.n {
            return Err(Error::InvalidTree(format!(
                "n = {} but {} parents given",
                raw.n,
                raw.parent.len()
            )));
        }
        RootedTree::new(raw.parent)
    }
}

impl From<RootedTree> for RawTree {
    fn from(t: RootedTree) -> Self {
        RawTree { n: t.n(), parent: t.parent }
    }
}

impl RootedTree {
    /// Validates a parent vector `[parent(1), ..., parent(n)]`.
    pub fn new(parent: Vec<usize>) -> Result<Self> {
        let n = parent.len();
        if n < 1 {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        for (i, &p) in parent.iter().enumerate() {
            let u = i + 1;
            if p > n {
                return Err(Error::InvalidTree(format!("parent of {u} is {p}, outside 0..={n}")));
            }
            if p == u {
                return Err(Error::InvalidTree(format!("vertex {u} is its own parent")));
            }
        }
        let tree = RootedTree { parent };
        for u in 1..=n {
            if tree.depth(u).is_none() {
                return Err(Error::InvalidTree(format!("vertex {u} lies on a cycle")));
            }
        }
        Ok(tree)
    }

    /// Every vertex attached directly to the root.
    pub fn star(n: usize) -> Self {
        RootedTree { parent: vec![0; n] }
    }

    pub(crate) fn from_parents_unchecked(parent: Vec<usize>) -> Self {
        RootedTree { parent }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, u: usize) -> usize {
        self.parent[u - 1]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    pub(crate) fn set_parent(&mut self, u: usize, p: usize) {
        self.parent[u - 1] = p;
    }

    /// Number of steps from `u` to `0`, or `None` on a cycle.
    fn depth(&self, u: usize) -> Option<usize> {
        let mut cur = u;
        for steps in 0..=self.n() {
            if cur == 0 {
                return Some(steps);
            }
            cur = self.parent(cur);
        }
        None
    }

    pub fn roots(&self) -> BTreeSet<usize> {
        (1..=self.n()).filter(|&u| self.parent(u) == 0).collect()
    }

    /// Number of components `k` of the underlying forest.
    pub fn component_count(&self) -> usize {
        self.parent.iter().filter(|&&p| p == 0).count()
    }

    /// Directed forest edges `(u, parent(u))` with `parent(u) != 0`.
    pub fn forest_edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n())
            .map(|u| (u, self.parent(u)))
            .filter(|&(_, p)| p != 0)
            .collect()
    }

    pub fn child_count(&self, v: usize) -> usize {
        self.parent.iter().filter(|&&p| p == v).count()
    }

    /// Undirected degree of `v` in the tree on `{0, ..., n}`.
    pub fn degree(&self, v: usize) -> usize {
        self.child_count(v) + usize::from(v != 0)
    }

    /// Whether a directed parent path of length at least one runs from `u`
    /// to `ancestor`.
    pub fn is_descendant(&self, u: usize, ancestor: usize) -> bool {
        let mut cur = u;
        while cur != 0 {
            cur = self.parent(cur);
            if cur == ancestor {
                return true;
            }
        }
        false
    }

    /// True iff every edge of the tree is an edge of the extended graph of `g`.
    pub fn lies_in(&self, g: &Graph) -> bool {
        self.n() == g.n() && self.forest_edges().iter().all(|&(u, v)| g.has_edge(u, v))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization is infallible")
    }
}

/// Union-find without path compression so unions can be undone in LIFO order.
struct RollbackDsu {
    link: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl RollbackDsu {
    fn new(len: usize) -> Self {
        RollbackDsu { link: (0..len).collect(), size: vec![1; len], history: Vec::new() }
    }

    fn find(&self, mut a: usize) -> usize {
        while self.link[a] != a {
            a = self.link[a];
        }
        a
    }

    /// Joins the classes of `a` and `b`; false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.link[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(rb);
        true
    }

    fn undo(&mut self) {
        let rb = self.history.pop().expect("undo without union");
        let ra = self.link[rb];
        self.size[ra] -= self.size[rb];
        self.link[rb] = rb;
    }
}

/// Backtracking enumeration of rooted spanning trees, in lexicographic
/// order of the parent vector.
pub struct RootedTrees {
    // candidates[u - 1]: allowed parents of u, ascending
    candidates: Vec<Vec<usize>>,
    cursor: Vec<usize>,
    parent: Vec<usize>,
    dsu: RollbackDsu,
    level: usize,
    done: bool,
}

impl RootedTrees {
    /// All rooted spanning trees of the extended graph of `g`.
    pub fn new(g: &Graph) -> Self {
        let ext = g.extended();
        RootedTrees::with_candidates((1..=g.n()).map(|u| ext.neighbors(u)).collect())
    }

    fn with_candidates(candidates: Vec<Vec<usize>>) -> Self {
        let n = candidates.len();
        RootedTrees {
            candidates,
            cursor: vec![0; n],
            parent: vec![0; n],
            dsu: RollbackDsu::new(n + 1),
            level: 0,
            done: n == 0,
        }
    }
}

impl Iterator for RootedTrees {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        let n = self.candidates.len();
        while !self.done {
            let l = self.level;
            let u = l + 1;
            let mut placed = false;
            while self.cursor[l] < self.candidates[l].len() {
                let p = self.candidates[l][self.cursor[l]];
                self.cursor[l] += 1;
                if self.dsu.union(u, p) {
                    self.parent[l] = p;
                    placed = true;
                    break;
                }
            }
            if placed {
                if u == n {
                    let tree = RootedTree::from_parents_unchecked(self.parent.clone());
                    self.dsu.undo();
                    return Some(tree);
                }
                self.level += 1;
                self.cursor[self.level] = 0;
            } else if l == 0 {
                self.done = true;
            } else {
                self.level -= 1;
                self.dsu.undo();
            }
        }
        None
    }
}

pub fn enumerate_rooted_trees(g: &Graph) -> RootedTrees {
    RootedTrees::new(g)
}

/// Exponent of `v` is its degree in the tree minus one.
pub fn tree_monomial(t: &RootedTree) -> Monomial {
    let n = t.n();
    let mut e = vec![0u32; n + 1];
    for &p in t.parents() {
        e[p] += 1;
    }
    // the root's degree is its child count, every other vertex also has
    // its own parent edge
    e[0] -= 1;
    Monomial::from_exponents(e)
}

/// Spanning rooted forest polynomial of `g`.
pub fn f_poly(g: &Graph) -> Polynomial {
    let mut p = Polynomial::zero(g.n());
    for t in enumerate_rooted_trees(g) {
        p.add_term(tree_monomial(&t), BigInt::one());
    }
    p
}

/// Spanning tree polynomial of `g` itself, in `x1..xn` (no `x` factor).
///
/// The single-vertex graph has the Laurent monomial `x1^-1` as its only
/// term, so it is rejected.
pub fn t_poly(g: &Graph) -> Result<Polynomial> {
    let n = g.n();
    if n == 1 {
        return Err(Error::NotPolynomial(
            "the single-vertex tree has monomial x1^-1".into(),
        ));
    }
    // A spanning tree of g is a rooted tree whose only root is vertex 1.
    let candidates = (1..=n)
        .map(|u| if u == 1 { vec![0] } else { g.neighbors(u).collect() })
        .collect();
    let mut p = Polynomial::zero(n);
    for t in RootedTrees::with_candidates(candidates) {
        let mut e = vec![0u32; n + 1];
        for (u, v) in t.forest_edges() {
            e[u] += 1;
            e[v] += 1;
        }
        for x in e.iter_mut().skip(1) {
            *x -= 1;
        }
        p.add_term(Monomial::from_exponents(e), BigInt::one());
    }
    Ok(p)
}

/// `t_G * (x1 + ... + xn) == f_G(0; x1, ..., xn)`.
pub fn verify_root_identity(g: &Graph) -> bool {
    let n = g.n();
    let at_zero = f_poly(g)
        .substitute_root(&vec![0; n + 1])
        .expect("coefficient vector sized to ambient");
    match t_poly(g) {
        Ok(t) => {
            let mut s = Polynomial::sum_of_vars(n);
            s.add_term(Monomial::var(n, 0), -BigInt::one());
            t.mul(&s).expect("same ambient") == at_zero
        }
        // x1^-1 * x1 = 1
        Err(_) => at_zero == Polynomial::one(n),
    }
}

/// `f_{g1 + g2} == x * f_{g1} * f_{g2}` with variables of `g2` shifted.
pub fn verify_composition(g1: &Graph, g2: &Graph) -> bool {
    let union = g1.disjoint_union(g2);
    let n = union.n();
    let lhs = f_poly(&union);
    let a = f_poly(g1).embed(n, 0).expect("fits");
    let b = f_poly(g2).embed(n, g1.n()).expect("fits");
    let rhs = Polynomial::var(n, 0)
        .mul(&a)
        .and_then(|p| p.mul(&b))
        .expect("same ambient");
    lhs == rhs
}
