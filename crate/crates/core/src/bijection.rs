//! The correspondence between
//!
//! * **A**: pairs `(T, O)` where `T` is any rooted tree on the complete
//!   extended graph and `O` is an operational set of `T` for `g`, and
//! * **B**: pairs `(T', W)` where every forest edge of `T'` lies in the
//!   complement of `g` and `W` is a weight sequence of length
//!   `components(T') - 1` over `{0, ..., n}`.
//!
//! [`phi`] maps A to B and [`psi`] maps B to A; they are mutually inverse.
//! With `g = K_n` the map `phi` is the largest-leaf Prüfer code of `T`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::{enumerate_rooted_trees, RootedTree};
use crate::graph::Graph;

/// Directed forest edges `(child, parent)`, never with parent `0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct OperationalSet(BTreeSet<(usize, usize)>);

impl OperationalSet {
    pub fn new() -> Self {
        OperationalSet::default()
    }

    pub fn contains(&self, edge: (usize, usize)) -> bool {
        self.0.contains(&edge)
    }

    pub fn insert(&mut self, edge: (usize, usize)) -> bool {
        self.0.insert(edge)
    }

    pub fn remove(&mut self, edge: (usize, usize)) -> bool {
        self.0.remove(&edge)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn is_superset(&self, other: &OperationalSet) -> bool {
        self.0.is_superset(&other.0)
    }
}

impl FromIterator<(usize, usize)> for OperationalSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        OperationalSet(iter.into_iter().collect())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightSequence(pub Vec<usize>);

impl WeightSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairA {
    pub tree: RootedTree,
    pub ops: OperationalSet,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairB {
    pub tree: RootedTree,
    pub weights: WeightSequence,
}

/// Forest edges of `t` that are edges of `g`; every operational set
/// contains them.
pub fn forced_set(g: &Graph, t: &RootedTree) -> OperationalSet {
    t.forest_edges().into_iter().filter(|&(u, v)| g.has_edge(u, v)).collect()
}

/// Forest edges of `t` lying in the complement of `g`.
pub fn free_edges(g: &Graph, t: &RootedTree) -> Vec<(usize, usize)> {
    t.forest_edges().into_iter().filter(|&(u, v)| !g.has_edge(u, v)).collect()
}

/// Every operational set of `t` for `g`: the forced set plus each subset of
/// [`free_edges`], ordered by the subset's bitmask over that list.
pub fn operational_sets(g: &Graph, t: &RootedTree) -> impl Iterator<Item = OperationalSet> {
    let forced = forced_set(g, t);
    let free = free_edges(g, t);
    (0u64..1 << free.len()).map(move |mask| {
        let mut ops = forced.clone();
        for (j, &e) in free.iter().enumerate() {
            if mask >> j & 1 == 1 {
                ops.insert(e);
            }
        }
        ops
    })
}

pub fn validate_a(g: &Graph, pair: &PairA) -> Result<()> {
    let t = &pair.tree;
    if t.n() != g.n() {
        return Err(Error::VertexMismatch { graph: g.n(), tree: t.n() });
    }
    for (u, v) in pair.ops.iter() {
        if v == 0 || u < 1 || u > t.n() || t.parent(u) != v {
            return Err(Error::InvalidOperationalSet(format!(
                "({u},{v}) is not a forest edge of the tree"
            )));
        }
    }
    if let Some((u, v)) = forced_set(g, t).iter().find(|&e| !pair.ops.contains(e)) {
        return Err(Error::InvalidOperationalSet(format!(
            "forced edge ({u},{v}) of the graph is missing"
        )));
    }
    Ok(())
}

pub fn validate_b(g: &Graph, pair: &PairB) -> Result<()> {
    let t = &pair.tree;
    let n = g.n();
    if t.n() != n {
        return Err(Error::VertexMismatch { graph: n, tree: t.n() });
    }
    if let Some((u, v)) = t.forest_edges().into_iter().find(|&(u, v)| g.has_edge(u, v)) {
        return Err(Error::InvalidPair(format!(
            "forest edge ({u},{v}) is not an edge of the complement"
        )));
    }
    let expected = t.component_count() - 1;
    if pair.weights.len() != expected {
        return Err(Error::InvalidWeights(format!(
            "length {} but the forest has {} components",
            pair.weights.len(),
            expected + 1
        )));
    }
    if let Some(w) = pair.weights.entries().iter().find(|&&w| w > n) {
        return Err(Error::InvalidWeights(format!("label {w} outside 0..={n}")));
    }
    Ok(())
}

/// Encodes an A pair as a B pair.
///
/// `S` starts as the roots plus the children of operational edges. Leaves
/// outside `S` are pruned away; then the largest remaining leaf `u` is cut,
/// its parent is appended to the weights and `u` is reattached to the root
/// in the output. This repeats until one vertex of `S` is left.
pub fn phi(g: &Graph, pair: &PairA) -> Result<PairB> {
    validate_a(g, pair)?;
    let t = &pair.tree;
    let n = t.n();
    let in_s: Vec<bool> = (0..=n)
        .map(|u| u > 0 && (t.parent(u) == 0 || pair.ops.contains((u, t.parent(u)))))
        .collect();
    let mut s_count = in_s.iter().filter(|&&b| b).count();

    let mut kids = vec![0usize; n + 1];
    for &p in t.parents() {
        kids[p] += 1;
    }
    // leaves outside S waiting to be pruned, and leaves in S ready to cut
    let mut prune: Vec<usize> = Vec::new();
    let mut ready: BTreeSet<usize> = BTreeSet::new();
    for u in 1..=n {
        if kids[u] == 0 {
            if in_s[u] {
                ready.insert(u);
            } else {
                prune.push(u);
            }
        }
    }
    let mut remove = |u: usize, prune: &mut Vec<usize>, ready: &mut BTreeSet<usize>| {
        let p = t.parent(u);
        if p != 0 {
            kids[p] -= 1;
            if kids[p] == 0 {
                if in_s[p] {
                    ready.insert(p);
                } else {
                    prune.push(p);
                }
            }
        }
    };

    let mut out = t.clone();
    let mut weights = Vec::with_capacity(s_count.saturating_sub(1));
    while s_count > 1 {
        while let Some(u) = prune.pop() {
            remove(u, &mut prune, &mut ready);
        }
        let cut = ready.pop_last().expect("a live S vertex has a leaf below it");
        remove(cut, &mut prune, &mut ready);
        s_count -= 1;
        weights.push(t.parent(cut));
        out.set_parent(cut, 0);
    }
    Ok(PairB { tree: out, weights: WeightSequence(weights) })
}

/// Decodes a B pair as an A pair.
///
/// For each weight `w` in order, the largest current root `u` such that no
/// remaining weight is `u` or a descendant of `u` is attached below `w`.
/// Attachments to a vertex other than the root join the operational set.
pub fn psi(g: &Graph, pair: &PairB) -> Result<PairA> {
    validate_b(g, pair)?;
    let mut cur = pair.tree.clone();
    let mut roots = cur.roots();
    let mut ops = OperationalSet::new();
    let seq = pair.weights.entries();
    for (i, &w) in seq.iter().enumerate() {
        let remaining = &seq[i..];
        let u = roots
            .iter()
            .rev()
            .copied()
            .find(|&r| remaining.iter().all(|&x| x != r && !cur.is_descendant(x, r)))
            .ok_or_else(|| Error::PsiExhausted(remaining.to_vec()))?;
        roots.remove(&u);
        cur.set_parent(u, w);
        if w != 0 {
            ops.insert((u, w));
        }
    }
    Ok(PairA { tree: cur, ops })
}

/// `{0, ..., n}^len` in lexicographic order.
pub fn weight_sequences(n: usize, len: usize) -> impl Iterator<Item = WeightSequence> {
    let base = n + 1;
    let total = base.checked_pow(len as u32).expect("weight sequence count overflows usize");
    (0..total).map(move |mut code| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = code % base;
            code /= base;
        }
        WeightSequence(w)
    })
}

/// Every A pair for `g`, trees in lexicographic order.
pub fn enumerate_a(g: &Graph) -> impl Iterator<Item = PairA> + '_ {
    enumerate_rooted_trees(&Graph::complete(g.n())).flat_map(move |tree| {
        operational_sets(g, &tree)
            .map(|ops| PairA { tree: tree.clone(), ops })
            .collect::<Vec<_>>()
    })
}

/// Every B pair for `g`, trees of the complement in lexicographic order.
pub fn enumerate_b(g: &Graph) -> impl Iterator<Item = PairB> {
    let n = g.n();
    enumerate_rooted_trees(&g.complement()).flat_map(move |tree| {
        let len = tree.component_count() - 1;
        weight_sequences(n, len).map(move |weights| PairB { tree: tree.clone(), weights })
    })
}

#[derive(Serialize, Deserialize)]
pub struct PairAFile {
    pub graph: Graph,
    pub tree: RootedTree,
    pub ops: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
pub struct PairBFile {
    pub graph: Graph,
    pub tree: RootedTree,
    pub weights: WeightSequence,
}

impl PairAFile {
    pub fn new(graph: &Graph, pair: &PairA) -> Self {
        PairAFile {
            graph: graph.clone(),
            tree: pair.tree.clone(),
            ops: pair.ops.iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Splits into the graph and a validated pair.
    pub fn into_pair(self) -> Result<(Graph, PairA)> {
        let pair = PairA {
            tree: self.tree,
            ops: self.ops.iter().map(|&[u, v]| (u, v)).collect(),
        };
        validate_a(&self.graph, &pair)?;
        Ok((self.graph, pair))
    }
}

impl PairBFile {
    pub fn new(graph: &Graph, pair: &PairB) -> Self {
        PairBFile { graph: graph.clone(), tree: pair.tree.clone(), weights: pair.weights.clone() }
    }

    pub fn into_pair(self) -> Result<(Graph, PairB)> {
        let pair = PairB { tree: self.tree, weights: self.weights };
        validate_b(&self.graph, &pair)?;
        Ok((self.graph, pair))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_graphs;

    fn tree(p: &[usize]) -> RootedTree {
        RootedTree::new(p.to_vec()).unwrap()
    }

    fn ops(e: &[(usize, usize)]) -> OperationalSet {
        e.iter().copied().collect()
    }

    fn path3() -> Graph {
        Graph::path(3)
    }

    #[test]
    fn forced_set_examples() {
        let t = tree(&[2, 0, 2]);
        assert_eq!(forced_set(&Graph::complete(3), &t), ops(&t.forest_edges()));
        assert!(forced_set(&Graph::empty(3), &t).is_empty());
        assert_eq!(forced_set(&path3(), &t), ops(&[(1, 2), (3, 2)]));
    }

    #[test]
    fn operational_set_examples() {
        let t = tree(&[2, 0, 2]);
        let all: Vec<_> = operational_sets(&Graph::complete(3), &t).collect();
        assert_eq!(all, vec![ops(&[(1, 2), (3, 2)])]);
        let all: Vec<_> = operational_sets(&path3(), &t).collect();
        assert_eq!(all, vec![ops(&[(1, 2), (3, 2)])]);
        let all: Vec<_> = operational_sets(&Graph::empty(2), &tree(&[2, 0])).collect();
        assert_eq!(all, vec![ops(&[]), ops(&[(1, 2)])]);
    }

    #[test]
    fn phi_worked_example() {
        let a = PairA { tree: tree(&[2, 0, 2]), ops: ops(&[(1, 2), (3, 2)]) };
        let b = phi(&path3(), &a).unwrap();
        assert_eq!(b.tree, RootedTree::star(3));
        assert_eq!(b.weights, WeightSequence(vec![2, 2]));
    }

    #[test]
    fn phi_without_operations_is_identity() {
        // single root, nothing in S but the root
        let t = tree(&[2, 3, 0]);
        let g = Graph::empty(3);
        let b = phi(&g, &PairA { tree: t.clone(), ops: ops(&[]) }).unwrap();
        assert_eq!(b, PairB { tree: t, weights: WeightSequence::default() });
    }

    #[test]
    fn phi_rejects_invalid_pairs() {
        let t = tree(&[2, 0, 2]);
        // missing the forced pair (3,2)
        let bad = PairA { tree: t.clone(), ops: ops(&[(1, 2)]) };
        assert!(matches!(phi(&path3(), &bad), Err(Error::InvalidOperationalSet(_))));
        let bad = PairA { tree: t, ops: ops(&[(1, 3)]) };
        assert!(phi(&Graph::empty(3), &bad).is_err());
        let bad = PairA { tree: tree(&[0, 0]), ops: ops(&[]) };
        assert!(matches!(phi(&path3(), &bad), Err(Error::VertexMismatch { .. })));
    }

    #[test]
    fn psi_worked_examples() {
        let b = PairB { tree: RootedTree::star(3), weights: WeightSequence(vec![2, 2]) };
        let a = psi(&path3(), &b).unwrap();
        assert_eq!(a.tree, tree(&[2, 0, 2]));
        assert_eq!(a.ops, ops(&[(3, 2), (1, 2)]));

        let b = PairB { tree: tree(&[3, 3, 0]), weights: WeightSequence::default() };
        let a = psi(&Graph::empty(3), &b).unwrap();
        assert_eq!(a, PairA { tree: tree(&[3, 3, 0]), ops: ops(&[]) });

        for g in all_graphs(2) {
            let b = PairB { tree: RootedTree::star(2), weights: WeightSequence(vec![0]) };
            let a = psi(&g, &b).unwrap();
            assert_eq!(a, PairA { tree: RootedTree::star(2), ops: ops(&[]) });
        }
    }

    #[test]
    fn psi_rejects_invalid_pairs() {
        let wrong_len = PairB { tree: RootedTree::star(3), weights: WeightSequence(vec![2]) };
        assert!(matches!(psi(&path3(), &wrong_len), Err(Error::InvalidWeights(_))));
        let out_of_range = PairB { tree: RootedTree::star(2), weights: WeightSequence(vec![3]) };
        assert!(psi(&Graph::empty(2), &out_of_range).is_err());
        // (1,2) is an edge of the path, not of its complement
        let not_complement = PairB { tree: tree(&[2, 0, 0]), weights: WeightSequence(vec![0]) };
        assert!(matches!(psi(&path3(), &not_complement), Err(Error::InvalidPair(_))));
    }

    #[test]
    fn cardinality_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(enumerate_a(&k2).count(), 3);
        assert_eq!(enumerate_b(&k2).count(), 3);
        let e2 = Graph::empty(2);
        assert_eq!(enumerate_a(&e2).count(), 5);
        assert_eq!(enumerate_b(&e2).count(), 5);
    }

    #[test]
    fn weight_sequence_enumeration() {
        let all: Vec<_> = weight_sequences(2, 2).map(|w| w.0).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(weight_sequences(4, 0).count(), 1);
    }

    #[test]
    fn round_trips_small() {
        for n in 1..=3 {
            for g in all_graphs(n) {
                let a: Vec<_> = enumerate_a(&g).collect();
                let b: Vec<_> = enumerate_b(&g).collect();
                assert_eq!(a.len(), b.len(), "{g:?}");
                for pair in &a {
                    let image = phi(&g, pair).unwrap();
                    validate_b(&g, &image).unwrap();
                    assert_eq!(&psi(&g, &image).unwrap(), pair);
                }
                for pair in &b {
                    let image = psi(&g, pair).unwrap();
                    validate_a(&g, &image).unwrap();
                    assert_eq!(&phi(&g, &image).unwrap(), pair);
                }
            }
        }
    }

    #[test]
    fn degree_bookkeeping() {
        for n in 1..=4 {
            for g in all_graphs(n) {
                for pair in enumerate_a(&g) {
                    let b = phi(&g, &pair).unwrap();
                    let root_hits = b.weights.entries().iter().filter(|&&w| w == 0).count();
                    assert_eq!(root_hits, pair.tree.component_count() - 1);
                    for v in 1..=n {
                        let hits = b.weights.entries().iter().filter(|&&w| w == v).count();
                        assert_eq!(
                            b.tree.child_count(v) + hits,
                            pair.tree.child_count(v),
                            "{g:?} {pair:?} v={v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn complete_graph_maps_to_star() {
        for n in 1..=5 {
            let g = Graph::complete(n);
            for pair in enumerate_a(&g) {
                let b = phi(&g, &pair).unwrap();
                assert_eq!(b.tree, RootedTree::star(n));
                assert_eq!(b.weights.len(), n - 1);
            }
        }
    }

    #[test]
    fn file_formats() {
        let text = r#"{"graph":{"n":3,"edges":[[1,2],[2,3]]},"tree":{"n":3,"parent":[2,0,2]},"ops":[[1,2],[3,2]]}"#;
        let (g, a) = serde_json::from_str::<PairAFile>(text).unwrap().into_pair().unwrap();
        let b = phi(&g, &a).unwrap();
        let out = serde_json::to_string(&PairBFile::new(&g, &b)).unwrap();
        assert_eq!(
            out,
            r#"{"graph":{"n":3,"edges":[[1,2],[2,3]]},"tree":{"n":3,"parent":[0,0,0]},"weights":[2,2]}"#
        );
        let (g2, b2) = serde_json::from_str::<PairBFile>(&out).unwrap().into_pair().unwrap();
        let back = psi(&g2, &b2).unwrap();
        assert_eq!(serde_json::to_string(&PairAFile::new(&g2, &back)).unwrap(), text);

        let missing_forced = r#"{"graph":{"n":3,"edges":[[1,2],[2,3]]},"tree":{"n":3,"parent":[2,0,2]},"ops":[[1,2]]}"#;
        assert!(serde_json::from_str::<PairAFile>(missing_forced).unwrap().into_pair().is_err());
    }
}
