//! Classical Prüfer coding of labeled trees on `{0, ..., n}`, removing the
//! largest leaf at each step.
//!
//! This works on the undirected tree and shares nothing with
//! [`crate::bijection`], so it can serve as an independent check of `phi`
//! and `psi` on the complete graph.

use std::collections::BTreeSet;

use crate::bijection::WeightSequence;
use crate::error::{Error, Result};
use crate::forest::RootedTree;

pub fn encode(t: &RootedTree) -> WeightSequence {
    let n = t.n();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    for u in 1..=n {
        let p = t.parent(u);
        adj[u].insert(p);
        adj[p].insert(u);
    }
    let mut code = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let leaf = (0..=n).rev().find(|&v| adj[v].len() == 1).expect("a tree has leaves");
        let nb = *adj[leaf].first().expect("leaf has a neighbor");
        adj[leaf].clear();
        adj[nb].remove(&leaf);
        code.push(nb);
    }
    WeightSequence(code)
}

pub fn decode(code: &WeightSequence, n: usize) -> Result<RootedTree> {
    if n < 1 {
        return Err(Error::InvalidWeights("n must be at least 1".into()));
    }
    let w = code.entries();
    if w.len() != n - 1 {
        return Err(Error::InvalidWeights(format!(
            "a code for n = {n} has length {}, got {}",
            n - 1,
            w.len()
        )));
    }
    if let Some(bad) = w.iter().find(|&&x| x > n) {
        return Err(Error::InvalidWeights(format!("label {bad} outside 0..={n}")));
    }
    let mut degree = vec![1usize; n + 1];
    for &x in w {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n);
    for &x in w {
        let leaf = (0..=n).rev().find(|&v| degree[v] == 1).expect("code leaves a leaf");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let last: Vec<usize> = (0..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((last[0], last[1]));

    // orient toward 0
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![usize::MAX; n + 1];
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        for &nb in &adj[v] {
            if parent[nb] == usize::MAX {
                parent[nb] = v;
                stack.push(nb);
            }
        }
    }
    RootedTree::new(parent[1..].to_vec())
}
