//! Reciprocity between a graph and its complement:
//!
//! ```text
//! f_G(x; x1..xn) = (-1)^(n-1) * f_Gbar(-x - x1 - ... - xn; x1..xn)
//! ```
//!
//! Besides the polynomial identity itself this module exposes the
//! pair-level bookkeeping behind it. Every B pair contributes one signed
//! monomial to `f_Gbar(x + x1 + ... + xn; -x1..-xn)`, `phi` sends an A pair
//! to a B pair with the same monomial, and the A pairs of a tree that is not
//! in the extended graph of `G` cancel in pairs.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{
    enumerate_b, free_edges, operational_sets, phi, validate_b, OperationalSet, PairA, PairB,
};
use crate::error::{Error, Result};
use crate::forest::{f_poly, tree_monomial, RootedTree};
use crate::graph::{all_graphs, Graph};
use crate::poly::{Monomial, Polynomial};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn of_power(exponent: usize) -> Sign {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedMonomial {
    pub monomial: Monomial,
    pub sign: Sign,
}

impl SignedMonomial {
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::monomial(self.monomial.clone(), self.sign.as_int())
    }
}

/// `(-1)^(n-1) * f_Gbar(-x - x1 - ... - xn; x1..xn)`.
pub fn reciprocity_rhs(g: &Graph) -> Polynomial {
    let n = g.n();
    f_poly(&g.complement())
        .substitute_root(&vec![-1; n + 1])
        .expect("coefficient vector sized to ambient")
        .scale(Sign::of_power(n - 1).as_int())
}

pub fn verify_reciprocity(g: &Graph) -> bool {
    f_poly(g) == reciprocity_rhs(g)
}

/// `(-1)^(n-1) f_G(x; x1..xn) == f_G(-x; -x1..-xn)`.
pub fn negation_identity(g: &Graph) -> bool {
    let n = g.n();
    let f = f_poly(g);
    let all: Vec<usize> = (0..=n).collect();
    f.scale(Sign::of_power(n - 1).as_int()) == f.negate_vars(&all)
}

/// The monomial a B pair contributes to `f_Gbar(x + x1 + ... + xn; -x1..-xn)`:
/// `x_{w1} ... x_{w(k-1)} * x1^(deg(1)-1) ... xn^(deg(n)-1)` with sign
/// `(-1)^(n - deg(0))`, degrees taken in the B tree and `x_0 = x`.
pub fn b_side_monomial(g: &Graph, pair: &PairB) -> Result<SignedMonomial> {
    validate_b(g, pair)?;
    let t = &pair.tree;
    let n = t.n();
    let mut e = vec![0u32; n + 1];
    for &w in pair.weights.entries() {
        e[w] += 1;
    }
    for (v, slot) in e.iter_mut().enumerate().skip(1) {
        *slot += (t.degree(v) - 1) as u32;
    }
    Ok(SignedMonomial {
        monomial: Monomial::from_exponents(e),
        sign: Sign::of_power(n - t.degree(0)),
    })
}

/// Checks that `phi` carries the tree monomial of an A pair to the
/// unsigned B-side monomial of its image, and that the sign
/// `(-1)^(n - deg(0))` agrees both with `(-1)^(sum of deg(i) - 1)` over the
/// B tree and with `(-1)^(forest edges of the A tree outside the
/// operational set)`.
pub fn check_sign_relation(g: &Graph, pair: &PairA) -> Result<bool> {
    let image = phi(g, pair)?;
    let signed = b_side_monomial(g, &image)?;
    let n = g.n();
    let degree_sum: usize = (1..=n).map(|v| image.tree.degree(v) - 1).sum();
    let untouched = pair.tree.forest_edges().len() - pair.ops.len();
    Ok(signed.monomial == tree_monomial(&pair.tree)
        && signed.sign == Sign::of_power(degree_sum)
        && signed.sign == Sign::of_power(untouched))
}

/// Smallest forest edge of `t` lying in the complement of `g`.
pub fn toggle_edge(g: &Graph, t: &RootedTree) -> Option<(usize, usize)> {
    free_edges(g, t).into_iter().min()
}

/// Matches every operational set of `t` containing the toggle edge with
/// the same set minus that edge. The first entry of each pair holds the
/// edge.
pub fn cancellation_pairs(g: &Graph, t: &RootedTree) -> Result<Vec<(OperationalSet, OperationalSet)>> {
    if t.n() != g.n() {
        return Err(Error::VertexMismatch { graph: g.n(), tree: t.n() });
    }
    let edge = toggle_edge(g, t).ok_or_else(|| {
        Error::Precondition("every forest edge is an edge of the graph; nothing cancels".into())
    })?;
    Ok(operational_sets(g, t)
        .filter(|ops| ops.contains(edge))
        .map(|with| {
            let mut without = with.clone();
            without.remove(edge);
            (with, without)
        })
        .collect())
}

/// Verifies that the operational sets of `t` cancel completely: the
/// matching from [`cancellation_pairs`] covers each set exactly once, the
/// two `phi` images of each pair carry the same unsigned monomial with
/// opposite signs and root degrees one apart, and the signed sum over all
/// operational sets is zero.
pub fn verify_cancellation(g: &Graph, t: &RootedTree) -> Result<bool> {
    let pairs = cancellation_pairs(g, t)?;
    let all: Vec<OperationalSet> = operational_sets(g, t).collect();
    let mut covered: Vec<&OperationalSet> = pairs.iter().flat_map(|(a, b)| [a, b]).collect();
    covered.sort();
    covered.dedup();
    if covered.len() != all.len() || pairs.len() * 2 != all.len() {
        return Ok(false);
    }

    let image = |ops: &OperationalSet| -> Result<(PairB, SignedMonomial)> {
        let b = phi(g, &PairA { tree: t.clone(), ops: ops.clone() })?;
        let m = b_side_monomial(g, &b)?;
        Ok((b, m))
    };
    for (with, without) in &pairs {
        let (b1, m1) = image(with)?;
        let (b2, m2) = image(without)?;
        if m1.monomial != m2.monomial || m1.sign != m2.sign.flip() {
            return Ok(false);
        }
        if b1.tree.degree(0) != b2.tree.degree(0) + 1 {
            return Ok(false);
        }
    }
    let mut total = Polynomial::zero(g.n());
    for ops in &all {
        total = total.add(&image(ops)?.1.to_polynomial())?;
    }
    Ok(total.is_zero())
}

/// Sum of [`b_side_monomial`] over every B pair of `g`.
pub fn b_side_expansion(g: &Graph) -> Polynomial {
    let mut total = Polynomial::zero(g.n());
    for pair in enumerate_b(g) {
        let m = b_side_monomial(g, &pair).expect("enumerated pairs are valid");
        total.add_term(m.monomial, BigInt::from(m.sign.as_int()));
    }
    total
}

/// `f_Gbar(x + x1 + ... + xn; -x1..-xn)` computed symbolically.
pub fn shifted_complement(g: &Graph) -> Polynomial {
    let n = g.n();
    let vertex_vars: Vec<usize> = (1..=n).collect();
    f_poly(&g.complement())
        .negate_vars(&vertex_vars)
        .substitute_root(&vec![1; n + 1])
        .expect("coefficient vector sized to ambient")
}

#[derive(Clone, Debug, Serialize)]
pub struct ReciprocityReport {
    pub n: usize,
    pub graphs_checked: usize,
    pub all_pass: bool,
    pub counterexamples: Vec<Graph>,
}

impl ReciprocityReport {
    pub fn for_graph(g: &Graph) -> Self {
        let pass = verify_reciprocity(g);
        ReciprocityReport {
            n: g.n(),
            graphs_checked: 1,
            all_pass: pass,
            counterexamples: if pass { Vec::new() } else { vec![g.clone()] },
        }
    }

    /// Checks every labeled graph on `n` vertices in parallel.
    pub fn exhaustive(n: usize) -> Self {
        let graphs: Vec<Graph> = all_graphs(n).collect();
        let mut counterexamples: Vec<Graph> =
            graphs.par_iter().filter(|g| !verify_reciprocity(g)).cloned().collect();
        counterexamples.sort_by_key(|g| g.to_json());
        ReciprocityReport {
            n,
            graphs_checked: graphs.len(),
            all_pass: counterexamples.is_empty(),
            counterexamples,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::{enumerate_a, WeightSequence};
    use crate::prufer;

    fn tree(p: &[usize]) -> RootedTree {
        RootedTree::new(p.to_vec()).unwrap()
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(reciprocity_rhs(&Graph::complete(2)).to_string(), "x + x1 + x2");
        assert_eq!(reciprocity_rhs(&Graph::empty(2)).to_string(), "x");
        assert_eq!(reciprocity_rhs(&Graph::empty(1)).to_string(), "1");
    }

    #[test]
    fn reciprocity_small() {
        for n in 1..=4 {
            for g in all_graphs(n) {
                assert!(verify_reciprocity(&g), "{g:?}");
                assert!(verify_reciprocity(&g.complement()), "{g:?}");
            }
        }
    }

    #[test]
    fn negation_examples() {
        assert!(negation_identity(&Graph::complete(2)));
        assert!(negation_identity(&Graph::empty(1)));
        for g in all_graphs(4) {
            assert!(negation_identity(&g));
        }
    }

    #[test]
    fn b_side_examples() {
        let g = Graph::path(3);
        let b = PairB { tree: RootedTree::star(3), weights: WeightSequence(vec![2, 2]) };
        let m = b_side_monomial(&g, &b).unwrap();
        assert_eq!((m.monomial.to_string(), m.sign), ("x2^2".to_string(), Sign::Plus));

        let b = PairB { tree: RootedTree::star(2), weights: WeightSequence(vec![0]) };
        let m = b_side_monomial(&Graph::empty(2), &b).unwrap();
        assert_eq!((m.monomial.to_string(), m.sign), ("x".to_string(), Sign::Plus));

        // k = 1: a chain 3 -> 2 -> 1 -> 0 in the complement of the empty graph
        let b = PairB { tree: tree(&[0, 1, 2]), weights: WeightSequence::default() };
        let m = b_side_monomial(&Graph::empty(3), &b).unwrap();
        // sign (-1)^(n-1) with n = 3
        assert_eq!((m.monomial.to_string(), m.sign), ("x1 * x2".to_string(), Sign::Plus));
    }

    #[test]
    fn sign_relation_exhaustive_small() {
        for n in 1..=3 {
            for g in all_graphs(n) {
                for pair in enumerate_a(&g) {
                    assert!(check_sign_relation(&g, &pair).unwrap(), "{g:?} {pair:?}");
                }
            }
        }
    }

    #[test]
    fn prufer_degree_property() {
        // tree monomial equals the monomial read off the Prüfer code
        for n in 1..=5 {
            for t in crate::forest::enumerate_rooted_trees(&Graph::complete(n)) {
                let code = prufer::encode(&t);
                let mut e = vec![0u32; n + 1];
                for &w in code.entries() {
                    e[w] += 1;
                }
                assert_eq!(Monomial::from_exponents(e), tree_monomial(&t));
            }
        }
    }

    #[test]
    fn cancellation_worked_example() {
        let g = Graph::empty(2);
        let t = tree(&[2, 0]);
        let pairs = cancellation_pairs(&g, &t).unwrap();
        let with: OperationalSet = [(1, 2)].into_iter().collect();
        assert_eq!(pairs, vec![(with.clone(), OperationalSet::new())]);
        let b1 = phi(&g, &PairA { tree: t.clone(), ops: with }).unwrap();
        let b2 = phi(&g, &PairA { tree: t.clone(), ops: OperationalSet::new() }).unwrap();
        assert_eq!(b1, PairB { tree: RootedTree::star(2), weights: WeightSequence(vec![2]) });
        assert_eq!(b2, PairB { tree: t.clone(), weights: WeightSequence::default() });
        let m1 = b_side_monomial(&g, &b1).unwrap();
        let m2 = b_side_monomial(&g, &b2).unwrap();
        assert_eq!(m1.monomial.to_string(), "x2");
        assert_eq!(m1.monomial, m2.monomial);
        assert_eq!((m1.sign, m2.sign), (Sign::Plus, Sign::Minus));
        assert!(verify_cancellation(&g, &t).unwrap());
    }

    #[test]
    fn cancellation_precondition() {
        let t = tree(&[2, 0]);
        assert!(matches!(
            cancellation_pairs(&Graph::complete(2), &t),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn expansion_matches_closed_form() {
        for n in 1..=3 {
            for g in all_graphs(n) {
                assert_eq!(b_side_expansion(&g), shifted_complement(&g), "{g:?}");
                assert_eq!(shifted_complement(&g), f_poly(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn reports() {
        let r = ReciprocityReport::exhaustive(3);
        assert_eq!((r.graphs_checked, r.all_pass), (8, true));
        let json = serde_json::to_string(&ReciprocityReport::for_graph(&Graph::path(3))).unwrap();
        assert_eq!(json, r#"{"n":3,"graphs_checked":1,"all_pass":true,"counterexamples":[]}"#);
    }
}
