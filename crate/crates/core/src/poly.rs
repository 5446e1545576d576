//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! A polynomial lives in an ambient space of `n + 1` variables: `x` at
//! index 0 (the root variable) and `x1..xn`. Terms are keyed by exponent
//! vector and ordered graded-lexicographically; [`fmt::Display`] prints the
//! largest term first:
//!
//! ```text
//! x^2 + 2 * x * x1 + x1^2 - 3 * x2 + 1
//! ```
//!
//! Coefficient `1` is omitted unless the term is constant, exponent-1
//! superscripts are omitted, and the zero polynomial prints as `0`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector; position 0 is `x`, position `i` is `xi`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n + 1])
    }

    pub fn var(n: usize, index: usize) -> Self {
        let mut m = Monomial::one(n);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "a monomial needs the root variable slot");
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Ambient vertex count `n` (one less than the number of variables).
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" * ")?;
            }
            first = false;
            if i == 0 {
                f.write_str("x")?;
            } else {
                write!(f, "x{i}")?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Polynomial::constant(n, 1)
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        Polynomial::monomial(Monomial::one(n), c)
    }

    pub fn var(n: usize, index: usize) -> Self {
        assert!(index <= n, "variable x{index} outside ambient n={n}");
        Polynomial::monomial(Monomial::var(n, index), 1)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Polynomial::zero(m.n());
        p.add_term(m, c.into());
        p
    }

    /// `x + x1 + ... + xn`.
    pub fn sum_of_vars(n: usize) -> Self {
        let mut p = Polynomial::zero(n);
        for i in 0..=n {
            p.add_term(Monomial::var(n, i), BigInt::one());
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Adds `c * m` in place, purging the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        assert_eq!(m.n(), self.n, "monomial ambient size differs from polynomial");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.times(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Polynomial {
        let c = c.into();
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * &c)).collect();
        Polynomial { n: self.n, terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    pub fn evaluate(&self, values: &[i64]) -> Result<BigInt> {
        if values.len() != self.n + 1 {
            return Err(Error::LengthMismatch { expected: self.n + 1, got: values.len() });
        }
        let values: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in values.iter().zip(m.exponents()) {
                term *= num_traits::pow(v.clone(), e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Replaces `x` by the linear form `c0*x + c1*x1 + ... + cn*xn`.
    pub fn substitute_root(&self, coeffs: &[i64]) -> Result<Polynomial> {
        if coeffs.len() != self.n + 1 {
            return Err(Error::LengthMismatch { expected: self.n + 1, got: coeffs.len() });
        }
        let mut form = Polynomial::zero(self.n);
        for (i, &c) in coeffs.iter().enumerate() {
            form.add_term(Monomial::var(self.n, i), BigInt::from(c));
        }
        let max_d = self.terms.keys().map(|m| m.exponent(0)).max().unwrap_or(0);
        let mut powers = vec![Polynomial::one(self.n)];
        for d in 1..=max_d as usize {
            let next = powers[d - 1].mul(&form).expect("same ambient");
            powers.push(next);
        }
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let d = std::mem::take(&mut rest.0[0]) as usize;
            for (pm, pc) in &powers[d].terms {
                out.add_term(pm.times(&rest), pc * c);
            }
        }
        Ok(out)
    }

    /// Flips each coefficient by `(-1)^(exponent sum over the masked indices)`.
    pub fn negate_vars(&self, mask: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let flips: u32 = mask.iter().map(|&i| m.exponent(i)).sum();
                let c = if flips % 2 == 1 { -c } else { c.clone() };
                (m.clone(), c)
            })
            .collect();
        Polynomial { n: self.n, terms }
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Re-embeds into ambient size `n_new`, sending `xi` to `x(i + offset)`
    /// and leaving `x` in place.
    pub fn embed(&self, n_new: usize, offset: usize) -> Result<Polynomial> {
        if offset + self.n > n_new {
            return Err(Error::LengthMismatch { expected: n_new, got: offset + self.n });
        }
        let mut out = Polynomial::zero(n_new);
        for (m, c) in &self.terms {
            let mut e = vec![0; n_new + 1];
            e[0] = m.exponent(0);
            for i in 1..=self.n {
                e[i + offset] = m.exponent(i);
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Sum of all coefficients (the value at all ones).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let constant = m.degree() == 0;
            if constant {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude} * {m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn additive_inverse_and_identity() {
        let p = x(1, 1);
        assert!(p.add(&p.scale(-1)).unwrap().is_zero());
        let q = x(1, 0).add(&x(1, 1)).unwrap();
        assert_eq!(q.mul(&Polynomial::one(1)).unwrap(), q);
    }

    #[test]
    fn square_of_three_variable_sum() {
        // Oracle: expand (x + x1 + x2)(x + x1 + x2) by collecting the nine
        // products a*b over {x, x1, x2} by hand.
        let s = Polynomial::sum_of_vars(2);
        let mut expected = Polynomial::zero(2);
        for a in 0..3 {
            for b in 0..3 {
                expected = expected.add(&x(2, a).mul(&x(2, b)).unwrap()).unwrap();
            }
        }
        assert_eq!(s.pow(2), expected);
        assert_eq!(
            s.pow(2).to_string(),
            "x^2 + 2 * x * x1 + 2 * x * x2 + x1^2 + 2 * x1 * x2 + x2^2"
        );
    }

    #[test]
    fn ambient_mismatch() {
        assert!(matches!(
            x(1, 0).add(&x(2, 0)),
            Err(Error::AmbientMismatch { left: 1, right: 2 })
        ));
        assert!(x(1, 0).mul(&x(3, 0)).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let s = Polynomial::sum_of_vars(2);
        assert_eq!(s.evaluate(&[1, 1, 1]).unwrap(), BigInt::from(3));
        assert_eq!(Polynomial::zero(4).evaluate(&[7, 1, 2, 3, 4]).unwrap(), BigInt::zero());
        assert_eq!(
            Polynomial::sum_of_vars(3).pow(3).evaluate(&[1; 4]).unwrap(),
            BigInt::from(64)
        );
        assert!(matches!(s.evaluate(&[1, 1]), Err(Error::LengthMismatch { expected: 3, got: 2 })));
    }

    #[test]
    fn substitute_root_examples() {
        assert_eq!(x(2, 0).substitute_root(&[-1, -1, -1]).unwrap().to_string(), "-x - x1 - x2");
        assert_eq!(x(2, 1).substitute_root(&[5, -3, 2]).unwrap(), x(2, 1));
        let sq = x(1, 0).pow(2).substitute_root(&[-1, -1]).unwrap();
        assert_eq!(sq.to_string(), "x^2 + 2 * x * x1 + x1^2");
        assert!(x(1, 0).substitute_root(&[1]).is_err());
    }

    #[test]
    fn negate_vars_examples() {
        let s = x(1, 0).add(&x(1, 1)).unwrap();
        assert_eq!(s.negate_vars(&[0, 1]).to_string(), "-x - x1");
        let prod = x(1, 0).mul(&x(1, 1)).unwrap();
        assert_eq!(prod.negate_vars(&[0, 1]), prod);
    }

    #[test]
    fn homogeneity_examples() {
        assert!(Polynomial::sum_of_vars(2).is_homogeneous(1));
        let mixed = x(1, 0).add(&x(1, 0).mul(&x(1, 1)).unwrap()).unwrap();
        assert!(!mixed.is_homogeneous(1));
        assert!(Polynomial::zero(3).is_homogeneous(0) && Polynomial::zero(3).is_homogeneous(5));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert_eq!(Polynomial::one(2).to_string(), "1");
        assert_eq!(Polynomial::constant(0, -4).to_string(), "-4");
        let p = x(2, 2)
            .scale(-3)
            .add(&Polynomial::one(2))
            .unwrap()
            .add(&x(2, 0).pow(2))
            .unwrap();
        assert_eq!(p.to_string(), "x^2 - 3 * x2 + 1");
    }

    #[test]
    fn embed_shifts_vertex_variables() {
        let p = x(1, 0).add(&x(1, 1)).unwrap();
        let e = p.embed(3, 2).unwrap();
        assert_eq!(e.to_string(), "x + x3");
        assert!(p.embed(1, 1).is_err());
    }

    fn small_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, n + 1), -4i64..5), 0..5).prop_map(
            move |terms| {
                let mut p = Polynomial::zero(n);
                for (e, c) in terms {
                    p.add_term(Monomial::from_exponents(e), BigInt::from(c));
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(2), b in small_poly(2), c in small_poly(2)) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.add(&b).unwrap().add(&c).unwrap(),
                a.add(&b.add(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn substitution_commutes_with_evaluation(
            p in small_poly(2),
            coeffs in prop::collection::vec(-3i64..4, 3),
            point in prop::collection::vec(-3i64..4, 3),
        ) {
            let inner: i64 = coeffs.iter().zip(&point).map(|(c, v)| c * v).sum();
            let mut shifted = point.clone();
            shifted[0] = inner;
            prop_assert_eq!(
                p.substitute_root(&coeffs).unwrap().evaluate(&point).unwrap(),
                p.evaluate(&shifted).unwrap()
            );
        }

        #[test]
        fn identity_substitution(p in small_poly(3)) {
            prop_assert_eq!(p.substitute_root(&[1, 0, 0, 0]).unwrap(), p);
        }
    }
}
