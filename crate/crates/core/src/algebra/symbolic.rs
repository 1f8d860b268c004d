//! Polynomials in fresh symbols over a coefficient ring.
//!
//! `SymPoly<K>` adjoins independent transcendentals `x_0, x_1, ...` to `K`.
//! Two values are equal exactly when they agree as polynomials, so
//! identities checked in this ring hold for every specialization of the
//! symbols.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::Ring;

/// Sorted `(symbol, exponent)` pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SymMonomial(Vec<(u32, u32)>);

impl SymMonomial {
    pub fn one() -> Self {
        SymMonomial(Vec::new())
    }

    pub fn var(id: u32) -> Self {
        SymMonomial(vec![(id, 1)])
    }

    pub fn powers(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < rhs.0.len() {
            let (a, b) = (self.0[i], rhs.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&rhs.0[j..]);
        SymMonomial(out)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct SymPoly<K> {
    terms: BTreeMap<SymMonomial, K>,
}

impl<K: Ring> SymPoly<K> {
    pub fn constant(c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(SymMonomial::one(), c);
        }
        SymPoly { terms }
    }

    /// The symbol `x_id`.
    pub fn var(id: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(SymMonomial::var(id), K::one());
        SymPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> K {
        self.terms
            .get(&SymMonomial::one())
            .cloned()
            .unwrap_or_else(K::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.0.is_empty())
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(SymMonomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: SymMonomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Replaces every symbol by a value of `K`.
    pub fn specialize(&self, values: &dyn Fn(u32) -> K) -> K {
        self.terms.iter().fold(K::zero(), |acc, (m, c)| {
            let v = m
                .0
                .iter()
                .fold(c.clone(), |p, &(id, e)| p * values(id).pow(e));
            acc + v
        })
    }

    pub fn map_coeffs<L: Ring>(&self, f: impl Fn(&K) -> L) -> SymPoly<L> {
        let mut out = SymPoly::<L>::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl<K: Ring> Ring for SymPoly<K> {
    fn zero() -> Self {
        SymPoly {
            terms: BTreeMap::new(),
        }
    }

    fn one() -> Self {
        Self::constant(K::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(K::from_i64(n))
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 && self.is_constant() {
            self.constant_term().try_inverse().map(Self::constant)
        } else {
            None
        }
    }
}

impl<K: Ring> Add for SymPoly<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<K: Ring> Neg for SymPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        SymPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<K: Ring> Sub for SymPoly<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Ring> Mul for SymPoly<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = SymPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<K: Ring + fmt::Display> fmt::Display for SymPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for &(id, e) in &m.0 {
                if e == 1 {
                    write!(f, "*x{id}")?;
                } else {
                    write!(f, "*x{id}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::Scalar;

    type P = SymPoly<Scalar>;

    #[test]
    fn commutative_product() {
        let (a, b) = (P::var(0), P::var(1));
        let l = (a.clone() + b.clone()) * (a.clone() - b.clone());
        let r = a.clone() * a - b.clone() * b;
        assert_eq!(l, r);
    }

    #[test]
    fn cancellation_leaves_zero() {
        let a = P::var(3);
        assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn only_constants_invert() {
        assert!(P::var(0).try_inverse().is_none());
        assert_eq!(
            P::from_i64(4).try_inverse(),
            Some(P::constant(Scalar::ratio(1, 4)))
        );
    }

    #[test]
    fn specialization() {
        let p = P::var(0) * P::var(0) + P::var(1) * P::from_i64(3);
        let v = p.specialize(&|id| Scalar::int(id as i64 + 2));
        assert_eq!(v, Scalar::int(4 + 9));
    }
}
