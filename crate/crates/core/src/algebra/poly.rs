//! Sparse bivariate polynomials in `z` and `zeta` over [`Scalar`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{Field, Ring};
use super::scalar::{forward_owned_binops, Scalar};
use crate::error::{Error, Result};

/// Exponent pair `z^dz * zeta^dzeta`.
///
/// Ordered graded-lexicographically with `z > zeta`: total degree first, then
/// the `z` exponent. The last key of a polynomial's map is its leading term.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub dz: u32,
    pub dzeta: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { dz: 0, dzeta: 0 };

    pub fn new(dz: u32, dzeta: u32) -> Self {
        Monomial { dz, dzeta }
    }

    pub fn total(&self) -> u32 {
        self.dz + self.dzeta
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.dz + other.dz, self.dzeta + other.dzeta)
    }

    fn checked_div(self, other: Monomial) -> Option<Monomial> {
        Some(Monomial::new(
            self.dz.checked_sub(other.dz)?,
            self.dzeta.checked_sub(other.dzeta)?,
        ))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.dz.cmp(&other.dz))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `z` and `zeta`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl BivarPoly {
    pub fn constant(c: Scalar) -> Self {
        BivarPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: Scalar, dz: u32, dzeta: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(dz, dzeta), c);
        }
        BivarPoly { terms }
    }

    pub fn z() -> Self {
        BivarPoly::monomial(Scalar::one(), 1, 0)
    }

    pub fn zeta() -> Self {
        BivarPoly::monomial(Scalar::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(iter: I) -> Self {
        let mut p = BivarPoly::default();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, dz: u32, dzeta: u32) -> Scalar {
        self.terms
            .get(&Monomial::new(dz, dzeta))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn leading_term(&self) -> Option<(Monomial, &Scalar)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(0, 0)
    }

    pub fn deg_z(&self) -> u32 {
        self.terms.keys().map(|m| m.dz).max().unwrap_or(0)
    }

    pub fn deg_zeta(&self) -> u32 {
        self.terms.keys().map(|m| m.dzeta).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.leading_term().map(|(m, _)| m.total()).unwrap_or(0)
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let dz = self.terms.keys().map(|m| m.dz).min().unwrap_or(0);
        let dzeta = self.terms.keys().map(|m| m.dzeta).min().unwrap_or(0);
        Monomial::new(dz, dzeta)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn shift(&self, by: Monomial) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(m, v)| (m.mul(by), v.clone())).collect(),
        }
    }

    fn unshift(&self, by: Monomial) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.checked_div(by).expect("monomial divides"), v.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => BivarPoly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Exact quotient `self / rhs`, or `None` when `rhs` does not divide.
    pub fn exact_div(&self, rhs: &BivarPoly) -> Option<BivarPoly> {
        let (lm, lc) = rhs.leading_term()?;
        if self.is_zero() {
            return Some(BivarPoly::zero());
        }
        if rhs.is_constant() {
            return Some(self.scale(&lc.inv().ok()?));
        }
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = BivarPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lm)?;
            let qc = c * &lc_inv;
            for (rm, rc) in &rhs.terms {
                rem.add_term(rm.mul(qm), -(rc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    pub fn eval(&self, z: &Scalar, zeta: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            acc = acc + c * &(z.pow(m.dz) * zeta.pow(m.dzeta));
        }
        acc
    }

    /// Exchanges the roles of `z` and `zeta`.
    pub fn swap_vars(&self) -> Self {
        BivarPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.dzeta, m.dz), c.clone())),
        )
    }

    /// Coefficients in `lambda` of `p(lambda * z0, lambda * zeta0)`.
    pub fn on_ray(&self, z0: &Scalar, zeta0: &Scalar) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.total_degree() as usize + 1];
        for (m, c) in &self.terms {
            let k = m.total() as usize;
            out[k] = &out[k] + &(c * &(z0.pow(m.dz) * zeta0.pow(m.dzeta)));
        }
        out
    }

    /// Greatest common divisor, normalized to leading coefficient one.
    pub fn gcd(&self, other: &BivarPoly) -> BivarPoly {
        super::gcd::gcd(self, other)
    }
}

impl Ring for BivarPoly {
    fn zero() -> Self {
        BivarPoly::default()
    }

    fn one() -> Self {
        BivarPoly::constant(Scalar::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_i64(n: i64) -> Self {
        BivarPoly::constant(Scalar::int(n))
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_constant() && !self.is_zero() {
            Some(BivarPoly::constant(self.constant_term().try_inverse()?))
        } else {
            None
        }
    }
}

impl<'a> Add<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(*mb);
                let prod = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        BivarPoly { terms: acc }
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

forward_owned_binops!(BivarPoly);

impl From<Scalar> for BivarPoly {
    fn from(c: Scalar) -> Self {
        BivarPoly::constant(c)
    }
}

pub(crate) fn strip_monomial(p: &BivarPoly) -> (Monomial, BivarPoly) {
    let m = p.monomial_content();
    if m == Monomial::ONE {
        (m, p.clone())
    } else {
        (m, p.unshift(m))
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut parts = Vec::new();
    match m.dz {
        0 => {}
        1 => parts.push("z".to_string()),
        d => parts.push(format!("z^{d}")),
    }
    match m.dzeta {
        0 => {}
        1 => parts.push("zeta".to_string()),
        d => parts.push(format!("zeta^{d}")),
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_real() && c.sign() == Ordering::Less;
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: Scalar,
    dz: u32,
    dzeta: u32,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(m, c)| TermRepr {
                coeff: c.clone(),
                dz: m.dz,
                dzeta: m.dzeta,
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        Ok(BivarPoly::from_terms(
            terms
                .into_iter()
                .map(|t| (Monomial::new(t.dz, t.dzeta), t.coeff)),
        ))
    }
}

pub(crate) fn require_nonzero(p: &BivarPoly) -> Result<()> {
    if p.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> BivarPoly {
        BivarPoly::z()
    }
    fn w() -> BivarPoly {
        BivarPoly::zeta()
    }

    #[test]
    fn difference_of_squares() {
        let p = (z() + w()) * (z() - w());
        let expected = z() * z() - w() * w();
        assert_eq!(p, expected);
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn grlex_leading_term() {
        let p = z() * w() + w() * w() * w() + z();
        assert_eq!(p.leading_term().unwrap().0, Monomial::new(0, 3));
        let q = z() * w() + w() * w();
        assert_eq!(q.leading_term().unwrap().0, Monomial::new(1, 1));
    }

    #[test]
    fn exact_division() {
        let a = z() * z() - w() * w();
        assert_eq!(a.exact_div(&(z() - w())).unwrap(), z() + w());
        assert!(a.exact_div(&(z() + BivarPoly::one())).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let f = z() * w() + BivarPoly::from_i64(3);
        let g = z() - w() * w();
        let h = z() + BivarPoly::one();
        let a = f.clone() * g.clone();
        let b = f.clone() * h;
        assert_eq!(a.gcd(&b), f.monic());
        assert_eq!(g.gcd(&(z() * w())), BivarPoly::one());
    }

    #[test]
    fn ray_restriction() {
        let p = z() * w() + z() + BivarPoly::from_i64(2);
        let r = p.on_ray(&Scalar::int(2), &Scalar::int(3));
        assert_eq!(r, vec![Scalar::int(2), Scalar::int(2), Scalar::int(6)]);
    }

    #[test]
    fn display_form() {
        let p = z() * z() - w().scale(&Scalar::ratio(3, 2)) + BivarPoly::one();
        assert_eq!(p.to_string(), "z^2 - 3/2*zeta + 1");
    }
}
