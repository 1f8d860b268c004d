//! Polynomials and fractions in the formal main variable `X`.
//!
//! `X` stands for `z` (nonsymmetric mode) or for the product `z*zeta`
//! (symmetric mode). Coefficients come from a ring `R`, usually
//! [`BivarRational`]; the field structure of `R` is only needed for gcds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::BivarRational;
use super::ring::{Field, Ring};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Which quantity the formal variable `X` represents.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum MainVar {
    /// `X = z`, coefficients in `Q(zeta)`.
    #[serde(rename = "Z")]
    Z,
    /// `X = z*zeta`, coefficients in `Q(z, zeta)`.
    #[serde(rename = "ZZETA")]
    ZZeta,
}

impl MainVar {
    /// The value of `X` at a point `(z0, zeta0)`.
    pub fn at(self, z: &Scalar, zeta: &Scalar) -> Scalar {
        match self {
            MainVar::Z => z.clone(),
            MainVar::ZZeta => z * zeta,
        }
    }

    pub fn as_bivar(self) -> BivarRational {
        match self {
            MainVar::Z => BivarRational::z(),
            MainVar::ZZeta => BivarRational::z() * BivarRational::zeta(),
        }
    }
}

/// Dense polynomial in `X`, lowest degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct XPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> XPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `X - c`
    pub fn linear(c: R) -> Self {
        Self::new(vec![-c, R::one()])
    }

    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(R::is_one)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> XPoly<S> {
        XPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<XPoly<S>> {
        Ok(XPoly::new(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    /// Horner evaluation at `X = x`.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl<R: Field> XPoly<R> {
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero")),
        }
    }

    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self)> {
        let d = rhs.degree().ok_or(Error::DivisionByZero)?;
        let inv = rhs.coeffs[d].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![R::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].clone() * inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - b.clone() * c.clone();
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic gcd by the Euclidean algorithm over the coefficient field.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl XPoly<BivarRational> {
    /// Substitutes the meaning of `X` back in, giving a bivariate function.
    pub fn substitute(&self, var: MainVar) -> BivarRational {
        let x = var.as_bivar();
        self.eval(&x)
    }

    pub fn eval_at(&self, var: MainVar, z: &Scalar, zeta: &Scalar) -> Result<Scalar> {
        let x = var.at(z, zeta);
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.eval(z, zeta)?;
        }
        Ok(acc)
    }
}

impl<R: Ring> Add for XPoly<R> {
    type Output = XPoly<R>;
    fn add(self, rhs: XPoly<R>) -> XPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<R: Ring> Sub for XPoly<R> {
    type Output = XPoly<R>;
    fn sub(self, rhs: XPoly<R>) -> XPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<R: Ring> Neg for XPoly<R> {
    type Output = XPoly<R>;
    fn neg(self) -> XPoly<R> {
        XPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Mul for XPoly<R> {
    type Output = XPoly<R>;
    fn mul(self, rhs: XPoly<R>) -> XPoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        XPoly::new(out)
    }
}

impl<R: Ring> Ring for XPoly<R> {
    fn zero() -> Self {
        XPoly::zero()
    }
    fn one() -> Self {
        XPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        XPoly::constant(R::from_i64(n))
    }
    fn try_inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(XPoly::constant(self.coeffs[0].try_inverse()?)),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct XTerm<R> {
    #[serde(rename = "dX")]
    dx: usize,
    coeff: R,
}

impl<R: Ring + Serialize> Serialize for XPoly<R> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(dx, c)| XTerm { dx, coeff: c.clone() }),
        )
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for XPoly<R> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<XTerm<R>> = Vec::deserialize(d)?;
        let mut p = XPoly::zero();
        for t in terms {
            p = p + XPoly::constant(t.coeff).shift(t.dx);
        }
        Ok(p)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for XPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "({c})")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "({c})*X")?,
                (_, true) => write!(f, "X^{k}")?,
                (_, false) => write!(f, "({c})*X^{k}")?,
            }
        }
        Ok(())
    }
}

/// A quotient `num / den` of polynomials in `X`.
///
/// Not reduced in general; [`XFraction::same_value`] compares by
/// cross-multiplication, and [`XFraction::reduced`] gives the canonical form
/// when the coefficients form a field.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(bound(
    serialize = "R: Ring + Serialize",
    deserialize = "R: Ring + Deserialize<'de>"
))]
pub struct XFraction<R> {
    pub num: XPoly<R>,
    pub den: XPoly<R>,
}

impl<R: Ring> XFraction<R> {
    pub fn new(num: XPoly<R>, den: XPoly<R>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(XFraction { num, den })
    }

    pub fn constant(c: R) -> Self {
        XFraction {
            num: XPoly::constant(c),
            den: XPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::constant(R::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num < deg den`; the zero fraction counts as strictly proper.
    pub fn is_strictly_proper(&self) -> bool {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => true,
            (Some(n), Some(d)) => n < d,
            (Some(_), None) => false,
        }
    }

    pub fn same_value(&self, other: &Self) -> bool {
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> XFraction<S> {
        XFraction {
            num: self.num.map(&f),
            den: self.den.map(&f),
        }
    }
}

impl<R: Field> XFraction<R> {
    /// Canonical form: common factors removed and a monic denominator.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = self.num.gcd(&self.den);
        let (num, _) = self.num.divrem(&g).expect("nonzero gcd");
        let (den, _) = self.den.divrem(&g).expect("nonzero gcd");
        let lc = den.leading_coeff().expect("nonzero").inv().expect("nonzero");
        XFraction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn eval(&self, x: &R) -> Result<R> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::EvaluationPole);
        }
        self.num.eval(x).checked_div(&d)
    }
}

impl<R: Ring> PartialEq for XFraction<R> {
    fn eq(&self, other: &Self) -> bool {
        self.same_value(other)
    }
}

impl<R: Field> Add for XFraction<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        XFraction {
            num: self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            den: self.den * rhs.den,
        }
        .reduced()
    }
}

impl<R: Field> Sub for XFraction<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Field> Neg for XFraction<R> {
    type Output = Self;
    fn neg(self) -> Self {
        XFraction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<R: Field> Mul for XFraction<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        XFraction {
            num: self.num * rhs.num,
            den: self.den * rhs.den,
        }
        .reduced()
    }
}

/// Rational functions of `X` over a coefficient field.
impl<R: Field> Ring for XFraction<R> {
    fn zero() -> Self {
        XFraction::constant(R::zero())
    }
    fn one() -> Self {
        XFraction::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        XFraction::constant(R::from_i64(n))
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(
            XFraction {
                num: self.den.clone(),
                den: self.num.clone(),
            }
            .reduced(),
        )
    }
}

impl<R: Field> Field for XFraction<R> {}

impl XFraction<BivarRational> {
    pub fn substitute(&self, var: MainVar) -> Result<BivarRational> {
        self.num.substitute(var).checked_div(&self.den.substitute(var))
    }

    pub fn eval_at(&self, var: MainVar, z: &Scalar, zeta: &Scalar) -> Result<Scalar> {
        let d = self.den.eval_at(var, z, zeta)?;
        if d.is_zero() {
            return Err(Error::EvaluationPole);
        }
        self.num.eval_at(var, z, zeta)?.checked_div(&d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn euclid_gcd_over_q() {
        // (X-1)(X+2) and (X-1)(X-3)
        let a = XPoly::linear(q(1)) * XPoly::linear(q(-2));
        let b = XPoly::linear(q(1)) * XPoly::linear(q(3));
        assert_eq!(a.gcd(&b), XPoly::linear(q(1)));
    }

    #[test]
    fn reduce_fraction() {
        let f = XFraction::new(
            XPoly::linear(q(2)).scale(&q(4)),
            XPoly::linear(q(2)) * XPoly::linear(q(5)).scale(&q(2)),
        )
        .unwrap();
        let r = f.reduced();
        assert_eq!(r.num, XPoly::constant(q(2)));
        assert_eq!(r.den, XPoly::linear(q(5)));
        assert!(r.same_value(&f));
    }

    #[test]
    fn substitute_symmetric_main_variable() {
        let p: XPoly<BivarRational> = XPoly::linear(BivarRational::from_i64(2));
        let expected = BivarRational::z() * BivarRational::zeta() - BivarRational::from_i64(2);
        assert_eq!(p.substitute(MainVar::ZZeta), expected);
        assert_eq!(p.substitute(MainVar::Z), BivarRational::z() - BivarRational::from_i64(2));
    }
}
