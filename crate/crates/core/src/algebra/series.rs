//! Truncated expansions at `X = infinity`.
//!
//! A [`CoeffSeries`] of order `N` stores `c_0..c_N` and stands for
//! `sum_j c_j X^{-(j+1)} + o(X^{-(N+1)})`. Operations never extend the
//! number of known coefficients.

use super::ring::Ring;
use super::rational::BivarRational;
use super::xpoly::{MainVar, XPoly};
use crate::error::{Error, Result};

/// `sum_k a_k X^{-k}` known for `k < len`.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        PowerSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Cauchy product truncated to the shorter operand.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.len().min(rhs.len());
        let coeffs = (0..n)
            .map(|k| {
                (0..=k).fold(R::zero(), |acc, i| {
                    acc + self.coeffs[i].clone() * rhs.coeffs[k - i].clone()
                })
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Reciprocal to the same number of terms; needs a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let Some(a0) = self.coeffs.first() else {
            return Ok(PowerSeries::new(Vec::new()));
        };
        let inv0 = a0.try_inverse().ok_or(Error::LeadingCoefficientZero)?;
        let mut out: Vec<R> = Vec::with_capacity(self.len());
        out.push(inv0.clone());
        for k in 1..self.len() {
            let s = (1..=k).fold(R::zero(), |acc, i| {
                acc + self.coeffs[i].clone() * out[k - i].clone()
            });
            out.push(-(s * inv0.clone()));
        }
        Ok(PowerSeries { coeffs: out })
    }
}

/// Truncated series `sum_{j=0}^{N} c_j X^{-(j+1)}` in the main variable.
#[derive(Clone, PartialEq, Debug)]
pub struct CoeffSeries<R> {
    var: MainVar,
    coeffs: Vec<R>,
}

impl<R: Ring> CoeffSeries<R> {
    pub fn new(var: MainVar, coeffs: Vec<R>) -> Self {
        CoeffSeries { var, coeffs }
    }

    pub fn var(&self) -> MainVar {
        self.var
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Option<&R> {
        self.coeffs.get(j)
    }

    /// Number of known coefficients, `N + 1`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Truncation order `N`, absent when no coefficient is known.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn truncate(&self, order: usize) -> Self {
        CoeffSeries {
            var: self.var,
            coeffs: self.coeffs.iter().take(order + 1).cloned().collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CoeffSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Coefficients `r_j` of `1 / (X * s(X)) = sum_j r_j X^{-j}`.
    ///
    /// All `N + 1` output coefficients are exact: `1/s` modulo `X^{-(N+1)}`
    /// only depends on `c_0..c_N`.
    pub fn invert(&self) -> Result<PowerSeries<R>> {
        match self.coeffs.first() {
            Some(c0) if !c0.is_zero() => PowerSeries::new(self.coeffs.clone()).inverse(),
            _ => Err(Error::LeadingCoefficientZero),
        }
    }

    /// The product `s(X) * p(X)`, where `p` is a power series in `1/X`.
    pub fn mul_power(&self, p: &PowerSeries<R>) -> Self {
        CoeffSeries {
            var: self.var,
            coeffs: PowerSeries::new(self.coeffs.clone()).mul(p).into_coeffs(),
        }
    }

    /// Exact expansion of a strictly proper `num / den` to order `order`.
    ///
    /// The leading coefficient of `den` must be a unit of `R`.
    pub fn of_rational(var: MainVar, num: &XPoly<R>, den: &XPoly<R>, order: usize) -> Result<Self> {
        let d = den.degree().ok_or(Error::DivisionByZero)?;
        if num.degree().is_some_and(|n| n >= d) {
            return Err(Error::NotStrictlyProper);
        }
        let lead_inv = den.coeffs()[d]
            .try_inverse()
            .ok_or(Error::LeadingCoefficientZero)?;
        // num = den * sum_m c_m X^{-(m+1)}; matching X^{d-1-m} gives
        // p_d c_m = num_{d-1-m} - sum_{i=1}^{min(m,d)} p_{d-i} c_{m-i}.
        let mut coeffs: Vec<R> = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = if m < d { num.coeff(d - 1 - m) } else { R::zero() };
            for i in 1..=m.min(d) {
                acc = acc - den.coeff(d - i) * coeffs[m - i].clone();
            }
            coeffs.push(acc * lead_inv.clone());
        }
        Ok(CoeffSeries { var, coeffs })
    }
}

impl CoeffSeries<BivarRational> {
    /// Builds a series after checking the main-variable constraint: with
    /// `X = z` no coefficient may involve `z`.
    pub fn checked(var: MainVar, coeffs: Vec<BivarRational>) -> Result<Self> {
        if var == MainVar::Z {
            if let Some(j) = coeffs.iter().position(BivarRational::depends_on_z) {
                return Err(Error::ModeMismatch(format!(
                    "coefficient {j} involves z while X = z"
                )));
            }
        }
        Ok(CoeffSeries { var, coeffs })
    }
}

/// Expansion of a strictly proper rational function in `X`.
pub fn series_of_rational<R: Ring>(
    var: MainVar,
    num: &XPoly<R>,
    den: &XPoly<R>,
    order: usize,
) -> Result<CoeffSeries<R>> {
    CoeffSeries::of_rational(var, num, den, order)
}
