//! Canonical bivariate rational functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{require_nonzero, BivarPoly};
use super::ring::{Field, Ring};
use super::scalar::{forward_owned_binops, Scalar};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic in graded-lex order.
///
/// Because the form is canonical, structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BivarRational {
    num: BivarPoly,
    den: BivarPoly,
}

impl BivarRational {
    pub fn new(num: BivarPoly, den: BivarPoly) -> Result<Self> {
        require_nonzero(&den)?;
        if num.is_zero() {
            return Ok(BivarRational::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        Ok(Self::with_monic_den(num, den))
    }

    fn with_monic_den(num: BivarPoly, den: BivarPoly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            BivarRational { num, den }
        } else {
            let inv = lc.inv().expect("nonzero denominator");
            BivarRational {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: BivarPoly) -> Self {
        BivarRational {
            num: p,
            den: BivarPoly::one(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_poly(BivarPoly::constant(c))
    }

    pub fn z() -> Self {
        Self::from_poly(BivarPoly::z())
    }

    pub fn zeta() -> Self {
        Self::from_poly(BivarPoly::zeta())
    }

    pub fn numer(&self) -> &BivarPoly {
        &self.num
    }

    pub fn denom(&self) -> &BivarPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn depends_on_z(&self) -> bool {
        self.num.deg_z() > 0 || self.den.deg_z() > 0
    }

    pub fn depends_on_zeta(&self) -> bool {
        self.num.deg_zeta() > 0 || self.den.deg_zeta() > 0
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        BivarRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn eval(&self, z: &Scalar, zeta: &Scalar) -> Result<Scalar> {
        let d = self.den.eval(z, zeta);
        if d.is_zero() {
            return Err(Error::EvaluationPole);
        }
        Ok(self.num.eval(z, zeta) * d.inv()?)
    }

    pub fn swap_vars(&self) -> Self {
        BivarRational::new(self.num.swap_vars(), self.den.swap_vars()).expect("nonzero")
    }
}

impl Ring for BivarRational {
    fn zero() -> Self {
        Self::from_poly(BivarPoly::zero())
    }

    fn one() -> Self {
        Self::from_poly(BivarPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(Scalar::int(n))
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::with_monic_den(self.den.clone(), self.num.clone()))
    }
}

impl Field for BivarRational {}

impl<'a> Add<&'a BivarRational> for &'a BivarRational {
    type Output = BivarRational;
    fn add(self, rhs: &BivarRational) -> BivarRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return BivarRational::from_poly(&self.num + &rhs.num);
        }
        // a/b + c/d with g = gcd(b, d); only g can share factors with the sum.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return BivarRational::with_monic_den(num, den);
        }
        let b_g = self.den.exact_div(&g).expect("gcd divides");
        let d_g = rhs.den.exact_div(&g).expect("gcd divides");
        let t = &(&self.num * &d_g) + &(&rhs.num * &b_g);
        if t.is_zero() {
            return BivarRational::zero();
        }
        let g2 = t.gcd(&g);
        let den_tail = g.exact_div(&g2).expect("gcd divides");
        let num = t.exact_div(&g2).expect("gcd divides");
        let den = &(&den_tail * &b_g) * &d_g;
        BivarRational::with_monic_den(num, den)
    }
}

impl<'a> Sub<&'a BivarRational> for &'a BivarRational {
    type Output = BivarRational;
    fn sub(self, rhs: &BivarRational) -> BivarRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BivarRational> for &'a BivarRational {
    type Output = BivarRational;
    fn mul(self, rhs: &BivarRational) -> BivarRational {
        if self.is_zero() || rhs.is_zero() {
            return BivarRational::zero();
        }
        // Cross-cancel: gcd(a, d) and gcd(c, b) are the only common factors.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cancel = |p: &BivarPoly, g: &BivarPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.exact_div(g).expect("gcd divides")
            }
        };
        let num = &cancel(&self.num, &g1) * &cancel(&rhs.num, &g2);
        let den = &cancel(&self.den, &g2) * &cancel(&rhs.den, &g1);
        BivarRational::with_monic_den(num, den)
    }
}

impl Neg for &BivarRational {
    type Output = BivarRational;
    fn neg(self) -> BivarRational {
        BivarRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned_binops!(BivarRational);

impl From<Scalar> for BivarRational {
    fn from(c: Scalar) -> Self {
        BivarRational::constant(c)
    }
}

impl From<BivarPoly> for BivarRational {
    fn from(p: BivarPoly) -> Self {
        BivarRational::from_poly(p)
    }
}

impl fmt::Display for BivarRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let wrap = |p: &BivarPoly| {
                if p.num_terms() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                }
            };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for BivarRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    den: BivarPoly,
    num: BivarPoly,
}

impl Serialize for BivarRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRepr {
            den: self.den.clone(),
            num: self.num.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivarRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = RationalRepr::deserialize(deserializer)?;
        BivarRational::new(r.num, r.den).map_err(D::Error::custom)
    }
}
