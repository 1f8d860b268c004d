//! Exact scalars: rationals with an optional Gaussian-rational imaginary part.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// An element of `Q` or `Q(i)`.
///
/// The imaginary part is stored only when it is nonzero, so a real value has
/// exactly one representation and mixed real/complex inputs promote
/// transparently.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: Option<BigRational>,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        let im = if im.is_zero() { None } else { Some(im) };
        Scalar { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Scalar { re, im: None }
    }

    pub fn int(n: i64) -> Self {
        Scalar::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn complex(re: Scalar, im: Scalar) -> Self {
        assert!(re.is_real() && im.is_real(), "parts must be real");
        Scalar::new(re.re, im.re)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> BigRational {
        self.im.clone().unwrap_or_else(BigRational::zero)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_none()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: self.im.as_ref().map(|v| -v),
        }
    }

    /// Squared modulus `re^2 + im^2`, always exact.
    pub fn norm_sqr(&self) -> BigRational {
        let mut n = &self.re * &self.re;
        if let Some(im) = &self.im {
            n += im * im;
        }
        n
    }

    /// Ordering key used when a canonical sign has to be chosen: the real
    /// part decides, the imaginary part breaks ties.
    pub fn sign(&self) -> Ordering {
        match self.re.cmp(&BigRational::zero()) {
            Ordering::Equal => self.im().cmp(&BigRational::zero()),
            o => o,
        }
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::real(BigRational::zero())
    }

    fn one() -> Self {
        Scalar::real(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.im.is_none() && self.re.is_zero()
    }

    fn is_one(&self) -> bool {
        self.im.is_none() && self.re.is_one()
    }

    fn from_i64(n: i64) -> Self {
        Scalar::int(n)
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.im {
            None => Some(Scalar::real(self.re.recip())),
            Some(im) => {
                let n = self.norm_sqr();
                Some(Scalar::new(&self.re / &n, -(im / &n)))
            }
        }
    }
}

impl Field for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let im = match (&self.im, &rhs.im) {
            (None, None) => BigRational::zero(),
            (Some(a), None) | (None, Some(a)) => a.clone(),
            (Some(a), Some(b)) => a + b,
        };
        Scalar::new(&self.re + &rhs.re, im)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let im = match (&self.im, &rhs.im) {
            (None, None) => BigRational::zero(),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => -b,
            (Some(a), Some(b)) => a - b,
        };
        Scalar::new(&self.re - &rhs.re, im)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.im, &rhs.im) {
            (None, None) => Scalar::real(&self.re * &rhs.re),
            (Some(a), None) => Scalar::new(&self.re * &rhs.re, a * &rhs.re),
            (None, Some(b)) => Scalar::new(&self.re * &rhs.re, &self.re * b),
            (Some(a), Some(b)) => Scalar::new(
                &self.re * &rhs.re - a * b,
                &self.re * b + a * &rhs.re,
            ),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -&self.re,
            im: self.im.as_ref().map(|v| -v),
        }
    }
}

macro_rules! forward_owned_binops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned_binops;

forward_owned_binops!(Scalar);

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::real(r)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.im {
            None => write!(f, "{}", fmt_rational(&self.re)),
            Some(im) if self.re.is_zero() => write!(f, "{}i", fmt_rational(im)),
            Some(im) => {
                let sign = if im.is_negative() { "-" } else { "+" };
                write!(f, "({}{}{}i)", fmt_rational(&self.re), sign, fmt_rational(&im.abs()))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"p"`, `"p/q"` or `"-p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational literal: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Scalar::real)
    }
}

/// Canonical string form of a real rational (`"p"` or `"p/q"`).
pub fn rational_string(r: &BigRational) -> String {
    fmt_rational(r)
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match &self.im {
            None => serializer.serialize_str(&fmt_rational(&self.re)),
            Some(im) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("im", &fmt_rational(im))?;
                map.serialize_entry("re", &fmt_rational(&self.re))?;
                map.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RationalRepr {
    Str(String),
    Int(i64),
}

impl RationalRepr {
    fn into_rational(self) -> Result<BigRational> {
        match self {
            RationalRepr::Str(s) => parse_rational(&s),
            RationalRepr::Int(n) => Ok(BigRational::from_integer(BigInt::from(n))),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Real(RationalRepr),
    Complex { re: RationalRepr, im: RationalRepr },
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ScalarRepr::deserialize(deserializer)?;
        let out = match repr {
            ScalarRepr::Real(r) => r.into_rational().map(Scalar::real),
            ScalarRepr::Complex { re, im } => re
                .into_rational()
                .and_then(|re| im.into_rational().map(|im| Scalar::new(re, im))),
        };
        out.map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_plus_half_is_one() {
        let h = Scalar::ratio(1, 2);
        assert_eq!(h.clone() + h, Scalar::one());
    }

    #[test]
    fn gaussian_inverse() {
        let a = Scalar::complex(Scalar::int(1), Scalar::int(2));
        let inv = a.try_inverse().unwrap();
        assert_eq!(a * inv, Scalar::one());
        assert!((Scalar::i() * Scalar::i() + Scalar::one()).is_zero());
    }

    #[test]
    fn real_results_drop_imaginary_part() {
        let a = Scalar::complex(Scalar::int(3), Scalar::int(4));
        let p = a.clone() * a.conj();
        assert!(p.is_real());
        assert_eq!(p, Scalar::int(25));
    }

    #[test]
    fn parse_and_print() {
        let s: Scalar = "-6/4".parse().unwrap();
        assert_eq!(s.to_string(), "-3/2");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn json_forms() {
        let c = Scalar::complex(Scalar::ratio(1, 2), Scalar::int(-1));
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"im":"-1","re":"1/2"}"#);
        let back: Scalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
        let r: Scalar = serde_json::from_str("7").unwrap();
        assert_eq!(r, Scalar::int(7));
    }
}
