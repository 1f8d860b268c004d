use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A commutative ring with identity and no zero divisors.
///
/// Operators take their operands by value; generic code clones where it needs
/// to keep an operand around. Every implementor keeps values in a canonical
/// form so that `==` is equality of the represented elements.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(n: i64) -> Self;

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn try_inverse(&self) -> Option<Self>;

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is a unit.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self> {
        self.try_inverse().ok_or(Error::DivisionByZero)
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }
}
