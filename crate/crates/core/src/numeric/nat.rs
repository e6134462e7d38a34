use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Arith;
use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nat(BigUint);

impl Nat {
    pub fn zero() -> Self {
        Nat(BigUint::zero())
    }

    pub fn one() -> Self {
        Nat(BigUint::from(1u32))
    }

    /// Number of significant bits; zero has length 0.
    pub fn bit_length(&self) -> u64 {
        self.0.bits()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// `|self - other|`.
    pub fn abs_diff(&self, other: &Nat) -> Nat {
        if self >= other {
            Nat(&self.0 - &other.0)
        } else {
            Nat(&other.0 - &self.0)
        }
    }
}

impl From<u64> for Nat {
    fn from(v: u64) -> Self {
        Nat(BigUint::from(v))
    }
}

impl From<BigUint> for Nat {
    fn from(v: BigUint) -> Self {
        Nat(v)
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Nat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Domain(format!("not a nonnegative decimal integer: {s:?}")));
        }
        BigUint::from_str(s)
            .map(Nat)
            .map_err(|e| Error::Domain(e.to_string()))
    }
}

impl Arith for Nat {
    fn from_u64(v: u64) -> Result<Self> {
        Ok(Nat::from(v))
    }

    fn from_nat(v: &Nat) -> Result<Self> {
        Ok(v.clone())
    }

    fn to_nat(&self) -> Nat {
        self.clone()
    }

    fn plus(&self, rhs: &Self) -> Result<Self> {
        Ok(Nat(&self.0 + &rhs.0))
    }

    fn minus(&self, rhs: &Self) -> Result<Self> {
        if rhs.0 > self.0 {
            return Err(Error::Underflow);
        }
        Ok(Nat(&self.0 - &rhs.0))
    }

    fn times(&self, rhs: &Self) -> Result<Self> {
        Ok(Nat(&self.0 * &rhs.0))
    }

    fn squared(&self) -> Result<Self> {
        Ok(Nat(&self.0 * &self.0))
    }

    fn scaled(&self, k: u64) -> Result<Self> {
        Ok(Nat(&self.0 * k))
    }

    fn halved(&self) -> Result<Self> {
        if self.0.is_odd() {
            return Err(Error::Domain(format!("{self} is odd and cannot be halved exactly")));
        }
        Ok(Nat(&self.0 >> 1u32))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}
