use std::fmt;

use num_traits::{PrimInt, Signed};

use super::{Arith, Nat};
use crate::error::{Error, Result};

/// Fixed-width signed integer whose arithmetic reports overflow instead of
/// wrapping. The usable magnitude is `width_bits - 1` bits.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckedInt<T>(T);

pub type CheckedI32 = CheckedInt<i32>;
pub type CheckedI64 = CheckedInt<i64>;

impl<T: PrimInt + Signed> CheckedInt<T> {
    pub const fn width_bits() -> u32 {
        (std::mem::size_of::<T>() * 8) as u32
    }

    pub fn value(self) -> T {
        self.0
    }

    fn overflow() -> Error {
        Error::Overflow {
            width: Self::width_bits(),
        }
    }

    fn nonneg(v: Option<T>) -> Result<Self> {
        match v {
            Some(v) if v.is_negative() => Err(Error::Underflow),
            Some(v) => Ok(CheckedInt(v)),
            None => Err(Self::overflow()),
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for CheckedInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<T: fmt::Display> fmt::Display for CheckedInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<T> Arith for CheckedInt<T>
where
    T: PrimInt + Signed + fmt::Debug,
{
    fn from_u64(v: u64) -> Result<Self> {
        T::from(v).map(CheckedInt).ok_or_else(Self::overflow)
    }

    fn from_nat(v: &Nat) -> Result<Self> {
        v.to_u64()
            .ok_or_else(Self::overflow)
            .and_then(Self::from_u64)
    }

    fn to_nat(&self) -> Nat {
        // Values are nonnegative by construction.
        Nat::from(self.0.to_u64().expect("checked value is nonnegative"))
    }

    fn plus(&self, rhs: &Self) -> Result<Self> {
        Self::nonneg(self.0.checked_add(&rhs.0))
    }

    fn minus(&self, rhs: &Self) -> Result<Self> {
        Self::nonneg(self.0.checked_sub(&rhs.0))
    }

    fn times(&self, rhs: &Self) -> Result<Self> {
        Self::nonneg(self.0.checked_mul(&rhs.0))
    }

    fn halved(&self) -> Result<Self> {
        let two = T::one() + T::one();
        if self.0 % two != T::zero() {
            return Err(Error::Domain(format!(
                "{:?} is odd and cannot be halved exactly",
                self.0
            )));
        }
        Ok(CheckedInt(self.0 / two))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}
