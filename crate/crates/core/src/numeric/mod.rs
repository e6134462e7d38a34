//! Numeric substrate: exact naturals, overflow-checked fixed-width integers,
//! and binary floating values with an explicit precision.
//!
//! The integer algorithms are written once against [`Arith`] and run
//! unchanged over [`Nat`] (never overflows) or [`CheckedInt`] (reports the
//! first overflow instead of wrapping).

mod checked;
mod nat;
mod policy;
mod real;

pub use checked::{CheckedI32, CheckedI64, CheckedInt};
pub use nat::Nat;
pub use policy::{
    make_phi, make_sqrt5, round_to_nat, DecimalConst, PrecisionPolicy, DEFAULT_GUARD_BITS,
    DEFAULT_TRUNCATED_PLACES,
};
pub use real::BigReal;

use crate::error::Result;

/// Arithmetic over nonnegative sequence values.
///
/// Every operation either returns an in-range nonnegative result or an
/// error; no implementation may wrap silently.
pub trait Arith: Clone + PartialEq + std::fmt::Debug {
    fn from_u64(v: u64) -> Result<Self>;
    fn from_nat(v: &Nat) -> Result<Self>;
    fn to_nat(&self) -> Nat;

    fn plus(&self, rhs: &Self) -> Result<Self>;
    /// Fails with [`Error::Underflow`](crate::Error::Underflow) when `rhs > self`.
    fn minus(&self, rhs: &Self) -> Result<Self>;
    fn times(&self, rhs: &Self) -> Result<Self>;

    fn squared(&self) -> Result<Self> {
        self.times(self)
    }

    /// Multiplication by a small constant.
    fn scaled(&self, k: u64) -> Result<Self> {
        self.times(&Self::from_u64(k)?)
    }

    /// Exact division by two; odd values are a domain error.
    fn halved(&self) -> Result<Self>;

    fn is_zero(&self) -> bool;
}
