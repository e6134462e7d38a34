//! The O(lg n) algorithms.
//!
//! Two families live here:
//!
//! - φ-power methods ([`fib_golden`], [`fib_rgolden`], [`lucas_golden`],
//!   [`fib_binet_pow2`]) that raise the golden ratio to the n-th power in
//!   [`BigReal`](crate::numeric::BigReal) arithmetic and round. Their
//!   accuracy is governed by a [`PrecisionPolicy`](crate::numeric::PrecisionPolicy).
//! - integer doubling methods ([`fib_alternate`], [`fib_threesquare`],
//!   [`fib_takahashi`]) written against [`Arith`](crate::numeric::Arith) so
//!   the same code runs exactly over `Nat` or overflow-checked over
//!   `CheckedInt`.
//!
//! Every algorithm that takes an [`OpCount`] records the multiplications,
//! squarings and additions it performs.

mod alternate;
mod binet;
mod golden;
mod opcount;
mod takahashi;
mod threesquare;

pub use alternate::{fib_alternate, fib_alternate_observed, fib_alternate_with, BitPlan, FastQuad};
pub use binet::{binet_precision, binet_recursion, fib_binet_pow2};
pub use golden::{
    fib_golden, fib_rgolden, lucas_golden, pow_phi, pow_phi_observed, rgold, PhiPowerState,
};
pub use opcount::OpCount;
pub use takahashi::{fib_takahashi, fib_takahashi_observed, fib_takahashi_with, LucasPairState};
pub use threesquare::{fib_threesquare, fib_threesquare_with};

/// `⌊lg n⌋` for `n ≥ 1` as `bit_length(n) − 1`; 0 for `n = 0`.
pub fn floor_lg(n: u64) -> u32 {
    if n == 0 {
        0
    } else {
        63 - n.leading_zeros()
    }
}
