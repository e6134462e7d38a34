//! Linear-time reference sequences and the generalized recurrence.
//!
//! These are the oracles every fast algorithm is checked against, so they
//! stay as plain as possible: two rolling values, one addition per step.

use crate::error::Result;
use crate::fastfib::OpCount;
use crate::numeric::{Arith, Nat};

/// Initial values `(𝓛₀, 𝓛₁)` of a sequence following the Fibonacci recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqParams {
    pub l0: Nat,
    pub l1: Nat,
}

impl SeqParams {
    pub fn new(l0: impl Into<Nat>, l1: impl Into<Nat>) -> Self {
        SeqParams {
            l0: l0.into(),
            l1: l1.into(),
        }
    }

    pub fn fibonacci() -> Self {
        Self::new(0u64, 1u64)
    }

    pub fn lucas() -> Self {
        Self::new(2u64, 1u64)
    }
}

/// `𝓛ₙ` by direct iteration from `(l0, l1)`, using `n − 1` additions.
pub fn general_linear_with<T: Arith>(
    l0: &T,
    l1: &T,
    n: u64,
    counter: &mut OpCount,
) -> Result<T> {
    if n == 0 {
        return Ok(l0.clone());
    }
    let (mut prev, mut cur) = (l0.clone(), l1.clone());
    for _ in 1..n {
        let next = prev.plus(&cur)?;
        counter.add(1);
        counter.iter();
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `Fₙ` by iteration (F₀ = 0, F₁ = 1).
pub fn fib_linear_with<T: Arith>(n: u64, counter: &mut OpCount) -> Result<T> {
    general_linear_with(&T::from_u64(0)?, &T::from_u64(1)?, n, counter)
}

pub fn fib_linear(n: u64) -> Nat {
    fib_linear_with(n, &mut OpCount::new()).expect("natural arithmetic cannot fail")
}

/// `[F₀, F₁, …, F_max]` in one pass.
pub fn fib_table(max: u64) -> Vec<Nat> {
    let mut table = Vec::with_capacity(max as usize + 1);
    let (mut a, mut b) = (Nat::zero(), Nat::one());
    for _ in 0..=max {
        let next = a.plus(&b).expect("natural arithmetic cannot fail");
        table.push(std::mem::replace(&mut a, std::mem::replace(&mut b, next)));
    }
    table
}

/// `Lₙ` by iteration (L₀ = 2, L₁ = 1).
pub fn lucas_linear(n: u64) -> Nat {
    general_linear(&SeqParams::lucas(), n)
}

pub fn general_linear(params: &SeqParams, n: u64) -> Nat {
    general_linear_with(&params.l0, &params.l1, n, &mut OpCount::new())
        .expect("natural arithmetic cannot fail")
}

/// `𝓛ₙ = 𝓛₁·Fₙ + 𝓛₀·Fₙ₋₁`, with `Fₙ` taken from `fib`.
///
/// Index 0 returns `𝓛₀` directly since `F₋₁` is outside the domain.
pub fn general_via_fib<T, F>(params: &SeqParams, n: u64, mut fib: F) -> Result<T>
where
    T: Arith,
    F: FnMut(u64) -> Result<T>,
{
    let l0 = T::from_nat(&params.l0)?;
    if n == 0 {
        return Ok(l0);
    }
    let l1 = T::from_nat(&params.l1)?;
    let fn_ = fib(n)?;
    let fn_1 = fib(n - 1)?;
    l1.times(&fn_)?.plus(&l0.times(&fn_1)?)
}
