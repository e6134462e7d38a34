use super::{floor_lg, OpCount};
use crate::error::{Error, Result};
use crate::numeric::{Arith, Nat};

/// Which doubling steps are followed by a shift, most significant first.
///
/// `mark_odd[j − 1]` is bit `N − j` of `n` for `j = 1..=N`, `N = ⌊lg n⌋`;
/// the leading 1-bit itself is consumed by the initial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitPlan {
    mark_odd: Vec<bool>,
}

impl BitPlan {
    pub fn new(n: u64) -> Self {
        let top = floor_lg(n);
        BitPlan {
            mark_odd: (1..=top).map(|j| (n >> (top - j)) & 1 == 1).collect(),
        }
    }

    /// Fills the plan the way a halving loop would: walk `n` downward and
    /// record odd values from the last slot back to the first.
    pub fn by_halving(n: u64) -> Self {
        let top = floor_lg(n) as usize;
        let mut mark_odd = vec![false; top];
        let mut i = n;
        for slot in mark_odd.iter_mut().rev() {
            *slot = i % 2 == 1;
            i /= 2;
        }
        BitPlan { mark_odd }
    }

    pub fn len(&self) -> usize {
        self.mark_odd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mark_odd.is_empty()
    }

    pub fn marks(&self) -> &[bool] {
        &self.mark_odd
    }
}

/// Four adjacent terms `(F_{k−2}, F_{k−1}, F_k, F_{k+1})`.
///
/// `fh` is `None` only after the final iteration, when `F_{k+1}` was not
/// representable and is never read again.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastQuad<T> {
    pub fll: T,
    pub fl: T,
    pub fm: T,
    pub fh: Option<T>,
    pub k: u64,
}

impl<T: Arith> FastQuad<T> {
    /// k = 1, with F₋₁ = 1.
    pub fn initial() -> Result<Self> {
        Ok(FastQuad {
            fll: T::from_u64(1)?,
            fl: T::from_u64(0)?,
            fm: T::from_u64(1)?,
            fh: Some(T::from_u64(1)?),
            k: 1,
        })
    }

    /// k → 2k with two multiplications:
    /// `F_{2k−2} = F_{k−1}(F_k + F_{k−2})`, `F_{2k} = F_k(F_{k+1} + F_{k−1})`,
    /// `F_{2k−1} = F_{2k} − F_{2k−2}`.
    pub fn double(&mut self, counter: &mut OpCount) -> Result<()> {
        let fh = self
            .fh
            .as_ref()
            .expect("doubling needs F_{k+1}; only the final quad may lack it");
        let fll = self.fl.times(&self.fm.plus(&self.fll)?)?;
        let fm = self.fm.times(&fh.plus(&self.fl)?)?;
        self.fl = fm.minus(&fll)?;
        self.fll = fll;
        self.fm = fm;
        self.fh = None;
        self.k *= 2;
        counter.mul();
        counter.mul();
        counter.add(3);
        Ok(())
    }

    /// k → k + 1 on the lower three terms.
    pub fn shift(&mut self, counter: &mut OpCount) -> Result<()> {
        let next = self.fm.plus(&self.fl)?;
        self.fll = std::mem::replace(&mut self.fl, std::mem::replace(&mut self.fm, next));
        self.k += 1;
        counter.add(1);
        Ok(())
    }

    /// Restores `fh = fm + fl`. On the final iteration an overflow here is
    /// dropped, since the result `fm` is already complete.
    pub fn close(&mut self, last: bool, counter: &mut OpCount) -> Result<()> {
        counter.add(1);
        match self.fm.plus(&self.fl) {
            Ok(v) => self.fh = Some(v),
            Err(Error::Overflow { .. }) if last => self.fh = None,
            Err(e) => return Err(e),
        }
        Ok(())
    }
}

/// `Fₙ` with two multiplications per bit of `n`; `observe` sees the quad
/// at the bottom of every loop iteration.
pub fn fib_alternate_observed<T: Arith>(
    n: u64,
    counter: &mut OpCount,
    mut observe: impl FnMut(&FastQuad<T>),
) -> Result<T> {
    if n == 0 {
        return T::from_u64(0);
    }
    let plan = BitPlan::new(n);
    let mut quad = FastQuad::<T>::initial()?;
    for (j, &odd) in plan.marks().iter().enumerate() {
        quad.double(counter)?;
        if odd {
            quad.shift(counter)?;
        }
        quad.close(j + 1 == plan.len(), counter)?;
        counter.iter();
        observe(&quad);
    }
    debug_assert_eq!(quad.k, n);
    Ok(quad.fm)
}

pub fn fib_alternate_with<T: Arith>(n: u64, counter: &mut OpCount) -> Result<T> {
    fib_alternate_observed(n, counter, |_| {})
}

pub fn fib_alternate(n: u64, counter: &mut OpCount) -> Nat {
    fib_alternate_with(n, counter).expect("natural arithmetic cannot fail")
}
