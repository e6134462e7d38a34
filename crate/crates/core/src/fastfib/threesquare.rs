use super::{BitPlan, OpCount};
use crate::error::Result;
use crate::numeric::{Arith, Nat};

/// `Fₙ` from the triple `(F_{k−1}, F_k, F_{k+1})`, doubled with three
/// squarings per step:
///
/// ```text
/// F_{2k+1} = F_{k+1}² + F_k²
/// F_{2k−1} = F_k² + F_{k−1}²
/// F_{2k}   = F_{k+1}² − F_{k−1}²
/// ```
///
/// The last step forms only the term it returns, so checked modes overflow
/// exactly when `Fₙ` does not fit.
pub fn fib_threesquare_with<T: Arith>(n: u64, counter: &mut OpCount) -> Result<T> {
    if n == 0 {
        return T::from_u64(0);
    }
    let plan = BitPlan::new(n);
    let (mut lo, mut mid, mut hi) = (T::from_u64(0)?, T::from_u64(1)?, T::from_u64(1)?);
    let steps = plan.len();
    for (j, &odd) in plan.marks().iter().enumerate() {
        let a = hi.squared()?;
        let b = mid.squared()?;
        let c = lo.squared()?;
        counter.square();
        counter.square();
        counter.square();
        counter.iter();
        if j + 1 == steps {
            counter.add(1);
            return if odd { a.plus(&b) } else { a.minus(&c) };
        }
        let even = a.minus(&c)?;
        let (next_lo, next_mid, next_hi) = if odd {
            let up = a.plus(&b)?;
            let top = even.plus(&up)?;
            (even, up, top)
        } else {
            (b.plus(&c)?, even, a.plus(&b)?)
        };
        counter.add(3);
        lo = next_lo;
        mid = next_mid;
        hi = next_hi;
    }
    // Only n = 1 has an empty plan.
    Ok(mid)
}

pub fn fib_threesquare(n: u64, counter: &mut OpCount) -> Nat {
    fib_threesquare_with(n, counter).expect("natural arithmetic cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fastfib::{fib_alternate, floor_lg};
    use crate::numeric::CheckedI64;
    use crate::sequences::fib_table;

    #[test]
    fn examples() {
        assert_eq!(fib_threesquare(0, &mut OpCount::new()), Nat::zero());
        assert_eq!(fib_threesquare(1, &mut OpCount::new()), Nat::one());
        assert_eq!(fib_threesquare(11, &mut OpCount::new()), Nat::from(89));
    }

    #[test]
    fn agrees_with_alternate_and_counts_squares() {
        let table = fib_table(1000);
        for n in 0..=1000u64 {
            let mut c = OpCount::new();
            let v = fib_threesquare(n, &mut c);
            assert_eq!(v, fib_alternate(n, &mut OpCount::new()), "n={n}");
            assert_eq!(v, table[n as usize]);
            assert_eq!(c.squares, 3 * floor_lg(n) as u64);
            assert_eq!(c.mults, 0);
        }
    }

    #[test]
    fn checked_limit_is_the_type_limit() {
        assert!(fib_threesquare_with::<CheckedI64>(92, &mut OpCount::new()).is_ok());
        assert!(fib_threesquare_with::<CheckedI64>(93, &mut OpCount::new()).is_err());
    }
}
