use super::{floor_lg, OpCount};
use crate::error::Result;
use crate::numeric::{Arith, Nat};

/// State of the Lucas-pair iteration: `f = F_k`, `l = L_k` and
/// `sign = (−1)^k`, so `l² − 5f² = 4·sign` after each update of `sign`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasPairState<T> {
    pub f: T,
    pub l: T,
    pub sign: i8,
    pub mask: u64,
}

/// `Fₙ` by products of Lucas numbers, following the published listing:
/// per bit, `F_{2k} = 2F_{k+1}² − 3F_k² − 2(−1)^k` and
/// `L_{2k} = 5F_k² + 2(−1)^k`, with an optional step to `k + 1`; the
/// final bit is handled by `F_{2k} = F_k·L_k` or
/// `F_{2k+1} = F_{k+1}·L_k − (−1)^k`.
///
/// `observe` sees the state after each loop iteration. Every `(f + l)/2`
/// is checked to divide exactly, since `F_k + L_k = 2F_{k+1}`.
pub fn fib_takahashi_observed<T: Arith>(
    n: u64,
    counter: &mut OpCount,
    mut observe: impl FnMut(&LucasPairState<T>),
) -> Result<T> {
    match n {
        0 => return T::from_u64(0),
        1 | 2 => return T::from_u64(1),
        _ => {}
    }
    let one = T::from_u64(1)?;
    let two = T::from_u64(2)?;
    let top = floor_lg(n);
    let mut s = LucasPairState {
        f: one.clone(),
        l: one.clone(),
        sign: -1,
        mask: 1u64 << (top - 1),
    };
    for _ in 1..top {
        let temp = s.f.squared()?;
        let f_next = s.f.plus(&s.l)?.halved()?;
        let twice = f_next.squared()?.scaled(2)?;
        let thrice = temp.scaled(3)?;
        let five = temp.scaled(5)?;
        counter.square();
        counter.square();
        counter.add(5);
        // f ← 2f² − 3·temp − 2·sign,  l ← 5·temp + 2·sign
        if s.sign < 0 {
            s.f = twice.plus(&two)?.minus(&thrice)?;
            s.l = five.minus(&two)?;
        } else {
            s.f = twice.minus(&thrice.plus(&two)?)?;
            s.l = five.plus(&two)?;
        }
        s.sign = 1;
        if n & s.mask != 0 {
            let temp = s.f.clone();
            s.f = s.f.plus(&s.l)?.halved()?;
            s.l = s.f.plus(&temp.scaled(2)?)?;
            s.sign = -1;
            counter.add(4);
        }
        // The listing's indentation leaves the placement of this halving
        // ambiguous; it belongs inside the loop so that the epilogue tests
        // bit 0.
        s.mask >>= 1;
        counter.iter();
        observe(&s);
    }
    debug_assert_eq!(s.mask, 1);
    counter.mul();
    if n & s.mask == 0 {
        s.f.times(&s.l)
    } else {
        let f = s.f.plus(&s.l)?.halved()?;
        counter.add(3);
        let prod = f.times(&s.l)?;
        if s.sign < 0 {
            prod.plus(&one)
        } else {
            prod.minus(&one)
        }
    }
}

pub fn fib_takahashi_with<T: Arith>(n: u64, counter: &mut OpCount) -> Result<T> {
    fib_takahashi_observed(n, counter, |_| {})
}

pub fn fib_takahashi(n: u64, counter: &mut OpCount) -> Nat {
    fib_takahashi_with(n, counter).expect("natural arithmetic cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fastfib::fib_alternate;
    use crate::sequences::{fib_table, lucas_linear};

    #[test]
    fn examples() {
        assert_eq!(fib_takahashi(2, &mut OpCount::new()), Nat::one());
        assert_eq!(fib_takahashi(10, &mut OpCount::new()), Nat::from(55));
        assert_eq!(
            fib_takahashi(1023, &mut OpCount::new()),
            fib_alternate(1023, &mut OpCount::new())
        );
    }

    #[test]
    fn exact_for_small_n() {
        let table = fib_table(2000);
        for n in 0..=2000u64 {
            assert_eq!(fib_takahashi(n, &mut OpCount::new()), table[n as usize], "n={n}");
        }
    }

    #[test]
    fn lucas_pair_relation_holds() {
        let table = fib_table(600);
        for n in 3..600u64 {
            let mut states = Vec::new();
            fib_takahashi_observed::<Nat>(n, &mut OpCount::new(), |s| states.push(s.clone()))
                .unwrap();
            for s in states {
                let l2 = s.l.squared().unwrap();
                let f5 = s.f.squared().unwrap().scaled(5).unwrap();
                let four = Nat::from(4);
                if s.sign > 0 {
                    assert_eq!(l2, f5.plus(&four).unwrap(), "n={n}");
                } else {
                    assert_eq!(l2.plus(&four).unwrap(), f5, "n={n}");
                }
                // bits above the mask have been consumed
                let k = n >> (s.mask.trailing_zeros() + 1);
                assert_eq!(s.f, table[k as usize], "n={n}");
                assert_eq!(s.sign, if k % 2 == 0 { 1 } else { -1 });
                assert_eq!(s.l, lucas_linear(k), "n={n}");
            }
        }
    }

    #[test]
    fn two_squares_per_iteration() {
        for n in 3..500u64 {
            let mut c = OpCount::new();
            fib_takahashi(n, &mut c);
            let loops = floor_lg(n) as u64 - 1;
            assert_eq!(c.iters, loops);
            assert_eq!(c.squares, 2 * loops);
            assert_eq!(c.mults, 1);
        }
    }
}
