use num_bigint::Sign;

use crate::error::{Error, Result};
use crate::numeric::{make_sqrt5, Arith, BigReal, Nat};

const LG_PHI: f64 = 0.694_241_913_630_617_3;

/// Working precision that keeps the recursion exact up to index `n`.
pub fn binet_precision(n: u64) -> u32 {
    (n as f64 * LG_PHI).ceil() as u32 + 32
}

fn ceil_nat(x: &BigReal) -> Nat {
    let c = x.ceil();
    assert!(c.sign() != Sign::Minus);
    Nat::from(c.magnitude().clone())
}

/// `fib(n) = ⌈fib(⌊n/2⌋)² · √5⌉` with base cases 1 and 2, applied to any
/// `n` with integer halving. Only powers of two come out right.
pub fn binet_recursion(n: u64, precision_bits: u32) -> Nat {
    let sqrt5 = make_sqrt5(precision_bits);
    fn go(n: u64, sqrt5: &BigReal, p: u32) -> Nat {
        match n {
            0 => Nat::zero(),
            1 | 2 => Nat::one(),
            _ => {
                let half = go(n / 2, sqrt5, p).squared().expect("natural arithmetic");
                ceil_nat(&BigReal::from_nat(&half, p).mul_prec(sqrt5, p))
            }
        }
    }
    go(n, &sqrt5, precision_bits)
}

/// `Fₙ` by the squaring recursion, for `n` a power of two.
///
/// The recursion relies on `F_{2k} − √5·F_k² = 2(−1)^k F_k φ̄^k ∈ (0, 1)` for
/// even `k`, which fails off powers of two; such `n` are a domain error.
pub fn fib_binet_pow2(n: u64, precision_bits: u32) -> Result<Nat> {
    if !n.is_power_of_two() {
        return Err(Error::Domain(format!(
            "the Binet recursion is exact only for powers of two, got n = {n}"
        )));
    }
    Ok(binet_recursion(n, precision_bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::fib_linear;

    #[test]
    fn hand_evaluated_values() {
        assert_eq!(fib_binet_pow2(4, 64).unwrap(), Nat::from(3));
        assert_eq!(fib_binet_pow2(16, 64).unwrap(), Nat::from(987));
        assert_eq!(fib_binet_pow2(1, 64).unwrap(), Nat::one());
        assert_eq!(fib_binet_pow2(2, 64).unwrap(), Nat::one());
    }

    #[test]
    fn off_powers_of_two_is_a_domain_error() {
        for n in [0u64, 3, 5, 6, 7, 12, 1000] {
            assert!(matches!(fib_binet_pow2(n, 64), Err(Error::Domain(_))), "n={n}");
        }
        // what the recursion would have produced
        assert_eq!(binet_recursion(3, 64), Nat::from(3));
        assert_eq!(binet_recursion(6, 64), Nat::from(21));
        assert_ne!(binet_recursion(6, 64), fib_linear(6));
    }

    #[test]
    fn exact_on_powers_of_two() {
        for m in 0..=12 {
            let n = 1u64 << m;
            assert_eq!(fib_binet_pow2(n, binet_precision(n)).unwrap(), fib_linear(n), "n={n}");
        }
    }
}
