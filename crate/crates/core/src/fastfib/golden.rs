use super::OpCount;
use crate::error::Result;
use crate::numeric::{make_phi, round_to_nat, BigReal, Nat, PrecisionPolicy};

/// Loop state of the φ-power iteration.
///
/// At every loop head `acc · gi^(i − i mod 2) = φⁿ`: the low bit of `i`
/// has already been folded into `acc` when `i` was reached.
#[derive(Clone, Debug)]
pub struct PhiPowerState {
    /// `φ^(2^j)` after `j` squarings.
    pub gi: BigReal,
    pub acc: BigReal,
    /// Remaining halved index, `⌊n / 2^j⌋`.
    pub i: u64,
}

impl PhiPowerState {
    pub fn new(phi: &BigReal, n: u64) -> Self {
        let acc = if n % 2 == 1 {
            phi.clone()
        } else {
            BigReal::one(phi.precision())
        };
        PhiPowerState {
            gi: phi.clone(),
            acc,
            i: n,
        }
    }

    pub fn is_done(&self) -> bool {
        self.i <= 1
    }

    /// One pass of the loop body: halve, square, and multiply in when odd.
    pub fn step(&mut self, precision: u32, counter: &mut OpCount) {
        self.i /= 2;
        self.gi = self.gi.square_prec(precision);
        counter.square();
        if self.i % 2 == 1 {
            self.acc = self.gi.mul_prec(&self.acc, precision);
            counter.mul();
        }
        counter.iter();
    }
}

fn pow_from(
    phi: &BigReal,
    n: u64,
    precision: u32,
    counter: &mut OpCount,
    mut observe: impl FnMut(&PhiPowerState),
) -> BigReal {
    let mut state = PhiPowerState::new(phi, n);
    observe(&state);
    while !state.is_done() {
        state.step(precision, counter);
        observe(&state);
    }
    state.acc
}

/// `φⁿ` by repeated squaring, every operation rounded to `precision_bits`.
///
/// Performs `⌊lg n⌋` squarings and `popcount(⌊n/2⌋)` multiplications.
pub fn pow_phi(n: u64, precision_bits: u32, counter: &mut OpCount) -> BigReal {
    let phi = make_phi(precision_bits);
    pow_from(&phi, n, precision_bits, counter, |_| {})
}

/// [`pow_phi`] with a callback at every loop head, including the first.
pub fn pow_phi_observed(
    n: u64,
    precision_bits: u32,
    counter: &mut OpCount,
    observe: impl FnMut(&PhiPowerState),
) -> BigReal {
    let phi = make_phi(precision_bits);
    pow_from(&phi, n, precision_bits, counter, observe)
}

/// `Fₙ = ⌈φⁿ/√5 − 1/2⌉` with `φⁿ` from the squaring loop.
///
/// Exact under an adaptive policy. The fixed-width policies reproduce what a
/// program using doubles, singles, or truncated constants would return,
/// including its rounding failures.
pub fn fib_golden(n: u64, policy: PrecisionPolicy, counter: &mut OpCount) -> Result<Nat> {
    let p = policy.working_precision(n);
    let power = pow_from(&policy.phi(n), n, p, counter, |_| {});
    round_to_nat(&power.div_prec(&policy.sqrt5(n), p))
}

fn rgold_depth(phi: &BigReal, n: u64, precision: u32, depth: &mut u32) -> BigReal {
    *depth += 1;
    if n == 1 {
        return phi.clone();
    }
    let half = rgold_depth(phi, n / 2, precision, depth).square_prec(precision);
    if n % 2 == 1 {
        phi.mul_prec(&half, precision)
    } else {
        half
    }
}

/// `φⁿ` for `n ≥ 1` by recursive halving; also returns the recursion depth.
pub fn rgold(n: u64, policy: PrecisionPolicy) -> (BigReal, u32) {
    assert!(n >= 1, "rgold is defined for n >= 1");
    let mut depth = 0;
    let p = policy.working_precision(n);
    let v = rgold_depth(&policy.phi(n), n, p, &mut depth);
    (v, depth)
}

/// `Fₙ` through the recursive φ power; same value contract as [`fib_golden`].
pub fn fib_rgolden(n: u64, policy: PrecisionPolicy) -> Result<Nat> {
    if n <= 1 {
        return Ok(Nat::from(n));
    }
    // The recursion must be seeded with n itself; seeding with n/2 yields
    // φ^(n/2) and a wrong Fibonacci number from n = 4 on.
    let (power, _) = rgold(n, policy);
    let p = policy.working_precision(n);
    round_to_nat(&power.div_prec(&policy.sqrt5(n), p))
}

/// `Lₙ = round(φⁿ)`, valid from `n = 2` where `|φ̄ⁿ| < 1/2`; indices 0 and 1
/// come from the initial conditions.
pub fn lucas_golden(n: u64, policy: PrecisionPolicy) -> Result<Nat> {
    match n {
        0 => Ok(Nat::from(2)),
        1 => Ok(Nat::one()),
        _ => {
            let p = policy.working_precision(n);
            let power = pow_from(&policy.phi(n), n, p, &mut OpCount::new(), |_| {});
            round_to_nat(&power)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{fib_linear, lucas_linear};

    fn adaptive() -> PrecisionPolicy {
        PrecisionPolicy::default()
    }

    #[test]
    fn pow_phi_of_zero_is_one() {
        let mut c = OpCount::new();
        assert_eq!(pow_phi(0, 64, &mut c), BigReal::one(64));
        assert_eq!(c, OpCount::new());
    }

    #[test]
    fn pow_phi_two_is_phi_plus_one() {
        let p = 200;
        let sq = pow_phi(2, p, &mut OpCount::new());
        let phi1 = make_phi(p).add_prec(&BigReal::one(8), p);
        let diff = sq.sub_prec(&phi1, p);
        assert!(diff.is_zero() || diff.floor_log2() < -(p as i64) + 4);
        assert!(sq.to_decimal_string(9).starts_with("2.618033988"));
    }

    #[test]
    fn pow_phi_eight_counts() {
        let mut c = OpCount::new();
        pow_phi(8, 64, &mut c);
        assert_eq!((c.squares, c.mults, c.iters), (3, 1, 3));
    }

    #[test]
    fn pow_phi_counts_match_bit_structure() {
        for n in 1u64..2000 {
            let mut c = OpCount::new();
            pow_phi(n, 32, &mut c);
            let lg = super::super::floor_lg(n) as u64;
            assert_eq!(c.squares, lg, "n={n}");
            assert_eq!(c.iters, lg);
            assert_eq!(c.mults, (n / 2).count_ones() as u64, "n={n}");
        }
    }

    #[test]
    fn loop_head_invariant() {
        let p = 400;
        for n in [1u64, 2, 5, 6, 37, 64, 255, 1000] {
            let mut heads = Vec::new();
            let target = pow_phi_observed(n, p, &mut OpCount::new(), |s| heads.push(s.clone()));
            for s in heads {
                let mut rest = BigReal::one(p);
                for _ in 0..(s.i - s.i % 2) {
                    rest = rest.mul_prec(&s.gi, p);
                }
                let lhs = s.acc.mul_prec(&rest, p);
                let rel = lhs.sub_prec(&target, p).div_prec(&target, p);
                assert!(rel.is_zero() || rel.floor_log2() < -(p as i64) + 40, "n={n}");
            }
        }
    }

    #[test]
    fn golden_examples() {
        let mut c = OpCount::new();
        assert_eq!(fib_golden(0, adaptive(), &mut c).unwrap(), Nat::zero());
        assert_eq!(fib_golden(1, adaptive(), &mut c).unwrap(), Nat::one());
        assert_eq!(fib_golden(12, adaptive(), &mut c).unwrap(), Nat::from(144));
    }

    #[test]
    fn golden_double_fails_near_seventy_five() {
        let f75 = fib_linear(75);
        let g = fib_golden(75, PrecisionPolicy::HardwareDouble, &mut OpCount::new()).unwrap();
        let d = g.abs_diff(&f75);
        assert!(d > Nat::zero() && d <= Nat::from(2), "delta {d}");
    }

    #[test]
    fn rgolden_examples() {
        assert_eq!(fib_rgolden(0, adaptive()).unwrap(), Nat::zero());
        assert_eq!(fib_rgolden(1, adaptive()).unwrap(), Nat::one());
        assert_eq!(fib_rgolden(4, adaptive()).unwrap(), Nat::from(3));
        assert_eq!(fib_rgolden(13, adaptive()).unwrap(), Nat::from(233));
    }

    #[test]
    fn rgolden_agrees_with_golden() {
        for n in 0..=300 {
            let g = fib_golden(n, adaptive(), &mut OpCount::new()).unwrap();
            assert_eq!(fib_rgolden(n, adaptive()).unwrap(), g, "n={n}");
        }
    }

    #[test]
    fn rgold_depth_is_floor_lg_plus_one() {
        for n in 1u64..600 {
            let (_, depth) = rgold(n, adaptive());
            assert_eq!(depth, super::super::floor_lg(n) + 1, "n={n}");
        }
    }

    #[test]
    fn lucas_golden_examples() {
        assert_eq!(lucas_golden(0, adaptive()).unwrap(), Nat::from(2));
        assert_eq!(lucas_golden(1, adaptive()).unwrap(), Nat::one());
        assert_eq!(lucas_golden(2, adaptive()).unwrap(), Nat::from(3));
        assert_eq!(lucas_golden(7, adaptive()).unwrap(), Nat::from(29));
        for n in 0..400 {
            assert_eq!(lucas_golden(n, adaptive()).unwrap(), lucas_linear(n), "n={n}");
        }
    }
}
