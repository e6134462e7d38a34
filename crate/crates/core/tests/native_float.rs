//! The arbitrary-precision loop at 53 and 24 bits against the same loop in
//! native `f64` and `f32`.

use fibgold::numeric::{make_phi, make_sqrt5};
use fibgold::fastfib::{fib_golden, pow_phi};
use fibgold::{Nat, OpCount, PrecisionPolicy};

macro_rules! native_golden {
    ($pow:ident, $name:ident, $t:ty) => {
        fn $pow(n: u64) -> $t {
            let phi = (1.0 + (5.0 as $t).sqrt()) / 2.0;
            let mut gi = phi;
            let mut acc: $t = if n % 2 == 1 { phi } else { 1.0 };
            let mut i = n;
            while i > 1 {
                i /= 2;
                gi *= gi;
                if i % 2 == 1 {
                    acc *= gi;
                }
            }
            acc
        }

        fn $name(n: u64) -> u64 {
            ($pow(n) / (5.0 as $t).sqrt() - 0.5).ceil() as u64
        }
    };
}

native_golden!(pow_f64, golden_f64, f64);
native_golden!(pow_f32, golden_f32, f32);

#[test]
fn constants_match_native() {
    assert_eq!(make_sqrt5(53).to_f64(), 5f64.sqrt());
    assert_eq!(make_phi(53).to_f64(), (1.0 + 5f64.sqrt()) / 2.0);
    assert_eq!(make_sqrt5(24).to_f64(), f64::from(5f32.sqrt()));
    assert_eq!(make_phi(24).to_f64(), f64::from((1.0 + 5f32.sqrt()) / 2.0));
}

#[test]
fn double_policy_matches_f64_loop() {
    // Past 74 the results are wrong, but they should be wrong identically
    // while Fₙ still fits exactly below 2^52.
    for n in 0..=75 {
        let ours = fib_golden(n, PrecisionPolicy::HardwareDouble, &mut OpCount::new()).unwrap();
        assert_eq!(ours, Nat::from(golden_f64(n)), "n={n}");
    }
}

#[test]
fn powers_match_bit_for_bit() {
    for n in 1..=1000 {
        assert_eq!(pow_phi(n, 53, &mut OpCount::new()).to_f64(), pow_f64(n), "n={n}");
    }
    for n in 1..=150 {
        let ours = pow_phi(n, 24, &mut OpCount::new()).to_f64();
        assert_eq!(ours, f64::from(pow_f32(n)), "n={n}");
    }
}

#[test]
fn single_policy_matches_f32_loop() {
    // Native `x - 0.5` rounds once Fₙ passes 2^23, so compare below that.
    for n in 0..=34 {
        let ours = fib_golden(n, PrecisionPolicy::SingleFloat, &mut OpCount::new()).unwrap();
        assert_eq!(ours, Nat::from(golden_f32(n)), "n={n}");
    }
}
