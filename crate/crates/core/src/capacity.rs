//! Storage capacity of a numeric type for Fibonacci numbers.
//!
//! [`estimate_bits`] and [`estimate_max_index`] evaluate the closed-form
//! size estimate `η_n ≈ ⌊n·lg φ − ½·lg 5⌋ + 1` and its inverse. The
//! [`probe_max_index`] family measures the real limit by running an
//! algorithm under a constrained mode until it overflows or disagrees with
//! exact arithmetic.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::algorithm::{evaluate, Algorithm, IntWidth, Mode};
use crate::error::{Error, Result};
use crate::fastfib::OpCount;
use crate::numeric::{make_phi, Arith, BigReal, Nat, PrecisionPolicy};

/// Real precision used inside the estimators.
pub const ESTIMATE_PRECISION: u32 = 128;

/// Upper bound on probe iterations for modes that never fail.
pub const PROBE_BOUND: u64 = 1_000_000;

/// `log2 x` for `x > 0`, by repeated squaring of the mantissa.
///
/// Each squaring contributes at most one rounding error, and the error made
/// at step k is scaled by `2^−k` in the result, so `precision + 32`
/// working bits leave the answer accurate to about `2^−precision`.
pub fn log2(x: &BigReal, precision: u32) -> BigReal {
    assert!(!x.is_zero() && !x.is_negative(), "log2 needs a positive argument");
    let wp = precision + 32;
    let e = x.floor_log2();
    let two = BigReal::from_u64(2, 8);
    let mut m = x.mul_pow2(-e).with_precision(wp);
    let steps = precision as u64 + 8;
    let mut frac = BigUint::from(0u32);
    for _ in 0..steps {
        m = m.square_prec(wp);
        frac <<= 1u32;
        if m >= two {
            m = m.mul_pow2(-1);
            frac |= BigUint::from(1u32);
        }
    }
    let frac = BigReal::from_nat(&Nat::from(frac), steps as u32 + 1).mul_pow2(-(steps as i64));
    let int = BigReal::from_u64(e.unsigned_abs(), 64);
    let int = if e < 0 { -int } else { int };
    int.add_prec(&frac, precision)
}

fn lg_phi() -> BigReal {
    log2(&make_phi(ESTIMATE_PRECISION + 16), ESTIMATE_PRECISION)
}

fn half_lg5() -> BigReal {
    log2(&BigReal::from_u64(5, 8), ESTIMATE_PRECISION).mul_pow2(-1)
}

fn to_i64(v: num_bigint::BigInt) -> i64 {
    v.to_i64().expect("estimate fits in i64")
}

/// Estimated bit count `η_n = ⌊n·lg φ − ½·lg 5⌋ + 1` of `Fₙ`.
pub fn estimate_bits(n: u64) -> u64 {
    assert!(n >= 1, "estimate_bits needs n >= 1");
    let p = ESTIMATE_PRECISION;
    let x = BigReal::from_u64(n, 64)
        .mul_prec(&lg_phi(), p)
        .sub_prec(&half_lg5(), p);
    (to_i64(x.floor()) + 1).max(0) as u64
}

/// Estimated largest index `n̂_max = ⌈(η + ½·lg 5 − 1) / lg φ⌉` whose
/// Fibonacci number fits in `eta` bits.
pub fn estimate_max_index(eta: u64) -> u64 {
    assert!(eta >= 1, "estimate_max_index needs eta >= 1");
    let p = ESTIMATE_PRECISION;
    let x = BigReal::from_u64(eta, 64)
        .add_prec(&half_lg5(), p)
        .sub_prec(&BigReal::one(8), p)
        .div_prec(&lg_phi(), p);
    to_i64(x.ceil()) as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapacityEstimate {
    pub eta: u64,
    pub n_hat: u64,
}

impl CapacityEstimate {
    pub fn for_bits(eta: u64) -> Self {
        CapacityEstimate {
            eta,
            n_hat: estimate_max_index(eta),
        }
    }

    pub fn for_index(n: u64) -> Self {
        CapacityEstimate {
            eta: estimate_bits(n),
            n_hat: n,
        }
    }
}

/// Constrained numeric setting for a probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProbeMode {
    CheckedInt(IntWidth),
    Float(PrecisionPolicy),
}

impl ProbeMode {
    pub fn i32() -> Self {
        ProbeMode::CheckedInt(IntWidth::I32)
    }

    pub fn i64() -> Self {
        ProbeMode::CheckedInt(IntWidth::I64)
    }

    pub fn f64() -> Self {
        ProbeMode::Float(PrecisionPolicy::HardwareDouble)
    }

    pub fn f32() -> Self {
        ProbeMode::Float(PrecisionPolicy::SingleFloat)
    }

    pub fn trunc9() -> Self {
        ProbeMode::Float(PrecisionPolicy::truncated9())
    }

    /// Significand or magnitude bits available to the mode.
    pub fn bits(&self) -> u64 {
        match self {
            ProbeMode::CheckedInt(w) => w.bits() as u64 - 1,
            ProbeMode::Float(p) => p.working_precision(0) as u64,
        }
    }
}

impl From<ProbeMode> for Mode {
    fn from(m: ProbeMode) -> Mode {
        match m {
            ProbeMode::CheckedInt(w) => Mode::Checked(w),
            ProbeMode::Float(p) => Mode::Float(p),
        }
    }
}

impl std::str::FromStr for ProbeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Mode>()? {
            Mode::Checked(w) => Ok(ProbeMode::CheckedInt(w)),
            Mode::Float(p) => Ok(ProbeMode::Float(p)),
            Mode::Exact => Err(Error::Config("a probe needs a constrained mode".into())),
        }
    }
}

impl fmt::Display for ProbeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Mode::from(*self).fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Overflow,
    /// The first wrong result differed from `Fₙ` by `delta`.
    Mismatch { delta: Nat },
    /// No failure up to and including `bound`.
    NoneBelowBound { bound: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeResult {
    /// Largest index with a correct result; every smaller index was correct too.
    pub n_max: u64,
    pub failure: Failure,
}

impl ProbeResult {
    pub fn failure_kind(&self) -> &'static str {
        match self.failure {
            Failure::Overflow => "overflow",
            Failure::Mismatch { .. } => "mismatch",
            Failure::NoneBelowBound { .. } => "none",
        }
    }

    pub fn first_bad_delta(&self) -> Option<&Nat> {
        match &self.failure {
            Failure::Mismatch { delta } => Some(delta),
            _ => None,
        }
    }
}

impl fmt::Display for ProbeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n_max={} failure={}", self.n_max, self.failure_kind())?;
        match &self.failure {
            Failure::Mismatch { delta } => write!(f, " delta={delta}"),
            Failure::NoneBelowBound { bound } => write!(f, " bound={bound}"),
            Failure::Overflow => f.write_str(" delta=n/a"),
        }
    }
}

/// Runs `algorithm` at n = 1, 2, … under `mode` until it overflows or
/// disagrees with the exact value.
pub fn probe_max_index(mode: ProbeMode, algorithm: Algorithm) -> Result<ProbeResult> {
    probe_max_index_bounded(mode, algorithm, PROBE_BOUND)
}

pub fn probe_max_index_bounded(
    mode: ProbeMode,
    algorithm: Algorithm,
    bound: u64,
) -> Result<ProbeResult> {
    let run_mode = Mode::from(mode);
    if algorithm == Algorithm::Binet || !algorithm.supports(run_mode) {
        return Err(Error::IncompatibleMode {
            algorithm: algorithm.to_string(),
            mode: mode.to_string(),
        });
    }
    // rolling oracle: (F_{n−1}, F_n)
    let (mut prev, mut exact) = (Nat::zero(), Nat::one());
    for n in 1..=bound {
        match evaluate(algorithm, run_mode, n, &mut OpCount::new()) {
            Ok(v) if v == exact => {}
            Ok(v) => {
                return Ok(ProbeResult {
                    n_max: n - 1,
                    failure: Failure::Mismatch {
                        delta: v.abs_diff(&exact),
                    },
                })
            }
            Err(Error::Overflow { .. }) => {
                return Ok(ProbeResult {
                    n_max: n - 1,
                    failure: Failure::Overflow,
                })
            }
            Err(e) => return Err(e),
        }
        let next = prev.plus(&exact)?;
        prev = std::mem::replace(&mut exact, next);
    }
    Ok(ProbeResult {
        n_max: bound,
        failure: Failure::NoneBelowBound { bound },
    })
}
