//! Name-based dispatch over every algorithm and numeric mode.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fastfib::{
    binet_precision, fib_alternate_with, fib_binet_pow2, fib_golden, fib_rgolden,
    fib_takahashi_with, fib_threesquare_with, OpCount,
};
use crate::numeric::{Arith, CheckedI32, CheckedI64, Nat, PrecisionPolicy};
use crate::sequences::fib_linear_with;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Linear,
    Alternate,
    ThreeSquare,
    Takahashi,
    Golden,
    Rgolden,
    Binet,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Linear,
        Algorithm::Alternate,
        Algorithm::ThreeSquare,
        Algorithm::Takahashi,
        Algorithm::Golden,
        Algorithm::Rgolden,
        Algorithm::Binet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Linear => "linear",
            Algorithm::Alternate => "alternate",
            Algorithm::ThreeSquare => "threesquare",
            Algorithm::Takahashi => "takahashi",
            Algorithm::Golden => "golden",
            Algorithm::Rgolden => "rgolden",
            Algorithm::Binet => "binet",
        }
    }

    /// Integer algorithms run over `Nat` or `CheckedInt`; the others are
    /// φ-power methods in floating arithmetic.
    pub fn is_integer(self) -> bool {
        matches!(
            self,
            Algorithm::Linear | Algorithm::Alternate | Algorithm::ThreeSquare | Algorithm::Takahashi
        )
    }

    pub fn supports(self, mode: Mode) -> bool {
        match mode {
            Mode::Exact => true,
            Mode::Checked(_) => self.is_integer(),
            Mode::Float(_) => !self.is_integer(),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntWidth {
    I32,
    I64,
}

impl IntWidth {
    pub fn bits(self) -> u32 {
        match self {
            IntWidth::I32 => 32,
            IntWidth::I64 => 64,
        }
    }

    pub fn from_bits(bits: u32) -> Result<Self> {
        match bits {
            32 => Ok(IntWidth::I32),
            64 => Ok(IntWidth::I64),
            _ => Err(Error::Config(format!("checked width must be 32 or 64, got {bits}"))),
        }
    }
}

/// Numeric setting an algorithm runs under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Arbitrary-precision integers, or adaptive precision for φ-power methods.
    Exact,
    Checked(IntWidth),
    Float(PrecisionPolicy),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Checked(w) => write!(f, "i{}", w.bits()),
            Mode::Float(PrecisionPolicy::HardwareDouble) => f.write_str("f64"),
            Mode::Float(PrecisionPolicy::SingleFloat) => f.write_str("f32"),
            Mode::Float(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "i32" => Ok(Mode::Checked(IntWidth::I32)),
            "i64" => Ok(Mode::Checked(IntWidth::I64)),
            "f64" => Ok(Mode::Float(PrecisionPolicy::HardwareDouble)),
            "f32" => Ok(Mode::Float(PrecisionPolicy::SingleFloat)),
            _ => s
                .parse::<PrecisionPolicy>()
                .map(Mode::Float)
                .map_err(|_| Error::Config(format!("unknown mode `{s}`"))),
        }
    }
}

fn integer<T: Arith>(algorithm: Algorithm, n: u64, counter: &mut OpCount) -> Result<Nat> {
    let v: T = match algorithm {
        Algorithm::Linear => fib_linear_with(n, counter)?,
        Algorithm::Alternate => fib_alternate_with(n, counter)?,
        Algorithm::ThreeSquare => fib_threesquare_with(n, counter)?,
        Algorithm::Takahashi => fib_takahashi_with(n, counter)?,
        _ => unreachable!("not an integer algorithm"),
    };
    Ok(v.to_nat())
}

/// `Fₙ` computed by `algorithm` under `mode`.
pub fn evaluate(algorithm: Algorithm, mode: Mode, n: u64, counter: &mut OpCount) -> Result<Nat> {
    if !algorithm.supports(mode) {
        return Err(Error::IncompatibleMode {
            algorithm: algorithm.to_string(),
            mode: mode.to_string(),
        });
    }
    let policy = match mode {
        Mode::Exact if algorithm.is_integer() => return integer::<Nat>(algorithm, n, counter),
        Mode::Checked(IntWidth::I32) => return integer::<CheckedI32>(algorithm, n, counter),
        Mode::Checked(IntWidth::I64) => return integer::<CheckedI64>(algorithm, n, counter),
        Mode::Exact => PrecisionPolicy::default(),
        Mode::Float(p) => p,
    };
    match algorithm {
        Algorithm::Golden => fib_golden(n, policy, counter),
        Algorithm::Rgolden => fib_rgolden(n, policy),
        Algorithm::Binet => {
            let p = match mode {
                Mode::Exact => binet_precision(n),
                _ => policy.working_precision(n),
            };
            fib_binet_pow2(n, p)
        }
        _ => unreachable!("integer algorithms returned above"),
    }
}
