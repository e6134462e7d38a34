use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use super::{BigReal, Nat};
use crate::error::{Error, Result};

pub const DEFAULT_GUARD_BITS: u32 = 64;
pub const DEFAULT_TRUNCATED_PLACES: u32 = 9;

/// `lg φ` to double precision; only used to size working precision.
const LG_PHI: f64 = 0.694_241_913_630_617_3;

/// `√5` correctly rounded to `precision_bits`.
///
/// Computed as `isqrt(5 · 4^k)` with enough extra bits that the sticky
/// remainder decides the rounding.
pub fn make_sqrt5(precision_bits: u32) -> BigReal {
    assert!(precision_bits >= 2, "precision must be at least 2 bits");
    BigReal::from_u64(5, 8).sqrt_prec(precision_bits)
}

/// `φ = (1 + √5)/2` correctly rounded to `precision_bits`.
pub fn make_phi(precision_bits: u32) -> BigReal {
    assert!(precision_bits >= 2, "precision must be at least 2 bits");
    // floor(φ·2^k) = (2^k + isqrt(5·4^k)) >> 1, and φ is irrational so the
    // discarded remainder is never zero.
    let k = precision_bits as u64 + 2;
    let scale = BigUint::from(1u32) << k;
    let root = (BigUint::from(5u32) << (2 * k)).sqrt();
    let floor = (&scale + root) >> 1u32;
    BigReal::from_parts_inexact(floor, -(k as i64), precision_bits)
}

/// `⌈x − 1/2⌉`, evaluated exactly.
///
/// Half-way values round down (`⌈2.5 − 0.5⌉ = 2`). Fails when the result
/// would be negative, i.e. for `x ≤ −1/2`.
pub fn round_to_nat(x: &BigReal) -> Result<Nat> {
    let (negative, mantissa, exponent) = x.parts();
    let m = if negative {
        -BigInt::from(mantissa.clone())
    } else {
        BigInt::from(mantissa.clone())
    };
    let r = if exponent >= 0 {
        m << exponent as usize
    } else {
        // x − 1/2 = (2m − 2^k) / 2^(k+1) with k = −exponent; ceil(a/b) = −floor(−a/b).
        let k = (-exponent) as usize;
        let a = (m << 1usize) - (BigInt::from(1u32) << k);
        -((-a) >> (k + 1))
    };
    if r.is_negative() {
        return Err(Error::Domain(format!(
            "round_to_nat of {x} would be negative"
        )));
    }
    Ok(Nat::from(r.magnitude().clone()))
}

/// Fixed-point decimal constant `digits / 10^places`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecimalConst {
    pub digits: BigUint,
    pub places: u32,
}

impl DecimalConst {
    /// φ truncated (not rounded) after `places` decimal digits.
    pub fn phi_truncated(places: u32) -> Self {
        let scale = BigUint::from(10u32).pow(places);
        let root = (BigUint::from(5u32) * &scale * &scale).sqrt();
        DecimalConst {
            digits: (scale + root) >> 1u32,
            places,
        }
    }

    /// √5 truncated (not rounded) after `places` decimal digits.
    pub fn sqrt5_truncated(places: u32) -> Self {
        let scale = BigUint::from(10u32).pow(places);
        DecimalConst {
            digits: (BigUint::from(5u32) * &scale * &scale).sqrt(),
            places,
        }
    }

    pub fn to_real(&self, precision_bits: u32) -> BigReal {
        BigReal::from_ratio(
            &self.digits,
            &BigUint::from(10u32).pow(self.places),
            precision_bits,
        )
    }
}

impl fmt::Display for DecimalConst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.digits.to_string();
        let places = self.places as usize;
        let padded = format!("{s:0>width$}", width = places + 1);
        let (int, frac) = padded.split_at(padded.len() - places);
        if places == 0 {
            write!(f, "{int}")
        } else {
            write!(f, "{int}.{frac}")
        }
    }
}

/// Working precision and constant source for the φ-power algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrecisionPolicy {
    /// `⌈n·lg φ⌉ + guard_bits` bits for target index `n`.
    Adaptive { guard_bits: u32 },
    /// 53-bit arithmetic, the IEEE-754 double significand.
    HardwareDouble,
    /// 24-bit arithmetic, the IEEE-754 single significand.
    SingleFloat,
    /// Double arithmetic with φ and √5 replaced by decimal expansions
    /// truncated after `places` fractional digits.
    DecimalTruncated { places: u32 },
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy::Adaptive {
            guard_bits: DEFAULT_GUARD_BITS,
        }
    }
}

impl PrecisionPolicy {
    pub fn truncated9() -> Self {
        PrecisionPolicy::DecimalTruncated {
            places: DEFAULT_TRUNCATED_PLACES,
        }
    }

    pub fn is_adaptive(&self) -> bool {
        matches!(self, PrecisionPolicy::Adaptive { .. })
    }

    /// Bits of precision used for every operation when computing index `n`.
    pub fn working_precision(&self, n: u64) -> u32 {
        match *self {
            PrecisionPolicy::Adaptive { guard_bits } => {
                let bits = (n as f64 * LG_PHI).ceil() as u32;
                (bits + guard_bits).max(2)
            }
            PrecisionPolicy::HardwareDouble | PrecisionPolicy::DecimalTruncated { .. } => 53,
            PrecisionPolicy::SingleFloat => 24,
        }
    }

    /// φ as this policy sees it, at the working precision for index `n`.
    pub fn phi(&self, n: u64) -> BigReal {
        let p = self.working_precision(n);
        match *self {
            PrecisionPolicy::DecimalTruncated { places } => {
                DecimalConst::phi_truncated(places).to_real(p)
            }
            _ => make_phi(p),
        }
    }

    /// √5 as this policy sees it, at the working precision for index `n`.
    pub fn sqrt5(&self, n: u64) -> BigReal {
        let p = self.working_precision(n);
        match *self {
            PrecisionPolicy::DecimalTruncated { places } => {
                DecimalConst::sqrt5_truncated(places).to_real(p)
            }
            _ => make_sqrt5(p),
        }
    }
}

impl fmt::Display for PrecisionPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PrecisionPolicy::Adaptive { guard_bits } if guard_bits == DEFAULT_GUARD_BITS => {
                f.write_str("adaptive")
            }
            PrecisionPolicy::Adaptive { guard_bits } => write!(f, "adaptive{guard_bits}"),
            PrecisionPolicy::HardwareDouble => f.write_str("double"),
            PrecisionPolicy::SingleFloat => f.write_str("single"),
            PrecisionPolicy::DecimalTruncated { places } => write!(f, "trunc{places}"),
        }
    }
}

impl FromStr for PrecisionPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let number = |rest: &str| {
            rest.parse::<u32>()
                .map_err(|_| Error::Config(format!("unknown precision policy `{s}`")))
        };
        match s {
            "adaptive" => Ok(PrecisionPolicy::default()),
            "double" => Ok(PrecisionPolicy::HardwareDouble),
            "single" => Ok(PrecisionPolicy::SingleFloat),
            _ if s.starts_with("adaptive") => Ok(PrecisionPolicy::Adaptive {
                guard_bits: number(&s["adaptive".len()..])?,
            }),
            _ if s.starts_with("trunc") => Ok(PrecisionPolicy::DecimalTruncated {
                places: number(&s["trunc".len()..])?,
            }),
            _ => Err(Error::Config(format!("unknown precision policy `{s}`"))),
        }
    }
}
