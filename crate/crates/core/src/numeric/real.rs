use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Nat;

/// Binary floating value `±mantissa · 2^exponent` carrying a working
/// precision in bits.
///
/// Every arithmetic result is rounded to its target precision with
/// round-to-nearest, ties-to-even. The exponent is unbounded, so there is no
/// overflow, underflow or subnormal range. At 53 bits the arithmetic agrees
/// bit-for-bit with IEEE-754 doubles on normal operands and results.
///
/// The stored mantissa is odd (or zero), so equality and ordering compare
/// values regardless of the precision each operand carries.
#[derive(Clone, Debug)]
pub struct BigReal {
    negative: bool,
    mantissa: BigUint,
    exponent: i64,
    precision: u32,
}

impl BigReal {
    pub fn zero(precision: u32) -> Self {
        assert!(precision >= 1, "precision must be positive");
        BigReal {
            negative: false,
            mantissa: BigUint::zero(),
            exponent: 0,
            precision,
        }
    }

    pub fn one(precision: u32) -> Self {
        Self::from_u64(1, precision)
    }

    pub fn from_u64(v: u64, precision: u32) -> Self {
        Self::rounded(false, BigUint::from(v), 0, false, precision)
    }

    pub fn from_nat(v: &Nat, precision: u32) -> Self {
        Self::rounded(false, v.as_biguint().clone(), 0, false, precision)
    }

    /// `num / den` correctly rounded.
    pub fn from_ratio(num: &BigUint, den: &BigUint, precision: u32) -> Self {
        let n = Self::rounded(false, num.clone(), 0, false, num.bits().max(1) as u32);
        let d = Self::rounded(false, den.clone(), 0, false, den.bits().max(1) as u32);
        n.div_prec(&d, precision)
    }

    /// Exact conversion from a finite double; the result carries 53 bits.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "cannot represent {x}");
        let bits = x.to_bits();
        let negative = bits >> 63 == 1;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        Self::rounded(negative, BigUint::from(m), e, false, 53)
    }

    /// Exact conversion from a finite single; the result carries 24 bits.
    pub fn from_f32(x: f32) -> Self {
        Self::from_f64(x as f64).with_precision(24)
    }

    /// Rounds `floor · 2^exponent` of an irrational (hence inexact) value.
    pub(crate) fn from_parts_inexact(floor: BigUint, exponent: i64, precision: u32) -> Self {
        Self::rounded(false, floor, exponent, true, precision)
    }

    /// Rounds `±mantissa · 2^exponent` (plus a nonzero amount below its last
    /// bit when `sticky`) to `precision` bits.
    ///
    /// An inexact input must carry at least `precision + 2` bits.
    fn rounded(
        negative: bool,
        mantissa: BigUint,
        exponent: i64,
        sticky: bool,
        precision: u32,
    ) -> Self {
        assert!(precision >= 1, "precision must be positive");
        if mantissa.is_zero() {
            debug_assert!(!sticky);
            return Self::zero(precision);
        }
        let bits = mantissa.bits();
        let (mut m, mut e) = if bits > precision as u64 {
            let shift = bits - precision as u64;
            let kept = &mantissa >> shift;
            let half = mantissa.bit(shift - 1);
            let tz = mantissa.trailing_zeros().unwrap_or(0);
            let below = sticky || tz < shift - 1;
            let m = if half && (below || kept.is_odd()) {
                kept + 1u32
            } else {
                kept
            };
            (m, exponent + shift as i64)
        } else {
            debug_assert!(!sticky, "inexact input needs precision + 2 bits");
            (mantissa, exponent)
        };
        let tz = m.trailing_zeros().unwrap_or(0);
        m >>= tz;
        e += tz as i64;
        BigReal {
            negative,
            mantissa: m,
            exponent: e,
            precision,
        }
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// Significant bits actually in use (at most the precision).
    pub fn significant_bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// `⌊log2 |x|⌋` for nonzero `x`.
    pub fn floor_log2(&self) -> i64 {
        assert!(!self.is_zero());
        self.exponent + self.mantissa.bits() as i64 - 1
    }

    /// Re-rounds to a new precision.
    pub fn with_precision(&self, precision: u32) -> Self {
        Self::rounded(
            self.negative,
            self.mantissa.clone(),
            self.exponent,
            false,
            precision,
        )
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigReal {
            exponent: self.exponent + k,
            ..self.clone()
        }
    }

    fn signed_mantissa(&self) -> BigInt {
        let sign = match (self.negative, self.is_zero()) {
            (_, true) => Sign::NoSign,
            (true, false) => Sign::Minus,
            (false, false) => Sign::Plus,
        };
        BigInt::from_biguint(sign, self.mantissa.clone())
    }

    /// Exact sum as a signed mantissa and exponent.
    fn exact_sum(&self, rhs: &Self) -> (BigInt, i64) {
        if self.is_zero() {
            return (rhs.signed_mantissa(), rhs.exponent);
        }
        if rhs.is_zero() {
            return (self.signed_mantissa(), self.exponent);
        }
        let e = self.exponent.min(rhs.exponent);
        let a = self.signed_mantissa() << (self.exponent - e) as usize;
        let b = rhs.signed_mantissa() << (rhs.exponent - e) as usize;
        (a + b, e)
    }

    fn from_signed(m: BigInt, e: i64, precision: u32) -> Self {
        let (sign, mag) = m.into_parts();
        Self::rounded(sign == Sign::Minus, mag, e, false, precision)
    }

    pub fn add_prec(&self, rhs: &Self, precision: u32) -> Self {
        let (m, e) = self.exact_sum(rhs);
        Self::from_signed(m, e, precision)
    }

    pub fn sub_prec(&self, rhs: &Self, precision: u32) -> Self {
        self.add_prec(&-rhs, precision)
    }

    pub fn mul_prec(&self, rhs: &Self, precision: u32) -> Self {
        Self::rounded(
            self.negative != rhs.negative,
            &self.mantissa * &rhs.mantissa,
            self.exponent + rhs.exponent,
            false,
            precision,
        )
    }

    pub fn square_prec(&self, precision: u32) -> Self {
        self.mul_prec(self, precision)
    }

    pub fn div_prec(&self, rhs: &Self, precision: u32) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        if self.is_zero() {
            return Self::zero(precision);
        }
        let want = precision as i64 + 3 + rhs.mantissa.bits() as i64 - self.mantissa.bits() as i64;
        let shift = want.max(0) as u64;
        let num = &self.mantissa << shift;
        let (q, r) = num.div_rem(&rhs.mantissa);
        Self::rounded(
            self.negative != rhs.negative,
            q,
            self.exponent - rhs.exponent - shift as i64,
            !r.is_zero(),
            precision,
        )
    }

    pub fn sqrt_prec(&self, precision: u32) -> Self {
        assert!(!self.negative || self.is_zero(), "square root of a negative value");
        if self.is_zero() {
            return Self::zero(precision);
        }
        let need = 2 * (precision as u64 + 2);
        let mut shift = need.saturating_sub(self.mantissa.bits());
        if (self.exponent - shift as i64).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.mantissa << shift;
        let e = self.exponent - shift as i64;
        let s = m.sqrt();
        let sticky = &s * &s != m;
        Self::rounded(false, s, e / 2, sticky, precision)
    }

    /// `⌊x⌋` as an exact integer.
    pub fn floor(&self) -> BigInt {
        let m = self.signed_mantissa();
        if self.exponent >= 0 {
            m << self.exponent as usize
        } else {
            // Arithmetic shift on BigInt rounds toward negative infinity.
            m >> (-self.exponent) as usize
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Decimal expansion truncated toward zero after `places` fractional digits.
    pub fn to_decimal_string(&self, places: u32) -> String {
        let scaled = BigReal {
            negative: false,
            ..self.clone()
        };
        let ten = BigUint::from(10u32).pow(places);
        let t = BigReal::rounded(false, ten, 0, false, u32::MAX >> 1);
        let digits = scaled.mul_prec(&t, u32::MAX >> 1).floor().to_string();
        let places = places as usize;
        let padded = format!("{digits:0>width$}", width = places + 1);
        let (int, frac) = padded.split_at(padded.len() - places);
        let sign = if self.negative && !self.is_zero() { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Nearest double (ties-to-even), for values in the normal double range.
    pub fn to_f64(&self) -> f64 {
        let r = self.with_precision(53);
        let m = r.mantissa.to_f64().unwrap_or(0.0);
        let mut v = m;
        let mut e = r.exponent;
        while e > 0 {
            let step = e.min(1000);
            v *= 2f64.powi(step as i32);
            e -= step;
        }
        while e < 0 {
            let step = (-e).min(1000);
            v /= 2f64.powi(step as i32);
            e += step;
        }
        if r.negative {
            -v
        } else {
            v
        }
    }

    fn cmp_value(&self, rhs: &Self) -> Ordering {
        let (d, _) = self.exact_sum(&-rhs);
        match d.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.is_zero() || self.exponent >= 0
    }

    pub(crate) fn parts(&self) -> (bool, &BigUint, i64) {
        (self.negative, &self.mantissa, self.exponent)
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        (self.is_zero() && other.is_zero())
            || (self.negative == other.negative
                && self.exponent == other.exponent
                && self.mantissa == other.mantissa)
    }
}

impl Eq for BigReal {}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;

    fn neg(self) -> BigReal {
        let mut r = self.clone();
        if !r.is_zero() {
            r.negative = !r.negative;
        }
        r
    }
}

impl Neg for BigReal {
    type Output = BigReal;

    fn neg(self) -> BigReal {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $prec_fn:ident) => {
        impl $tr<&BigReal> for &BigReal {
            type Output = BigReal;

            fn $method(self, rhs: &BigReal) -> BigReal {
                self.$prec_fn(rhs, self.precision.max(rhs.precision))
            }
        }
    };
}

binop!(Add, add, add_prec);
binop!(Sub, sub, sub_prec);
binop!(Mul, mul, mul_prec);
binop!(Div, div, div_prec);

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = f.precision().unwrap_or(20) as u32;
        f.write_str(&self.to_decimal_string(places))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn same_bits(a: f64, b: f64) -> bool {
        a.to_bits() == b.to_bits()
    }

    #[test]
    fn zero_and_one() {
        assert!(BigReal::zero(10).is_zero());
        assert_eq!(BigReal::one(3).to_f64(), 1.0);
        assert_eq!(BigReal::from_u64(5, 2).to_f64(), 4.0);
        assert_eq!(BigReal::from_u64(7, 2).to_f64(), 8.0);
        // 10 = 1010b at 2 bits is a tie between 8 and 12; even mantissa wins
        assert_eq!(BigReal::from_u64(10, 2).to_f64(), 8.0);
        assert_eq!(BigReal::from_u64(6, 2).to_f64(), 6.0);
        assert_eq!(BigReal::from_u64(11, 2).to_f64(), 12.0);
    }

    #[test]
    fn equality_ignores_precision() {
        assert_eq!(BigReal::from_u64(12, 64), BigReal::from_u64(12, 4));
        assert_ne!(BigReal::from_u64(12, 64), BigReal::from_u64(13, 64));
    }

    #[test]
    fn floor_and_ceil() {
        let x = BigReal::from_f64(-2.5);
        assert_eq!(x.floor(), BigInt::from(-3));
        assert_eq!(x.ceil(), BigInt::from(-2));
        let y = BigReal::from_f64(7.0);
        assert_eq!(y.floor(), BigInt::from(7));
        assert_eq!(y.ceil(), BigInt::from(7));
    }

    #[test]
    fn decimal_truncates_toward_zero() {
        let x = BigReal::from_f64(1.999);
        assert_eq!(x.to_decimal_string(2), "1.99");
        assert_eq!(BigReal::from_f64(-0.25).to_decimal_string(3), "-0.250");
        assert_eq!(format!("{:.1}", BigReal::from_f64(0.05)), "0.0");
    }

    #[test]
    fn sqrt_of_perfect_square_is_exact() {
        let x = BigReal::from_u64(144, 64).sqrt_prec(8);
        assert_eq!(x, BigReal::from_u64(12, 8));
        let q = BigReal::from_f64(0.25).sqrt_prec(3);
        assert_eq!(q.to_f64(), 0.5);
    }

    #[test]
    fn ordering() {
        let a = BigReal::from_f64(1.5);
        let b = BigReal::from_f64(-3.0);
        assert!(b < a);
        assert!(a > BigReal::from_u64(1, 4));
    }

    fn normal() -> impl Strategy<Value = f64> {
        (any::<bool>(), 1e-30f64..1e30).prop_map(|(s, v)| if s { -v } else { v })
    }

    proptest! {
        #[test]
        fn matches_hardware_double(a in normal(), b in normal()) {
            let (x, y) = (BigReal::from_f64(a), BigReal::from_f64(b));
            prop_assert!(same_bits((&x + &y).to_f64(), a + b));
            prop_assert!(same_bits((&x - &y).to_f64(), a - b));
            prop_assert!(same_bits((&x * &y).to_f64(), a * b));
            prop_assert!(same_bits((&x / &y).to_f64(), a / b));
            let ax = BigReal::from_f64(a.abs());
            prop_assert!(same_bits(ax.sqrt_prec(53).to_f64(), a.abs().sqrt()));
        }

        #[test]
        fn matches_hardware_single(a in 1e-10f32..1e10, b in 1e-10f32..1e10) {
            let (x, y) = (BigReal::from_f32(a), BigReal::from_f32(b));
            let p = (&x * &y).to_f64() as f32;
            prop_assert_eq!(p.to_bits(), (a * b).to_bits());
            let q = (&x / &y).to_f64() as f32;
            prop_assert_eq!(q.to_bits(), (a / b).to_bits());
            let s = (&x + &y).to_f64() as f32;
            prop_assert_eq!(s.to_bits(), (a + b).to_bits());
        }

        #[test]
        fn integer_round_trip(v in any::<u64>()) {
            let x = BigReal::from_u64(v, 64);
            prop_assert_eq!(x.floor(), BigInt::from(v));
        }
    }
}
