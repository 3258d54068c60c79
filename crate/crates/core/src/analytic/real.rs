//! High-precision real values and conversions between the exact layer
//! (num-bigint / num-rational) and the floating layer (MPFR via rug).

use crate::arith::{Int, Rat};
use num_traits::Zero;
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use std::fmt;

pub fn bigint_to_rug(n: &Int) -> rug::Integer {
    let (sign, bytes) = n.to_bytes_le();
    let mut v = rug::Integer::from_digits(&bytes, rug::integer::Order::Lsf);
    if sign == num_bigint::Sign::Minus {
        v = -v;
    }
    v
}

pub fn rug_to_bigint(n: &rug::Integer) -> Int {
    let digits = n.to_digits::<u8>(rug::integer::Order::Lsf);
    let mag = num_bigint::BigUint::from_bytes_le(&digits);
    if n < &0 {
        -Int::from(mag)
    } else {
        Int::from(mag)
    }
}

pub fn int_to_float(n: &Int, prec: u32) -> Float {
    Float::with_val(prec, bigint_to_rug(n))
}

pub fn rat_to_float(q: &Rat, prec: u32) -> Float {
    let n = int_to_float(q.numer(), prec + 8);
    let d = int_to_float(q.denom(), prec + 8);
    Float::with_val(prec, n / d)
}

/// Exact rational value of a (finite) float.
pub fn float_to_rat(f: &Float) -> Rat {
    if f.is_zero() {
        return Rat::zero();
    }
    let r = f.to_rational().expect("finite float");
    let (num, den) = r.into_numer_denom();
    Rat::new(rug_to_bigint(&num), rug_to_bigint(&den))
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn euler_gamma(prec: u32) -> Float {
    Float::with_val(prec, Constant::Euler)
}

pub fn ln2(prec: u32) -> Float {
    Float::with_val(prec, Constant::Log2)
}

/// log2 of the absolute value, as a rough magnitude (f64 scale).
pub fn mag_log2(f: &Float) -> f64 {
    if f.is_zero() {
        return f64::NEG_INFINITY;
    }
    let exp = f.get_exp().unwrap_or(0);
    exp as f64
}

/// An arbitrary-precision real at an explicit working precision, carrying a
/// worst-case absolute error bound as a power of two. The bound is a model
/// of the numerical method that produced the value (truncation bound plus
/// rounding slop), not a formally verified enclosure.
#[derive(Clone)]
pub struct HighPrecisionReal {
    value: Float,
    /// log2 of the absolute error bound; f64::NEG_INFINITY for exact values.
    err_exp: f64,
}

impl HighPrecisionReal {
    pub fn new(value: Float, err_exp: f64) -> Self {
        HighPrecisionReal { value, err_exp }
    }

    /// Wrap a freshly rounded float, charging one ulp of its precision.
    pub fn from_float(value: Float) -> Self {
        let e = mag_log2(&value) - value.prec() as f64 + 1.0;
        HighPrecisionReal { value, err_exp: e }
    }

    pub fn exact_int(n: &Int, prec: u32) -> Self {
        HighPrecisionReal {
            value: int_to_float(n, prec),
            err_exp: f64::NEG_INFINITY,
        }
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn into_value(self) -> Float {
        self.value
    }

    pub fn precision(&self) -> u32 {
        self.value.prec()
    }

    pub fn error_exponent(&self) -> f64 {
        self.err_exp
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    fn ulp(&self) -> f64 {
        mag_log2(&self.value) - self.value.prec() as f64 + 1.0
    }

    pub fn add(&self, other: &Self) -> Self {
        let value = Float::with_val(self.value.prec(), &self.value + &other.value);
        let err = log2_sum(self.err_exp, other.err_exp);
        let mut out = HighPrecisionReal { value, err_exp: err };
        out.err_exp = log2_sum(out.err_exp, out.ulp());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let value = Float::with_val(self.value.prec(), &self.value - &other.value);
        let err = log2_sum(self.err_exp, other.err_exp);
        let mut out = HighPrecisionReal { value, err_exp: err };
        out.err_exp = log2_sum(out.err_exp, out.ulp());
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let value = Float::with_val(self.value.prec(), &self.value * &other.value);
        // |a e_b| + |b e_a| to first order
        let err = log2_sum(
            mag_log2(&self.value) + other.err_exp,
            mag_log2(&other.value) + self.err_exp,
        );
        let mut out = HighPrecisionReal { value, err_exp: err };
        out.err_exp = log2_sum(out.err_exp, out.ulp());
        out
    }
}

fn log2_sum(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    a.max(b) + 1.0
}

impl fmt::Debug for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (prec {}, err 2^{:.0})",
            self.value.to_string_radix(10, Some(30)),
            self.value.prec(),
            self.err_exp
        )
    }
}

/// Render a float as a decimal string at roughly its full precision.
pub fn float_to_decimal(f: &Float) -> String {
    let digits = (f.prec() as f64 * 0.30103) as usize + 2;
    f.to_string_radix(10, Some(digits))
}

pub fn float_pow_i64(f: &Float, e: i64, prec: u32) -> Float {
    Float::with_val(prec, f.pow(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use num_traits::Signed;

    #[test]
    fn conversions_roundtrip() {
        let n = int(1234567890123456789) * int(987654321);
        let r = rug_to_bigint(&bigint_to_rug(&n));
        assert_eq!(n, r);
        let neg = -n.clone();
        assert_eq!(neg, rug_to_bigint(&bigint_to_rug(&neg)));

        let q = ratio(-355, 113);
        let f = rat_to_float(&q, 128);
        let back = float_to_rat(&f);
        // dyadic approximation within 2^-120
        let diff = (q - back).abs();
        assert!(diff < ratio(1, 1i64 << 62) * ratio(1, 1i64 << 58));
    }

    #[test]
    fn hpr_error_tracking() {
        let a = HighPrecisionReal::exact_int(&int(1), 128);
        let b = HighPrecisionReal::from_float(Float::with_val(128, 3).recip());
        let c = a.add(&b).mul(&b);
        assert!(c.error_exponent() < -120.0);
        assert!(c.error_exponent() > f64::NEG_INFINITY);
    }
}
