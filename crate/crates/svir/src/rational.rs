//! Exact rational arithmetic.
//!
//! Central charges and lowest weights are rationals with denominators
//! up to `8m(m+2)`; weight congruences are checked mod 1 exactly.
//! Backed by arbitrary-precision integers, so sums never overflow
//! silently. Values are always stored reduced with a positive
//! denominator.

use crate::scalar::Real;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Fractional part in `[0, 1)`.
pub fn mod_one(x: &Rational) -> Rational {
    x - x.floor()
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Arbitrary-precision values at desk scale always fit; a ratio
        // fallback keeps this total.
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// `exp(2πi x)` evaluated from `x mod 1`, so exactly equal rationals
/// give bit-identical phases regardless of their integer parts.
pub fn phase<T: Real>(x: &Rational) -> Complex<T> {
    let frac = mod_one(x);
    let angle = T::of(2.0) * T::PI() * T::of(to_f64(&frac));
    Complex::new(angle.cos(), angle.sin())
}

/// Serialize-friendly (num, den) pair; the denominator is positive.
pub fn to_i64_pair(x: &Rational) -> Option<(i64, i64)> {
    debug_assert!(x.denom().is_positive() || x.denom().is_zero());
    Some((x.numer().to_i64()?, x.denom().to_i64()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let x = rat(4, -6);
        assert_eq!(x, rat(-2, 3));
        assert!(x.denom().is_positive());
    }

    #[test]
    fn mod_one_of_negative() {
        assert_eq!(mod_one(&rat(-1, 2)), rat(1, 2));
        assert_eq!(mod_one(&rat(9, 4)), rat(1, 4));
        assert_eq!(mod_one(&rat_int(-3)), rat_int(0));
    }

    #[test]
    fn phase_of_half_is_minus_one() {
        let z: num_complex::Complex<f64> = phase(&rat(1, 2));
        assert!((z.re + 1.0).abs() < 1e-15 && z.im.abs() < 1e-15);
        // integer part is irrelevant
        let w: num_complex::Complex<f64> = phase(&rat(7, 2));
        assert_eq!(z, w);
    }

    #[test]
    fn big_denominators_stay_exact() {
        // Sums with denominator 8·30·32 must cancel exactly.
        let a = rat(45, 8 * 30 * 32);
        let b = rat(1, 16);
        let c = &a + &b - &a - &b;
        assert!(c.is_zero());
    }
}
