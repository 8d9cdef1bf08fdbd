//! Scalar traits shared by the numeric and symbolic code paths.
//!
//! The same coefficient formulas are evaluated over exact rationals, exact
//! complex rationals, symbolic polynomials and (in the sampling oracle)
//! doubles. [`Algebra`] is the commutative-ring interface they all share.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Exact rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"3"`, `"-1/36"`, `"0.35"` or `"1e-9"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Domain(format!("cannot parse `{s}` as a rational"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rat::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        Rat::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        value = -value;
    }
    Ok(value)
}

/// Decimal rendering with `digits` significant digits, for reports.
pub fn decimal(r: &Rat, digits: usize) -> String {
    let v = to_f64(r);
    if v == 0.0 {
        return "0".to_string();
    }
    format!("{:.*e}", digits.saturating_sub(1), v)
}

/// Commutative ring with a rational embedding.
pub trait Algebra:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> + Zero + One
{
    fn from_rational(r: &Rat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&rat(num, den))
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    fn scale(&self, r: &Rat) -> Self {
        self.clone() * Self::from_rational(r)
    }
}

/// Complex conjugation; the identity on real rings.
pub trait Conjugate {
    fn conj(&self) -> Self;
}

impl Algebra for Rat {
    fn from_rational(r: &Rat) -> Self {
        r.clone()
    }
}

impl Algebra for f64 {
    fn from_rational(r: &Rat) -> Self {
        to_f64(r)
    }
}

impl<T> Algebra for Complex<T>
where
    T: Algebra + num_traits::Num,
{
    fn from_rational(r: &Rat) -> Self {
        Complex::new(T::from_rational(r), T::zero())
    }
}

impl<T: Clone + Neg<Output = T>> Conjugate for Complex<T> {
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
}

/// `|z|^2` for exact complex rationals.
pub fn norm_sqr(z: &Complex<Rat>) -> Rat {
    &z.re * &z.re + &z.im * &z.im
}

/// Total order helper for rationals that may be negative.
pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimal_and_fraction_forms() {
        assert_eq!(parse_rat("1e-9").unwrap(), rat(1, 1_000_000_000));
        assert_eq!(parse_rat("0.35").unwrap(), rat(7, 20));
        assert_eq!(parse_rat("-1/36").unwrap(), rat(-1, 36));
        assert_eq!(parse_rat("2.5E2").unwrap(), int(250));
        assert_eq!(parse_rat(".5").unwrap(), rat(1, 2));
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn complex_ring_embedding() {
        let z: Complex<Rat> = Algebra::ratio(1, 3);
        assert_eq!(z.re, rat(1, 3));
        assert!(z.im.is_zero());
        let w = Complex::new(int(1), int(2));
        assert_eq!(norm_sqr(&w), int(5));
        assert_eq!(w.conj().im, int(-2));
    }
}
