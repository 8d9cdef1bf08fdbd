//! Truncated power series with exact rational coefficients.
//!
//! All elementary operations use coefficient recurrences, so each costs
//! `O(N^2)` rational operations and is exact up to the truncation order.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::{int, to_f64, Rat};
use crate::error::{Error, Result};

/// `a_0 + a_1 z + ... + a_N z^N`; every result of arithmetic on two series
/// carries the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

/// Elementary functions accepted by [`series_compose_elementary`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    Exp,
    Log,
    IntegrateDivT,
    Reciprocal,
}

impl TruncatedSeries {
    /// Pads or truncates `coeffs` to order `order`.
    pub fn new(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `z` itself.
    pub fn identity(order: usize) -> Self {
        Self::new(vec![Rat::zero(), Rat::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `z`, raising the order by one.
    pub fn shift_up(&self) -> Self {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(Rat::zero());
        c.extend(self.coeffs.iter().cloned());
        Self { coeffs: c }
    }

    /// Divides by `z`; requires `a_0 = 0` and lowers the order by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("division by z needs a_0 = 0".into()));
        }
        if self.order() == 0 {
            return Err(Error::Series("order too small to divide by z".into()));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let c: Vec<Rat> = (1..=n).map(|k| &self.coeffs[k] * int(k as i64)).collect();
        Self::new(c, n.saturating_sub(1))
    }

    /// Substitutes `z -> z^n`, keeping the order.
    pub fn compose_power(&self, n: usize) -> Self {
        let order = self.order();
        let mut c = vec![Rat::zero(); order + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            if k * n <= order {
                c[k * n] = a.clone();
            }
        }
        Self { coeffs: c }
    }

    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("sqrt needs a_0 = 1".into()));
        }
        let n = self.order();
        let half = Rat::new(1.into(), 2.into());
        let mut t = vec![Rat::zero(); n + 1];
        t[0] = Rat::one();
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc -= &t[j] * &t[k - j];
            }
            t[k] = acc * &half;
        }
        Ok(Self { coeffs: t })
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a_0 = 0".into()));
        }
        let n = self.order();
        let mut e = vec![Rat::zero(); n + 1];
        e[0] = Rat::one();
        // k e_k = sum_{j=1}^k j a_j e_{k-j}
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &e[k - j] * int(j as i64);
                }
            }
            e[k] = acc / int(k as i64);
        }
        Ok(Self { coeffs: e })
    }

    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("log needs a_0 = 1".into()));
        }
        let n = self.order();
        let mut l = vec![Rat::zero(); n + 1];
        // k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
        for k in 1..=n {
            let mut acc = &self.coeffs[k] * int(k as i64);
            for (j, lj) in l.iter().enumerate().take(k).skip(1) {
                if !lj.is_zero() {
                    acc -= lj * &self.coeffs[k - j] * int(j as i64);
                }
            }
            l[k] = acc / int(k as i64);
        }
        Ok(Self { coeffs: l })
    }

    /// `∫_0^z s(t)/t dt`, i.e. `a_k -> a_k / k`; requires `a_0 = 0`.
    pub fn integrate_div_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("integrate_div_t needs a_0 = 0".into()));
        }
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| if k == 0 { Rat::zero() } else { a / int(k as i64) })
            .collect();
        Ok(Self { coeffs: c })
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::Series("reciprocal needs a_0 != 0".into()));
        }
        let n = self.order();
        let inv0 = a0.recip();
        let mut r = vec![Rat::zero(); n + 1];
        r[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &r[k - j];
                }
            }
            r[k] = -acc * &inv0;
        }
        Ok(Self { coeffs: r })
    }

    pub fn compose(&self, kind: Elementary) -> Result<Self> {
        match kind {
            Elementary::Exp => self.exp(),
            Elementary::Log => self.log(),
            Elementary::IntegrateDivT => self.integrate_div_t(),
            Elementary::Reciprocal => self.reciprocal(),
        }
    }

    /// Horner evaluation of the truncated polynomial at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }
}

fn zip_with(a: &TruncatedSeries, b: &TruncatedSeries, f: impl Fn(&Rat, &Rat) -> Rat) -> TruncatedSeries {
    let n = a.order().min(b.order());
    TruncatedSeries {
        coeffs: (0..=n).map(|k| f(&a.coeffs[k], &b.coeffs[k])).collect(),
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut c = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: c }
    }
}

pub fn series_sqrt(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.sqrt()
}

pub fn series_compose_elementary(s: &TruncatedSeries, kind: Elementary) -> Result<TruncatedSeries> {
    s.compose(kind)
}

/// `z exp(∫_0^z (√(1+t^n) - 1)/t dt)` to order `order`, the function whose
/// `zf'/f` equals `√(1+z^n)`.
pub fn extremal_sl(n: usize, order: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::Series("extremal_sl needs n >= 1".into()));
    }
    if order < n + 1 {
        return Err(Error::Series(format!(
            "order {order} too small for n = {n}; need at least {}",
            n + 1
        )));
    }
    let inner = order - 1;
    let one_plus = TruncatedSeries::new(vec![Rat::one(), Rat::one()], inner).compose_power(n);
    let root = one_plus.sqrt()?;
    let minus_one = &root - &TruncatedSeries::constant(Rat::one(), inner);
    let g = minus_one.integrate_div_t()?.exp()?;
    Ok(g.shift_up())
}

/// `w = z f'(z) / f(z)` for a normalized `f = z + a_2 z^2 + ...`; the
/// result has order one less than `f`.
pub fn logarithmic_derivative_ratio(f: &TruncatedSeries) -> Result<TruncatedSeries> {
    if f.order() < 2 || !f.coeff(0).is_zero() || !f.coeff(1).is_one() {
        return Err(Error::Series(
            "logarithmic_derivative_ratio needs f = z + a_2 z^2 + ... of order >= 2".into(),
        ));
    }
    let g = f.shift_down()?;
    let zg = g.derivative().shift_up();
    let ratio = &zg * &g.reciprocal()?;
    Ok(&TruncatedSeries::constant(Rat::one(), ratio.order()) + &ratio)
}
