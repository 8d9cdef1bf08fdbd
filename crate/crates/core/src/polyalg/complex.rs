use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ratpoly::RatPoly;
use crate::algebra::{Algebra, Conjugate, Rat};

/// Complex-valued polynomial in real variables, stored as a pair of real
/// and imaginary [`RatPoly`] parts.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ComplexPoly {
    pub re: RatPoly,
    pub im: RatPoly,
}

impl ComplexPoly {
    pub fn new(re: RatPoly, im: RatPoly) -> Self {
        Self { re, im }
    }

    pub fn real(re: RatPoly) -> Self {
        Self {
            re,
            im: RatPoly::zero(),
        }
    }

    /// `re + i*im` built from two real variables.
    pub fn from_parts(re: &str, im: &str) -> Self {
        Self {
            re: RatPoly::var(re),
            im: RatPoly::var(im),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> RatPoly {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }
}

impl Add for ComplexPoly {
    type Output = ComplexPoly;
    fn add(self, rhs: ComplexPoly) -> ComplexPoly {
        ComplexPoly {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for ComplexPoly {
    type Output = ComplexPoly;
    fn sub(self, rhs: ComplexPoly) -> ComplexPoly {
        ComplexPoly {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for ComplexPoly {
    type Output = ComplexPoly;
    fn mul(self, rhs: ComplexPoly) -> ComplexPoly {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        ComplexPoly { re, im }
    }
}

impl Neg for ComplexPoly {
    type Output = ComplexPoly;
    fn neg(self) -> ComplexPoly {
        ComplexPoly {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for ComplexPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        ComplexPoly::is_zero(self)
    }
}

impl One for ComplexPoly {
    fn one() -> Self {
        Self::real(RatPoly::one())
    }
}

impl Algebra for ComplexPoly {
    fn from_rational(r: &Rat) -> Self {
        Self::real(RatPoly::constant(r.clone()))
    }

    fn scale(&self, r: &Rat) -> Self {
        ComplexPoly {
            re: self.re.scale(r),
            im: self.im.scale(r),
        }
    }
}

impl Conjugate for ComplexPoly {
    fn conj(&self) -> Self {
        ComplexPoly {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn modulus_of_a_product() {
        let z = ComplexPoly::from_parts("a", "b");
        let w = ComplexPoly::from_parts("c", "d");
        let lhs = (z.clone() * w.clone()).norm_sqr();
        let rhs = &z.norm_sqr() * &w.norm_sqr();
        assert_eq!(lhs, rhs);
        let zz = z.clone() * z.conj();
        assert!(zz.im.is_zero());
        assert_eq!(zz.re, z.norm_sqr());
        let two = ComplexPoly::from_int(2);
        assert_eq!((two * z).re, RatPoly::var("a").scale(&int(2)));
    }
}
