use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::algebra::{to_f64, Rat};
use crate::error::{Error, Result};

/// Closed interval with rational endpoints, `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatInterval {
    lo: Rat,
    hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: Rat) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn hull(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn bisect(&self) -> (RatInterval, RatInterval) {
        let m = self.midpoint();
        (
            RatInterval {
                lo: self.lo.clone(),
                hi: m.clone(),
            },
            RatInterval {
                lo: m,
                hi: self.hi.clone(),
            },
        )
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.lo), to_f64(&self.hi))
    }

    /// Integer power with the even-power case kept nonnegative.
    pub fn powi(&self, k: u32) -> RatInterval {
        if k == 0 {
            return RatInterval::point(Rat::one());
        }
        let a = num_traits::pow(self.lo.clone(), k as usize);
        let b = num_traits::pow(self.hi.clone(), k as usize);
        if k % 2 == 1 {
            return RatInterval { lo: a, hi: b };
        }
        let zero = Rat::zero();
        if self.lo >= zero {
            RatInterval { lo: a, hi: b }
        } else if self.hi <= zero {
            RatInterval { lo: b, hi: a }
        } else {
            RatInterval {
                lo: zero,
                hi: a.max(b),
            }
        }
    }
}

impl Add for &RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: &RatInterval) -> RatInterval {
        let c = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = c.iter().min().cloned().expect("nonempty");
        let hi = c.iter().max().cloned().expect("nonempty");
        RatInterval { lo, hi }
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Axis-aligned product of closed rational intervals, one per variable of
/// the polynomial it is paired with.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxRegion {
    dims: Vec<RatInterval>,
}

impl BoxRegion {
    pub fn new(dims: Vec<RatInterval>) -> Self {
        Self { dims }
    }

    pub fn from_bounds(bounds: &[(Rat, Rat)]) -> Result<Self> {
        let dims = bounds
            .iter()
            .map(|(lo, hi)| RatInterval::new(lo.clone(), hi.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dims })
    }

    /// `[0, 2] x [0, 1] x [0, 1]`, the `(p, x, y)` cuboid.
    pub fn cuboid() -> Self {
        let i = |a: i64, b: i64| {
            RatInterval::new(Rat::from_integer(a.into()), Rat::from_integer(b.into()))
                .expect("ordered")
        };
        Self::new(vec![i(0, 2), i(0, 1), i(0, 1)])
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn intervals(&self) -> &[RatInterval] {
        &self.dims
    }

    pub fn interval(&self, i: usize) -> &RatInterval {
        &self.dims[i]
    }

    pub fn volume(&self) -> Rat {
        self.dims.iter().fold(Rat::one(), |acc, d| acc * d.width())
    }

    pub fn lower_corner(&self) -> Vec<Rat> {
        self.dims.iter().map(|d| d.lo.clone()).collect()
    }

    pub fn midpoint(&self) -> Vec<Rat> {
        self.dims.iter().map(RatInterval::midpoint).collect()
    }

    /// Index of the widest side; the lowest index wins ties.
    pub fn widest(&self) -> usize {
        let mut best = 0;
        for i in 1..self.dims.len() {
            if self.dims[i].width() > self.dims[best].width() {
                best = i;
            }
        }
        best
    }

    pub fn split(&self, axis: usize) -> (BoxRegion, BoxRegion) {
        let (a, b) = self.dims[axis].bisect();
        let mut left = self.dims.clone();
        let mut right = self.dims.clone();
        left[axis] = a;
        right[axis] = b;
        (BoxRegion::new(left), BoxRegion::new(right))
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        x.len() == self.dims.len() && self.dims.iter().zip(x).all(|(d, v)| d.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn rejects_reversed_endpoints() {
        assert!(RatInterval::new(int(1), int(0)).is_err());
        assert!(RatInterval::new(int(0), int(0)).is_ok());
    }

    #[test]
    fn interval_arithmetic_contains_products() {
        let a = RatInterval::new(int(-1), int(2)).unwrap();
        let b = RatInterval::new(rat(1, 2), int(3)).unwrap();
        let m = &a * &b;
        assert_eq!(m, RatInterval::new(int(-3), int(6)).unwrap());
        assert_eq!(a.powi(2), RatInterval::new(int(0), int(4)).unwrap());
        assert_eq!((&a - &b).lo(), &int(-4));
    }

    #[test]
    fn splitting_the_cuboid() {
        let c = BoxRegion::cuboid();
        assert_eq!(c.widest(), 0);
        assert_eq!(c.volume(), int(2));
        let (l, r) = c.split(0);
        assert_eq!(l.interval(0).hi(), &int(1));
        assert_eq!(r.interval(0).lo(), &int(1));
        // after one split all sides have width 1; lowest index wins
        assert_eq!(l.widest(), 0);
    }
}
