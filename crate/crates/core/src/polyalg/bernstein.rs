//! Tensor-product Bernstein form of a polynomial on a box.
//!
//! The coefficients are held as integer numerators over one positive common
//! denominator. Midpoint subdivision (de Casteljau at 1/2) then needs only
//! integer additions and shifts, and the hull of the child coefficients lies
//! inside the hull of the parent's.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::interval::{BoxRegion, RatInterval};
use super::ratpoly::RatPoly;
use crate::algebra::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct BernsteinPatch {
    region: BoxRegion,
    degrees: Vec<usize>,
    strides: Vec<usize>,
    nums: Vec<BigInt>,
    den: BigInt,
}

impl BernsteinPatch {
    pub fn new(f: &RatPoly, region: &BoxRegion) -> Result<Self> {
        if f.num_vars() != region.dim() {
            return Err(Error::DimensionMismatch {
                expected: f.num_vars(),
                got: region.dim(),
            });
        }
        let degrees: Vec<usize> = f.degrees().iter().map(|&d| d as usize).collect();
        let strides = strides_for(&degrees);
        let len: usize = degrees.iter().map(|d| d + 1).product();

        let mut coeffs = vec![Rat::zero(); len];
        for (e, c) in f.terms() {
            let flat: usize = e.iter().zip(&strides).map(|(&k, s)| k as usize * s).sum();
            coeffs[flat] = c.clone();
        }

        for axis in 0..degrees.len() {
            let d = degrees[axis];
            if d == 0 {
                continue;
            }
            let iv = region.interval(axis);
            let lo = iv.lo().clone();
            let w = iv.width();
            // C(j,k) / C(d,k)
            let conv: Vec<Vec<Rat>> = (0..=d)
                .map(|j| {
                    (0..=j)
                        .map(|k| Rat::new(binomial(j, k), binomial(d, k)))
                        .collect()
                })
                .collect();
            for_each_fiber(&degrees, &strides, axis, |idx| {
                let mut c: Vec<Rat> = idx.iter().map(|&i| coeffs[i].clone()).collect();
                // Taylor shift x -> lo + x
                if !lo.is_zero() {
                    for i in 0..d {
                        for k in (i..d).rev() {
                            let t = &lo * &c[k + 1];
                            c[k] += t;
                        }
                    }
                }
                let mut wk = Rat::one();
                for ck in c.iter_mut() {
                    *ck *= &wk;
                    wk *= &w;
                }
                for (j, row) in conv.iter().enumerate() {
                    let mut b = Rat::zero();
                    for (k, r) in row.iter().enumerate() {
                        if !c[k].is_zero() {
                            b += r * &c[k];
                        }
                    }
                    coeffs[idx[j]] = b;
                }
            });
        }

        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self {
            region: region.clone(),
            degrees,
            strides,
            nums,
            den,
        })
    }

    pub fn region(&self) -> &BoxRegion {
        &self.region
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn coefficients(&self) -> impl Iterator<Item = Rat> + '_ {
        self.nums.iter().map(|n| Rat::new(n.clone(), self.den.clone()))
    }

    pub fn upper(&self) -> Rat {
        let m = self.nums.iter().max().expect("at least one coefficient");
        Rat::new(m.clone(), self.den.clone())
    }

    pub fn lower(&self) -> Rat {
        let m = self.nums.iter().min().expect("at least one coefficient");
        Rat::new(m.clone(), self.den.clone())
    }

    pub fn enclosure(&self) -> RatInterval {
        RatInterval::new(self.lower(), self.upper()).expect("min <= max")
    }

    /// Exact function values at the box corners, read off the corner
    /// coefficients. Axes of degree zero contribute only their lower end.
    pub fn vertices(&self) -> Vec<(Vec<Rat>, Rat)> {
        let n = self.degrees.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0..(1usize << n) {
            let mut flat = 0;
            let mut point = Vec::with_capacity(n);
            let mut duplicate = false;
            for axis in 0..n {
                let upper = mask >> axis & 1 == 1;
                let iv = self.region.interval(axis);
                if upper && (self.degrees[axis] == 0 || iv.width().is_zero()) {
                    duplicate = true;
                    break;
                }
                if upper {
                    flat += self.degrees[axis] * self.strides[axis];
                    point.push(iv.hi().clone());
                } else {
                    point.push(iv.lo().clone());
                }
            }
            if !duplicate {
                out.push((point, Rat::new(self.nums[flat].clone(), self.den.clone())));
            }
        }
        out
    }

    /// Bisects along `axis`, returning the lower and upper halves.
    pub fn split(&self, axis: usize) -> (BernsteinPatch, BernsteinPatch) {
        let (lbox, rbox) = self.region.split(axis);
        let d = self.degrees[axis];
        if d == 0 {
            let mut l = self.clone();
            let mut r = self.clone();
            l.region = lbox;
            r.region = rbox;
            return (l, r);
        }
        let mut left = vec![BigInt::zero(); self.nums.len()];
        let mut right = vec![BigInt::zero(); self.nums.len()];
        for_each_fiber(&self.degrees, &self.strides, axis, |idx| {
            let mut work: Vec<BigInt> = idx.iter().map(|&i| &self.nums[i] << d).collect();
            left[idx[0]] = work[0].clone();
            right[idx[d]] = work[d].clone();
            for r in 1..=d {
                for k in 0..=d - r {
                    work[k] = (&work[k] + &work[k + 1]) / 2;
                }
                left[idx[r]] = work[0].clone();
                right[idx[d - r]] = work[d - r].clone();
            }
        });
        let den = &self.den << d;
        (
            self.with_coeffs(lbox, left, den.clone()),
            self.with_coeffs(rbox, right, den),
        )
    }

    fn with_coeffs(&self, region: BoxRegion, mut nums: Vec<BigInt>, mut den: BigInt) -> Self {
        // strip common powers of two to keep the numbers short
        let shift = nums
            .iter()
            .filter(|n| !n.is_zero())
            .map(|n| n.trailing_zeros().unwrap_or(0))
            .chain(std::iter::once(den.trailing_zeros().unwrap_or(0)))
            .min()
            .unwrap_or(0);
        if shift > 0 {
            for n in nums.iter_mut() {
                *n = if n.is_negative() {
                    -((-&*n) >> shift)
                } else {
                    &*n >> shift
                };
            }
            den >>= shift;
        }
        Self {
            region,
            degrees: self.degrees.clone(),
            strides: self.strides.clone(),
            nums,
            den,
        }
    }
}

/// Enclosure of the range of `f` over `region` from the hull of its
/// Bernstein coefficients.
pub fn bernstein_enclosure(f: &RatPoly, region: &BoxRegion) -> Result<RatInterval> {
    Ok(BernsteinPatch::new(f, region)?.enclosure())
}

fn strides_for(degrees: &[usize]) -> Vec<usize> {
    let mut strides = vec![1; degrees.len()];
    for i in (0..degrees.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * (degrees[i + 1] + 1);
    }
    strides
}

/// Calls `f` with the flat indices of every fiber along `axis`.
fn for_each_fiber(
    degrees: &[usize],
    strides: &[usize],
    axis: usize,
    mut f: impl FnMut(&[usize]),
) {
    let len: usize = degrees.iter().map(|d| d + 1).product();
    let span = degrees[axis] + 1;
    let stride = strides[axis];
    let mut idx = Vec::with_capacity(span);
    for start in 0..len {
        if !(start / stride).is_multiple_of(span) {
            continue;
        }
        idx.clear();
        idx.extend((0..span).map(|k| start + k * stride));
        f(&idx);
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn unit() -> BoxRegion {
        BoxRegion::from_bounds(&[(int(0), int(1))]).unwrap()
    }

    #[test]
    fn degree_one_is_exact() {
        let x = RatPoly::var("x");
        let e = bernstein_enclosure(&x, &unit()).unwrap();
        assert_eq!(e, RatInterval::new(int(0), int(1)).unwrap());
    }

    #[test]
    fn square_on_unit_interval() {
        let x = RatPoly::var("x");
        let e = bernstein_enclosure(&x.pow(2), &unit()).unwrap();
        assert_eq!(e, RatInterval::new(int(0), int(1)).unwrap());
    }

    #[test]
    fn shifted_box_and_split_agree_with_direct_construction() {
        let v = RatPoly::vars_in(&["x", "y"]);
        let f = &(&v[0].pow(3) - &(&v[0] * &v[1]).scale(&int(2))) + &v[1].pow(2);
        let region = BoxRegion::from_bounds(&[(int(-1), int(2)), (rat(1, 2), int(1))]).unwrap();
        let patch = BernsteinPatch::new(&f, &region).unwrap();
        let (l, r) = patch.split(0);
        let direct_l = BernsteinPatch::new(&f, l.region()).unwrap();
        let direct_r = BernsteinPatch::new(&f, r.region()).unwrap();
        assert_eq!(
            l.coefficients().collect::<Vec<_>>(),
            direct_l.coefficients().collect::<Vec<_>>()
        );
        assert_eq!(
            r.coefficients().collect::<Vec<_>>(),
            direct_r.coefficients().collect::<Vec<_>>()
        );
        for (pt, v) in patch.vertices() {
            assert_eq!(f.eval_rational(&pt).unwrap(), v);
        }
        assert_eq!(patch.vertices().len(), 4);
    }

    #[test]
    fn constant_axis_keeps_one_vertex_per_side() {
        let v = RatPoly::vars_in(&["x", "y"]);
        let f = v[0].clone();
        let patch = BernsteinPatch::new(&f, &BoxRegion::from_bounds(&[(int(0), int(1)), (int(0), int(1))]).unwrap()).unwrap();
        assert_eq!(patch.vertices().len(), 2);
    }
}
