use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{int, Rat};
use crate::error::{Error, Result};
use crate::polyalg::{RatInterval, RatPoly};

/// Dense univariate polynomial, coefficients from the constant term up.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Converts a polynomial in which at most one variable has positive
    /// degree.
    pub fn from_ratpoly(f: &RatPoly) -> Result<Self> {
        let f = f.compact();
        if f.num_vars() > 1 {
            return Err(Error::NotUnivariate(f.vars().join(", ")));
        }
        let deg = f.degrees().first().copied().unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (e, c) in f.terms() {
            let k = e.first().copied().unwrap_or(0) as usize;
            coeffs[k] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_ratpoly(&self, var: &str) -> RatPoly {
        let x = RatPoly::var(var);
        self.coeffs
            .iter()
            .enumerate()
            .fold(RatPoly::constant_in(&[var], Rat::zero()), |acc, (k, c)| {
                &acc + &x.pow(k as u32).scale(c)
            })
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + crate::algebra::to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Monic multiple; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Rat::one() / l)),
            None => self.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder; errors on division by zero.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::new(Vec::new()), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f / gcd(f, f')`: same real roots, all simple.
    pub fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        self.div_rem(&g).expect("gcd is nonzero").0
    }

    /// Whether `self = c * other` for some nonzero rational `c`.
    pub fn is_multiple_of(&self, other: &Self) -> bool {
        match (self.leading(), other.leading()) {
            (Some(a), Some(b)) if self.degree() == other.degree() => *self == other.scale(&(a / b)),
            _ => false,
        }
    }

    fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero");
            if r.is_zero() {
                break;
            }
            // positive normalization keeps the numbers small without
            // changing signs
            let l = r.leading().expect("nonzero").abs();
            seq.push(r.scale(&(-Rat::one() / l)));
        }
        seq
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratpoly("p"))
    }
}

fn variations(seq: &[UniPoly], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in seq {
        let v = s.eval(x);
        let sign = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if sign != 0 {
            if last != 0 && sign != last {
                count += 1;
            }
            last = sign;
        }
    }
    count
}

fn sign(v: &Rat) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Disjoint intervals, each holding exactly one real root.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub intervals: Vec<RatInterval>,
    /// Signs of the square-free part at each interval's endpoints.
    pub signs: Vec<(i8, i8)>,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Interval midpoints as doubles.
    pub fn approximations(&self) -> Vec<f64> {
        self.intervals
            .iter()
            .map(|iv| crate::algebra::to_f64(&iv.midpoint()))
            .collect()
    }
}

/// Isolates every real root of the univariate `f` in the closed `interval`
/// by Sturm counting and bisection, refining each to width `<= refine_to`.
pub fn isolate_roots(f: &RatPoly, interval: &RatInterval, refine_to: &Rat) -> Result<RootIsolation> {
    if !refine_to.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    let f = UniPoly::from_ratpoly(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = f.square_free();
    let seq = sf.sturm_sequence();
    // roots in (a, b]
    let count = |a: &Rat, b: &Rat| variations(&seq, a) - variations(&seq, b);

    let mut found: Vec<RatInterval> = Vec::new();
    let lo = interval.lo().clone();
    if sf.eval(&lo).is_zero() {
        found.push(RatInterval::point(lo.clone()));
    }
    let mut stack = vec![(lo, interval.hi().clone())];
    while let Some((a, b)) = stack.pop() {
        if a >= b {
            continue;
        }
        match count(&a, &b) {
            0 => {}
            1 => found.push(refine(&sf, &count, a, b, refine_to)),
            _ => {
                let m = (&a + &b) / int(2);
                // upper half first so that popping yields ascending order
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    found.sort_by(|x, y| x.lo().cmp(y.lo()));
    let signs = found
        .iter()
        .map(|iv| (sign(&sf.eval(iv.lo())), sign(&sf.eval(iv.hi()))))
        .collect();
    Ok(RootIsolation {
        intervals: found,
        signs,
    })
}

fn refine(sf: &UniPoly, count: &impl Fn(&Rat, &Rat) -> usize, mut a: Rat, mut b: Rat, tol: &Rat) -> RatInterval {
    if sf.eval(&b).is_zero() {
        return RatInterval::point(b);
    }
    while &(&b - &a) > tol {
        let m = (&a + &b) / int(2);
        if sf.eval(&m).is_zero() {
            return RatInterval::point(m);
        }
        if count(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
    RatInterval::new(a, b).expect("a < b")
}
