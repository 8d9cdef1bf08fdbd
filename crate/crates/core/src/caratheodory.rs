//! Parametrization of the first four Carathéodory coefficients by
//! `(p, γ, η, ρ)` with `p = p_1 ∈ [0, 2]` and `γ, η, ρ` in the closed unit
//! disk, and the induced Taylor coefficients `a_2..a_5` of the class.

use num_complex::Complex;
use num_traits::{One, Zero};
use rand::Rng;

use crate::algebra::{int, rat, to_f64, Algebra, Conjugate, Rat};
use crate::error::{Error, Result};
use crate::polyalg::{ComplexPoly, RatPoly};

/// Real coordinate types a [`ParamPoint`] can be built over.
pub trait Real: Algebra + num_traits::Num + PartialOrd + std::fmt::Debug {}
impl Real for Rat {}
impl Real for f64 {}

/// A point `(p, γ, η, ρ)` of the parameter domain.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoint<T> {
    p: T,
    gamma: Complex<T>,
    eta: Complex<T>,
    rho: Complex<T>,
}

impl<T: Real> ParamPoint<T> {
    pub fn new(p: T, gamma: Complex<T>, eta: Complex<T>, rho: Complex<T>) -> Result<Self> {
        if p < T::zero() || p > T::from_int(2) {
            return Err(Error::Domain(format!("p = {p:?} outside [0, 2]")));
        }
        for (name, z) in [("gamma", &gamma), ("eta", &eta), ("rho", &rho)] {
            if z.norm_sqr() > T::one() {
                return Err(Error::Domain(format!("|{name}| > 1")));
            }
        }
        Ok(Self { p, gamma, eta, rho })
    }

    /// Point with real `γ, η, ρ`.
    pub fn real(p: T, gamma: T, eta: T, rho: T) -> Result<Self> {
        let c = |v: T| Complex::new(v, T::zero());
        Self::new(p, c(gamma), c(eta), c(rho))
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn gamma(&self) -> &Complex<T> {
        &self.gamma
    }

    pub fn eta(&self) -> &Complex<T> {
        &self.eta
    }

    pub fn rho(&self) -> &Complex<T> {
        &self.rho
    }

    /// Same point with `γ, η, ρ` conjugated.
    pub fn conjugated(&self) -> Self {
        Self {
            p: self.p.clone(),
            gamma: self.gamma.conj(),
            eta: self.eta.conj(),
            rho: self.rho.conj(),
        }
    }
}

impl ParamPoint<Rat> {
    pub fn to_f64(&self) -> ParamPoint<f64> {
        let c = |z: &Complex<Rat>| Complex::new(to_f64(&z.re), to_f64(&z.im));
        ParamPoint {
            p: to_f64(&self.p),
            gamma: c(&self.gamma),
            eta: c(&self.eta),
            rho: c(&self.rho),
        }
    }

    /// Coordinates in the order of [`CARTESIAN_VARS`].
    pub fn cartesian(&self) -> [Rat; 7] {
        [
            self.p.clone(),
            self.gamma.re.clone(),
            self.gamma.im.clone(),
            self.eta.re.clone(),
            self.eta.im.clone(),
            self.rho.re.clone(),
            self.rho.im.clone(),
        ]
    }
}

/// `p_1..p_4`.
#[derive(Clone, Debug, PartialEq)]
pub struct CaratheodoryTail<T> {
    pub p1: Complex<T>,
    pub p2: Complex<T>,
    pub p3: Complex<T>,
    pub p4: Complex<T>,
}

impl<T: Real> CaratheodoryTail<T> {
    pub fn as_array(&self) -> [Complex<T>; 4] {
        [
            self.p1.clone(),
            self.p2.clone(),
            self.p3.clone(),
            self.p4.clone(),
        ]
    }

    pub fn real(p1: T, p2: T, p3: T, p4: T) -> Self {
        let c = |v: T| Complex::new(v, T::zero());
        Self {
            p1: c(p1),
            p2: c(p2),
            p3: c(p3),
            p4: c(p4),
        }
    }
}

/// Taylor coefficients `a_1 = 1, a_2, ...` of a normalized function.
#[derive(Clone, Debug, PartialEq)]
pub struct SchlichtCoefficients<A> {
    /// `a[0]` is `a_1`.
    a: Vec<A>,
}

impl<A: Algebra> SchlichtCoefficients<A> {
    /// From `a_2, a_3, ...`; `a_1 = 1` is implied.
    pub fn from_tail_coeffs(rest: Vec<A>) -> Self {
        let mut a = vec![A::one()];
        a.extend(rest);
        Self { a }
    }

    /// `a_k` for `k >= 1`, if known.
    pub fn get(&self, k: usize) -> Option<&A> {
        k.checked_sub(1).and_then(|i| self.a.get(i))
    }

    /// Largest index `k` with `a_k` known.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

impl SchlichtCoefficients<Complex<Rat>> {
    /// Real coefficients read off a normalized power series.
    pub fn from_series(f: &crate::series::TruncatedSeries) -> Self {
        let rest = (2..=f.order())
            .map(|k| Complex::new(f.coeff(k), Rat::zero()))
            .collect();
        Self::from_tail_coeffs(rest)
    }
}

/// `p_1..p_4` at a parameter point.
pub fn tail_from_params<T: Real>(pt: &ParamPoint<T>) -> CaratheodoryTail<T> {
    let k = |n: i64| Complex::<T>::from_int(n);
    let p = Complex::new(pt.p.clone(), T::zero());
    let g = pt.gamma.clone();
    let e = pt.eta.clone();
    let r = pt.rho.clone();
    let q = k(4) - p.clone() * p.clone();
    let one_minus_g2 = k(1) - g.clone() * g.conj();
    let one_minus_e2 = k(1) - e.clone() * e.conj();

    // 2 p_2 = p^2 + γ(4 - p^2)
    let p2 = (p.pow(2) + g.clone() * q.clone()) * Complex::ratio(1, 2);
    // 4 p_3 = p^3 + 2p(4-p^2)γ - p(4-p^2)γ^2 + 2(4-p^2)(1-|γ|^2)η
    let p3 = (p.pow(3) + k(2) * p.clone() * q.clone() * g.clone()
        - p.clone() * q.clone() * g.pow(2)
        + k(2) * q.clone() * one_minus_g2.clone() * e.clone())
        * Complex::ratio(1, 4);
    // 8 p_4 = p^4 + (4-p^2)γ(p^2(γ^2-3γ+3) + 4γ)
    //         - 4(4-p^2)(1-|γ|^2)(p(γ-1)η + γ̄η^2 - (1-|η|^2)ρ)
    let p4 = (p.pow(4)
        + q.clone() * g.clone() * (p.pow(2) * (g.pow(2) - k(3) * g.clone() + k(3)) + k(4) * g.clone())
        - k(4)
            * q
            * one_minus_g2
            * (p.clone() * (g.clone() - k(1)) * e.clone() + g.conj() * e.pow(2) - one_minus_e2 * r))
        * Complex::ratio(1, 8);
    CaratheodoryTail { p1: p, p2, p3, p4 }
}

/// `a_2..a_5` in terms of `p_1..p_4`, over any commutative ring.
pub fn coefficients_from_tail_generic<A: Algebra>(p1: &A, p2: &A, p3: &A, p4: &A) -> [A; 4] {
    let r = |n: i64, d: i64| A::ratio(n, d);
    let a2 = p1.clone() * r(1, 4);
    let a3 = p2.clone() * r(1, 8) - p1.pow(2) * r(3, 64);
    let a4 = p3.clone() * r(1, 12) - p1.clone() * p2.clone() * r(7, 96) + p1.pow(3) * r(13, 768);
    let a5 = (p1.pow(4) * r(49, 384) - p1.pow(2) * p2.clone() * r(17, 24)
        + p2.pow(2) * r(1, 2)
        + p1.clone() * p3.clone() * r(11, 12)
        - p4.clone())
        * r(-1, 16);
    [a2, a3, a4, a5]
}

pub fn coefficients_from_tail<T: Real>(t: &CaratheodoryTail<T>) -> SchlichtCoefficients<Complex<T>> {
    let [a2, a3, a4, a5] = coefficients_from_tail_generic(&t.p1, &t.p2, &t.p3, &t.p4);
    SchlichtCoefficients::from_tail_coeffs(vec![a2, a3, a4, a5])
}

/// Variables of the cartesian symbolic form: `p` and the real and imaginary
/// parts of `γ, η, ρ`.
pub const CARTESIAN_VARS: [&str; 7] = ["p", "gr", "gi", "er", "ei", "rr", "ri"];

/// Variables of the modulus form: `p` and real `γ = x`, `η = y`, `ρ = r`.
pub const MODULUS_VARS: [&str; 4] = ["p", "x", "y", "r"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailForm {
    Cartesian,
    Modulus,
}

/// `p_2, p_3, p_4` (and `p_1 = p`) as complex polynomials.
#[derive(Clone, Debug)]
pub struct SymbolicTail {
    pub form: TailForm,
    pub p1: ComplexPoly,
    pub p2: ComplexPoly,
    pub p3: ComplexPoly,
    pub p4: ComplexPoly,
}

/// The parameter variables as complex polynomials `(p, γ, η, ρ)` sharing
/// one variable ordering.
pub fn symbolic_params(form: TailForm) -> [ComplexPoly; 4] {
    match form {
        TailForm::Cartesian => {
            let v = RatPoly::vars_in(&CARTESIAN_VARS);
            let z = |re: &RatPoly, im: &RatPoly| ComplexPoly::new(re.clone(), im.clone());
            let zero = RatPoly::constant_in(&CARTESIAN_VARS, Rat::zero());
            [
                z(&v[0], &zero),
                z(&v[1], &v[2]),
                z(&v[3], &v[4]),
                z(&v[5], &v[6]),
            ]
        }
        TailForm::Modulus => {
            let v = RatPoly::vars_in(&MODULUS_VARS);
            [0, 1, 2, 3].map(|i| ComplexPoly::real(v[i].clone()))
        }
    }
}

/// Symbolic `p_1..p_4`. The cartesian form is the full complex
/// parametrization in seven real variables; the modulus form is its
/// restriction to real nonnegative `γ = x`, `η = y`, `ρ = r`.
pub fn symbolic_tail(form: TailForm) -> SymbolicTail {
    let [p, g, e, r] = symbolic_params(form);
    let c = |n: i64| ComplexPoly::from_int(n);
    let q = c(4) - p.pow(2);
    let mg = c(1) - g.clone() * g.conj();
    let me = c(1) - e.clone() * e.conj();
    let p2 = (p.pow(2) + q.clone() * g.clone()).scale(&rat(1, 2));
    let p3 = (p.pow(3) + c(2) * p.clone() * q.clone() * g.clone()
        - p.clone() * q.clone() * g.pow(2)
        + c(2) * q.clone() * mg.clone() * e.clone())
    .scale(&rat(1, 4));
    let inner = p.pow(2) * (g.pow(2) - c(3) * g.clone() + c(3)) + c(4) * g.clone();
    let tail = p.clone() * (g.clone() - c(1)) * e.clone() + g.conj() * e.pow(2) - me * r;
    let p4 = (p.pow(4) + q.clone() * g * inner - c(4) * q * mg * tail).scale(&rat(1, 8));
    SymbolicTail {
        form,
        p1: p,
        p2,
        p3,
        p4,
    }
}

/// Rational point of the closed unit disk with exactly rational modulus
/// `r`, direction from the rational parametrization of the circle.
fn rational_disk_point<R: Rng>(rng: &mut R, modulus: Rat) -> Complex<Rat> {
    let s = rat(rng.random_range(-400..=400), 100);
    let den = Rat::one() + &s * &s;
    let mut c = (Rat::one() - &s * &s) / &den;
    let mut d = (int(2) * &s) / den;
    if rng.random_bool(0.5) {
        c = -c;
        d = -d;
    }
    Complex::new(c * &modulus, d * modulus)
}

fn random_modulus<R: Rng>(rng: &mut R) -> Rat {
    match rng.random_range(0..8) {
        0 | 1 => Rat::one(),
        2 => Rat::zero(),
        _ => rat(rng.random_range(0..=1024), 1024),
    }
}

/// Random rational parameter point together with the exact moduli
/// `(|γ|, |η|)`; boundary moduli 0 and 1 are drawn with positive probability.
pub fn random_rational_point<R: Rng>(rng: &mut R) -> (ParamPoint<Rat>, Rat, Rat) {
    let p = match rng.random_range(0..10) {
        0 => Rat::zero(),
        1 => int(2),
        _ => rat(rng.random_range(0..=2048), 1024),
    };
    let x = random_modulus(rng);
    let y = random_modulus(rng);
    let rm = random_modulus(rng);
    let gamma = rational_disk_point(rng, x.clone());
    let eta = rational_disk_point(rng, y.clone());
    let rho = rational_disk_point(rng, rm);
    let pt = ParamPoint::new(p, gamma, eta, rho).expect("constructed inside the domain");
    (pt, x, y)
}
