//! Grid checks for membership in the class (`|(zf'/f)^2 - 1| < 1`), the
//! right loop of the lemniscate and its parametrization `S(t)`, the
//! convolution kernel `H_t` and the nonvanishing of `(f * H_t)(z) / z`.
//!
//! Everything here is grid evidence in double precision, not a proof.

use num_complex::Complex64;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::to_f64;
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Default bound on the estimated truncation tail for membership checks.
pub const MEMBERSHIP_TAIL_TOL: f64 = 1e-6;
/// `|(f * H_t)(z) / z|` must stay above this.
pub const NONVANISHING_THRESHOLD: f64 = 1e-3;

/// Concentric circles `|z| = radius * k / rings`, `k = 1..=rings`, each
/// sampled at `angles` equally spaced points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub radius: f64,
    pub angles: usize,
    pub rings: usize,
    /// Largest acceptable estimated truncation tail at `radius`.
    pub tail_tol: f64,
}

impl GridSpec {
    pub fn new(radius: f64, angles: usize) -> Self {
        Self {
            radius,
            angles,
            rings: 10,
            tail_tol: MEMBERSHIP_TAIL_TOL,
        }
    }

    /// The grid for convolution checks: radius `0.95`, tail measured
    /// against the nonvanishing threshold.
    pub fn convolution_default() -> Self {
        Self {
            radius: 0.95,
            angles: 360,
            rings: 10,
            tail_tol: NONVANISHING_THRESHOLD,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.radius > 0.0 && self.radius < 1.0) {
            return Err(Error::OutOfRange {
                var: "radius".into(),
                value: self.radius.to_string(),
                lo: "0".into(),
                hi: "1".into(),
            });
        }
        if self.angles == 0 || self.rings == 0 {
            return Err(Error::Domain("grid needs at least one ring and one angle".into()));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.rings * self.angles);
        for k in 1..=self.rings {
            let r = self.radius * k as f64 / self.rings as f64;
            for j in 0..self.angles {
                let th = std::f64::consts::TAU * j as f64 / self.angles as f64;
                out.push(Complex64::from_polar(r, th));
            }
        }
        out
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self::new(0.99, 720)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipVerdict {
    pub passes: bool,
    pub worst_point: Complex64,
    /// Largest `|w^2 - 1|` seen on the grid.
    pub worst_value: f64,
    pub grid: GridSpec,
    /// Estimated truncation tail at the grid radius; zero for closed forms.
    pub tail: f64,
}

fn worst_on_grid(grid: &GridSpec, tail: f64, w: impl Fn(Complex64) -> Complex64 + Sync) -> MembershipVerdict {
    let pts = grid.points();
    let vals: Vec<f64> = pts.par_iter().map(|&z| (w(z) * w(z) - 1.0).norm()).collect();
    let (i, worst) = vals
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc });
    MembershipVerdict {
        passes: worst < 1.0,
        worst_point: pts[i],
        worst_value: worst,
        grid: *grid,
        tail,
    }
}

/// `M r^(N+1) / (1 - r)` with `M` the largest coefficient magnitude in the
/// last quarter of the series: a heuristic bound on `Σ_{n>N} |a_n| r^n`.
pub fn tail_estimate(f: &TruncatedSeries, radius: f64) -> f64 {
    let n = f.order();
    let from = n - n / 4;
    let m = (from..=n).map(|k| to_f64(&f.coeff(k)).abs()).fold(0.0, f64::max);
    m * radius.powi(n as i32 + 1) / (1.0 - radius)
}

fn check_normalized(f: &TruncatedSeries) -> Result<()> {
    if f.order() < 1 || !f.coeff(0).is_zero() || !f.coeff(1).is_one() {
        return Err(Error::Domain("expected a normalized series z + a_2 z^2 + ...".into()));
    }
    Ok(())
}

/// Evaluates `w = z f'(z) / f(z)` on the grid and reports the largest
/// `|w^2 - 1|`; passes when it stays below one.
pub fn sl_membership_grid(f: &TruncatedSeries, grid: &GridSpec) -> Result<MembershipVerdict> {
    grid.validate()?;
    check_normalized(f)?;
    let tail = tail_estimate(f, grid.radius);
    if tail >= grid.tail_tol {
        return Err(Error::TailTooLarge {
            tail,
            margin: grid.tail_tol,
        });
    }
    let c = f.to_f64();
    let dc: Vec<f64> = c.iter().enumerate().skip(1).map(|(k, a)| k as f64 * a).collect();
    Ok(worst_on_grid(grid, tail, |z| z * horner(&dc, z) / horner(&c, z)))
}

fn horner(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a)
}

/// Grid check of `Θ(z) = z / (1 - αz)` through `zΘ'/Θ = 1 / (1 - αz)`.
pub fn theta_membership(alpha: f64, grid: &GridSpec) -> Result<MembershipVerdict> {
    grid.validate()?;
    if alpha.abs() >= 1.0 {
        return Err(Error::OutOfRange {
            var: "alpha".into(),
            value: alpha.to_string(),
            lo: "-1".into(),
            hi: "1".into(),
        });
    }
    Ok(worst_on_grid(grid, 0.0, |z| 1.0 / (1.0 - alpha * z)))
}

/// Smallest `α > 0` (to `1e-9`) at which the grid check of `Θ` fails.
/// On a grid of radius `r` this approaches `(1 - √2/2) / r`.
pub fn theta_threshold(grid: &GridSpec) -> Result<f64> {
    let (mut lo, mut hi) = (0.0, 0.999);
    if !theta_membership(lo, grid)?.passes || theta_membership(hi, grid)?.passes {
        return Err(Error::Domain("no threshold in [0, 0.999)".into()));
    }
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        if theta_membership(mid, grid)?.passes {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// A point `S(t) = √t ± i √(√(1+4t) - (t+1))` of the right loop.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LemniscatePoint {
    pub t: f64,
    pub sign: i8,
    pub value: Complex64,
}

impl LemniscatePoint {
    /// `(u^2+v^2)^2 - 2(u^2-v^2)`.
    pub fn residual(&self) -> f64 {
        lemniscate_residual(self.value)
    }
}

pub fn lemniscate_residual(w: Complex64) -> f64 {
    let (u2, v2) = (w.re * w.re, w.im * w.im);
    (u2 + v2).powi(2) - 2.0 * (u2 - v2)
}

fn check_sign(sign: i8) -> Result<()> {
    if sign == 1 || sign == -1 {
        Ok(())
    } else {
        Err(Error::Domain(format!("sign must be 1 or -1, got {sign}")))
    }
}

pub fn lemniscate_param(t: f64, sign: i8) -> Result<LemniscatePoint> {
    check_sign(sign)?;
    if !(t > 0.0 && t < 2.0) {
        return Err(Error::OutOfRange {
            var: "t".into(),
            value: t.to_string(),
            lo: "0".into(),
            hi: "2".into(),
        });
    }
    let inner = ((1.0 + 4.0 * t).sqrt() - (t + 1.0)).max(0.0);
    Ok(LemniscatePoint {
        t,
        sign,
        value: Complex64::new(t.sqrt(), f64::from(sign) * inner.sqrt()),
    })
}

/// `t_k = 2k / (steps + 1)`, `k = 1..=steps`; `steps = 19` gives
/// `0.1, 0.2, ..., 1.9`.
pub fn t_grid(steps: usize) -> Vec<f64> {
    (1..=steps).map(|k| 2.0 * k as f64 / (steps + 1) as f64).collect()
}

/// Taylor coefficients `b_0..b_N` of `H_t`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelSeries {
    pub s: Complex64,
    pub coeffs: Vec<Complex64>,
}

impl KernelSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// `H(z) = z / ((1-z)(1-S)) (1/(1-z) - S)`, with `b_n = (n - S)/(1 - S)`.
pub fn convolution_kernel_from_s(s: Complex64, order: usize) -> Result<KernelSeries> {
    if order < 2 {
        return Err(Error::Series(format!("kernel order must be at least 2, got {order}")));
    }
    if (s - 1.0).norm() == 0.0 {
        return Err(Error::Domain("S = 1 makes the kernel singular".into()));
    }
    let coeffs = (0..=order)
        .map(|n| {
            if n == 0 {
                Complex64::zero()
            } else {
                (n as f64 - s) / (1.0 - s)
            }
        })
        .collect();
    Ok(KernelSeries { s, coeffs })
}

pub fn convolution_kernel(t: f64, sign: i8, order: usize) -> Result<KernelSeries> {
    convolution_kernel_from_s(lemniscate_param(t, sign)?.value, order)
}

fn series_div(num: &[Complex64], den: &[Complex64], order: usize) -> Vec<Complex64> {
    let mut q = vec![Complex64::zero(); order + 1];
    for n in 0..=order {
        let mut acc = num.get(n).copied().unwrap_or_default();
        for k in 1..=n.min(den.len() - 1) {
            acc -= den[k] * q[n - k];
        }
        q[n] = acc / den[0];
    }
    q
}

/// Largest difference between the closed-form `b_n` and the coefficients of
/// `(z + S z^2 / (1-S)) / (1-z)^2` obtained by series division.
pub fn kernel_division_residual(k: &KernelSeries) -> f64 {
    let s = k.s;
    let num = [Complex64::zero(), Complex64::one(), s / (1.0 - s)];
    let den = [Complex64::one(), Complex64::new(-2.0, 0.0), Complex64::one()];
    series_div(&num, &den, k.order())
        .iter()
        .zip(&k.coeffs)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

/// Coefficients `a_n b_n`, `n = 1..`, of `(f * H)(z) / z`.
fn convolution_coeffs(f: &[f64], k: &KernelSeries) -> Vec<Complex64> {
    let n = (f.len() - 1).min(k.order());
    (1..=n).map(|j| f[j] * k.coeffs[j]).collect()
}

fn horner_c(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a)
}

/// `(f * H)(z) / z = Σ a_n b_n z^(n-1)`.
pub fn convolution_over_z(f: &TruncatedSeries, k: &KernelSeries, z: Complex64) -> Complex64 {
    horner_c(&convolution_coeffs(&f.to_f64(), k), z)
}

/// `|(f * H)(z)/z - (z f'(z) - S f(z)) / (z (1 - S))|`.
pub fn convolution_identity_residual(f: &TruncatedSeries, k: &KernelSeries, z: Complex64) -> f64 {
    let f = f.truncate(f.order().min(k.order()));
    let lhs = convolution_over_z(&f, k, z);
    let rhs = (z * f.derivative().eval_complex(z) - k.s * f.eval_complex(z)) / (z * (1.0 - k.s));
    (lhs - rhs).norm()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvolutionVerdict {
    pub min_modulus: f64,
    pub at_t: f64,
    pub at_sign: i8,
    pub at_z: Complex64,
    pub passes: bool,
    pub t_values: usize,
    pub grid: GridSpec,
}

/// Smallest `|(f * H_t)(z) / z|` over `t` in `ts`, both signs, and the
/// grid; no membership precondition.
pub fn convolution_min_modulus(f: &TruncatedSeries, ts: &[f64], grid: &GridSpec) -> Result<ConvolutionVerdict> {
    grid.validate()?;
    if ts.is_empty() {
        return Err(Error::Domain("empty t grid".into()));
    }
    let mut kernels = Vec::with_capacity(2 * ts.len());
    for &t in ts {
        for sign in [1i8, -1] {
            kernels.push((t, sign, convolution_kernel(t, sign, f.order().max(2))?));
        }
    }
    let pts = grid.points();
    let fc = f.to_f64();
    let mins: Vec<(f64, usize)> = kernels
        .par_iter()
        .map(|(_, _, k)| {
            let c = convolution_coeffs(&fc, k);
            pts.iter()
                .enumerate()
                .map(|(i, &z)| (horner_c(&c, z).norm(), i))
                .fold((f64::INFINITY, 0), |a, b| if b.0 < a.0 { b } else { a })
        })
        .collect();
    let (ki, &(m, zi)) = mins
        .iter()
        .enumerate()
        .fold(None, |best: Option<(usize, &(f64, usize))>, (i, v)| match best {
            Some((_, b)) if b.0 <= v.0 => best,
            _ => Some((i, v)),
        })
        .expect("nonempty");
    Ok(ConvolutionVerdict {
        min_modulus: m,
        at_t: kernels[ki].0,
        at_sign: kernels[ki].1,
        at_z: pts[zi],
        passes: m > NONVANISHING_THRESHOLD,
        t_values: ts.len(),
        grid: *grid,
    })
}

/// As [`convolution_min_modulus`], after checking that `f` passes the
/// membership grid at the same radius.
pub fn convolution_nonvanishing(f: &TruncatedSeries, ts: &[f64], grid: &GridSpec) -> Result<ConvolutionVerdict> {
    let m = sl_membership_grid(f, grid)?;
    if !m.passes {
        return Err(Error::NotMember(m.worst_value));
    }
    convolution_min_modulus(f, ts, grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::series::extremal_sl;

    fn koebe(order: usize) -> TruncatedSeries {
        TruncatedSeries::new((0..=order).map(|k| rat(k as i64, 1)).collect(), order)
    }

    #[test]
    fn identity_function_is_trivially_inside() {
        let f = TruncatedSeries::identity(8);
        let v = sl_membership_grid(&f, &GridSpec::default()).unwrap();
        assert!(v.passes);
        assert_eq!(v.worst_value, 0.0);
    }

    #[test]
    fn extremal_function_needs_a_tail_budget_at_r_099() {
        let f = extremal_sl(3, 40).unwrap();
        let err = sl_membership_grid(&f, &GridSpec::default()).unwrap_err();
        assert!(matches!(err, Error::TailTooLarge { .. }));
        let v = sl_membership_grid(&f, &GridSpec::convolution_default()).unwrap();
        assert!(v.passes);
        // w^2 = 1 + z^3 up to truncation, which moves w by a few 1e-3 here
        assert!((v.worst_value - 0.95f64.powi(3)).abs() < 5e-3);
    }

    #[test]
    fn koebe_leaves_the_lemniscate() {
        let f = koebe(400);
        let v = sl_membership_grid(&f, &GridSpec::new(0.5, 720)).unwrap();
        assert!(!v.passes);
    }

    #[test]
    fn theta_sufficiency_region_and_threshold() {
        let g = GridSpec::default();
        for k in 0..=5 {
            assert!(theta_membership(0.05 * k as f64, &g).unwrap().passes);
        }
        assert_eq!(theta_membership(0.0, &g).unwrap().worst_value, 0.0);
        let bad = theta_membership(0.35, &g).unwrap();
        assert!(!bad.passes);
        assert!((bad.worst_point - Complex64::new(0.99, 0.0)).norm() < 1e-12);
        let th = theta_threshold(&g).unwrap();
        assert!((th * 0.99 - (1.0 - 0.5f64.sqrt())).abs() < 1e-6);
        assert!(theta_membership(1.0, &g).is_err());
    }

    #[test]
    fn lemniscate_points() {
        let p = lemniscate_param(1.0, 1).unwrap();
        assert_eq!(p.value.re, 1.0);
        assert!((p.value.im - (5f64.sqrt() - 2.0).sqrt()).abs() < 1e-15);
        for i in 1..1000 {
            let t = 2.0 * i as f64 / 1000.0;
            for s in [1, -1] {
                assert!(lemniscate_param(t, s).unwrap().residual().abs() < 1e-12);
            }
        }
        let near = lemniscate_param(2.0 - 1e-12, 1).unwrap();
        assert!((near.value - Complex64::new(2f64.sqrt(), 0.0)).norm() < 1e-5);
        assert!(lemniscate_param(2.0, 1).is_err());
        assert!(lemniscate_param(0.0, 1).is_err());
        assert!(lemniscate_param(1.0, 0).is_err());
    }

    #[test]
    fn kernel_matches_series_division() {
        for &t in &t_grid(19) {
            for s in [1, -1] {
                let k = convolution_kernel(t, s, 40).unwrap();
                assert_eq!(k.coeffs[1], Complex64::one());
                assert!(kernel_division_residual(&k) < 1e-12);
            }
        }
        let r2 = 2f64.sqrt();
        let k = convolution_kernel_from_s(Complex64::new(r2, 0.0), 8).unwrap();
        assert!((k.coeffs[2].re - (2.0 - r2) / (1.0 - r2)).abs() < 1e-14);
        assert!(kernel_division_residual(&k) < 1e-12);
        assert!(convolution_kernel(1.0, 1, 1).is_err());
    }

    #[test]
    fn convolution_identity_on_the_extremal_function() {
        let f = extremal_sl(3, 40).unwrap();
        let k = convolution_kernel(0.7, -1, 40).unwrap();
        for z in GridSpec::convolution_default().points().iter().step_by(97) {
            assert!(convolution_identity_residual(&f, &k, *z) < 1e-12);
        }
    }

    #[test]
    fn nonvanishing_for_members_and_the_identity() {
        let f = extremal_sl(3, 40).unwrap();
        let v = convolution_nonvanishing(&f, &t_grid(19), &GridSpec::convolution_default()).unwrap();
        assert!(v.passes, "{v:?}");
        let id = TruncatedSeries::identity(8);
        let v = convolution_nonvanishing(&id, &t_grid(19), &GridSpec::convolution_default()).unwrap();
        assert!((v.min_modulus - 1.0).abs() < 1e-15);
    }

    #[test]
    fn koebe_is_rejected_and_can_come_close_to_zero() {
        let f = koebe(400);
        let grid = GridSpec {
            radius: 0.5,
            tail_tol: 1.0,
            ..GridSpec::convolution_default()
        };
        assert!(matches!(convolution_nonvanishing(&f, &t_grid(19), &grid), Err(Error::NotMember(_))));
        let v = convolution_min_modulus(&f, &t_grid(199), &grid).unwrap();
        let base = convolution_min_modulus(&extremal_sl(3, 40).unwrap(), &t_grid(199), &grid).unwrap();
        assert!(v.min_modulus < base.min_modulus);
    }
}
