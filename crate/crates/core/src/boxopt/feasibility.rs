use num_traits::{One, Signed, Zero};

use super::roots::{isolate_roots, UniPoly};
use super::{certify_max, table_tol, CertifiedMax};
use crate::algebra::{int, rat, to_f64, Rat};
use crate::error::{Error, Result};
use crate::functionals::printed::{g_face_octic, f_face_octic, F_FACE_OCTIC_ROOT, G_FACE_OCTIC_ROOT};
use crate::functionals::{bound_surrogate, FunctionalId};
use crate::polyalg::{BernsteinPatch, BoxRegion, RatInterval, RatPoly};

const FEASIBILITY_BUDGET: usize = 100_000;

fn check_id(id: FunctionalId) -> Result<()> {
    match id {
        FunctionalId::H3_1 | FunctionalId::H2_3 => Ok(()),
        _ => Err(Error::Domain(format!("no bound surrogate in (p, x, y) for {id}"))),
    }
}

/// Coefficients `[c0, c1, c2]` of the surrogate as a quadratic in `y`.
fn y_coefficients(f: &RatPoly) -> Result<[RatPoly; 3]> {
    let d1 = f.partial_derivative("y")?;
    let d2 = d1.partial_derivative("y")?;
    if !d2.partial_derivative("y")?.is_zero() {
        return Err(Error::Domain("surrogate is not quadratic in y".into()));
    }
    let zero = Rat::zero();
    Ok([
        f.substitute("y", &zero)?,
        d1.substitute("y", &zero)?,
        d2.substitute("y", &zero)?.scale(&rat(1, 2)),
    ])
}

fn px_vars() -> Vec<RatPoly> {
    RatPoly::vars_in(&["p", "x"])
}

/// Conditions for a critical point of the surrogate at `0 < y < 1` to be
/// a maximum in `y`, as the pair `A < 0`, `B > 0` in `(p, x)`.
#[derive(Clone, Debug)]
pub struct InequalitySystem {
    pub id: FunctionalId,
    /// Negative exactly when the stationary `y` lies below one.
    pub a: RatPoly,
    /// Positive exactly when the surrogate is concave in `y`.
    pub b: RatPoly,
    /// `c1 + 2 c2 = m A` and `c2 = -4 (1 - x) m B` with this `m`, which is
    /// positive on the open box.
    pub multiplier: RatPoly,
    /// Both identities hold exactly.
    pub identities_hold: bool,
}

impl InequalitySystem {
    pub fn new(id: FunctionalId) -> Result<Self> {
        check_id(id)?;
        let v = px_vars();
        let (p, x) = (&v[0], &v[1]);
        let one = RatPoly::constant_in(&["p", "x"], Rat::one());
        let k = |n: i64| RatPoly::constant_in(&["p", "x"], int(n));
        let four_m_p2 = &k(4) - &p.pow(2);
        let (lin, quad, cube, conc) = match id {
            FunctionalId::H3_1 => (19, 108, 7, 27),
            _ => (5, 36, 5, 9),
        };
        let n = &(&(p * &(&x.scale(&int(4)) * &four_m_p2)) * &(&k(lin) + &x.scale(&int(4))))
            + &(p.pow(3) * (&k(cube) + &x.scale(&int(quad))));
        let b = &p.pow(2).scale(&int(conc)) - &(four_m_p2.scale(&int(4)) * (&k(8) - x));
        let one_m_x = &one - x;
        let a = &n - &(&one_m_x.scale(&int(8)) * &b);
        let multiplier = (&four_m_p2 * &(&one - &x.pow(2))).scale(&rat(1, 73728));

        let [_, c1, c2] = y_coefficients(&bound_surrogate(id)?.surrogate)?;
        let lhs1 = &c1 + &c2.scale(&int(2));
        let ok1 = lhs1 == &multiplier * &a;
        let ok2 = c2 == -(&(&one_m_x.scale(&int(4)) * &multiplier) * &b);
        Ok(Self {
            id,
            a,
            b,
            multiplier,
            identities_hold: ok1 && ok2,
        })
    }
}

/// A point of the open box with `A < 0 < B`, where the surrogate has an
/// interior critical point in `y`.
#[derive(Clone, Debug)]
pub struct FeasibleWitness {
    pub p: Rat,
    pub x: Rat,
    pub a: Rat,
    pub b: Rat,
    pub y: Rat,
    pub value: Rat,
}

/// The inequality `lhs >= rhs` on `1 <= p <= 2`, `0 <= x <= 1`.
#[derive(Clone, Debug)]
pub struct SeparationCheck {
    pub lhs: RatPoly,
    pub rhs: RatPoly,
    pub holds: bool,
    /// `[min of lhs - rhs]` enclosure.
    pub minimum: RatInterval,
    pub counterexample: Option<(Rat, Rat)>,
}

/// The concavity threshold `p^2 > g(x)` read off from `B`.
#[derive(Clone, Debug)]
pub struct ThresholdMinimum {
    pub numerator: RatPoly,
    pub denominator: RatPoly,
    /// Numerator of `g'`, constant in `x`.
    pub derivative_numerator: Rat,
    pub decreasing: bool,
    pub minimum: Rat,
    pub at_x: Rat,
    pub p_threshold: f64,
}

#[derive(Clone, Debug)]
pub struct FeasibilityReport {
    pub id: FunctionalId,
    pub system: InequalitySystem,
    pub witness: Option<FeasibleWitness>,
    /// Boxes examined before a witness was found or the box was exhausted.
    pub boxes: usize,
    /// `true` when the search excluded every box without a witness.
    pub certified_empty: bool,
    pub separation: SeparationCheck,
    pub threshold: ThresholdMinimum,
    /// Maximum of the surrogate over the whole cuboid.
    pub cuboid_max: CertifiedMax,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.witness.is_some()
    }
}

struct Search {
    found: Option<(Rat, Rat)>,
    boxes: usize,
    certified_empty: bool,
}

fn search(a: &RatPoly, b: &RatPoly) -> Result<Search> {
    let region = BoxRegion::from_bounds(&[(int(0), int(2)), (int(0), int(1))])?;
    let mut stack = vec![region];
    let mut boxes = 0;
    while let Some(r) = stack.pop() {
        boxes += 1;
        if boxes > FEASIBILITY_BUDGET {
            return Ok(Search {
                found: None,
                boxes,
                certified_empty: false,
            });
        }
        if BernsteinPatch::new(a, &r)?.lower() >= Rat::zero() || BernsteinPatch::new(b, &r)?.upper() <= Rat::zero() {
            continue;
        }
        let m = r.midpoint();
        if a.eval_rational(&m)?.is_negative() && b.eval_rational(&m)?.is_positive() {
            let mut m = m.into_iter();
            let (p, x) = (m.next().expect("2-d"), m.next().expect("2-d"));
            return Ok(Search {
                found: Some((p, x)),
                boxes,
                certified_empty: false,
            });
        }
        let (l, h) = r.split(r.widest());
        stack.push(h);
        stack.push(l);
    }
    Ok(Search {
        found: None,
        boxes,
        certified_empty: true,
    })
}

fn separation(id: FunctionalId) -> Result<SeparationCheck> {
    let v = px_vars();
    let (p, x) = (&v[0], &v[1]);
    let one = RatPoly::constant_in(&["p", "x"], Rat::one());
    let (l, r) = match id {
        FunctionalId::H3_1 => (7, 216),
        _ => (5, 72),
    };
    let lhs = p.pow(3).scale(&int(l));
    let rhs = p.pow(2).scale(&int(r)) * (&one - x);
    let d = &lhs - &rhs;
    let region = BoxRegion::from_bounds(&[(int(1), int(2)), (int(0), int(1))])?;
    let m = certify_max(&-d.clone(), &region, &table_tol())?;
    let minimum = RatInterval::new(-m.upper().clone(), -m.lower().clone())?;
    let holds = !minimum.lo().is_negative();
    let counterexample = if m.lower().is_positive() {
        Some((m.witness[0].clone(), m.witness[1].clone()))
    } else {
        None
    };
    Ok(SeparationCheck {
        lhs,
        rhs,
        holds,
        minimum,
        counterexample,
    })
}

/// Writes `B = b0(x) + b2(x) p^2` as `p^2 > g(x) = -b0 / b2` and checks
/// that `g` is monotone on `[0, 1]`.
pub fn threshold_minimum(id: FunctionalId) -> Result<ThresholdMinimum> {
    let sys = InequalitySystem::new(id)?;
    let b0 = sys.b.substitute("p", &Rat::zero())?;
    let b2 = sys.b.partial_derivative("p")?.partial_derivative("p")?.substitute("p", &Rat::zero())?.scale(&rat(1, 2));
    let num = -b0;
    let den = b2;
    let d = &(&num.partial_derivative("x")? * &den) - &(&num * &den.partial_derivative("x")?);
    let dn = d
        .constant_value()
        .ok_or_else(|| Error::Domain("threshold derivative is not constant".into()))?;
    let decreasing = dn.is_negative();
    let at_x = if decreasing { Rat::one() } else { Rat::zero() };
    let minimum = num.eval_rational(std::slice::from_ref(&at_x))? / den.eval_rational(std::slice::from_ref(&at_x))?;
    Ok(ThresholdMinimum {
        numerator: num,
        denominator: den,
        derivative_numerator: dn,
        decreasing,
        p_threshold: to_f64(&minimum).sqrt(),
        minimum,
        at_x,
    })
}

/// Searches the open box for a point where the surrogate has an interior
/// maximum in `y`.
pub fn critical_point_feasibility(id: FunctionalId) -> Result<FeasibilityReport> {
    let system = InequalitySystem::new(id)?;
    let Search {
        found,
        boxes,
        certified_empty,
    } = search(&system.a, &system.b)?;
    let f = bound_surrogate(id)?.surrogate;
    let [_, c1, c2] = y_coefficients(&f)?;
    let witness = match found {
        Some((p, x)) => {
            let pt = [p.clone(), x.clone()];
            let y = -c1.eval_rational(&pt)? / (c2.eval_rational(&pt)? * int(2));
            let value = f.eval_rational(&[p.clone(), x.clone(), y.clone()])?;
            Some(FeasibleWitness {
                a: system.a.eval_rational(&pt)?,
                b: system.b.eval_rational(&pt)?,
                p,
                x,
                y,
                value,
            })
        }
        None => None,
    };
    let cuboid_max = certify_max(&f, &BoxRegion::cuboid(), &table_tol())?;
    Ok(FeasibilityReport {
        id,
        system,
        witness,
        boxes,
        certified_empty,
        separation: separation(id)?,
        threshold: threshold_minimum(id)?,
        cuboid_max,
    })
}

/// Where the maximizer in `y` of the surrogate on `x = 0` enters the
/// open interval `(0, 1)`.
#[derive(Clone, Debug)]
pub struct FaceThreshold {
    pub id: FunctionalId,
    /// Roots in `(0, 2)` of the `y^2` coefficient: above it the stationary
    /// point is a positive maximum.
    pub positive_from: f64,
    /// Roots in `(0, 2)` of `c1 + 2 c2`: above it the stationary point lies
    /// below one.
    pub below_one_from: f64,
    pub printed: &'static str,
    /// Which of the two the printed value matches to its digits.
    pub printed_is_positivity: bool,
}

fn open_roots(f: &RatPoly) -> Result<Vec<f64>> {
    let iv = RatInterval::new(int(0), int(2))?;
    let r = isolate_roots(f, &iv, &rat(1, 1_000_000_000))?;
    Ok(r.intervals
        .iter()
        .filter(|i| i.lo().is_positive() && *i.hi() < int(2))
        .map(|i| to_f64(&i.midpoint()))
        .collect())
}

fn single(roots: Vec<f64>) -> Result<f64> {
    match roots.as_slice() {
        [r] => Ok(*r),
        _ => Err(Error::Domain(format!("expected one root in (0, 2), found {}", roots.len()))),
    }
}

pub fn face_thresholds(id: FunctionalId) -> Result<FaceThreshold> {
    check_id(id)?;
    let f = bound_surrogate(id)?.surrogate.substitute("x", &Rat::zero())?;
    let [_, c1, c2] = y_coefficients(&f)?;
    let positive_from = single(open_roots(&c2)?)?;
    let below_one_from = single(open_roots(&(&c1 + &c2.scale(&int(2))))?)?;
    let printed = match id {
        FunctionalId::H3_1 => "1.47292",
        _ => "1.7669",
    };
    let digits = printed.split('.').nth(1).map_or(0, str::len) as i32;
    let pv: f64 = printed.parse().expect("literal");
    let printed_is_positivity = (positive_from - pv).abs() <= 0.5 * 10f64.powi(-digits) + 1e-12;
    Ok(FaceThreshold {
        id,
        positive_from,
        below_one_from,
        printed,
        printed_is_positivity,
    })
}

/// The derivative of the face value at its stationary `y`, with the
/// quoted octic factor split off.
#[derive(Clone, Debug)]
pub struct StationaryOctic {
    pub id: FunctionalId,
    /// Numerator `a' b^2 - 2 a b b' + 4 a^2 c'` of the derivative in `p` of
    /// `c - b^2 / (4 a)` for the face polynomial `a y^2 + b y + c`.
    pub numerator: UniPoly,
    pub octic: UniPoly,
    pub cofactor: UniPoly,
    /// The octic divides the numerator exactly.
    pub divides: bool,
    /// The cofactor is a constant times `p (p^2 - 4)^2`.
    pub cofactor_expected: bool,
    /// Roots of the octic in `(0, 2)`.
    pub roots: Vec<f64>,
    pub printed_root: &'static str,
    /// Some root agrees with the printed one to its digits.
    pub printed_root_matches: bool,
}

pub fn stationary_octic(id: FunctionalId) -> Result<StationaryOctic> {
    check_id(id)?;
    let f = bound_surrogate(id)?.surrogate.substitute("x", &Rat::zero())?;
    let [c, b, a] = y_coefficients(&f)?;
    let [c, b, a] = [c, b, a].map(|q| q.with_vars(&["p"]));
    let (c, b, a) = (UniPoly::from_ratpoly(&c?)?, UniPoly::from_ratpoly(&b?)?, UniPoly::from_ratpoly(&a?)?);
    let t1 = a.derivative().mul(&b.mul(&b));
    let t2 = a.mul(&b).mul(&b.derivative()).scale(&int(2));
    let t3 = a.mul(&a).mul(&c.derivative()).scale(&int(4));
    let numerator = UniPoly::new(
        (0..=[&t1, &t2, &t3].iter().filter_map(|t| t.degree()).max().unwrap_or(0))
            .map(|i| {
                let g = |t: &UniPoly| t.coeffs().get(i).cloned().unwrap_or_else(Rat::zero);
                g(&t1) - g(&t2) + g(&t3)
            })
            .collect(),
    );
    let (octic_poly, printed_root) = match id {
        FunctionalId::H3_1 => (g_face_octic(), G_FACE_OCTIC_ROOT),
        _ => (f_face_octic(), F_FACE_OCTIC_ROOT),
    };
    let octic = UniPoly::from_ratpoly(&octic_poly)?;
    let (cofactor, rem) = numerator.div_rem(&octic)?;
    let divides = rem.is_zero();
    let shape = UniPoly::from_ints(&[0, 16, 0, -8, 0, 1]);
    let cofactor_expected = divides && !cofactor.is_zero() && cofactor.monic() == shape;
    let roots = open_roots(&octic_poly)?;
    let digits = printed_root.split('.').nth(1).map_or(0, str::len) as i32;
    let pv: f64 = printed_root.parse().expect("literal");
    let printed_root_matches = roots.iter().any(|r| (r - pv).abs() <= 0.5 * 10f64.powi(-digits) + 1e-12);
    Ok(StationaryOctic {
        id,
        numerator,
        octic,
        cofactor,
        divides,
        cofactor_expected,
        roots,
        printed_root,
        printed_root_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inequality_systems_come_from_the_surrogates() {
        for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
            assert!(InequalitySystem::new(id).unwrap().identities_hold, "{id}");
        }
        assert!(InequalitySystem::new(FunctionalId::Zalcman3).is_err());
    }

    #[test]
    fn both_systems_have_interior_solutions() {
        for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
            let r = critical_point_feasibility(id).unwrap();
            let w = r.witness.as_ref().expect("feasible");
            assert!(w.a.is_negative() && w.b.is_positive());
            assert!(w.p > int(0) && w.p < int(2) && w.x > int(0) && w.x < int(1));
            assert!(w.y > int(0) && w.y < int(1));
            assert!(w.value < rat(1, 36));
            assert!(!r.certified_empty);
            assert!(*r.cuboid_max.lower() == rat(1, 36));
        }
    }

    #[test]
    fn separating_inequalities_fail_near_x_zero() {
        for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
            let s = separation(id).unwrap();
            assert!(!s.holds);
            let (p, x) = s.counterexample.clone().unwrap();
            let d = &s.lhs - &s.rhs;
            assert!(d.eval_rational(&[p, x]).unwrap().is_negative());
            assert!(d.eval_rational(&[int(1), int(0)]).unwrap().is_negative());
        }
    }

    #[test]
    fn concavity_thresholds() {
        let g = threshold_minimum(FunctionalId::H3_1).unwrap();
        assert_eq!(g.derivative_numerator, int(-432));
        assert_eq!(g.minimum, rat(112, 55));
        let f = threshold_minimum(FunctionalId::H2_3).unwrap();
        assert_eq!(f.derivative_numerator, int(-144));
        assert_eq!(f.minimum, rat(112, 37));
    }

    #[test]
    fn face_thresholds_on_x_zero() {
        let g = face_thresholds(FunctionalId::H3_1).unwrap();
        assert!((g.positive_from - (128f64 / 59.0).sqrt()).abs() < 1e-8);
        assert!((g.below_one_from - 1.48946).abs() < 1e-5);
        assert!(g.printed_is_positivity);
        let f = face_thresholds(FunctionalId::H2_3).unwrap();
        assert!((f.positive_from - (128f64 / 41.0).sqrt()).abs() < 1e-8);
        assert!((f.below_one_from - 1.79154).abs() < 1e-5);
        assert!(f.printed_is_positivity);
    }

    #[test]
    fn octics_divide_the_stationarity_numerators() {
        let g = stationary_octic(FunctionalId::H3_1).unwrap();
        assert!(g.divides && g.cofactor_expected);
        assert!(g.printed_root_matches);
        let f = stationary_octic(FunctionalId::H2_3).unwrap();
        assert!(f.divides && f.cofactor_expected);
        assert_eq!(f.roots.len(), 1);
        assert!((f.roots[0] - 1.42787).abs() < 1e-5);
        assert!(!f.printed_root_matches);
    }
}
