//! Certified maximization over boxes, face and edge tables, and real root
//! isolation.

mod feasibility;
mod roots;
mod tables;

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_traits::{Signed, Zero};

use crate::algebra::{rat, Rat};
use crate::error::{Error, Result};
use crate::polyalg::{BernsteinPatch, BoxRegion, RatInterval, RatPoly};

pub use feasibility::{
    critical_point_feasibility, face_thresholds, stationary_octic, threshold_minimum, FaceThreshold,
    FeasibilityReport, FeasibleWitness, InequalitySystem, SeparationCheck, StationaryOctic, ThresholdMinimum,
};
pub use roots::{isolate_roots, RootIsolation, UniPoly};
pub use tables::{edge_table, face_table, QuotedValue, TableRow};

/// Default tolerance for the headline maxima.
pub fn default_tol() -> Rat {
    rat(1, 1_000_000_000)
}

/// Default tolerance for faces and edges.
pub fn table_tol() -> Rat {
    rat(1, 1_000_000)
}

pub const DEFAULT_MAX_BOXES: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub tol: Rat,
    pub max_boxes: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            tol: default_tol(),
            max_boxes: DEFAULT_MAX_BOXES,
        }
    }
}

/// Certified enclosure of `max f` over a box.
#[derive(Clone, Debug)]
pub struct CertifiedMax {
    /// `[f(witness), global upper bound]`.
    pub enclosure: RatInterval,
    pub witness: Vec<Rat>,
    pub subdivisions: usize,
}

impl CertifiedMax {
    pub fn lower(&self) -> &Rat {
        self.enclosure.lo()
    }

    pub fn upper(&self) -> &Rat {
        self.enclosure.hi()
    }
}

struct Node {
    upper: Rat,
    volume: Rat,
    corner: Vec<Rat>,
    patch: BernsteinPatch,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Node {}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Node {
    // max-heap: highest bound, then largest box, then smallest corner
    fn cmp(&self, other: &Self) -> Ordering {
        self.upper
            .cmp(&other.upper)
            .then_with(|| self.volume.cmp(&other.volume))
            .then_with(|| other.corner.cmp(&self.corner))
    }
}

fn node(patch: BernsteinPatch) -> Node {
    Node {
        upper: patch.upper(),
        volume: patch.region().volume(),
        corner: patch.region().lower_corner(),
        patch,
    }
}

/// Axis to bisect: the widest side among variables the polynomial depends
/// on, lowest index on ties. Splitting along an axis of degree zero cannot
/// tighten the bound.
fn split_axis(patch: &BernsteinPatch) -> Option<usize> {
    let region = patch.region();
    let mut best: Option<(usize, Rat)> = None;
    for (i, d) in patch.degrees().iter().enumerate() {
        let w = region.interval(i).width();
        if *d == 0 || w.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|(_, bw)| w > *bw) {
            best = Some((i, w));
        }
    }
    best.map(|(i, _)| i)
}

pub fn certify_max(f: &RatPoly, region: &BoxRegion, tol: &Rat) -> Result<CertifiedMax> {
    certify_max_with(
        f,
        region,
        &CertifyOptions {
            tol: tol.clone(),
            ..CertifyOptions::default()
        },
    )
}

/// Best-first Bernstein branch-and-bound. Witnesses are box corners, where
/// the corner coefficient is the exact value of `f`.
pub fn certify_max_with(f: &RatPoly, region: &BoxRegion, opts: &CertifyOptions) -> Result<CertifiedMax> {
    if !opts.tol.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    let root = BernsteinPatch::new(f, region)?;
    let mut best: Option<(Rat, Vec<Rat>)> = None;
    let offer = |patch: &BernsteinPatch, best: &mut Option<(Rat, Vec<Rat>)>| {
        for (pt, v) in patch.vertices() {
            if best.as_ref().is_none_or(|(b, _)| v > *b) {
                *best = Some((v, pt));
            }
        }
    };
    offer(&root, &mut best);
    let mut heap = BinaryHeap::new();
    heap.push(node(root));
    let mut subdivisions = 0usize;

    loop {
        let (best_value, witness) = best.clone().expect("root has a vertex");
        let top_upper = match heap.peek() {
            Some(top) => top.upper.clone(),
            None => best_value.clone(),
        };
        let upper = top_upper.max(best_value.clone());
        if &upper - &best_value <= opts.tol {
            return Ok(CertifiedMax {
                enclosure: RatInterval::new(best_value, upper)?,
                witness,
                subdivisions,
            });
        }
        if subdivisions >= opts.max_boxes {
            return Err(Error::BudgetExhausted {
                budget: opts.max_boxes,
                gap: crate::algebra::decimal(&(&upper - &best_value), 6),
            });
        }
        let top = heap.pop().expect("gap > tol implies a pending box");
        let Some(axis) = split_axis(&top.patch) else {
            // constant on this box; its corner value is already offered
            continue;
        };
        subdivisions += 1;
        let (l, r) = top.patch.split(axis);
        for child in [l, r] {
            offer(&child, &mut best);
            let n = node(child);
            if n.upper > best.as_ref().expect("set above").0 {
                heap.push(n);
            }
        }
    }
}

/// `f` with `var := value`; the variable is removed.
pub fn face_restrict(f: &RatPoly, var: &str, value: &Rat) -> Result<RatPoly> {
    f.substitute(var, value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::functionals::{bound_surrogate, FunctionalId};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_nonpositive_tolerance() {
        let x = RatPoly::var("x");
        let b = BoxRegion::from_bounds(&[(int(0), int(1))]).unwrap();
        assert_eq!(certify_max(&x, &b, &int(0)).unwrap_err(), Error::NonPositiveTolerance);
    }

    #[test]
    fn cubic_on_the_unit_interval() {
        // x(1-x^2)/32 peaks at 1/sqrt(3) with value sqrt(3)/144
        let x = RatPoly::var("x");
        let f = (&x - &x.pow(3)).scale(&rat(1, 32));
        let b = BoxRegion::from_bounds(&[(int(0), int(1))]).unwrap();
        let m = certify_max(&f, &b, &table_tol()).unwrap();
        let target = 3f64.sqrt() / 144.0;
        let (lo, hi) = m.enclosure.to_f64();
        assert!(lo <= target + 1e-15 && target <= hi + 1e-15);
        assert!(m.enclosure.width() <= table_tol());
        assert_eq!(f.eval_rational(&m.witness).unwrap(), *m.lower());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let x = RatPoly::var("x");
        let f = &x - &x.pow(3);
        let b = BoxRegion::from_bounds(&[(int(0), int(1))]).unwrap();
        let opts = CertifyOptions {
            tol: rat(1, 1_000_000_000_000),
            max_boxes: 3,
        };
        assert!(matches!(certify_max_with(&f, &b, &opts), Err(Error::BudgetExhausted { .. })));
    }

    #[test]
    fn constant_polynomial_terminates_at_once() {
        let f = RatPoly::constant_in(&["x", "y"], rat(1, 64));
        let m = certify_max(&f, &BoxRegion::from_bounds(&[(int(0), int(1)), (int(0), int(1))]).unwrap(), &default_tol()).unwrap();
        assert_eq!(m.enclosure, RatInterval::point(rat(1, 64)));
        assert_eq!(m.subdivisions, 0);
    }

    #[test]
    fn halving_tolerance_never_widens() {
        let g = bound_surrogate(FunctionalId::H3_1).unwrap().surrogate;
        let g = face_restrict(&g, "y", &int(0)).unwrap();
        let b = BoxRegion::from_bounds(&[(int(0), int(2)), (int(0), int(1))]).unwrap();
        let mut tol = rat(1, 1000);
        let mut last = None;
        for _ in 0..6 {
            let m = certify_max(&g, &b, &tol).unwrap();
            if let Some(w) = last {
                assert!(m.enclosure.width() <= w);
            }
            last = Some(m.enclosure.width());
            tol /= int(2);
        }
    }

    #[test]
    fn samples_stay_below_the_certified_upper_bound() {
        let g = bound_surrogate(FunctionalId::H3_1).unwrap().surrogate;
        let x1 = face_restrict(&g, "p", &int(0)).unwrap();
        let b = BoxRegion::from_bounds(&[(int(0), int(1)), (int(0), int(1))]).unwrap();
        let m = certify_max(&x1, &b, &table_tol()).unwrap();
        assert_eq!(*m.lower(), rat(1, 36));
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..2000 {
            let pt = [rat(rng.random_range(0..=1000), 1000), rat(rng.random_range(0..=1000), 1000)];
            assert!(x1.eval_rational(&pt).unwrap() <= *m.upper());
        }
    }

    #[test]
    fn face_restriction_at_x_one() {
        let g = bound_surrogate(FunctionalId::H3_1).unwrap().surrogate;
        let r = face_restrict(&g, "x", &int(1)).unwrap();
        assert_eq!(r.degrees()[r.var_index("y").unwrap()], 0);
        assert!(face_restrict(&g, "z", &int(0)).is_err());
    }
}
