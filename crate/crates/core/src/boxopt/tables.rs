use num_traits::Zero;

use super::roots::{isolate_roots, UniPoly};
use super::{certify_max, CertifiedMax};
use crate::algebra::{int, parse_rat, rat, to_f64, Rat};
use crate::error::Result;
use crate::functionals::{bound_surrogate, FunctionalId, SURROGATE_VARS};
use crate::polyalg::{BoxRegion, RatInterval, RatPoly};

/// A value quoted by the source, either an exact rational or a rounded
/// decimal (possibly of an irrational number).
#[derive(Clone, Debug, PartialEq)]
pub struct QuotedValue {
    pub printed: String,
    pub value: f64,
    pub exact: Option<Rat>,
}

impl QuotedValue {
    pub fn exact(r: Rat) -> Self {
        Self {
            printed: r.to_string(),
            value: to_f64(&r),
            exact: Some(r),
        }
    }

    pub fn decimal(printed: &str) -> Self {
        let value = to_f64(&parse_rat(printed).expect("valid literal"));
        Self {
            printed: printed.to_string(),
            value,
            exact: None,
        }
    }

    pub fn irrational(printed: &str, value: f64) -> Self {
        Self {
            printed: printed.to_string(),
            value,
            exact: None,
        }
    }

    /// Exact values must lie in the enclosure; decimals must be within
    /// `tol` of it.
    pub fn agrees_with(&self, enclosure: &RatInterval, tol: f64) -> bool {
        match &self.exact {
            Some(r) => enclosure.contains(r),
            None => {
                let (lo, hi) = enclosure.to_f64();
                self.value >= lo - tol && self.value <= hi + tol
            }
        }
    }
}

/// One face or edge of the `(p, x, y)` cuboid.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub label: String,
    pub surrogate: FunctionalId,
    pub fixed: Vec<(String, Rat)>,
    pub free: Vec<String>,
    pub restriction: RatPoly,
    pub max: CertifiedMax,
    /// For edges: location of the maximum from root isolation of the
    /// derivative, refined to `1e-9`.
    pub argmax: Option<f64>,
    /// The restriction evaluated at `argmax`.
    pub argmax_value: Option<f64>,
    pub quoted: Option<QuotedValue>,
    pub quoted_argmax: Option<(String, f64)>,
}

impl TableRow {
    /// Agreement with the quoted value within `tol`; `None` when nothing is
    /// quoted.
    pub fn agrees(&self, tol: f64) -> Option<bool> {
        let value_ok = self.quoted.as_ref()?.agrees_with(&self.max.enclosure, tol);
        let arg_ok = match (&self.quoted_argmax, self.argmax) {
            (Some((_, want)), Some(got)) => (want - got).abs() <= tol,
            _ => true,
        };
        Some(value_ok && arg_ok)
    }
}

fn upper_of(var: &str) -> Rat {
    if var == "p" {
        int(2)
    } else {
        int(1)
    }
}

fn restricted(f: &RatPoly, fixed: &[(&str, i64)]) -> Result<(RatPoly, Vec<String>, BoxRegion)> {
    let mut g = f.clone();
    for (v, val) in fixed {
        g = g.substitute(v, &int(*val))?;
    }
    let free: Vec<String> = SURROGATE_VARS
        .iter()
        .filter(|v| !fixed.iter().any(|(f, _)| f == *v))
        .map(|v| v.to_string())
        .collect();
    let g = g.with_vars(&free)?;
    let region = BoxRegion::from_bounds(&free.iter().map(|v| (int(0), upper_of(v))).collect::<Vec<_>>())?;
    Ok((g, free, region))
}

/// Location of the maximum of a univariate polynomial on `[0, hi]`.
fn univariate_argmax(f: &RatPoly, hi: &Rat) -> Result<Option<f64>> {
    let u = UniPoly::from_ratpoly(f)?;
    if u.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    let d = u.derivative();
    let mut cands = vec![Rat::zero(), hi.clone()];
    if !d.is_zero() {
        let iv = RatInterval::new(Rat::zero(), hi.clone())?;
        let roots = isolate_roots(&d.to_ratpoly("t"), &iv, &rat(1, 1_000_000_000))?;
        cands.extend(roots.intervals.iter().map(RatInterval::midpoint));
    }
    let best = cands
        .into_iter()
        .map(|c| (u.eval(&c), c))
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)))
        .expect("nonempty");
    Ok(Some(to_f64(&best.1)))
}

struct Spec {
    label: &'static str,
    fixed: &'static [(&'static str, i64)],
    quoted: Option<QuotedValue>,
    argmax: Option<(&'static str, f64)>,
}

fn spec(
    label: &'static str,
    fixed: &'static [(&'static str, i64)],
    quoted: Option<QuotedValue>,
    argmax: Option<(&'static str, f64)>,
) -> Spec {
    Spec {
        label,
        fixed,
        quoted,
        argmax,
    }
}

fn edge_specs(id: FunctionalId) -> Vec<Spec> {
    let e = QuotedValue::exact;
    let d = QuotedValue::decimal;
    let r = |n, m| Some(e(rat(n, m)));
    match id {
        FunctionalId::H3_1 => vec![
            spec("s1: G(p,0,0)", &[("x", 0), ("y", 0)], Some(d("0.00596162")), Some(("1.43285", 1.43285))),
            spec("s2: G(p,0,1)", &[("x", 0), ("y", 1)], r(1, 36), Some(("0", 0.0))),
            spec("s3: G(p,1,0)", &[("x", 1), ("y", 0)], Some(d("0.0225817")), Some(("1.2008", 1.2008))),
            spec("s3: G(p,1,1)", &[("x", 1), ("y", 1)], Some(d("0.0225817")), Some(("1.2008", 1.2008))),
            spec(
                "s5: G(0,x,0)",
                &[("p", 0), ("y", 0)],
                Some(d("0.0170103")),
                Some(("sqrt(2/3)", (2.0f64 / 3.0).sqrt())),
            ),
            spec("s4: G(0,x,1)", &[("p", 0), ("y", 1)], r(1, 36), Some(("0", 0.0))),
            spec("G(2,x,0)", &[("p", 2), ("y", 0)], r(29, 36864), None),
            spec("G(2,x,1)", &[("p", 2), ("y", 1)], r(29, 36864), None),
            spec("G(0,0,y)", &[("p", 0), ("x", 0)], r(1, 36), Some(("1", 1.0))),
            spec("G(0,1,y)", &[("p", 0), ("x", 1)], r(1, 64), None),
            spec("G(2,0,y)", &[("p", 2), ("x", 0)], r(29, 36864), None),
            spec("G(2,1,y)", &[("p", 2), ("x", 1)], r(29, 36864), None),
        ],
        _ => vec![
            spec("l1: F(p,0,0)", &[("x", 0), ("y", 0)], Some(d("0.00198843")), Some(("1.43351", 1.43351))),
            spec("l2: F(p,0,1)", &[("x", 0), ("y", 1)], r(1, 36), Some(("0", 0.0))),
            spec("l3: F(p,1,0)", &[("x", 1), ("y", 0)], Some(d("0.0057645")), Some(("1.39838", 1.39838))),
            spec("l3: F(p,1,1)", &[("x", 1), ("y", 1)], Some(d("0.0057645")), Some(("1.39838", 1.39838))),
            spec(
                "l6: F(0,x,0)",
                &[("p", 0), ("y", 0)],
                Some(QuotedValue::irrational("sqrt(3)/144", 3f64.sqrt() / 144.0)),
                Some(("sqrt(3)/3", 3f64.sqrt() / 3.0)),
            ),
            spec("l5: F(0,x,1)", &[("p", 0), ("y", 1)], r(1, 36), Some(("0", 0.0))),
            spec("F(2,x,0)", &[("p", 2), ("y", 0)], r(5, 18432), None),
            spec("F(2,x,1)", &[("p", 2), ("y", 1)], r(5, 18432), None),
            spec("l4: F(0,0,y)", &[("p", 0), ("x", 0)], r(1, 36), Some(("1", 1.0))),
            spec("F(0,1,y)", &[("p", 0), ("x", 1)], r(0, 1), None),
            spec("F(2,0,y)", &[("p", 2), ("x", 0)], r(5, 18432), None),
            spec("F(2,1,y)", &[("p", 2), ("x", 1)], r(5, 18432), None),
        ],
    }
}

fn face_specs(id: FunctionalId) -> Vec<Spec> {
    let e = |n, m| Some(QuotedValue::exact(rat(n, m)));
    match id {
        FunctionalId::H3_1 => vec![
            spec("h1: G(0,x,y)", &[("p", 0)], None, None),
            spec("G(2,x,y)", &[("p", 2)], e(29, 36864), None),
            spec("h2: G(p,0,y)", &[("x", 0)], None, None),
            spec("h3: G(p,1,y)", &[("x", 1)], Some(QuotedValue::decimal("0.0225817")), None),
            spec("h4: G(p,x,0)", &[("y", 0)], None, None),
            spec("h6: G(p,x,1)", &[("y", 1)], None, None),
        ],
        _ => vec![
            spec("k1: F(0,x,y)", &[("p", 0)], None, None),
            spec("F(2,x,y)", &[("p", 2)], e(5, 18432), None),
            spec("k2: F(p,0,y)", &[("x", 0)], None, None),
            spec("k3: F(p,1,y)", &[("x", 1)], Some(QuotedValue::decimal("0.00576045")), None),
            spec("k4: F(p,x,0)", &[("y", 0)], None, None),
            spec("k5: F(p,x,1)", &[("y", 1)], None, None),
        ],
    }
}

fn build(id: FunctionalId, specs: Vec<Spec>, tol: &Rat) -> Result<Vec<TableRow>> {
    let f = bound_surrogate(id)?.surrogate;
    specs
        .into_iter()
        .map(|s| {
            let (g, free, region) = restricted(&f, s.fixed)?;
            let max = certify_max(&g, &region, tol)?;
            let argmax = if free.len() == 1 {
                univariate_argmax(&g, &upper_of(&free[0]))?
            } else {
                None
            };
            let argmax_value = match argmax {
                Some(a) => Some(g.eval_f64(&[a])?),
                None => None,
            };
            Ok(TableRow {
                label: s.label.to_string(),
                surrogate: id,
                fixed: s.fixed.iter().map(|(v, x)| (v.to_string(), int(*x))).collect(),
                free,
                restriction: g,
                max,
                argmax,
                argmax_value,
                quoted: s.quoted,
                quoted_argmax: s.argmax.map(|(t, v)| (t.to_string(), v)),
            })
        })
        .collect()
}

/// Certified maxima of `G` (for `H3_1`) or `F` (for `H2_3`) on the twelve
/// edges of the cuboid, with the values quoted for them.
pub fn edge_table(id: FunctionalId, tol: &Rat) -> Result<Vec<TableRow>> {
    build(id, edge_specs(id), tol)
}

/// Certified maxima on the six faces.
pub fn face_table(id: FunctionalId, tol: &Rat) -> Result<Vec<TableRow>> {
    build(id, face_specs(id), tol)
}
