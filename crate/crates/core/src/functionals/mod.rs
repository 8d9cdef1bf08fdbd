//! Coefficient functionals: Hankel determinants, the Zalcman functional and
//! their polynomial forms in the Carathéodory parameters.

mod hermitian;
mod majorize;
pub mod printed;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Algebra, Rat};
use crate::caratheodory::{
    coefficients_from_tail_generic, symbolic_params, symbolic_tail, ParamPoint, SchlichtCoefficients,
    TailForm,
};
use crate::error::{Error, Result};
use crate::polyalg::{ComplexPoly, RatPoly};

pub use hermitian::{hermitian_condition, zalcman_bound_via_hermitian, HermitianParams, HermitianVerdict, ZalcmanNormalForm};
pub use majorize::{majorization_check, MajorizationReport};
pub use printed::FormVariant;

/// Which functional to evaluate.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FunctionalId {
    /// `a_3 - a_2^2`.
    H2_1,
    /// `a_2 a_4 - a_3^2`.
    H2_2,
    /// `a_3 a_5 - a_4^2`.
    H2_3,
    /// The third-order determinant at `n = 1`.
    H3_1,
    /// `a_3^2 - a_5`.
    Zalcman3,
    /// `H_q(n)`, the `q x q` determinant of `a_n, ..., a_{n+2q-2}`.
    HankelGeneric { q: usize, n: usize },
}

impl FunctionalId {
    /// Largest coefficient index the functional reads.
    pub fn max_index(&self) -> usize {
        match *self {
            FunctionalId::H2_1 => 3,
            FunctionalId::H2_2 => 4,
            FunctionalId::H2_3 | FunctionalId::H3_1 | FunctionalId::Zalcman3 => 5,
            FunctionalId::HankelGeneric { q, n } => n + 2 * q - 2,
        }
    }

    /// Short machine name used on the command line.
    pub fn key(&self) -> String {
        match *self {
            FunctionalId::H2_1 => "h21".into(),
            FunctionalId::H2_2 => "h22".into(),
            FunctionalId::H2_3 => "h23".into(),
            FunctionalId::H3_1 => "h31".into(),
            FunctionalId::Zalcman3 => "zalcman".into(),
            FunctionalId::HankelGeneric { q, n } => format!("hankel:{q},{n}"),
        }
    }

    /// Sharp bound of `|functional|` over the class, where one is known.
    pub fn sharp_bound(&self) -> Option<Rat> {
        match self {
            FunctionalId::H3_1 | FunctionalId::H2_3 => Some(rat(1, 36)),
            FunctionalId::Zalcman3 => Some(rat(1, 8)),
            _ => None,
        }
    }
}

impl fmt::Display for FunctionalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionalId::H2_1 => write!(f, "H2(1)"),
            FunctionalId::H2_2 => write!(f, "H2(2)"),
            FunctionalId::H2_3 => write!(f, "H2(3)"),
            FunctionalId::H3_1 => write!(f, "H3(1)"),
            FunctionalId::Zalcman3 => write!(f, "a3^2-a5"),
            FunctionalId::HankelGeneric { q, n } => write!(f, "H{q}({n})"),
        }
    }
}

impl FromStr for FunctionalId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("unknown functional `{s}`"));
        match s.to_ascii_lowercase().as_str() {
            "h21" => Ok(FunctionalId::H2_1),
            "h22" => Ok(FunctionalId::H2_2),
            "h23" => Ok(FunctionalId::H2_3),
            "h31" => Ok(FunctionalId::H3_1),
            "zalcman" | "z3" => Ok(FunctionalId::Zalcman3),
            other => {
                let rest = other.strip_prefix("hankel:").ok_or_else(bad)?;
                let (q, n) = rest.split_once(',').ok_or_else(bad)?;
                let q: usize = q.trim().parse().map_err(|_| bad())?;
                let n: usize = n.trim().parse().map_err(|_| bad())?;
                if q == 0 || n == 0 {
                    return Err(bad());
                }
                Ok(FunctionalId::HankelGeneric { q, n })
            }
        }
    }
}

/// Determinant by cofactor expansion along the first row. Division free, so
/// it works over any commutative ring.
pub fn determinant<A: Algebra>(m: &[Vec<A>]) -> A {
    match m.len() {
        0 => A::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        n => {
            let mut acc = A::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<A>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].clone() * determinant(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// `H_q(n)` from its defining Hankel matrix.
pub fn hankel_determinant<A: Algebra>(q: usize, n: usize, coeffs: &SchlichtCoefficients<A>) -> Result<A> {
    let needed = n + 2 * q - 2;
    if q == 0 || n == 0 {
        return Err(Error::Domain("Hankel determinant needs q >= 1 and n >= 1".into()));
    }
    if coeffs.len() < needed {
        return Err(Error::InsufficientCoefficients {
            needed,
            available: coeffs.len(),
        });
    }
    let m: Vec<Vec<A>> = (0..q)
        .map(|i| {
            (0..q)
                .map(|j| coeffs.get(n + i + j).expect("checked above").clone())
                .collect()
        })
        .collect();
    Ok(determinant(&m))
}

/// Exact value of the functional on the given coefficients.
pub fn evaluate_functional<A: Algebra>(id: FunctionalId, coeffs: &SchlichtCoefficients<A>) -> Result<A> {
    if coeffs.len() < id.max_index() {
        return Err(Error::InsufficientCoefficients {
            needed: id.max_index(),
            available: coeffs.len(),
        });
    }
    let a = |k: usize| coeffs.get(k).expect("checked above").clone();
    Ok(match id {
        FunctionalId::H2_1 => a(3) - a(2) * a(2),
        FunctionalId::H2_2 => a(2) * a(4) - a(3) * a(3),
        FunctionalId::H2_3 => a(3) * a(5) - a(4) * a(4),
        FunctionalId::H3_1 => {
            a(3) * (a(2) * a(4) - a(3) * a(3)) - a(4) * (a(4) - a(2) * a(3)) + a(5) * (a(3) - a(2) * a(2))
        }
        FunctionalId::Zalcman3 => a(3) * a(3) - a(5),
        FunctionalId::HankelGeneric { q, n } => return hankel_determinant(q, n, coeffs),
    })
}

/// Variables of the raw expansion: `p = p_1` and formal `p_2, p_3, p_4`.
pub const RAW_VARS: [&str; 4] = ["p", "p2", "p3", "p4"];

/// The functional as a polynomial in `p, p2, p3, p4`, obtained by composing
/// its definition with the coefficient formulas.
pub fn raw_p_expansion(id: FunctionalId) -> Result<RatPoly> {
    if id.max_index() > 5 {
        return Err(Error::InsufficientCoefficients {
            needed: id.max_index(),
            available: 5,
        });
    }
    let v = RatPoly::vars_in(&RAW_VARS);
    let a = coefficients_from_tail_generic(&v[0], &v[1], &v[2], &v[3]);
    let coeffs = SchlichtCoefficients::from_tail_coeffs(a.to_vec());
    evaluate_functional(id, &coeffs)
}

/// The displayed raw expansion, for the three functionals that have one.
pub fn printed_raw_expansion(id: FunctionalId) -> Result<RatPoly> {
    let v = RatPoly::vars_in(&RAW_VARS);
    let f = match id {
        FunctionalId::H3_1 => printed::raw_h31,
        FunctionalId::H2_3 => printed::raw_h23,
        FunctionalId::Zalcman3 => printed::raw_zalcman,
        other => return Err(Error::Domain(format!("no displayed expansion for {other}"))),
    };
    Ok(f(&v[0], &v[1], &v[2], &v[3]))
}

/// `ν_1 + ν_2 η + ν_3 η^2 + ψ ρ` (or the `ζ`/`ξ` analogue), each part a
/// complex polynomial in the cartesian variables, before the common scale.
#[derive(Clone, Debug)]
pub struct ComplexFunctionalForm {
    pub id: FunctionalId,
    pub variant: FormVariant,
    pub scale: Rat,
    /// `[ν_1, ν_2, ν_3, ψ]` or `[ζ_1, ζ_2, ζ_3, ξ]`.
    pub parts: [ComplexPoly; 4],
}

impl ComplexFunctionalForm {
    /// `scale * (c_1 + c_2 η + c_3 η^2 + c_4 ρ)`.
    pub fn reassemble(&self) -> ComplexPoly {
        let [_, _, e, r] = symbolic_params(TailForm::Cartesian);
        let [c1, c2, c3, c4] = self.parts.clone();
        (c1 + c2 * e.clone() + c3 * e.pow(2) + c4 * r).scale(&self.scale)
    }
}

fn parts_at<A: Algebra + crate::algebra::Conjugate>(
    id: FunctionalId,
    p: &A,
    g: &A,
    e: &A,
    variant: FormVariant,
) -> Result<([A; 4], Rat)> {
    match id {
        FunctionalId::H3_1 => Ok((printed::nu_parts(p, g, e, variant), rat(1, printed::H31_SCALE))),
        FunctionalId::H2_3 => Ok((printed::zeta_parts(p, g, e, variant), rat(1, printed::H23_SCALE))),
        other => Err(Error::Domain(format!("no complex form for {other}"))),
    }
}

/// The complex form of `H3(1)` or `H2(3)` in the seven cartesian variables.
pub fn complex_form(id: FunctionalId, variant: FormVariant) -> Result<ComplexFunctionalForm> {
    let [p, g, e, _] = symbolic_params(TailForm::Cartesian);
    let (parts, scale) = parts_at(id, &p, &g, &e, variant)?;
    Ok(ComplexFunctionalForm {
        id,
        variant,
        scale,
        parts,
    })
}

/// Exact value of the complex form at a point, without expanding it.
pub fn complex_form_at(id: FunctionalId, variant: FormVariant, pt: &ParamPoint<Rat>) -> Result<Complex<Rat>> {
    let p = Complex::new(pt.p().clone(), Rat::zero());
    let (parts, scale) = parts_at(id, &p, pt.gamma(), pt.eta(), variant)?;
    let [c1, c2, c3, c4] = parts;
    let e = pt.eta().clone();
    let v = c1 + c2 * e.clone() + c3 * e.clone() * e + c4 * pt.rho().clone();
    Ok(Algebra::scale(&v, &scale))
}

/// Raw expansion composed with the cartesian symbolic tail.
pub fn raw_in_cartesian(id: FunctionalId) -> Result<ComplexPoly> {
    let raw = raw_p_expansion(id)?;
    let t = symbolic_tail(TailForm::Cartesian);
    raw.eval_in(&[t.p1, t.p2, t.p3, t.p4])
}

/// Reassembled complex form minus the raw expansion in cartesian variables;
/// the zero polynomial when the transcription is right.
pub fn identity_residual(id: FunctionalId, variant: FormVariant) -> Result<ComplexPoly> {
    let form = complex_form(id, variant)?;
    Ok(form.reassemble() - raw_in_cartesian(id)?)
}

/// Real majorant of `|functional|` in `(p, x, y)` with `x = |γ|`, `y = |η|`.
#[derive(Clone, Debug)]
pub struct BoundSurrogate {
    pub id: FunctionalId,
    pub scale: Rat,
    /// `[g_1..g_4]` or `[q_1..q_4]` in `(p, x)`, unscaled.
    pub parts: [RatPoly; 4],
    /// `scale * (c_1 + c_2 y + c_3 y^2 + c_4 (1 - y^2))` in `(p, x, y)`.
    pub surrogate: RatPoly,
}

/// Variables of the surrogates.
pub const SURROGATE_VARS: [&str; 3] = ["p", "x", "y"];

fn surrogate_parts<A: Algebra>(id: FunctionalId, p: &A, x: &A) -> Result<([A; 4], Rat)> {
    match id {
        FunctionalId::H3_1 => Ok((printed::g_parts(p, x), rat(1, printed::H31_SCALE))),
        FunctionalId::H2_3 => Ok((printed::q_parts(p, x), rat(1, printed::H23_SCALE))),
        other => Err(Error::Domain(format!("no bound surrogate for {other}"))),
    }
}

/// `G` for `H3(1)` and `F` for `H2(3)`.
pub fn bound_surrogate(id: FunctionalId) -> Result<BoundSurrogate> {
    let v = RatPoly::vars_in(&SURROGATE_VARS);
    let (parts, scale) = surrogate_parts(id, &v[0], &v[1])?;
    let y = &v[2];
    let one = RatPoly::constant_in(&SURROGATE_VARS, Rat::from_integer(1.into()));
    let [c1, c2, c3, c4] = parts.clone();
    let surrogate = (c1 + c2 * y.clone() + c3 * y.pow(2) + c4 * (one - y.pow(2))).scale(&scale);
    let parts = parts.map(|c| c.with_vars(&["p", "x"]).expect("parts only use p and x"));
    Ok(BoundSurrogate {
        id,
        scale,
        parts,
        surrogate,
    })
}

/// Surrogate value at `(p, x, y)` without expanding.
pub fn surrogate_at(id: FunctionalId, p: &Rat, x: &Rat, y: &Rat) -> Result<Rat> {
    let ([c1, c2, c3, c4], scale) = surrogate_parts(id, p, x)?;
    let y2 = y * y;
    let one = Rat::from_integer(1.into());
    Ok((c1 + c2 * y + c3 * &y2 + c4 * (one - y2)) * scale)
}

/// Outcome of comparing one displayed face or edge expression with the
/// corresponding restriction of the surrogate.
#[derive(Clone, Debug)]
pub struct DisplayCheck {
    pub name: &'static str,
    pub matches: bool,
    /// Restriction minus the display.
    pub difference: RatPoly,
    /// The restriction itself, as derived here.
    pub derived: RatPoly,
}

/// Restrict the surrogate as the display says and compare.
pub fn check_display(d: &printed::PrintedDisplay) -> Result<DisplayCheck> {
    let mut f = bound_surrogate(d.surrogate)?.surrogate;
    for (var, value) in &d.restriction {
        f = f.substitute(var, value)?;
    }
    if let Some(var) = d.derivative {
        f = f.partial_derivative(var)?;
    }
    let difference = (&f - &d.printed).compact();
    Ok(DisplayCheck {
        name: d.name,
        matches: difference.is_zero(),
        difference,
        derived: f.compact(),
    })
}

/// [`check_display`] for every display.
pub fn check_displays() -> Result<Vec<DisplayCheck>> {
    printed::displays().iter().map(check_display).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::caratheodory::{coefficients_from_tail, random_rational_point, tail_from_params, CaratheodoryTail};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn real_coeffs(a: &[Rat]) -> SchlichtCoefficients<Rat> {
        SchlichtCoefficients::from_tail_coeffs(a.to_vec())
    }

    #[test]
    fn extremal_values() {
        let c = real_coeffs(&[int(0), int(0), rat(1, 6), int(0)]);
        assert_eq!(evaluate_functional(FunctionalId::H3_1, &c).unwrap(), rat(-1, 36));
        assert_eq!(evaluate_functional(FunctionalId::H2_3, &c).unwrap(), rat(-1, 36));
        let c = real_coeffs(&[int(0), int(0), int(0), rat(1, 8)]);
        assert_eq!(evaluate_functional(FunctionalId::Zalcman3, &c).unwrap(), rat(-1, 8));
    }

    #[test]
    fn missing_coefficients_are_reported() {
        let c = real_coeffs(&[int(0), int(0)]);
        assert_eq!(
            evaluate_functional(FunctionalId::H2_3, &c),
            Err(Error::InsufficientCoefficients { needed: 5, available: 3 })
        );
    }

    #[test]
    fn generic_hankel_matches_closed_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        use rand::Rng;
        for _ in 0..100 {
            let a: Vec<Rat> = (0..4).map(|_| rat(rng.random_range(-50..50), rng.random_range(1..20))).collect();
            let c = real_coeffs(&a);
            for (q, n, id) in [
                (2, 1, FunctionalId::H2_1),
                (2, 2, FunctionalId::H2_2),
                (2, 3, FunctionalId::H2_3),
                (3, 1, FunctionalId::H3_1),
            ] {
                assert_eq!(
                    evaluate_functional(FunctionalId::HankelGeneric { q, n }, &c).unwrap(),
                    evaluate_functional(id, &c).unwrap()
                );
            }
        }
    }

    #[test]
    fn parses_identifiers() {
        assert_eq!("h31".parse::<FunctionalId>().unwrap(), FunctionalId::H3_1);
        assert_eq!(
            "hankel:3,2".parse::<FunctionalId>().unwrap(),
            FunctionalId::HankelGeneric { q: 3, n: 2 }
        );
        assert!("hankel:0,2".parse::<FunctionalId>().is_err());
        assert!("h99".parse::<FunctionalId>().is_err());
        let id = FunctionalId::HankelGeneric { q: 2, n: 4 };
        assert_eq!(id.key().parse::<FunctionalId>().unwrap(), id);
    }

    #[test]
    fn raw_expansions_match_the_displays() {
        for id in [FunctionalId::H3_1, FunctionalId::H2_3, FunctionalId::Zalcman3] {
            assert_eq!(raw_p_expansion(id).unwrap(), printed_raw_expansion(id).unwrap(), "{id}");
        }
        let h = raw_p_expansion(FunctionalId::H3_1).unwrap();
        assert_eq!(h.coeff(&[("p", 6)]).unwrap(), rat(689, 2359296));
        assert_eq!(h.coeff(&[("p2", 3)]).unwrap(), rat(-13824, 2359296));
        let h = raw_p_expansion(FunctionalId::H2_3).unwrap();
        assert_eq!(h.coeff(&[("p3", 2)]).unwrap(), rat(-8192, 1179648));
        let z = raw_p_expansion(FunctionalId::Zalcman3).unwrap();
        assert_eq!(z.coeff(&[("p4", 1)]).unwrap(), rat(-1, 16));
    }

    #[test]
    fn corrected_complex_forms_are_identities() {
        for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
            assert!(identity_residual(id, FormVariant::Corrected).unwrap().is_zero(), "{id}");
            assert!(!identity_residual(id, FormVariant::AsPrinted).unwrap().is_zero(), "{id}");
        }
    }

    #[test]
    fn leading_terms_of_the_complex_forms() {
        let nu = complex_form(FunctionalId::H3_1, FormVariant::Corrected).unwrap();
        assert_eq!(nu.parts[0].re.coeff(&[("p", 6)]).unwrap(), int(29));
        let zeta = complex_form(FunctionalId::H2_3, FormVariant::Corrected).unwrap();
        assert_eq!(zeta.parts[0].re.coeff(&[("p", 6)]).unwrap(), int(-5));
    }

    #[test]
    fn complex_form_at_the_extremal_point() {
        let pt = ParamPoint::real(int(0), int(0), int(1), int(0)).unwrap();
        let v = complex_form_at(FunctionalId::H3_1, FormVariant::Corrected, &pt).unwrap();
        assert_eq!(v, Complex::new(rat(-65536, 2359296), Rat::zero()));
        assert_eq!(v.re, rat(-1, 36));
    }

    #[test]
    fn complex_form_agrees_with_direct_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let (pt, _, _) = random_rational_point(&mut rng);
            let a = coefficients_from_tail(&tail_from_params(&pt));
            for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
                assert_eq!(
                    evaluate_functional(id, &a).unwrap(),
                    complex_form_at(id, FormVariant::Corrected, &pt).unwrap()
                );
            }
        }
    }

    #[test]
    fn surrogate_spot_values() {
        let g = bound_surrogate(FunctionalId::H3_1).unwrap();
        assert_eq!(g.surrogate.degrees(), vec![6, 4, 2]);
        assert_eq!(g.parts[3].eval_rational(&[int(0), int(1)]).unwrap(), int(0));
        assert_eq!(g.surrogate.eval_rational(&[int(0), int(0), int(1)]).unwrap(), rat(1, 36));
        assert_eq!(g.surrogate.eval_rational(&[int(2), rat(1, 3), rat(5, 7)]).unwrap(), rat(29, 36864));
        let f = bound_surrogate(FunctionalId::H2_3).unwrap();
        assert_eq!(f.parts[2].eval_rational(&[int(0), int(0)]).unwrap(), int(32768));
        assert_eq!(f.surrogate.eval_rational(&[int(2), rat(1, 3), rat(5, 7)]).unwrap(), rat(5, 18432));
        let pt = [rat(3, 5), rat(2, 7), rat(4, 9)];
        assert_eq!(
            g.surrogate.eval_rational(&pt).unwrap(),
            surrogate_at(FunctionalId::H3_1, &pt[0], &pt[1], &pt[2]).unwrap()
        );
    }

    #[test]
    fn displays_match_except_the_known_slips() {
        let checks = check_displays().unwrap();
        let bad: Vec<_> = checks.iter().filter(|c| !c.matches).map(|c| c.name).collect();
        assert_eq!(bad, vec!["h4", "dh4/dx", "dh4/dp", "s4", "s5", "dk2/dp"]);
        let s5 = checks.iter().find(|c| c.name == "s5").unwrap();
        let x = RatPoly::var("x");
        let expected = (&x.scale(&int(2)) - &x.pow(3)).scale(&rat(1, 64));
        assert_eq!(s5.derived, expected);
    }

    #[test]
    fn half_plane_tail_through_both_routes() {
        let a = coefficients_from_tail(&CaratheodoryTail::real(int(2), int(2), int(2), int(2)));
        let h = evaluate_functional(FunctionalId::H3_1, &a).unwrap();
        let g = surrogate_at(FunctionalId::H3_1, &int(2), &int(0), &int(0)).unwrap();
        assert!(h.re.clone() * h.re <= g.clone() * g);
    }
}
