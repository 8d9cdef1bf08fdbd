use num_traits::{One, Zero};

use super::{raw_p_expansion, FunctionalId};
use crate::algebra::{int, rat, Rat};
use crate::error::{Error, Result};

/// Parameters of the Hermitian-form criterion bounding
/// `|a p_1^4 + d p_2^2 + 2c p_1 p_3 - (3/2) b p_1^2 p_2 - p_4|` by 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianVerdict {
    pub holds: bool,
    pub lhs: Rat,
    pub rhs: Rat,
    /// `rhs - lhs`.
    pub margin: Rat,
}

/// `8d(1-d)((cb-2a)^2 + (c(d+c)-b)^2) + c(1-c)(b-2dc)^2 <= 4c^2(1-c)^2 d(1-d)`.
pub fn hermitian_condition(params: &HermitianParams) -> Result<HermitianVerdict> {
    let HermitianParams { a, b, c, d } = params;
    let zero = Rat::zero();
    let one = Rat::one();
    for (name, v) in [("c", c), ("d", d)] {
        if v <= &zero || v >= &one {
            return Err(Error::OutOfRange {
                var: name.to_string(),
                value: v.to_string(),
                lo: "0".into(),
                hi: "1".into(),
            });
        }
    }
    let sq = |r: Rat| &r * &r;
    let two = int(2);
    let lhs = int(8) * d * (&one - d) * (sq(c * b - &two * a) + sq(c * (d + c) - b))
        + c * (&one - c) * sq(b - &two * d * c);
    let rhs = int(4) * sq(c.clone()) * sq(&one - c) * d * (&one - d);
    let margin = &rhs - &lhs;
    Ok(HermitianVerdict {
        holds: margin >= zero,
        lhs,
        rhs,
        margin,
    })
}

/// The Zalcman expansion written as `scale * (a p^4 + d p_2^2 + 2c p p_3 -
/// (3/2) b p^2 p_2 - p_4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZalcmanNormalForm {
    pub scale: Rat,
    pub params: HermitianParams,
    pub verdict: HermitianVerdict,
    /// `2 * scale`.
    pub bound: Rat,
}

/// Reads the criterion's parameters off the derived Zalcman expansion,
/// checks the criterion and returns the implied bound `2 * scale`.
pub fn zalcman_bound_via_hermitian() -> Result<ZalcmanNormalForm> {
    let z = raw_p_expansion(FunctionalId::Zalcman3)?;
    let scale = -z.coeff(&[("p4", 1)])?;
    if scale.is_zero() {
        return Err(Error::NormalForm("no p4 term".into()));
    }
    let read = |m: &[(&str, u32)]| -> Result<Rat> { Ok(z.coeff(m)? / &scale) };
    let a = read(&[("p", 4)])?;
    let d = read(&[("p2", 2)])?;
    let c = read(&[("p", 1), ("p3", 1)])? / int(2);
    let b = -read(&[("p", 2), ("p2", 1)])? * rat(2, 3);
    let params = HermitianParams { a, b, c, d };

    // the five monomials above must account for the whole expansion
    let v = crate::polyalg::RatPoly::vars_in(&super::RAW_VARS);
    let (p, p2, p3, p4) = (&v[0], &v[1], &v[2], &v[3]);
    let rebuilt = (p.pow(4).scale(&params.a) + p2.pow(2).scale(&params.d)
        + (p * p3).scale(&(int(2) * &params.c))
        - (&p.pow(2) * p2).scale(&(rat(3, 2) * &params.b))
        - p4.clone())
    .scale(&scale);
    if rebuilt != z {
        return Err(Error::NormalForm(format!("expansion has extra terms: {z}")));
    }

    let verdict = hermitian_condition(&params)?;
    if !verdict.holds {
        return Err(Error::NormalForm(format!(
            "criterion fails with margin {}",
            verdict.margin
        )));
    }
    let bound = int(2) * &scale;
    Ok(ZalcmanNormalForm {
        scale,
        params,
        verdict,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: Rat, b: Rat, c: Rat, d: Rat) -> HermitianParams {
        HermitianParams { a, b, c, d }
    }

    #[test]
    fn holds_at_the_zalcman_parameters() {
        let v = hermitian_condition(&params(rat(125, 768), rat(43, 72), rat(11, 24), rat(3, 4))).unwrap();
        assert!(v.holds);
        assert_eq!(v.lhs, rat(211957, 23887872));
        assert_eq!(v.rhs, rat(20449, 442368));
        assert_eq!(v.margin, rat(892289, 23887872));
    }

    #[test]
    fn fails_with_negative_margin() {
        let v = hermitian_condition(&params(int(0), int(0), rat(1, 2), rat(1, 2))).unwrap();
        assert!(!v.holds);
        assert_eq!(v.lhs, rat(9, 16));
        assert_eq!(v.rhs, rat(1, 16));
        assert_eq!(v.margin, rat(-1, 2));
    }

    #[test]
    fn open_interval_precondition() {
        assert!(hermitian_condition(&params(int(0), int(0), int(1), rat(1, 2))).is_err());
        assert!(hermitian_condition(&params(int(0), int(0), rat(1, 2), int(0))).is_err());
    }

    #[test]
    fn normal_form_of_the_zalcman_expansion() {
        let nf = zalcman_bound_via_hermitian().unwrap();
        assert_eq!(nf.scale, rat(1, 16));
        assert_eq!(nf.params, params(rat(125, 768), rat(43, 72), rat(11, 24), rat(3, 4)));
        assert_eq!(nf.bound, rat(1, 8));
    }
}
