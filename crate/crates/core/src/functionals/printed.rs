//! Polynomials transcribed verbatim from the published derivation.
//!
//! Everything here is data to be checked, not trusted. The generic forms are
//! written once over [`Algebra`] so they can be evaluated at exact points and
//! expanded symbolically from the same source.

use crate::algebra::{int, rat, Algebra, Conjugate, Rat};
use crate::functionals::FunctionalId;
use crate::polyalg::RatPoly;

/// Normalizing denominator of the `H3(1)` forms.
pub const H31_SCALE: i64 = 2_359_296;
/// Normalizing denominator of the `H2(3)` forms.
pub const H23_SCALE: i64 = 1_179_648;

/// Which transcription of the complex forms to use. The printed `ν_3`,
/// `ζ_1` and `ζ_3` contain sign and conjugation slips; the corrected forms
/// differ from them only in those terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormVariant {
    Corrected,
    AsPrinted,
}

fn k<A: Algebra>(n: i64) -> A {
    A::from_int(n)
}

/// Printed expansion of `H3(1)` in `p = p_1, p_2, p_3, p_4`.
pub fn raw_h31<A: Algebra>(p: &A, p2: &A, p3: &A, p4: &A) -> A {
    let s = k::<A>(689) * p.pow(6) - k::<A>(3368) * p.pow(4) * p2.clone()
        + k::<A>(3520) * p.pow(3) * p3.clone()
        + k::<A>(24064) * p.clone() * p2.clone() * p3.clone()
        + k::<A>(3008) * p.pow(2) * p2.pow(2)
        - k::<A>(16128) * p.pow(2) * p4.clone()
        - k::<A>(13824) * p2.pow(3)
        - k::<A>(16384) * p3.pow(2)
        + k::<A>(18432) * p2.clone() * p4.clone();
    s.scale(&rat(1, H31_SCALE))
}

/// Printed expansion of `H2(3)`.
pub fn raw_h23<A: Algebra>(p: &A, p2: &A, p3: &A, p4: &A) -> A {
    let s = k::<A>(103) * p.pow(6) - k::<A>(712) * p.pow(4) * p2.clone()
        - k::<A>(4608) * p2.pow(3)
        + k::<A>(1984) * p.pow(2) * p2.pow(2)
        + k::<A>(5888) * p.clone() * p2.clone() * p3.clone()
        - k::<A>(160) * p.pow(3) * p3.clone()
        - k::<A>(8192) * p3.pow(2)
        - k::<A>(3456) * p.pow(2) * p4.clone()
        + k::<A>(9216) * p2.clone() * p4.clone();
    s.scale(&rat(1, H23_SCALE))
}

/// Printed expansion of `a_3^2 - a_5`.
pub fn raw_zalcman<A: Algebra>(p: &A, p2: &A, p3: &A, p4: &A) -> A {
    p.pow(4).scale(&rat(125, 12288)) - (p.pow(2) * p2.clone()).scale(&rat(43, 768))
        + p2.pow(2).scale(&rat(3, 64))
        + (p.clone() * p3.clone()).scale(&rat(11, 192))
        - p4.scale(&rat(1, 16))
}

/// `[ν_1, ν_2, ν_3, ψ]` before the `1/2359296` normalization, so that
/// `H3(1) = (ν_1 + ν_2 η + ν_3 η^2 + ψ ρ) / 2359296`.
pub fn nu_parts<A: Algebra + Conjugate>(p: &A, g: &A, e: &A, variant: FormVariant) -> [A; 4] {
    let q = k::<A>(4) - p.pow(2);
    let g2 = g.clone() * g.conj();
    let mg = k::<A>(1) - g2.clone();
    let me = k::<A>(1) - e.clone() * e.conj();
    let nu1 = k::<A>(29) * p.pow(6)
        + q.clone()
            * (q.clone()
                * (k::<A>(944) * p.pow(2) * g.pow(2) - k::<A>(640) * p.pow(2) * g.pow(3)
                    - k::<A>(2304) * g.pow(3)
                    + k::<A>(128) * p.pow(2) * g.pow(4))
                - k::<A>(116) * p.pow(4) * g.clone()
                + k::<A>(752) * p.pow(4) * g.pow(2)
                - k::<A>(3456) * p.pow(2) * g.pow(2)
                - k::<A>(864) * p.pow(4) * g.pow(3));
    let nu2 = q.clone()
        * mg.clone()
        * (k::<A>(224) * p.pow(3)
            + k::<A>(3456) * p.pow(3) * g.clone()
            + q.clone() * (k::<A>(2432) * p.clone() * g.clone() - k::<A>(512) * p.clone() * g.pow(2)));
    let c = match variant {
        FormVariant::Corrected => -4096,
        FormVariant::AsPrinted => 4096,
    };
    let nu3 = q.clone()
        * mg.clone()
        * (q.clone() * (k::<A>(c) - k::<A>(512) * g2) + k::<A>(3456) * p.pow(2) * g.conj());
    let psi = q.clone() * mg * me * (k::<A>(-3456) * p.pow(2) + k::<A>(4608) * g.clone() * q);
    [nu1, nu2, nu3, psi]
}

/// `[ζ_1, ζ_2, ζ_3, ξ]` before the `1/1179648` normalization.
pub fn zeta_parts<A: Algebra + Conjugate>(p: &A, g: &A, e: &A, variant: FormVariant) -> [A; 4] {
    let q = k::<A>(4) - p.pow(2);
    let g2 = g.clone() * g.conj();
    let mg = k::<A>(1) - g2.clone();
    let me = k::<A>(1) - e.clone() * e.conj();
    let printed = variant == FormVariant::AsPrinted;
    let last = if printed {
        k::<A>(16) * g.pow(2) * q.clone()
    } else {
        k::<A>(16) * g.pow(3) * q.clone()
    };
    let z1 = k::<A>(-5) * p.pow(6)
        + k::<A>(4)
            * p.pow(2)
            * g.clone()
            * q.clone()
            * (-p.pow(2) - k::<A>(20) * q.clone() * g.clone() - k::<A>(26) * p.pow(2) * g.clone()
                + k::<A>(144) * g.clone()
                + k::<A>(36) * p.pow(2) * g.pow(2)
                + last
                + k::<A>(40) * g.pow(2) * q.clone());
    let z2 = k::<A>(16)
        * p.clone()
        * q.clone()
        * mg.clone()
        * (k::<A>(-5) * p.pow(2) - k::<A>(36) * p.pow(2) * g.clone()
            - k::<A>(16) * g.pow(2) * q.clone()
            - k::<A>(20) * g.clone() * q.clone());
    let (modulus, tail) = if printed {
        (g.pow(2), g.clone())
    } else {
        (g2, g.conj())
    };
    let z3 = k::<A>(64)
        * q.clone()
        * mg.clone()
        * (k::<A>(-4) * q.clone() * (k::<A>(8) + modulus) - k::<A>(9) * p.pow(2) * tail);
    let xi = k::<A>(576) * q.clone() * mg * me * (p.pow(2) + k::<A>(4) * g.clone() * q);
    [z1, z2, z3, xi]
}

/// `[g_1, g_2, g_3, g_4]` in `p` and `x = |γ|`.
pub fn g_parts<A: Algebra>(p: &A, x: &A) -> [A; 4] {
    let q = k::<A>(4) - p.pow(2);
    let mx = k::<A>(1) - x.pow(2);
    let g1 = k::<A>(29) * p.pow(6)
        + q.clone()
            * (q.clone()
                * (k::<A>(944) * p.pow(2) * x.pow(2)
                    + k::<A>(640) * p.pow(2) * x.pow(3)
                    + k::<A>(2304) * x.pow(3)
                    + k::<A>(128) * p.pow(2) * x.pow(4))
                + k::<A>(116) * p.pow(4) * x.clone()
                + k::<A>(752) * p.pow(4) * x.pow(2)
                + k::<A>(3456) * p.pow(2) * x.pow(2)
                + k::<A>(864) * p.pow(4) * x.pow(3));
    let g2 = q.clone()
        * mx.clone()
        * (k::<A>(224) * p.pow(3)
            + q.clone() * (k::<A>(2432) * p.clone() * x.clone() + k::<A>(512) * p.clone() * x.pow(2))
            + k::<A>(3456) * p.pow(3) * x.clone());
    let g3 = q.clone()
        * mx.clone()
        * (q.clone() * (k::<A>(4096) + k::<A>(512) * x.pow(2)) + k::<A>(3456) * p.pow(2) * x.clone());
    let g4 = q.clone() * mx * (k::<A>(3456) * p.pow(2) + k::<A>(4608) * x.clone() * q);
    [g1, g2, g3, g4]
}

/// `[q_1, q_2, q_3, q_4]` in `p` and `x = |γ|`.
pub fn q_parts<A: Algebra>(p: &A, x: &A) -> [A; 4] {
    let q = k::<A>(4) - p.pow(2);
    let mx = k::<A>(1) - x.pow(2);
    let q1 = k::<A>(5) * p.pow(6)
        + k::<A>(4)
            * p.pow(2)
            * x.clone()
            * q.clone()
            * (p.pow(2)
                + k::<A>(20) * q.clone() * x.clone()
                + k::<A>(26) * p.pow(2) * x.clone()
                + k::<A>(144) * x.clone()
                + k::<A>(36) * p.pow(2) * x.pow(2)
                + k::<A>(16) * x.pow(3) * q.clone()
                + k::<A>(40) * x.pow(2) * q.clone());
    let q2 = k::<A>(16)
        * p.clone()
        * q.clone()
        * mx.clone()
        * (k::<A>(5) * p.pow(2)
            + k::<A>(36) * p.pow(2) * x.clone()
            + k::<A>(16) * x.pow(2) * q.clone()
            + k::<A>(20) * x.clone() * q.clone());
    let q3 = k::<A>(64)
        * q.clone()
        * mx.clone()
        * (k::<A>(4) * q.clone() * (k::<A>(8) + x.pow(2)) + k::<A>(9) * p.pow(2) * x.clone());
    let q4 = k::<A>(576) * q.clone() * mx * (p.pow(2) + k::<A>(4) * x.clone() * q);
    [q1, q2, q3, q4]
}

fn p_only() -> RatPoly {
    RatPoly::var("p")
}

fn univariate(coeffs: &[(u32, i64)]) -> RatPoly {
    let p = p_only();
    coeffs
        .iter()
        .fold(RatPoly::constant_in(&["p"], int(0)), |acc, &(e, c)| {
            acc + p.pow(e).scale(&int(c))
        })
}

/// Octic whose root in `(0, 2)` locates the interior maximum of `G` on the
/// face `x = 0`.
pub fn g_face_octic() -> RatPoly {
    univariate(&[
        (0, 75_497_472),
        (2, -107_347_968),
        (4, 51_265_024),
        (6, -8_426_096),
        (8, 95_167),
    ])
}

/// The analogous octic for `F` on `x = 0`.
pub fn f_face_octic() -> RatPoly {
    univariate(&[
        (0, 1_048_576),
        (2, -1_196_032),
        (4, 449_216),
        (6, -57_582),
        (8, 615),
    ])
}

/// Numerator of `s_3'`, the derivative of `G(p, 1, y)`.
pub fn s3_derivative_numerator() -> RatPoly {
    univariate(&[(1, 45_568), (3, -31_680), (5, 54)])
}

/// Printed value of the interior-root location for `g_face_octic`.
pub const G_FACE_OCTIC_ROOT: &str = "1.39732";
/// Printed value of the interior-root location for `f_face_octic`.
pub const F_FACE_OCTIC_ROOT: &str = "1.35957";
/// Printed location of the maximum of `s_3`.
pub const S3_ROOT: &str = "1.2008";

/// A face or edge expression as displayed, with the restriction of the
/// surrogate it is supposed to equal.
#[derive(Clone, Debug)]
pub struct PrintedDisplay {
    pub name: &'static str,
    pub surrogate: FunctionalId,
    pub restriction: Vec<(&'static str, Rat)>,
    /// Differentiate the restriction with respect to this variable first.
    pub derivative: Option<&'static str>,
    pub printed: RatPoly,
}

/// Every face, edge and derivative display of the two proofs.
pub fn displays() -> Vec<PrintedDisplay> {
    let v = RatPoly::vars_in(&["p", "x", "y"]);
    let (p, x, y) = (&v[0], &v[1], &v[2]);
    let c = |n: i64| RatPoly::constant(int(n));
    let q = || c(4) - p.pow(2);
    let mx = || c(1) - x.pow(2);
    let g = FunctionalId::H3_1;
    let f = FunctionalId::H2_3;
    let dg = |s: RatPoly| s.scale(&rat(1, H31_SCALE));
    let df = |s: RatPoly| s.scale(&rat(1, H23_SCALE));
    let mut out = Vec::new();
    let mut add = |name, surrogate, restriction: Vec<(&'static str, i64)>, derivative, printed| {
        out.push(PrintedDisplay {
            name,
            surrogate,
            restriction: restriction.into_iter().map(|(n, v)| (n, int(v))).collect(),
            derivative,
            printed,
        })
    };

    let xm1x8 = || (x.clone() - c(1)) * (x.clone() - c(8));
    add(
        "h1",
        g,
        vec![("p", 0)],
        None,
        (c(2) * mx() * (y.pow(2) * xm1x8() + c(9) * x.clone()) + c(9) * x.pow(3)).scale(&rat(1, 576)),
    );
    add(
        "dh1/dy",
        g,
        vec![("p", 0)],
        Some("y"),
        (y.clone() * mx() * xm1x8()).scale(&rat(1, 144)),
    );
    add(
        "h2",
        g,
        vec![("x", 0)],
        None,
        dg(c(128) * y.pow(2) * (c(512) - c(364) * p.pow(2) + c(59) * p.pow(4))
            + c(224) * p.pow(3) * y.clone() * q()
            + c(13824) * p.pow(2)
            - c(3456) * p.pow(4)
            + c(29) * p.pow(6)),
    );
    add(
        "dh2/dp",
        g,
        vec![("x", 0)],
        Some("p"),
        dg(c(2)
            * p.clone()
            * (c(256) * y.pow(2) * (c(59) * p.pow(2) - c(182))
                - c(112) * y.clone() * (c(5) * p.pow(3) - c(12) * p.clone())
                + c(87) * p.pow(4)
                - c(6912) * p.pow(2)
                + c(13824))),
    );
    add(
        "h3",
        g,
        vec![("x", 1)],
        None,
        dg(c(36864) + c(22784) * p.pow(2) - c(7920) * p.pow(4) + c(9) * p.pow(6)),
    );
    add(
        "h4",
        g,
        vec![("y", 0)],
        None,
        dg(c(29) * p.pow(6)
            + q() * (q()
                * (c(944) * p.pow(2) * x.pow(2) + c(640) * p.pow(2) * x.pow(3) - c(2304) * x.pow(3)
                    + c(128) * p.pow(2) * x.pow(4)
                    + c(4608) * x.clone())
                + c(116) * p.pow(4) * x.clone()
                + c(752) * p.pow(4) * x.pow(2)
                + c(864) * p.pow(4) * x.pow(3)
                + c(3456) * p.pow(2) * x.pow(2))),
    );
    add(
        "dh4/dx",
        g,
        vec![("y", 0)],
        Some("x"),
        dg((c(8192) * p.pow(2) - c(576) * p.pow(4) + c(512) * p.pow(6)) * x.pow(3)
            + (c(30720) * p.pow(2) - c(4992) * p.pow(4) - c(672) * p.pow(6)) * x.pow(2)
            + (c(30208) * p.pow(2) - c(9088) * p.pow(4) + c(384) * p.pow(6)) * x.clone()
            + c(73728)
            - c(36864) * p.pow(2)
            + c(5072) * p.pow(4)
            - c(116) * p.pow(6)),
    );
    add(
        "dh4/dp",
        g,
        vec![("y", 0)],
        Some("p"),
        dg((c(4096) * p.clone() - c(4096) * p.pow(3) + c(768) * p.pow(5)) * x.pow(4)
            + (c(3840) * p.clone() - c(6656) * p.pow(3) - c(1344) * p.pow(5)) * x.pow(3)
            + (c(30208) * p.clone() - c(18176) * p.pow(3) + c(1152) * p.pow(5)) * x.pow(2)
            + (c(-73728) * p.clone() + c(20288) * p.pow(3) - c(696) * p.pow(5)) * x.clone()
            + c(1344) * p.clone()
            - c(13824) * p.pow(3)
            + c(174) * p.pow(5)),
    );
    add(
        "h6",
        g,
        vec![("y", 1)],
        None,
        dg(c(29) * p.pow(6)
            + q() * (c(116) * p.pow(4) * x.clone()
                + c(752) * p.pow(4) * x.pow(2)
                + c(3456) * p.pow(2) * x.pow(2)
                + c(864) * p.pow(4) * x.pow(3)
                + mx() * (c(224) * p.pow(3) + c(3456) * p.pow(2) * x.clone() + c(3456) * p.pow(3) * x.clone())
                + q() * (mx()
                    * (c(2432) * p.clone() * x.clone()
                        + c(512) * p.clone() * x.pow(2)
                        + c(4096)
                        + c(512) * x.pow(2))
                    + c(944) * p.pow(2) * x.pow(2)
                    + c(640) * p.pow(2) * x.pow(3)
                    + c(2304) * x.pow(3)
                    + c(128) * p.pow(2) * x.pow(4)))),
    );
    add(
        "s1",
        g,
        vec![("x", 0), ("y", 0)],
        None,
        dg(c(29) * p.pow(6) - c(3456) * p.pow(4) + c(13824) * p.pow(2)),
    );
    add(
        "s2",
        g,
        vec![("x", 0), ("y", 1)],
        None,
        dg(c(65536) - c(32768) * p.pow(2) + c(896) * p.pow(3) + c(4096) * p.pow(4)
            - c(224) * p.pow(5)
            + c(29) * p.pow(6)),
    );
    add(
        "s3",
        g,
        vec![("x", 1)],
        None,
        dg(c(9) * p.pow(6) - c(7920) * p.pow(4) + c(22784) * p.pow(2) + c(36864)),
    );
    add(
        "s4",
        g,
        vec![("p", 0), ("y", 1)],
        None,
        (c(16) - c(4) * x.pow(2) + c(9) * x.pow(3) - c(2) * x.pow(4)).scale(&rat(1, 576)),
    );
    add(
        "s5",
        g,
        vec![("p", 0), ("y", 0)],
        None,
        (-(x.pow(2) - c(2))).scale(&rat(1, 64)),
    );
    add("G(0,1,y)", g, vec![("p", 0), ("x", 1)], None, RatPoly::constant(rat(1, 64)));
    add("G(0,0,y)", g, vec![("p", 0), ("x", 0)], None, y.pow(2).scale(&rat(1, 36)));
    add(
        "dG/dy",
        g,
        vec![],
        Some("y"),
        (q()
            * mx()
            * (c(8) * y.clone() * (x.clone() - c(1)) * (c(4) * q() * (x.clone() - c(8)) + c(27) * p.pow(2))
                + p.clone()
                    * (c(4) * x.clone() * q() * (c(19) + c(4) * x.clone())
                        + p.pow(2) * (c(7) + c(108) * x.clone()))))
            .scale(&rat(1, 73728)),
    );
    add("G(2,x,y)", g, vec![("p", 2)], None, RatPoly::constant(rat(29, 36864)));

    add(
        "k1",
        f,
        vec![("p", 0)],
        None,
        (mx() * (y.pow(2) * xm1x8() + c(9) * x.clone())).scale(&rat(1, 288)),
    );
    add(
        "dk1/dy",
        f,
        vec![("p", 0)],
        Some("y"),
        (y.clone() * mx() * xm1x8()).scale(&rat(1, 144)),
    );
    add(
        "k2",
        f,
        vec![("x", 0)],
        None,
        df(c(64) * y.pow(2) * (c(512) - c(292) * p.pow(2) + c(41) * p.pow(4))
            + c(80) * p.pow(3) * y.clone() * q()
            + c(2304) * p.pow(2)
            - c(576) * p.pow(4)
            + c(5) * p.pow(6)),
    );
    // displayed as an equation `(...) = 0`; the factor 4p/1179648 makes it
    // comparable with the derivative itself
    add(
        "dk2/dp",
        f,
        vec![("x", 0)],
        Some("p"),
        (y.pow(2) * (c(5248) * p.pow(2) - c(18688))
            + c(40) * y.clone() * (c(12) * p.clone() - c(50) * p.pow(3))
            + c(2304)
            - c(1152) * p.pow(2)
            + c(15) * p.pow(4))
            * p.scale(&rat(4, H23_SCALE)),
    );
    add(
        "k3",
        f,
        vec![("x", 1)],
        None,
        df(c(7168) * p.pow(2) - c(2000) * p.pow(4) + c(57) * p.pow(6)),
    );
    add(
        "k4",
        f,
        vec![("y", 0)],
        None,
        df(c(5) * p.pow(6)
            + q() * (q()
                * (c(2304) * x.clone() * mx()
                    + c(80) * p.pow(2) * x.pow(2)
                    + c(160) * p.pow(2) * x.pow(3)
                    + c(64) * p.pow(2) * x.pow(4))
                + c(4) * p.pow(4) * x.clone()
                + c(576) * p.pow(2) * x.pow(2)
                + c(104) * p.pow(4) * x.pow(2)
                + c(144) * p.pow(4) * x.pow(3)
                + c(576) * p.pow(2) * mx())),
    );
    add(
        "dk4/dp",
        f,
        vec![("y", 0)],
        Some("p"),
        (c(2304) * p.clone() - c(1152) * p.pow(3)
            + c(15) * p.pow(5)
            + (c(-18432) * p.clone() + c(4640) * p.pow(3) - c(12) * p.pow(5)) * x.clone()
            + (c(1280) * p.clone() - c(448) * p.pow(3) - c(72) * p.pow(5)) * x.pow(2)
            + (c(20992) * p.clone() - c(6016) * p.pow(3) + c(48) * p.pow(5)) * x.pow(3)
            + (c(1024) * p.clone() - c(1024) * p.pow(3) + c(192) * p.pow(5)) * x.pow(4))
            .scale(&rat(1, 589_824)),
    );
    add(
        "dk4/dx",
        f,
        vec![("y", 0)],
        Some("x"),
        ((p.pow(2) - c(4))
            * ((c(-256) * p.pow(2) + c(64) * p.pow(4)) * x.pow(3)
                + (c(6912) - c(2208) * p.pow(2) + c(12) * p.pow(4)) * x.pow(2)
                + (c(-160) * p.pow(2) - c(12) * p.pow(4)) * x.clone()
                - c(2304)
                + c(576) * p.pow(2)
                - p.pow(4)))
        .scale(&rat(1, 294_912)),
    );
    add(
        "k5",
        f,
        vec![("y", 1)],
        None,
        df(c(5) * p.pow(6)
            + q() * (q()
                * (c(80) * p.pow(2) * x.pow(2)
                    + c(64) * p.pow(2) * x.pow(4)
                    + c(160) * p.pow(2) * x.pow(3)
                    + mx() * (c(256) * p.clone() * x.pow(2)
                        + c(320) * p.clone() * x.clone()
                        + c(256) * (c(8) + x.pow(2))))
                + c(4) * p.pow(4) * x.clone()
                + c(104) * p.pow(4) * x.pow(2)
                + c(576) * p.pow(2) * x.pow(2)
                + c(144) * p.pow(4) * x.pow(3)
                + mx() * (c(80) * p.pow(3) + c(576) * p.pow(3) * x.clone() + c(576) * p.pow(2) * x.clone()))),
    );
    add(
        "l1",
        f,
        vec![("x", 0), ("y", 0)],
        None,
        df(c(5) * p.pow(6) - c(576) * p.pow(4) + c(2304) * p.pow(2)),
    );
    add(
        "l2",
        f,
        vec![("x", 0), ("y", 1)],
        None,
        df(c(32768) - c(16384) * p.pow(2) + c(320) * p.pow(3) + c(2048) * p.pow(4)
            - c(80) * p.pow(5)
            + c(5) * p.pow(6)),
    );
    add(
        "l3",
        f,
        vec![("x", 1)],
        None,
        df(c(7168) * p.pow(2) - c(2000) * p.pow(4) + c(57) * p.pow(6)),
    );
    add("l4", f, vec![("p", 0), ("x", 0)], None, y.pow(2).scale(&rat(1, 36)));
    add(
        "l5",
        f,
        vec![("p", 0), ("y", 1)],
        None,
        (c(8) - c(7) * x.pow(2) - x.pow(4)).scale(&rat(1, 288)),
    );
    add(
        "l6",
        f,
        vec![("p", 0), ("y", 0)],
        None,
        (x.clone() * mx()).scale(&rat(1, 32)),
    );
    add("F(0,1,y)", f, vec![("p", 0), ("x", 1)], None, RatPoly::zero());
    add(
        "dF/dy",
        f,
        vec![],
        Some("y"),
        (q()
            * mx()
            * (c(8) * y.clone() * (x.clone() - c(1)) * (c(4) * q() * (x.clone() - c(8)) + c(9) * p.pow(2))
                + p.clone()
                    * (c(4) * x.clone() * q() * (c(5) + c(4) * x.clone())
                        + p.pow(2) * (c(5) + c(36) * x.clone()))))
            .scale(&rat(1, 73728)),
    );
    add("F(2,x,y)", f, vec![("p", 2)], None, RatPoly::constant(rat(5, 18432)));
    out
}
