//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hankelcert::algebra::{int, parse_rat, rat, to_f64};
use hankelcert::boxopt::{certify_max, default_tol, edge_table, face_table, isolate_roots, table_tol};
use hankelcert::caratheodory::SchlichtCoefficients;
use hankelcert::classtools::{
    convolution_nonvanishing, lemniscate_param, t_grid, theta_membership, GridSpec, NONVANISHING_THRESHOLD,
};
use hankelcert::functionals::printed::{g_face_octic, f_face_octic, F_FACE_OCTIC_ROOT, G_FACE_OCTIC_ROOT};
use hankelcert::functionals::{
    bound_surrogate, evaluate_functional, identity_residual, hermitian_condition, majorization_check,
    printed_raw_expansion, raw_p_expansion, surrogate_at, zalcman_bound_via_hermitian, FormVariant, FunctionalId,
    HermitianParams,
};
use hankelcert::oracle::sample_sup;
use hankelcert::series::extremal_sl;
use hankelcert::{BoxRegion, RatInterval, Result};

const QUOTE_TOL: f64 = 1e-4;
const ROOT_TOL: f64 = 1e-4;
const CERTIFY_LIMIT: Duration = Duration::from_secs(60);
const ISOLATION_LIMIT: Duration = Duration::from_secs(1);
const ORACLE_LIMIT: Duration = Duration::from_secs(120);
const ORACLE_SAMPLES: usize = 1_000_000;
const MAJORIZATION_SAMPLES: usize = 10_000;
const LEMNISCATE_POINTS: usize = 1000;
const LEMNISCATE_TOL: f64 = 1e-12;

type Outcome = Result<(bool, String)>;
type Check = fn() -> Outcome;

fn certified_bound(id: FunctionalId, limit: Option<Duration>) -> Outcome {
    let f = bound_surrogate(id)?.surrogate;
    let start = Instant::now();
    let m = certify_max(&f, &BoxRegion::cuboid(), &default_tol())?;
    let elapsed = start.elapsed();
    let target = rat(1, 36);
    let tol = default_tol();
    let within = m.lower() >= &(&target - &tol) && m.upper() <= &(&target + &tol);
    let at_witness = surrogate_at(id, &int(0), &int(0), &int(1))?;
    let fast = limit.is_none_or(|l| elapsed < l);
    Ok((
        within && at_witness == target && fast,
        format!(
            "enclosure [{:.12}, {:.12}], value at (0,0,1) = {at_witness}, {} boxes, {:.1} s",
            to_f64(m.lower()),
            to_f64(m.upper()),
            m.subdivisions,
            elapsed.as_secs_f64()
        ),
    ))
}

fn criterion_1() -> Outcome {
    certified_bound(FunctionalId::H3_1, Some(CERTIFY_LIMIT))
}

fn criterion_2() -> Outcome {
    certified_bound(FunctionalId::H2_3, None)
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
        let raw = (&raw_p_expansion(id)? - &printed_raw_expansion(id)?).compact().is_zero();
        let form = identity_residual(id, FormVariant::Corrected)?.is_zero();
        ok &= raw && form;
        detail.push(format!("{id}: raw {raw}, reassembly {form}"));
    }
    Ok((ok, detail.join("; ")))
}

fn criterion_4() -> Outcome {
    let tol = table_tol();
    let mut rows = Vec::new();
    for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
        rows.extend(edge_table(id, &tol)?);
        rows.extend(face_table(id, &tol)?);
    }
    let quoted: Vec<_> = rows.iter().filter(|r| r.quoted.is_some()).collect();
    let bad: Vec<String> = quoted
        .iter()
        .filter(|r| r.agrees(QUOTE_TOL) != Some(true))
        .map(|r| r.label.clone())
        .collect();
    let l3 = rows
        .iter()
        .find(|r| r.label.starts_with("l3"))
        .and_then(|r| r.argmax_value)
        .unwrap_or(f64::NAN);
    Ok((
        bad.is_empty() && quoted.len() >= 10,
        format!(
            "{} quoted rows of {}, disagreeing: [{}]; l3 maximum {l3:.8}",
            quoted.len(),
            rows.len(),
            bad.join(", ")
        ),
    ))
}

fn single_root(name: &str, f: &hankelcert::RatPoly, quoted: &str) -> Result<(bool, String)> {
    let start = Instant::now();
    let iso = isolate_roots(f, &RatInterval::new(int(0), int(2))?, &rat(1, 1_000_000_000))?;
    let elapsed = start.elapsed();
    let inside: Vec<f64> = iso
        .intervals
        .iter()
        .filter(|iv| iv.lo() > &int(0) && iv.hi() < &int(2))
        .map(|iv| to_f64(&iv.midpoint()))
        .collect();
    let want = to_f64(&parse_rat(quoted)?);
    let ok = inside.len() == 1 && (inside[0] - want).abs() <= ROOT_TOL && elapsed < ISOLATION_LIMIT;
    let shown: Vec<String> = inside.iter().map(|r| format!("{r:.6}")).collect();
    Ok((
        ok,
        format!("{name}: roots [{}] vs {quoted}, {} ms", shown.join(", "), elapsed.as_millis()),
    ))
}

fn criterion_5() -> Outcome {
    let (a, da) = single_root("G octic", &g_face_octic(), G_FACE_OCTIC_ROOT)?;
    let (b, db) = single_root("F octic", &f_face_octic(), F_FACE_OCTIC_ROOT)?;
    Ok((a && b, format!("{da}; {db}")))
}

fn criterion_6() -> Outcome {
    let params = HermitianParams {
        a: rat(125, 768),
        b: rat(43, 72),
        c: rat(11, 24),
        d: rat(3, 4),
    };
    let v = hermitian_condition(&params)?;
    let z = zalcman_bound_via_hermitian()?;
    let f = extremal_sl(4, 8)?;
    let a5 = f.coeff(5);
    let a3 = f.coeff(3);
    let attained = &a3 * &a3 - &a5;
    let ok = v.holds && v.margin >= int(0) && z.params == params && z.bound == rat(1, 8) && a5 == rat(1, 8);
    Ok((
        ok,
        format!(
            "margin {}, bound {}, a5 = {a5}, a3^2 - a5 = {attained}",
            v.margin, z.bound
        ),
    ))
}

fn criterion_7() -> Outcome {
    let f = extremal_sl(3, 8)?;
    let a: Vec<_> = (2..=5).map(|k| f.coeff(k)).collect();
    let coeffs_ok = a == vec![int(0), int(0), rat(1, 6), int(0)];
    let s = SchlichtCoefficients::from_tail_coeffs((2..=8).map(|k| f.coeff(k)).collect());
    let h31 = evaluate_functional(FunctionalId::H3_1, &s)?;
    let h23 = evaluate_functional(FunctionalId::H2_3, &s)?;
    let ok = coeffs_ok && h31 == rat(-1, 36) && h23 == rat(-1, 36);
    let shown: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    Ok((ok, format!("(a2..a5) = ({}), H3(1) = {h31}, H2(3) = {h23}", shown.join(", "))))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for id in [FunctionalId::H3_1, FunctionalId::H2_3, FunctionalId::Zalcman3] {
        let bound = id.sharp_bound().expect("bounded");
        let r = sample_sup(id, ORACLE_SAMPLES, 0, false)?;
        ok &= r.consistent_with(&bound);
        detail.push(format!("{id}: {:.12} ({} over)", r.empirical_max, r.exceedances));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < ORACLE_LIMIT;
    Ok((ok, format!("{}; {:.1} s", detail.join(", "), elapsed.as_secs_f64())))
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
        let r = majorization_check(id, MAJORIZATION_SAMPLES, 0)?;
        ok &= r.passes() && r.samples == MAJORIZATION_SAMPLES;
        detail.push(format!("{id}: {} violations, ratio {:.6}", r.violations, r.worst_ratio));
    }
    Ok((ok, detail.join("; ")))
}

fn criterion_10() -> Outcome {
    let grid = GridSpec::default();
    let inside = theta_membership(0.25, &grid)?;
    let outside = theta_membership(0.35, &grid)?;
    let f = extremal_sl(3, 40)?;
    let conv = convolution_nonvanishing(&f, &t_grid(19), &GridSpec::convolution_default())?;
    let mut residual: f64 = 0.0;
    for t in t_grid(LEMNISCATE_POINTS) {
        for sign in [1, -1] {
            residual = residual.max(lemniscate_param(t, sign)?.residual().abs());
        }
    }
    let ok = inside.passes
        && !outside.passes
        && conv.passes
        && conv.min_modulus > NONVANISHING_THRESHOLD
        && residual < LEMNISCATE_TOL;
    Ok((
        ok,
        format!(
            "theta 0.25 {}, 0.35 {}, min modulus {:.6}, lemniscate residual {residual:.3e} (grid-passed)",
            inside.passes, outside.passes, conv.min_modulus
        ),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        ("certified max of G is 1/36", criterion_1),
        ("certified max of F is 1/36", criterion_2),
        ("exact expansion identities", criterion_3),
        ("edge and face tables", criterion_4),
        ("octic root isolation", criterion_5),
        ("Zalcman bound via the Hermitian criterion", criterion_6),
        ("extremal coefficients for n = 3", criterion_7),
        ("oracle sampling", criterion_8),
        ("majorization sampling", criterion_9),
        ("class membership and convolution", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (ok, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
        if !ok {
            failed += 1;
        }
        println!("criterion {:>2}: {} {name}: {detail}", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
