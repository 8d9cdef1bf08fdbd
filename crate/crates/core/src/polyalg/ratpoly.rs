use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::algebra::{Algebra, Rat};
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable of the owning polynomial.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial with exact rational coefficients over
/// named real variables.
///
/// No stored coefficient is zero and every exponent vector has one entry per
/// variable. Binary operations on polynomials with different variable lists
/// first unify the lists (left operand's order, then the right operand's new
/// names).
#[derive(Clone, Debug, Default)]
pub struct RatPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::constant_in(&[] as &[&str], c)
    }

    /// Constant polynomial carrying an explicit variable list.
    pub fn constant_in<S: AsRef<str>>(vars: &[S], c: Rat) -> Self {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars.len()], c);
        }
        Self { vars, terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rat::one());
        Self {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// The variables `names`, each as a polynomial over the full list, so
    /// that all of them share one variable ordering.
    pub fn vars_in<S: AsRef<str>>(names: &[S]) -> Vec<Self> {
        let vars: Vec<String> = names.iter().map(|v| v.as_ref().to_string()).collect();
        (0..vars.len())
            .map(|i| {
                let mut e = vec![0; vars.len()];
                e[i] = 1;
                let mut terms = BTreeMap::new();
                terms.insert(e, Rat::one());
                Self {
                    vars: vars.clone(),
                    terms,
                }
            })
            .collect()
    }

    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    got: e.len(),
                });
            }
            accumulate(&mut map, e, c);
        }
        Ok(Self { vars, terms: map })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Coefficient of the monomial given as `(name, exponent)` pairs;
    /// unnamed variables have exponent zero.
    pub fn coeff(&self, monomial: &[(&str, u32)]) -> Result<Rat> {
        let mut e = vec![0; self.vars.len()];
        for (name, k) in monomial {
            e[self.var_index(name)?] = *k;
        }
        Ok(self.terms.get(&e).cloned().unwrap_or_else(Rat::zero))
    }

    pub fn constant_value(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Maximum exponent of each variable.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d = vec![0; self.vars.len()];
        for e in self.terms.keys() {
            for (di, &ei) in d.iter_mut().zip(e) {
                *di = (*di).max(ei);
            }
        }
        d
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable that actually occurs.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars == self.vars {
            return Ok(self.clone());
        }
        let degrees = self.degrees();
        let mut map = Vec::with_capacity(self.vars.len());
        for (name, &deg) in self.vars.iter().zip(&degrees) {
            match vars.iter().position(|v| v == name) {
                Some(j) => map.push(Some(j)),
                None if deg == 0 => map.push(None),
                None => return Err(Error::UnknownVariable(name.clone())),
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; vars.len()];
                for (i, &k) in e.iter().enumerate() {
                    if let Some(j) = map[i] {
                        ne[j] = k;
                    }
                }
                (ne, c.clone())
            })
            .collect();
        Ok(Self { vars, terms })
    }

    /// Drops variables that do not occur in any term.
    pub fn compact(&self) -> Self {
        let degrees = self.degrees();
        let keep: Vec<&String> = self
            .vars
            .iter()
            .zip(&degrees)
            .filter(|(_, &d)| d > 0)
            .map(|(v, _)| v)
            .collect();
        self.with_vars(&keep).expect("kept every occurring variable")
    }

    fn unified(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (
            self.with_vars(&vars).expect("superset"),
            other.with_vars(&vars).expect("superset"),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant_in(&self.vars, Rat::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Self> {
        let i = self.var_index(var)?;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            accumulate(&mut terms, ne, c * Rat::from_integer(e[i].into()));
        }
        Ok(Self {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Exact value at `point` (one coordinate per variable, in order).
    pub fn eval_rational(&self, point: &[Rat]) -> Result<Rat> {
        self.eval_in(point)
    }

    pub fn eval_f64(&self, point: &[f64]) -> Result<f64> {
        self.eval_in(point)
    }

    /// Evaluates with each variable replaced by an element of any ring with a
    /// rational embedding (rationals, complex rationals, other polynomials).
    pub fn eval_in<A: Algebra>(&self, point: &[A]) -> Result<A> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let degrees = self.degrees();
        let powers: Vec<Vec<A>> = point
            .iter()
            .zip(&degrees)
            .map(|(x, &d)| {
                let mut pw = Vec::with_capacity(d as usize + 1);
                pw.push(A::one());
                for k in 1..=d as usize {
                    let next = pw[k - 1].clone() * x.clone();
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut acc = A::zero();
        for (e, c) in &self.terms {
            let mut term = A::from_rational(c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term * powers[i][k as usize].clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Substitutes `var := value` and removes the variable.
    pub fn substitute(&self, var: &str, value: &Rat) -> Result<Self> {
        let i = self.var_index(var)?;
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne.remove(i);
            let v = c * num_traits::pow(value.clone(), k as usize);
            accumulate(&mut terms, ne, v);
        }
        Ok(Self { vars, terms })
    }

    /// Substitutes polynomials for the named variables; unnamed variables
    /// stay as they are.
    pub fn substitute_polys(&self, subs: &[(&str, RatPoly)]) -> Result<Self> {
        for (name, _) in subs {
            self.var_index(name)?;
        }
        let point: Vec<RatPoly> = self
            .vars
            .iter()
            .map(|v| {
                subs.iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, p)| p.clone())
                    .unwrap_or_else(|| RatPoly::var(v))
            })
            .collect();
        self.eval_in(&point)
    }

    /// Line-oriented serialization: a `vars` header followed by one
    /// `e_1 .. e_n num den` record per term, sorted by exponent vector.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        out.push_str("vars");
        for v in &self.vars {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
        for (e, c) in &self.terms {
            for k in e {
                out.push_str(&k.to_string());
                out.push(' ');
            }
            out.push_str(&format!("{} {}\n", c.numer(), c.denom()));
        }
        out
    }

    pub fn from_records(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hl, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            reason: "missing `vars` header".into(),
        })?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("vars") {
            return Err(Error::Parse {
                line: hl + 1,
                reason: "expected `vars` header".into(),
            });
        }
        let vars: Vec<String> = fields.map(str::to_string).collect();
        let mut terms = Vec::new();
        for (ln, line) in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            let err = |reason: &str| Error::Parse {
                line: ln + 1,
                reason: reason.to_string(),
            };
            if f.len() != vars.len() + 2 {
                return Err(err("wrong field count"));
            }
            let e = f[..vars.len()]
                .iter()
                .map(|s| s.parse::<u32>().map_err(|_| err("bad exponent")))
                .collect::<Result<Vec<_>>>()?;
            let num: num_bigint::BigInt = f[vars.len()].parse().map_err(|_| err("bad numerator"))?;
            let den: num_bigint::BigInt =
                f[vars.len() + 1].parse().map_err(|_| err("bad denominator"))?;
            if den.is_zero() {
                return Err(err("zero denominator"));
            }
            terms.push((e, Rat::new(num, den)));
        }
        Self::from_terms(&vars, terms)
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, Rat>, e: Monomial, c: Rat) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl PartialEq for RatPoly {
    /// Polynomial equality, independent of variable ordering.
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl<'a> Add<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let (mut a, b) = self.unified(rhs);
        for (e, c) in b.terms {
            accumulate(&mut a.terms, e, c);
        }
        a
    }
}

impl<'a> Sub<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let (mut a, b) = self.unified(rhs);
        for (e, c) in b.terms {
            accumulate(&mut a.terms, e, -c);
        }
        a
    }
}

fn monomial_product(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl<'a> Mul<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        let (a, b) = self.unified(rhs);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                accumulate(&mut terms, monomial_product(ea, eb), ca * cb);
            }
        }
        RatPoly {
            vars: a.vars,
            terms,
        }
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

impl Zero for RatPoly {
    fn zero() -> Self {
        RatPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for RatPoly {
    fn one() -> Self {
        RatPoly::constant(Rat::one())
    }
}

impl Algebra for RatPoly {
    fn from_rational(r: &Rat) -> Self {
        RatPoly::constant(r.clone())
    }

    fn pow(&self, k: u32) -> Self {
        RatPoly::pow(self, k)
    }

    fn scale(&self, r: &Rat) -> Self {
        RatPoly::scale(self, r)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest-degree terms first reads more naturally
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let monomial: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{mag}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn xy() -> (RatPoly, RatPoly) {
        let v = RatPoly::vars_in(&["x", "y"]);
        (v[0].clone(), v[1].clone())
    }

    #[test]
    fn difference_of_squares() {
        let x = RatPoly::var("x");
        let one = RatPoly::constant(int(1));
        let prod = &(&x + &one) * &(&x - &one);
        let expect = &x.pow(2) - &one;
        assert_eq!(prod, expect);
        assert_eq!(prod.num_terms(), 2);
    }

    #[test]
    fn multiplying_by_zero_empties_the_term_map() {
        let (x, y) = xy();
        let p = &(&x * &y) + &x;
        let z = &p * &RatPoly::zero();
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn exact_coefficient_addition() {
        // (29/2359296) p^6 + (-3456/2359296) p^4 * p^2
        let p = RatPoly::var("p");
        let a = p.pow(6).scale(&rat(29, 2359296));
        let b = (&p.pow(4) * &p.pow(2)).scale(&rat(-3456, 2359296));
        let s = &a + &b;
        assert_eq!(s.coeff(&[("p", 6)]).unwrap(), rat(-3427, 2359296));
    }

    #[test]
    fn power_rule() {
        let (x, y) = xy();
        let f = &y.pow(2) * &x;
        let d = f.partial_derivative("y").unwrap();
        assert_eq!(d, (&x * &y).scale(&int(2)));
        assert!(matches!(
            f.partial_derivative("z"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn derivative_of_edge_polynomial() {
        let p = RatPoly::var("p");
        let c = |n: i64| RatPoly::constant(int(n));
        let s3 = (&(&(&p.pow(6).scale(&int(9)) - &p.pow(4).scale(&int(7920)))
            + &p.pow(2).scale(&int(22784)))
            + &c(36864))
            .scale(&rat(1, 2359296));
        let d = s3.partial_derivative("p").unwrap();
        let expect = (&(&p.pow(5).scale(&int(54)) - &p.pow(3).scale(&int(31680)))
            + &p.scale(&int(45568)))
            .scale(&rat(1, 2359296));
        assert_eq!(d, expect);
    }

    #[test]
    fn eval_checks_dimension() {
        let (x, y) = xy();
        let f = &x + &y;
        assert_eq!(f.eval_rational(&[int(2), rat(1, 2)]).unwrap(), rat(5, 2));
        assert_eq!(
            f.eval_rational(&[int(1)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn unification_is_by_name() {
        let a = RatPoly::var("x");
        let b = RatPoly::var("y");
        let s = &a + &b;
        assert_eq!(s.vars(), &["x".to_string(), "y".to_string()]);
        let t = &b + &a;
        assert_eq!(s, t);
    }

    #[test]
    fn substitution_removes_the_variable() {
        let (x, y) = xy();
        let f = &(&x.pow(2) * &y) + &y;
        let g = f.substitute("x", &int(3)).unwrap();
        assert_eq!(g.vars(), &["y".to_string()]);
        assert_eq!(g, RatPoly::var("y").scale(&int(10)));
    }

    #[test]
    fn records_round_trip() {
        let (x, y) = xy();
        let f = &(&x.pow(3).scale(&rat(-7, 12)) * &y) + &RatPoly::constant(rat(1, 36));
        let text = f.to_records();
        assert!(text.starts_with("vars x y\n"));
        let g = RatPoly::from_records(&text).unwrap();
        assert_eq!(f, g);
        assert_eq!(g.vars(), f.vars());
        assert!(RatPoly::from_records("vars x\n1 2\n").is_err());
        assert!(RatPoly::from_records("1 1 1\n").is_err());
    }

    #[test]
    fn display_is_readable() {
        let (x, y) = xy();
        let f = &(&x.pow(2) - &y.scale(&rat(1, 2))) + &RatPoly::constant(int(3));
        assert_eq!(f.to_string(), "x^2 - 1/2*y + 3");
    }
}
