//! Exact sparse multivariate polynomials over the rationals, rational
//! intervals and boxes, and Bernstein-form range enclosures.

mod bernstein;
mod complex;
mod interval;
mod ratpoly;

pub use bernstein::{bernstein_enclosure, BernsteinPatch};
pub use complex::ComplexPoly;
pub use interval::{BoxRegion, RatInterval};
pub use ratpoly::{Monomial, RatPoly};

use crate::error::Result;

/// Arithmetic kinds accepted by [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &RatPoly, b: &RatPoly, kind: ArithKind) -> RatPoly {
    match kind {
        ArithKind::Add => a + b,
        ArithKind::Sub => a - b,
        ArithKind::Mul => a * b,
    }
}

pub fn partial_derivative(f: &RatPoly, var: &str) -> Result<RatPoly> {
    f.partial_derivative(var)
}

pub fn eval_rational(f: &RatPoly, point: &[crate::algebra::Rat]) -> Result<crate::algebra::Rat> {
    f.eval_rational(point)
}
