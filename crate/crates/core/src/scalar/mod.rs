//! Exact scalars: ℚ, polynomials in δ, and rational functions in δ.

mod parse;
mod poly;
mod ratfunc;
mod rational;

pub use parse::{identifiers, parse_scalar, parse_scalar_with, Env};
pub use poly::DeltaPoly;
pub use ratfunc::Scalar;
pub use rational::Rational;

/// Exact gcd of two polynomials in δ, monic; `poly_gcd(0, 0) = 0`.
pub fn poly_gcd(p: &DeltaPoly, q: &DeltaPoly) -> DeltaPoly {
    p.gcd(q)
}

/// Exact substitution δ = d.
pub fn evaluate_at_delta(s: &Scalar, d: &Rational) -> crate::Result<Rational> {
    s.eval_at(d)
}
