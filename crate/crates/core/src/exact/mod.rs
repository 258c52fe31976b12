//! Exact arithmetic: rationals, trivariate polynomials, the Legendre ring
//! `Q[t, s] / (s^2 - (1 - t^2))`, and closed-form integrals over the unit
//! ball and sphere.

mod integrals;
mod poly;
mod rational;
mod tspoly;

pub use integrals::{ball_inner, ball_monomial_integral, sphere_monomial_integral, PiRational};
pub use poly::{monomials_of_degree, rational_to_f64, Monomial, TriPoly};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use tspoly::{TsError, TsPoly};

#[cfg(test)]
pub(crate) use poly::tests as tests_support;
