//! Construction and exact certification of Salem numbers `α` of degree `2t`
//! for which `α^n - 1` is a unit.
//!
//! The pipeline is: generate the fixed factors ([`trigpolys`]), choose a
//! construction for `(n, t)` ([`construct::dispatch`]), build candidate trace
//! polynomials for a range of parameters `a`, and certify each one
//! ([`salem::certify_trace`]) with exact root counting ([`roots`]), an
//! irreducibility witness ([`factor`]) and the resultant `Res(x^n - 1, S)`.

pub mod construct;
pub mod factor;
pub mod intpoly;
pub mod roots;
pub mod salem;
pub mod selftest;
pub mod serde_rational;
pub mod trigpolys;

pub use intpoly::{compose_trace_lift, gcd_over_rationals, resultant, trace_extract, IntPoly, Rational};
