//! Certification of Salem numbers `α` with `α^n - 1` a unit.
//!
//! A monic integer polynomial `T` of degree `t` is the trace polynomial of a
//! Salem number of degree `2t` exactly when it is irreducible, has one root
//! `β > 2` and its other `t - 1` roots in `(-2, 2)`. Then `α` is the larger
//! root of `x^2 - βx + 1` and its minimal polynomial is `S(x) = x^t T(x + 1/x)`.
//! `α^n - 1` is a unit iff `|Res(x^n - 1, S)| = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factor::{self, FactorError, IrreducibilityWitness, Verdict};
use crate::intpoly::{compose_trace_lift, resultant, trace_extract, IntPoly, PolyError, Rational};
use crate::roots::{self, IsolatingInterval, RootPattern, SturmChain};

pub const DEFAULT_PRECISION_DIGITS: u32 = 30;

/// Which construction produced a trace polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construction {
    #[serde(rename = "L3.1")]
    L31,
    #[serde(rename = "L3.2")]
    L32,
    #[serde(rename = "L3.3")]
    L33,
    #[serde(rename = "L3.4")]
    L34,
    #[serde(rename = "T1.1-odd")]
    T11Odd,
    #[serde(rename = "T1.1-even")]
    T11Even,
    #[serde(rename = "external")]
    External,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Construction::L31 => "L3.1",
            Construction::L32 => "L3.2",
            Construction::L33 => "L3.3",
            Construction::L34 => "L3.4",
            Construction::T11Odd => "T1.1-odd",
            Construction::T11Even => "T1.1-even",
            Construction::External => "external",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CertifyError {
    #[error("input is the zero or a constant polynomial")]
    Constant,
    #[error("trace polynomial is not monic")]
    NotMonic,
    #[error("min-poly input is not reciprocal")]
    NotReciprocal,
    #[error("min-poly input has odd degree {0}")]
    OddDegree(usize),
    #[error("trace polynomial is not separable")]
    NotSeparable,
    #[error(
        "root pattern is not Salem-like for t = {t}: {} below -2, {} in (-2,2), {} at +-2, {} above 2",
        pattern.below_minus_two, pattern.in_minus_two_two, pattern.at_endpoints, pattern.above_two
    )]
    RootPattern { t: usize, pattern: RootPattern },
    #[error("trace polynomial is reducible")]
    Reducible { witness: IrreducibilityWitness },
    #[error("irreducibility undecided: {0}")]
    IrreducibilityUndecided(FactorError),
    #[error("trace lift failed: {0}")]
    Lift(String),
    #[error("|Res(x^n - 1, S)| = |{value}| is not 1")]
    Resultant { value: BigInt },
    #[error("degree 2t = {} is below 4", 2 * t)]
    DegreeTooSmall { t: usize },
    #[error("could not approximate alpha: {0}")]
    Alpha(#[from] AlphaError),
}

impl CertifyError {
    /// Short name of the failed check, stable for reports.
    pub fn check_name(&self) -> &'static str {
        match self {
            CertifyError::Constant
            | CertifyError::NotMonic
            | CertifyError::NotReciprocal
            | CertifyError::OddDegree(_) => "input",
            CertifyError::NotSeparable => "separability",
            CertifyError::RootPattern { .. } => "root_pattern",
            CertifyError::Reducible { .. } | CertifyError::IrreducibilityUndecided(_) => {
                "irreducibility"
            }
            CertifyError::Lift(_) => "lift",
            CertifyError::Resultant { .. } => "resultant",
            CertifyError::DegreeTooSmall { .. } => "degree",
            CertifyError::Alpha(_) => "alpha",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlphaError {
    #[error("beta interval is not entirely above 2")]
    BetaNotAboveTwo,
    #[error("beta interval does not isolate a root")]
    NotIsolating,
}

/// Evidence that `α`, the Salem number with trace polynomial `trace_poly`, has
/// `α^n - 1` a unit. Everything needed to replay the checks is stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SalemCertificate {
    pub n: u64,
    pub t: usize,
    pub a: Option<i64>,
    pub construction: Construction,
    pub trace_poly: IntPoly,
    pub min_poly: IntPoly,
    pub resultant: i64,
    /// `α` truncated to `alpha_precision` decimals; the true value lies in
    /// `[alpha, alpha + 2 * 10^-alpha_precision)`.
    pub alpha: String,
    pub alpha_precision: u32,
    pub beta_interval: IsolatingInterval,
    pub irreducibility: IrreducibilityWitness,
    pub root_pattern: RootPattern,
}

/// `Res(x^n - 1, S)`.
pub fn unit_check(min_poly: &IntPoly, n: u64) -> BigInt {
    resultant(&IntPoly::x_pow_minus_one(n as usize), min_poly)
        .expect("x^n - 1 and a nonzero S are nonzero")
}

pub fn certify_trace(trace: &IntPoly, n: u64) -> Result<SalemCertificate, CertifyError> {
    certify_trace_with(trace, n, DEFAULT_PRECISION_DIGITS)
}

/// Runs the checks in order separability, root pattern, irreducibility, lift,
/// resultant, degree, and returns the first failure.
pub fn certify_trace_with(
    trace: &IntPoly,
    n: u64,
    precision_digits: u32,
) -> Result<SalemCertificate, CertifyError> {
    let t = match trace.degree() {
        None | Some(0) => return Err(CertifyError::Constant),
        Some(t) => t,
    };
    if !trace.is_monic() {
        return Err(CertifyError::NotMonic);
    }
    assert!(n >= 1, "exponent n must be positive");

    if !roots::is_separable(trace) {
        return Err(CertifyError::NotSeparable);
    }
    let pattern = roots::root_pattern(trace).expect("nonzero polynomial");
    if !pattern.is_salem_trace_shape(t) {
        return Err(CertifyError::RootPattern { t, pattern });
    }
    let witness = factor::is_irreducible(trace).map_err(CertifyError::IrreducibilityUndecided)?;
    if witness.verdict != Verdict::Irreducible {
        return Err(CertifyError::Reducible { witness });
    }
    let min_poly = compose_trace_lift(trace, t).map_err(|e| CertifyError::Lift(e.to_string()))?;
    if !min_poly.is_reciprocal() || min_poly.degree() != Some(2 * t) {
        return Err(CertifyError::Lift("lifted polynomial is not reciprocal of degree 2t".into()));
    }
    let res = unit_check(&min_poly, n);
    if !res.abs().is_one() {
        return Err(CertifyError::Resultant { value: res });
    }
    if t < 2 {
        return Err(CertifyError::DegreeTooSmall { t });
    }

    let chain = SturmChain::new(trace);
    let two = Rational::from_integer(2.into());
    let bound = Rational::from_integer(trace.root_bound());
    let mut above = roots::isolate_with(&chain, &two, &bound);
    debug_assert_eq!(above.len(), 1);
    let coarse = above.pop().expect("pattern guarantees one root above 2");
    let width = Rational::new(BigInt::one(), pow10(precision_digits));
    let beta_interval = roots::refine_with(&chain, &coarse, &width);
    let alpha = alpha_from_beta(trace, &beta_interval, precision_digits)?;

    Ok(SalemCertificate {
        n,
        t,
        a: None,
        construction: Construction::External,
        trace_poly: trace.clone(),
        min_poly,
        resultant: res.to_i64().unwrap(),
        alpha: alpha.decimal,
        alpha_precision: precision_digits,
        beta_interval,
        irreducibility: witness,
        root_pattern: pattern,
    })
}

/// Certifies a reciprocal polynomial `S` of degree `2t` by extracting its trace polynomial.
pub fn certify_min_poly(
    min_poly: &IntPoly,
    n: u64,
    precision_digits: u32,
) -> Result<SalemCertificate, CertifyError> {
    let trace = trace_extract(min_poly).map_err(|e| match e {
        PolyError::OddDegree(d) => CertifyError::OddDegree(d),
        PolyError::ZeroPolynomial => CertifyError::Constant,
        _ => CertifyError::NotReciprocal,
    })?;
    if !min_poly.is_monic() {
        return Err(CertifyError::NotMonic);
    }
    certify_trace_with(&trace, n, precision_digits)
}

/// Interval for `α = (β + sqrt(β^2 - 4))/2` of width at most `10^-(digits+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaApprox {
    /// `lo` truncated to `digits` decimals.
    pub decimal: String,
    pub lo: Rational,
    pub hi: Rational,
}

fn pow10(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

/// Bounds `(lo, hi)` on `sqrt(q)` with `hi - lo = 10^-m`.
fn sqrt_bounds(q: &Rational, m: u32) -> (Rational, Rational) {
    let scale = pow10(m);
    let scaled = (q * Rational::from_integer(&scale * &scale)).floor().to_integer();
    let s = if scaled.is_negative() { BigInt::zero() } else { scaled.sqrt() };
    (
        Rational::new(s.clone(), scale.clone()),
        Rational::new(s + 1, scale),
    )
}

/// Decimal expansion of a non-negative rational truncated to `digits` places.
pub fn truncate_decimal(x: &Rational, digits: u32) -> String {
    let scale = pow10(digits);
    let n = (x * Rational::from_integer(scale.clone())).floor().to_integer();
    let int_part = &n / &scale;
    let frac = (&n % &scale).to_string();
    if digits == 0 {
        return int_part.to_string();
    }
    format!("{int_part}.{frac:0>width$}", width = digits as usize)
}

pub fn alpha_from_beta(
    trace: &IntPoly,
    beta_iv: &IsolatingInterval,
    digits: u32,
) -> Result<AlphaApprox, AlphaError> {
    let two = Rational::from_integer(2.into());
    let four = Rational::from_integer(4.into());
    match &beta_iv.exact_root {
        Some(r) if *r <= two => return Err(AlphaError::BetaNotAboveTwo),
        None if beta_iv.lo < two => return Err(AlphaError::BetaNotAboveTwo),
        _ => {}
    }
    if !roots::isolates_one_root(trace, beta_iv) {
        return Err(AlphaError::NotIsolating);
    }
    let chain = SturmChain::new(trace);
    let target = Rational::new(BigInt::one(), pow10(digits + 1));
    let mut guard = digits + 3;
    loop {
        let width = Rational::new(BigInt::one(), pow10(guard));
        let iv = roots::refine_with(&chain, beta_iv, &width);
        let (blo, bhi) = match &iv.exact_root {
            Some(r) => (r.clone(), r.clone()),
            None => (iv.lo.clone(), iv.hi.clone()),
        };
        let (slo, _) = sqrt_bounds(&(&blo * &blo - &four), guard);
        let (_, shi) = sqrt_bounds(&(&bhi * &bhi - &four), guard);
        let lo = (&blo + slo) / &two;
        let hi = (&bhi + shi) / &two;
        if &hi - &lo <= target {
            return Ok(AlphaApprox { decimal: truncate_decimal(&lo, digits), lo, hi });
        }
        guard += 10;
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("certificate check `{check}` failed: {detail}")]
pub struct VerifyError {
    pub check: &'static str,
    pub detail: String,
}

fn fail(check: &'static str, detail: impl Into<String>) -> VerifyError {
    VerifyError { check, detail: detail.into() }
}

/// Replays a certificate from its stored data alone.
pub fn verify_certificate(cert: &SalemCertificate) -> Result<(), VerifyError> {
    let trace = &cert.trace_poly;
    if trace.degree() != Some(cert.t) || !trace.is_monic() {
        return Err(fail("input", "trace polynomial is not monic of degree t"));
    }
    if cert.t < 2 {
        return Err(fail("degree", "2t < 4"));
    }
    let lifted = compose_trace_lift(trace, cert.t).map_err(|e| fail("lift", e.to_string()))?;
    if lifted != cert.min_poly {
        return Err(fail("lift", "min_poly differs from the lift of trace_poly"));
    }
    let s = &cert.min_poly;
    if !s.is_reciprocal() || !s.is_monic() || !s.coeff(0).is_one() || s.degree() != Some(2 * cert.t) {
        return Err(fail("lift", "min_poly is not monic reciprocal of degree 2t"));
    }
    if !roots::is_separable(trace) {
        return Err(fail("separability", "trace polynomial has a repeated root"));
    }
    let pattern = roots::root_pattern(trace).map_err(|e| fail("root_pattern", e.to_string()))?;
    if pattern != cert.root_pattern || !pattern.is_salem_trace_shape(cert.t) {
        return Err(fail("root_pattern", format!("recomputed {pattern:?}")));
    }
    if cert.irreducibility.verdict != Verdict::Irreducible {
        return Err(fail("irreducibility", "verdict is not irreducible"));
    }
    cert.irreducibility
        .replay(trace)
        .map_err(|e| fail("irreducibility", e.to_string()))?;
    let res = unit_check(s, cert.n);
    if res != BigInt::from(cert.resultant) || !res.abs().is_one() {
        return Err(fail("resultant", format!("recomputed {res}, stored {}", cert.resultant)));
    }

    let two = Rational::from_integer(2.into());
    let iv = &cert.beta_interval;
    if iv.lo < two || !roots::isolates_one_root(trace, iv) {
        return Err(fail("beta_interval", "does not isolate a root above 2"));
    }
    check_alpha(trace, iv, &cert.alpha, cert.alpha_precision)
}

/// The decimal `α` must be consistent with `β`: `α + 1/α` over the error band
/// of the decimal has to meet the refined `β` interval.
fn check_alpha(trace: &IntPoly, iv: &IsolatingInterval, alpha: &str, digits: u32) -> Result<(), VerifyError> {
    let a = parse_decimal(alpha).ok_or_else(|| fail("alpha", format!("unparsable {alpha:?}")))?;
    if a <= Rational::one() {
        return Err(fail("alpha", "alpha must exceed 1"));
    }
    let eps = Rational::new(BigInt::from(2), pow10(digits));
    let f = |x: &Rational| x + x.recip();
    let (flo, fhi) = (f(&a), f(&(&a + &eps)));
    let refined = roots::refine(iv, trace, &Rational::new(BigInt::one(), pow10(digits)));
    let (blo, bhi) = match &refined.exact_root {
        Some(r) => (r.clone(), r.clone()),
        None => (refined.lo, refined.hi),
    };
    if fhi < blo || flo > bhi {
        return Err(fail("alpha", "alpha + 1/alpha misses the beta interval"));
    }
    Ok(())
}

pub fn parse_decimal(s: &str) -> Option<Rational> {
    let (int, frac) = s.trim().split_once('.').unwrap_or((s.trim(), ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let n: BigInt = digits.parse().ok()?;
    Some(Rational::new(n, pow10(frac.len() as u32)))
}
