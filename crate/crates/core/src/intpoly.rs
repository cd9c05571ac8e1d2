//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so structural equality is polynomial equality. The text format used by the
//! rest of the crate is the comma-separated ascending coefficient list, e.g.
//! `"3,0,-4,0,1"` for `x^4 - 4x^2 + 3`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational number used for interval endpoints and evaluations.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("trace lift needs deg T = {expected}, got {actual:?}")]
    DegreeMismatch { expected: usize, actual: Option<usize> },
    #[error("polynomial is not reciprocal")]
    NotReciprocal,
    #[error("polynomial has odd degree {0}; trace extraction needs even degree")]
    OddDegree(usize),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Polynomial with `BigInt` coefficients, `coeffs[i]` multiplies `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * x^d`
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c.into();
        Self::new(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut p = Self::monomial(1, n);
        p.coeffs[0] -= 1;
        Self::new(p.coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Gcd of the coefficients (non-negative, zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        debug_assert!(self.coeffs.iter().all(|a| (a % c).is_zero()));
        IntPoly { coeffs: self.coeffs.iter().map(|a| a / c).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(-x)`
    pub fn negate_variable(&self) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `x^deg * p(1/x)`
    pub fn reversed(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// True iff `x^deg * p(1/x) = p`. The zero polynomial counts as reciprocal.
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let (num, den) = (x.numer(), x.denom());
        match self.degree() {
            None => Rational::zero(),
            Some(d) => Rational::new(self.eval_homogeneous(num, den), den.pow(d as u32)),
        }
    }

    /// `den^deg * p(num/den)`, an integer with the sign of `p(num/den)` when `den > 0`.
    fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign_of(&self.eval_homogeneous(x.numer(), x.denom()))
    }

    /// Sign of `p(x)` as `x -> +inf`.
    pub fn sign_at_pos_infinity(&self) -> i8 {
        self.leading_coeff().map_or(0, sign_of)
    }

    /// Sign of `p(x)` as `x -> -inf`.
    pub fn sign_at_neg_infinity(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) if d % 2 == 0 => self.sign_at_pos_infinity(),
            Some(_) => -self.sign_at_pos_infinity(),
        }
    }

    /// Upper bound on the absolute value of every complex root (Cauchy).
    pub fn root_bound(&self) -> BigInt {
        let Some(lc) = self.leading_coeff() else {
            return BigInt::one();
        };
        let lc = lc.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default();
        BigInt::one() + max.div_ceil(&lc)
    }

    /// Sum of squared coefficients.
    pub fn norm_squared(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self = q*d + r`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        self.pseudo_div_rem(d).1
    }

    /// Pseudo-division returning `(q, r)` with `lc(d)^(deg self - deg d + 1) * self = q*d + r`.
    pub fn pseudo_div_rem(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let Some(ds) = self.degree() else {
            return (IntPoly::zero(), IntPoly::zero());
        };
        if ds < dd {
            return (IntPoly::zero(), self.clone());
        }
        let lc = d.leading_coeff().unwrap().clone();
        let delta = ds - dd;
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); delta + 1];
        for i in (0..=delta).rev() {
            let top = r[i + dd].clone();
            for c in q.iter_mut() {
                *c *= &lc;
            }
            for c in r.iter_mut().take(i + dd) {
                *c *= &lc;
            }
            r[i + dd] = BigInt::zero();
            if !top.is_zero() {
                q[i] += &top;
                for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                    r[i + j] -= &top * dc;
                }
            }
        }
        r.truncate(dd);
        (IntPoly::new(q), IntPoly::new(r))
    }

    /// Division with remainder when `d` is monic (exact over the integers).
    pub fn div_rem_monic(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(d.is_monic(), "div_rem_monic needs a monic divisor");
        self.pseudo_div_rem(d)
    }

    /// Exact quotient over the integers, `None` if `d` does not divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let Some(ds) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if ds < dd {
            return None;
        }
        let lc = d.leading_coeff().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for i in (0..=ds - dd).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &quot * dc;
            }
            q[i] = quot;
        }
        if r.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// Human-readable form such as `x^5 - 4*x^3 + 3*x`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{mag}*{var}"));
            }
        }
        out
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(if negate_b { x - y } else { x + y });
    }
    IntPoly::new(out)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by coefficients from the top down.
impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]", self)
    }
}

impl FromStr for IntPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(PolyError::Parse { input: s.into(), reason: "empty input".into() });
        }
        let coeffs = cleaned
            .split(',')
            .map(|tok| {
                tok.parse::<BigInt>().map_err(|e| PolyError::Parse {
                    input: s.into(),
                    reason: format!("bad coefficient {tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Exact resultant by the subresultant pseudo-remainder sequence.
///
/// Uses the Sylvester-matrix convention `Res(p, q) = lc(p)^deg q * prod q(roots of p)`,
/// so `Res(p, q) = (-1)^(deg p * deg q) Res(q, p)`. A constant argument `c` gives
/// `c^(deg of the other)`.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt, PolyError> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(PolyError::ZeroPolynomial);
    };
    if dp == 0 {
        return Ok(p.coeffs[0].pow(dq as u32));
    }
    if dq == 0 {
        return Ok(q.coeffs[0].pow(dp as u32));
    }

    let ca = p.content();
    let cb = q.content();
    let mut a = p.div_scalar_exact(&ca);
    let mut b = q.div_scalar_exact(&cb);
    let scale = ca.pow(dq as u32) * cb.pow(dp as u32);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut sign = 1i8;

    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            sign = -sign;
        }
    }

    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &g * h.pow(delta as u32);
        b = r.div_scalar_exact(&divisor);
        g = a.leading_coeff().unwrap().clone();
        h = subresultant_h(&h, &g, delta);
        match b.degree() {
            None => return Ok(BigInt::zero()),
            Some(0) => {
                let da = a.degree().unwrap() as u32;
                let lb = b.coeffs[0].clone();
                let hh = lb.pow(da) / h.pow(da - 1);
                let res = scale * hh;
                return Ok(if sign < 0 { -res } else { res });
            }
            Some(_) => {}
        }
    }
}

/// `h^(1-delta) * g^delta`, exact.
fn subresultant_h(h: &BigInt, g: &BigInt, delta: usize) -> BigInt {
    match delta {
        0 => h.clone(),
        1 => g.clone(),
        d => g.pow(d as u32) / h.pow(d as u32 - 1),
    }
}

/// Gcd in `Q[x]`, returned as a primitive integer polynomial with positive
/// leading coefficient; the constant `1` when `p` and `q` share no root.
pub fn gcd_over_rationals(p: &IntPoly, q: &IntPoly) -> Result<IntPoly, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (mut a, mut b) = if p.degree() >= q.degree() {
        (p.primitive_part(), q.primitive_part())
    } else {
        (q.primitive_part(), p.primitive_part())
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if b.degree() == Some(0) {
            return Ok(IntPoly::one());
        }
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(b.primitive_part());
        }
        if r.degree() == Some(0) {
            return Ok(IntPoly::one());
        }
        a = b;
        let divisor = &g * h.pow(delta as u32);
        b = r.div_scalar_exact(&divisor);
        g = a.leading_coeff().unwrap().clone();
        h = subresultant_h(&h, &g, delta);
    }
}

/// `S(x) = x^t * T(x + 1/x)`; `T` must have degree exactly `t`.
pub fn compose_trace_lift(trace: &IntPoly, t: usize) -> Result<IntPoly, PolyError> {
    if trace.degree() != Some(t) {
        return Err(PolyError::DegreeMismatch { expected: t, actual: trace.degree() });
    }
    let x2p1 = IntPoly::from_i64s(&[1, 0, 1]);
    let mut power = IntPoly::one();
    let mut out = IntPoly::zero();
    for (j, c) in trace.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = &out + &power.shift(t - j).scale(c);
        }
        if j < t {
            power = &power * &x2p1;
        }
    }
    Ok(out)
}

/// Inverse of [`compose_trace_lift`]: for reciprocal `p` of degree `2m`,
/// returns `T` of degree `m` with `p = x^m T(x + 1/x)`.
pub fn trace_extract(p: &IntPoly) -> Result<IntPoly, PolyError> {
    let d = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if d % 2 == 1 {
        return Err(PolyError::OddDegree(d));
    }
    if !p.is_reciprocal() {
        return Err(PolyError::NotReciprocal);
    }
    let m = d / 2;
    let x2p1 = IntPoly::from_i64s(&[1, 0, 1]);
    let powers: Vec<IntPoly> = std::iter::successors(Some(IntPoly::one()), |q| Some(q * &x2p1))
        .take(m + 1)
        .collect();
    let mut rest = p.clone();
    let mut trace = vec![BigInt::zero(); m + 1];
    for j in (0..=m).rev() {
        let c = rest.coeff(m + j);
        if !c.is_zero() {
            rest = &rest - &powers[j].shift(m - j).scale(&c);
            trace[j] = c;
        }
    }
    if !rest.is_zero() {
        return Err(PolyError::NotReciprocal);
    }
    Ok(IntPoly::new(trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[0, 1]) + &p(&[-2, 0, 1]), p(&[-2, 1, 1]));
        let a = p(&[3, 0, -4, 0, 1]);
        assert_eq!(&a + &IntPoly::zero(), a);
        let z = &p(&[-1, 1]) + &p(&[1, -1]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.coeffs().len(), 0);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[-1, 0, 1]) * &p(&[0, -3, 0, 1]), p(&[0, 3, 0, -4, 0, 1]));
        let a = p(&[5, -2, 7]);
        assert_eq!(&a * &IntPoly::one(), a);
        assert_eq!(&p(&[-2, 1]) * &p(&[2, 1]), p(&[-4, 0, 1]));
        assert!((&a * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-4, 0, 1]).eval_rational(&q(2, 1)), q(0, 1));
        assert_eq!(p(&[-1, 1, 1]).eval_rational(&q(1, 2)), q(-1, 4));
        assert_eq!(IntPoly::zero().eval_rational(&q(7, 3)), q(0, 1));
        assert_eq!(p(&[-1, 1, 1]).sign_at(&q(1, 2)), -1);
        assert_eq!(p(&[-1, 1, 1]).sign_at(&q(-7, 3)), 1);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 3, 0, -4, 0, 1]).derivative(), p(&[3, 0, -12, 0, 5]));
        assert!(p(&[17]).derivative().is_zero());
        assert_eq!(p(&[1, -5, 1]).derivative(), p(&[-5, 2]));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])).unwrap(), BigInt::from(3));
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[1, -3, 1])).unwrap(), BigInt::from(-1));
        let s = p(&[1, -3, 1]);
        assert_eq!(resultant(&IntPoly::x_pow_minus_one(2), &s).unwrap(), BigInt::from(-5));
        assert_eq!(resultant(&p(&[0, 1]), &p(&[0, 1, 1])).unwrap(), BigInt::zero());
        assert_eq!(resultant(&IntPoly::zero(), &s), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn resultant_of_constants() {
        assert_eq!(resultant(&p(&[3]), &p(&[1, 0, 1])).unwrap(), BigInt::from(9));
        assert_eq!(resultant(&p(&[1, 0, 0, 1]), &p(&[-2])).unwrap(), BigInt::from(-8));
        assert_eq!(resultant(&p(&[5]), &p(&[7])).unwrap(), BigInt::one());
    }

    #[test]
    fn resultant_odd_degrees_sign() {
        // Res(x, x - 2) = lc(x) * (0 - 2) = -2; Res(x - 2, x) = 2
        assert_eq!(resultant(&p(&[0, 1]), &p(&[-2, 1])).unwrap(), BigInt::from(-2));
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[0, 1])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn gcd_examples() {
        let c12 = p(&[0, 3, 0, -4, 0, 1]);
        let t3 = p(&[0, -3, 0, 1]);
        assert_eq!(gcd_over_rationals(&c12, &t3).unwrap(), t3);
        assert_eq!(gcd_over_rationals(&c12, &IntPoly::one()).unwrap(), IntPoly::one());
        assert_eq!(gcd_over_rationals(&p(&[-2, 0, 1]), &c12).unwrap(), IntPoly::one());
        // content is stripped and the sign normalised
        let g = gcd_over_rationals(&p(&[-6, 0, 6]), &p(&[2, -2])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(gcd_over_rationals(&IntPoly::zero(), &c12), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn lift_examples() {
        assert_eq!(compose_trace_lift(&p(&[-3, 1]), 1).unwrap(), p(&[1, -3, 1]));
        assert_eq!(compose_trace_lift(&p(&[-2, 0, 1]), 2).unwrap(), p(&[1, 0, 0, 0, 1]));
        assert!(matches!(
            compose_trace_lift(&p(&[-2, 0, 1]), 3),
            Err(PolyError::DegreeMismatch { expected: 3, actual: Some(2) })
        ));
    }

    #[test]
    fn extract_examples() {
        assert_eq!(trace_extract(&p(&[1, 0, 1])).unwrap(), p(&[0, 1]));
        assert_eq!(trace_extract(&p(&[1, 0, 0, 0, 1])).unwrap(), p(&[-2, 0, 1]));
        assert_eq!(trace_extract(&p(&[1, 2, 1, 1])), Err(PolyError::OddDegree(3)));
        assert_eq!(trace_extract(&p(&[1, 2, 3])), Err(PolyError::NotReciprocal));
        assert_eq!(trace_extract(&p(&[4])).unwrap(), p(&[4]));
    }

    #[test]
    fn reciprocal_examples() {
        assert!(p(&[1, -3, 1]).is_reciprocal());
        assert!(!p(&[-2, 1]).is_reciprocal());
    }

    #[test]
    fn text_format() {
        let c = p(&[3, 0, -4, 0, 1]);
        assert_eq!(c.to_string(), "3,0,-4,0,1");
        assert_eq!(" 3, 0,-4,0, 1 ".parse::<IntPoly>().unwrap(), c);
        assert_eq!("1,2,0,0".parse::<IntPoly>().unwrap(), p(&[1, 2]));
        assert_eq!("0".parse::<IntPoly>().unwrap(), IntPoly::zero());
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert!("1,,2".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
        assert_eq!(c.pretty(), "x^4 - 4*x^2 + 3");
        assert_eq!(p(&[-1, -1]).pretty(), "-x - 1");
    }

    #[test]
    fn exact_division() {
        let c12 = p(&[0, 3, 0, -4, 0, 1]);
        assert_eq!(c12.div_exact(&p(&[0, -3, 0, 1])).unwrap(), p(&[-1, 0, 1]));
        assert!(c12.div_exact(&p(&[-2, 1])).is_none());
        assert!(p(&[1, 0, 2]).div_exact(&p(&[1, 2])).is_none());
        let (q, r) = p(&[1, 0, 0, 1]).pseudo_div_rem(&p(&[1, 2]));
        // 8 (x^3 + 1) = q (2x + 1) + r
        assert_eq!(&(&q * &p(&[1, 2])) + &r, p(&[8, 0, 0, 8]));
    }

    #[test]
    fn root_bound_contains_roots() {
        assert!(p(&[1, -3, 1]).root_bound() >= BigInt::from(3));
        assert_eq!(p(&[-4, 0, 1]).root_bound(), BigInt::from(5));
    }
}
