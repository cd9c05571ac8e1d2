//! Real-root counting and isolation with Sturm sequences over exact rationals.
//!
//! Counts follow the half-open convention `(lo, hi]`: a root sitting exactly at
//! `lo` is excluded and one at `hi` is included. The `count_open` and
//! `count_closed` wrappers adjust with explicit endpoint evaluation.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intpoly::{gcd_over_rationals, IntPoly, Rational};
use crate::serde_rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("polynomial is not separable")]
    NotSeparable,
    #[error("zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("empty interval: lo must be strictly below hi")]
    EmptyInterval,
}

/// Signed remainder chain `p, p', -rem(p, p'), ...` with primitive normalisation.
#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut polys = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return SturmChain { polys };
        }
        polys.push(d);
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            if b.degree() == Some(0) {
                break;
            }
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let mut r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // pseudo_rem multiplies by lc(b)^(delta+1); undo a negative factor
            if b.leading_coeff().unwrap().is_negative() && delta % 2 == 0 {
                r = -r;
            }
            let c = r.content();
            polys.push(-r.div_scalar_exact(&c));
        }
        SturmChain { polys }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: Option<&Rational>, positive_side: bool) -> usize {
        match x {
            Some(x) => Self::variations(self.polys.iter().map(|p| p.sign_at(x))),
            None if positive_side => {
                Self::variations(self.polys.iter().map(IntPoly::sign_at_pos_infinity))
            }
            None => Self::variations(self.polys.iter().map(IntPoly::sign_at_neg_infinity)),
        }
    }

    /// Distinct real roots in `(lo, hi]`; `None` stands for `-inf` / `+inf`.
    pub fn count(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
        let vlo = self.variations_at(lo, false);
        let vhi = self.variations_at(hi, true);
        vlo.saturating_sub(vhi)
    }

    pub fn poly(&self) -> &IntPoly {
        &self.polys[0]
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPoly, lo: &Rational, hi: &Rational) -> Result<usize, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(RootError::EmptyInterval);
    }
    Ok(SturmChain::new(p).count(Some(lo), Some(hi)))
}

/// Distinct roots in the open interval `(lo, hi)`.
pub fn count_open(p: &IntPoly, lo: &Rational, hi: &Rational) -> usize {
    let chain = SturmChain::new(p);
    count_open_with(&chain, lo, hi)
}

fn count_open_with(chain: &SturmChain, lo: &Rational, hi: &Rational) -> usize {
    let c = chain.count(Some(lo), Some(hi));
    c - usize::from(chain.poly().sign_at(hi) == 0)
}

/// Distinct roots in the closed interval `[lo, hi]`.
pub fn count_closed(p: &IntPoly, lo: &Rational, hi: &Rational) -> usize {
    let chain = SturmChain::new(p);
    chain.count(Some(lo), Some(hi)) + usize::from(p.sign_at(lo) == 0)
}

pub fn is_separable(p: &IntPoly) -> bool {
    match p.degree() {
        None => false,
        Some(0) => true,
        Some(_) => gcd_over_rationals(p, &p.derivative()).is_ok_and(|g| g.degree() == Some(0)),
    }
}

/// Rational interval `(lo, hi]` holding exactly one root; `exact_root` is set
/// when that root is rational and was hit exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational")]
    pub hi: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "serde_rational::option")]
    pub exact_root: Option<Rational>,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Midpoint, or the exact root when known.
    pub fn approx(&self) -> Rational {
        self.exact_root.clone().unwrap_or_else(|| (&self.lo + &self.hi) / Rational::from_integer(2.into()))
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.approx())
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    // scale to keep both parts inside f64 range
    let num = r.numer();
    let den = r.denom();
    let shift = (num.bits().max(den.bits())).saturating_sub(900);
    let n: f64 = (num >> shift).to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = (den >> shift).to_string().parse().unwrap_or(f64::NAN);
    n / d
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// Brings an interval holding one root into the form where either the root is
/// exact or `p(lo)` and `p(hi)` have opposite nonzero signs.
fn normalize(chain: &SturmChain, mut iv: IsolatingInterval) -> IsolatingInterval {
    let p = chain.poly();
    if iv.exact_root.is_some() {
        return iv;
    }
    if p.sign_at(&iv.hi) == 0 {
        iv.exact_root = Some(iv.hi.clone());
        return iv;
    }
    while p.sign_at(&iv.lo) == 0 {
        let mid = (&iv.lo + &iv.hi) * half();
        if p.sign_at(&mid) == 0 {
            iv.hi = mid.clone();
            iv.exact_root = Some(mid);
            return iv;
        }
        if chain.count(Some(&iv.lo), Some(&mid)) == 1 {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    iv
}

/// Isolates every distinct root of a separable `p` in `(lo, hi]`, ascending.
pub fn isolate_roots(
    p: &IntPoly,
    lo: &Rational,
    hi: &Rational,
) -> Result<Vec<IsolatingInterval>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(RootError::EmptyInterval);
    }
    if !is_separable(p) {
        return Err(RootError::NotSeparable);
    }
    let chain = SturmChain::new(p);
    Ok(isolate_with(&chain, lo, hi))
}

pub(crate) fn isolate_with(chain: &SturmChain, lo: &Rational, hi: &Rational) -> Vec<IsolatingInterval> {
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), chain.count(Some(lo), Some(hi)))];
    // depth-first, right half pushed first so output comes out ascending
    while let Some((a, b, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(normalize(chain, IsolatingInterval { lo: a, hi: b, exact_root: None })),
            _ => {
                let mid = (&a + &b) * half();
                let left = chain.count(Some(&a), Some(&mid));
                stack.push((mid.clone(), b, n - left));
                stack.push((a, mid, left));
            }
        }
    }
    out
}

/// Isolates all real roots of a separable `p`.
pub fn isolate_all(p: &IntPoly) -> Result<Vec<IsolatingInterval>, RootError> {
    let b = Rational::from_integer(p.root_bound());
    isolate_roots(p, &-b.clone(), &b)
}

/// Shrinks `iv` by bisection until its width is at most `width`, keeping the same root.
pub fn refine(iv: &IsolatingInterval, p: &IntPoly, width: &Rational) -> IsolatingInterval {
    let chain = SturmChain::new(p);
    refine_with(&chain, iv, width)
}

pub(crate) fn refine_with(chain: &SturmChain, iv: &IsolatingInterval, width: &Rational) -> IsolatingInterval {
    assert!(width.is_positive(), "refinement width must be positive");
    let p = chain.poly();
    let mut iv = normalize(chain, iv.clone());
    let lo_sign = p.sign_at(&iv.lo);
    while iv.width() > *width {
        if let Some(root) = &iv.exact_root {
            iv.hi = root.clone();
            iv.lo = root - width;
            break;
        }
        let mid = (&iv.lo + &iv.hi) * half();
        let s = p.sign_at(&mid);
        if s == 0 {
            iv.hi = mid.clone();
            iv.exact_root = Some(mid);
        } else if s == lo_sign {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    iv
}

/// Real-root classification relative to the points `-2, 0, 1, 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPattern {
    pub below_minus_two: usize,
    pub in_minus_two_two: usize,
    pub at_endpoints: usize,
    pub above_two: usize,
    pub in_zero_one: usize,
    pub total_real: usize,
    pub separable: bool,
}

impl RootPattern {
    /// Shape of a Salem trace polynomial of degree `t`: one root above 2, the rest in `(-2, 2)`.
    pub fn is_salem_trace_shape(&self, t: usize) -> bool {
        self.separable
            && self.above_two == 1
            && self.in_minus_two_two + 1 == t
            && self.at_endpoints == 0
            && self.below_minus_two == 0
    }
}

pub fn root_pattern(p: &IntPoly) -> Result<RootPattern, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let chain = SturmChain::new(p);
    let int = |v: i64| Rational::from_integer(v.into());
    let (m2, zero, one, two) = (int(-2), int(0), int(1), int(2));
    let at_m2 = usize::from(p.sign_at(&m2) == 0);
    let at_2 = usize::from(p.sign_at(&two) == 0);
    let below = chain.count(None, Some(&m2)) - at_m2;
    let inside = chain.count(Some(&m2), Some(&two)) - at_2;
    let above = chain.count(Some(&two), None);
    Ok(RootPattern {
        below_minus_two: below,
        in_minus_two_two: inside,
        at_endpoints: at_m2 + at_2,
        above_two: above,
        in_zero_one: count_open_with(&chain, &zero, &one),
        total_real: chain.count(None, None),
        separable: is_separable(p),
    })
}

/// `true` when `p` has exactly one root in `(lo, hi]` (and it equals `exact_root` if set).
pub fn isolates_one_root(p: &IntPoly, iv: &IsolatingInterval) -> bool {
    if iv.lo >= iv.hi || p.is_zero() {
        return false;
    }
    if let Some(r) = &iv.exact_root {
        if p.sign_at(r) != 0 || *r <= iv.lo || *r > iv.hi {
            return false;
        }
    }
    SturmChain::new(p).count(Some(&iv.lo), Some(&iv.hi)) == 1
}
