//! Candidate trace polynomials `P(x) - 1` for the four `n ≡ 4 (mod 8)`
//! constructions and the general linear-factor construction, the dispatcher
//! choosing one from `(n, t)`, and the sweep over the parameter `a`.
//!
//! With `k >= 0` the fixed parts of `P` are
//!
//! | id   | fixed factors                         | `a`-factor        | degree        |
//! |------|---------------------------------------|-------------------|---------------|
//! | L3.1 | `C_n (x^2-4) t_{4k}`                  | `x^2 - ax + 1`    | `n/2 + 4k + 3`|
//! | L3.2 | `C_n (x^2-4) t_{2+4k}`                | `x^2 - ax + a-2`  | `n/2 + 4k + 5`|
//! | L3.3 | `C_n (x^2-4) C_5(x) t_{4k}`           | `x^2 - ax + a-2`  | `n/2 + 4k + 5`|
//! | L3.4 | `C_n (x^2-4) C_5(-x) t_{4k}`          | `x^2 - ax + a-2`  | `n/2 + 4k + 5`|
//! | T1.1 | `C_n (x-2) D` or `C_n (x^2-4) D`      | `x - a`           | `t`           |

use std::collections::HashSet;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intpoly::{gcd_over_rationals, IntPoly, Rational};
use crate::roots;
use crate::salem::{self, CertifyError, Construction, SalemCertificate};
use crate::trigpolys::{cheb, ctrace, rk_formula, rk_sturm, TraceFamilyIndex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypothesisError {
    #[error("n must be positive")]
    NZero,
    #[error("n ≢ 4 mod 8 (n = {0})")]
    NNotFourModEight(u64),
    #[error("n ≡ 0 mod 5 (n = {0})")]
    NDivisibleByFive(u64),
    #[error("t must be odd (t = {0})")]
    TEven(usize),
    #[error("t must be at least {min} (t = {t})")]
    TTooSmall { t: usize, min: usize },
    #[error("deg D must be {expected}, got {actual}")]
    DegreeOfD { expected: usize, actual: usize },
    #[error("D must be monic")]
    DNotMonic,
    #[error("roots of D must be distinct")]
    DNotSeparable,
    #[error("roots of D must lie in (-2, 2): {inside} of {degree} do")]
    DRootsOutside { inside: usize, degree: usize },
    #[error("D shares a root with C_n")]
    DSharesRootWithCn,
    #[error("r_{k} by formula is {formula} but Sturm counts {sturm}")]
    ParityMismatch { k: u64, formula: u64, sturm: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("parameter a must be at least 3, got {0}")]
    ASmall(i64),
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
}

/// The `a`-dependent factor of `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AFactorShape {
    /// `x^2 - a x + 1`
    Reciprocal,
    /// `x^2 - a x + (a - 2)`
    Shifted,
    /// `x - a`
    Linear,
}

impl AFactorShape {
    pub fn poly(self, a: i64) -> IntPoly {
        match self {
            AFactorShape::Reciprocal => IntPoly::from_i64s(&[1, -a, 1]),
            AFactorShape::Shifted => IntPoly::from_i64s(&[a - 2, -a, 1]),
            AFactorShape::Linear => IntPoly::from_i64s(&[-a, 1]),
        }
    }

    pub fn degree(self) -> usize {
        match self {
            AFactorShape::Linear => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedFactor {
    pub name: String,
    pub poly: IntPoly,
}

fn named(name: impl Into<String>, poly: IntPoly) -> NamedFactor {
    NamedFactor { name: name.into(), poly }
}

/// Root counts in `(0, 1)` behind the dispatch decision (for odd `l`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityEvidence {
    pub r_2_plus_4k: u64,
    pub r_4k: u64,
    pub cn_in_unit_interval: usize,
    pub cn_t_2_plus_4k_in_unit_interval: usize,
    /// Roots in `(0, 1)` of the fixed factors of the chosen plan.
    pub plan_factors_in_unit_interval: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub lemma: Construction,
    pub n: u64,
    pub t: usize,
    pub k: Option<u64>,
    pub l: Option<u64>,
    pub factors: Vec<NamedFactor>,
    pub a_factor: AFactorShape,
    pub parity_evidence: Option<ParityEvidence>,
}

impl ConstructionPlan {
    /// Product of the fixed factors.
    pub fn fixed_product(&self) -> IntPoly {
        self.factors.iter().map(|f| f.poly.clone()).product()
    }

    pub fn summary(&self) -> String {
        match self.k {
            Some(k) => format!("{} k={k}", self.lemma),
            None => self.lemma.to_string(),
        }
    }

    /// Interval `(lo, hi)` expected to hold the root above 2 for parameter `a`.
    pub fn beta_window(&self, a: i64) -> (i64, i64) {
        match self.a_factor {
            AFactorShape::Linear => (a, a + 1),
            _ => (a - 1, a),
        }
    }
}

fn x2_minus_4() -> IntPoly {
    IntPoly::from_i64s(&[-4, 0, 1])
}

fn unit_interval_count(p: &IntPoly) -> usize {
    if p.degree() == Some(0) {
        return 0;
    }
    roots::count_open(p, &Rational::from_integer(0.into()), &Rational::from_integer(1.into()))
}

/// Closed form for `r_k`, aborting when it disagrees with the Sturm count.
fn checked_rk(k: u64) -> Result<u64, HypothesisError> {
    let formula = rk_formula(k);
    let sturm = if k == 0 { 0 } else { rk_sturm(k) };
    if formula as usize != sturm {
        return Err(HypothesisError::ParityMismatch { k, formula, sturm });
    }
    Ok(formula)
}

/// Chooses the construction for `n ≡ 4 (mod 8)`, `5 ∤ n`, odd `t >= (n + 6)/2`.
pub fn dispatch(n: u64, t: usize) -> Result<ConstructionPlan, HypothesisError> {
    let idx = TraceFamilyIndex::new(n).map_err(|_| HypothesisError::NZero)?;
    if idx.mod8() != 4 {
        return Err(HypothesisError::NNotFourModEight(n));
    }
    if idx.divisible_by_5() {
        return Err(HypothesisError::NDivisibleByFive(n));
    }
    if t % 2 == 0 {
        return Err(HypothesisError::TEven(t));
    }
    let half_n = (n / 2) as usize;
    let min = half_n + 3;
    if t < min {
        return Err(HypothesisError::TTooSmall { t, min });
    }
    let l = ((t - min) / 2) as u64;
    let cn = ctrace(n).expect("n >= 1");

    if l % 2 == 0 {
        let k = l / 2;
        return Ok(ConstructionPlan {
            lemma: Construction::L31,
            n,
            t,
            k: Some(k),
            l: Some(l),
            factors: vec![
                named(format!("C_{n}"), cn),
                named("x^2-4", x2_minus_4()),
                named(format!("t_{}", 4 * k), cheb(4 * k)),
            ],
            a_factor: AFactorShape::Reciprocal,
            parity_evidence: None,
        });
    }

    let k = (l - 1) / 2;
    let r2 = checked_rk(2 + 4 * k)?;
    let r4 = checked_rk(4 * k)?;
    let t2 = cheb(2 + 4 * k);
    let cn_count = unit_interval_count(&cn);
    let joint = unit_interval_count(&(&cn * &t2));

    let (lemma, factors) = if joint % 2 == 0 {
        (
            Construction::L32,
            vec![
                named(format!("C_{n}"), cn),
                named("x^2-4", x2_minus_4()),
                named(format!("t_{}", 2 + 4 * k), t2),
            ],
        )
    } else {
        let c5 = ctrace(5).unwrap();
        let (lemma, companion) = if r2 % 2 == 1 || r4 % 2 == 0 {
            (Construction::L33, named("C_5(x)", c5))
        } else {
            (Construction::L34, named("C_5(-x)", c5.negate_variable()))
        };
        (
            lemma,
            vec![
                named(format!("C_{n}"), cn),
                named("x^2-4", x2_minus_4()),
                companion,
                named(format!("t_{}", 4 * k), cheb(4 * k)),
            ],
        )
    };
    let fixed: IntPoly = factors.iter().map(|f| f.poly.clone()).product();
    Ok(ConstructionPlan {
        lemma,
        n,
        t,
        k: Some(k),
        l: Some(l),
        factors,
        a_factor: AFactorShape::Shifted,
        parity_evidence: Some(ParityEvidence {
            r_2_plus_4k: r2,
            r_4k: r4,
            cn_in_unit_interval: cn_count,
            cn_t_2_plus_4k_in_unit_interval: joint,
            plan_factors_in_unit_interval: unit_interval_count(&fixed),
        }),
    })
}

/// Plan for the linear-factor construction `C_n (x-2) D (x-a) - 1` (odd `n`)
/// or `C_n (x^2-4) D (x-a) - 1` (even `n`), with all hypotheses on `D` checked.
pub fn plan_theorem11(n: u64, t: usize, d: &IntPoly) -> Result<ConstructionPlan, HypothesisError> {
    let idx = TraceFamilyIndex::new(n).map_err(|_| HypothesisError::NZero)?;
    let n_us = n as usize;
    let (lemma, min, edge) = if idx.is_odd() {
        (Construction::T11Odd, (n_us + 3) / 2, named("x-2", IntPoly::from_i64s(&[-2, 1])))
    } else {
        if t % 2 == 0 {
            return Err(HypothesisError::TEven(t));
        }
        (Construction::T11Even, (n_us + 4) / 2, named("x^2-4", x2_minus_4()))
    };
    if t < min {
        return Err(HypothesisError::TTooSmall { t, min });
    }
    let expected = t - min;
    let actual = d.degree().unwrap_or(0);
    if d.is_zero() || actual != expected {
        return Err(HypothesisError::DegreeOfD { expected, actual });
    }
    if !d.is_monic() {
        return Err(HypothesisError::DNotMonic);
    }
    let cn = ctrace(n).expect("n >= 1");
    if actual >= 1 {
        if !roots::is_separable(d) {
            return Err(HypothesisError::DNotSeparable);
        }
        let two = Rational::from_integer(2.into());
        let inside = roots::count_open(d, &-two.clone(), &two);
        if inside != actual {
            return Err(HypothesisError::DRootsOutside { inside, degree: actual });
        }
        if gcd_over_rationals(d, &cn).unwrap().degree() != Some(0) {
            return Err(HypothesisError::DSharesRootWithCn);
        }
    }
    Ok(ConstructionPlan {
        lemma,
        n,
        t,
        k: None,
        l: None,
        factors: vec![named(format!("C_{n}"), cn), edge, named("D", d.clone())],
        a_factor: AFactorShape::Linear,
        parity_evidence: None,
    })
}

/// `R = P - 1` for the plan at parameter `a`.
pub fn build_candidate(plan: &ConstructionPlan, a: i64) -> Result<IntPoly, BuildError> {
    if a < 3 {
        return Err(BuildError::ASmall(a));
    }
    let p = &plan.fixed_product() * &plan.a_factor.poly(a);
    let r = &p - &IntPoly::one();
    assert_eq!(r.degree(), Some(plan.t), "degree bookkeeping broken for {}", plan.summary());
    assert!(r.is_monic());
    Ok(r)
}

pub fn build_theorem11(n: u64, t: usize, d: &IntPoly, a: i64) -> Result<IntPoly, BuildError> {
    let plan = plan_theorem11(n, t, d)?;
    build_candidate(&plan, a)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchFailure {
    pub a: i64,
    pub check: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: u64,
    pub t: usize,
    pub plan: ConstructionPlan,
    /// First and last `a` examined.
    pub a_range: [i64; 2],
    pub certificates: Vec<SalemCertificate>,
    pub failures: Vec<SearchFailure>,
    pub distinct_salem_count: usize,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub a_min: i64,
    pub a_max: i64,
    pub want: usize,
    pub precision_digits: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            a_min: 3,
            a_max: 200,
            want: 5,
            precision_digits: salem::DEFAULT_PRECISION_DIGITS,
        }
    }
}

fn attempt(plan: &ConstructionPlan, a: i64, digits: u32) -> Result<SalemCertificate, SearchFailure> {
    let r = build_candidate(plan, a).map_err(|e| SearchFailure {
        a,
        check: "build".into(),
        reason: e.to_string(),
    })?;
    let mut cert = salem::certify_trace_with(&r, plan.n, digits).map_err(|e: CertifyError| SearchFailure {
        a,
        check: e.check_name().into(),
        reason: e.to_string(),
    })?;
    cert.a = Some(a);
    cert.construction = plan.lemma;
    Ok(cert)
}

/// Dispatches `(n, t)` and sweeps `a`.
pub fn search(n: u64, t: usize, opts: &SearchOptions) -> Result<SearchReport, HypothesisError> {
    let plan = dispatch(n, t)?;
    Ok(search_plan(&plan, opts))
}

/// Certifies candidates for ascending `a` until `want` certificates are found
/// or `a_max` is passed. Candidates are processed in parallel batches; the
/// report is identical to a sequential sweep.
pub fn search_plan(plan: &ConstructionPlan, opts: &SearchOptions) -> SearchReport {
    let a_min = opts.a_min.max(3);
    let batch = (rayon::current_num_threads() * 2).max(4) as i64;
    let mut certificates = Vec::new();
    let mut failures = Vec::new();
    let mut last = a_min - 1;
    let mut start = a_min;
    'sweep: while start <= opts.a_max && certificates.len() < opts.want {
        let end = (start + batch - 1).min(opts.a_max);
        let results: Vec<_> = (start..=end)
            .into_par_iter()
            .map(|a| (a, attempt(plan, a, opts.precision_digits)))
            .collect();
        for (a, res) in results {
            last = a;
            match res {
                Ok(cert) => {
                    certificates.push(cert);
                    if certificates.len() >= opts.want {
                        break 'sweep;
                    }
                }
                Err(f) => failures.push(f),
            }
        }
        start = end + 1;
    }
    let distinct_salem_count = certificates
        .iter()
        .map(|c| &c.min_poly)
        .collect::<HashSet<_>>()
        .len();
    SearchReport {
        n: plan.n,
        t: plan.t,
        plan: plan.clone(),
        a_range: [a_min, last.max(a_min)],
        certificates,
        failures,
        distinct_salem_count,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("report check failed for a = {a:?}: {detail}")]
pub struct ReportError {
    pub a: Option<i64>,
    pub detail: String,
}

/// Replays every certificate of a report and checks it came from the report's plan.
pub fn verify_report(report: &SearchReport) -> Result<(), ReportError> {
    for cert in &report.certificates {
        let err = |detail: String| ReportError { a: cert.a, detail };
        salem::verify_certificate(cert).map_err(|e| err(e.to_string()))?;
        if cert.n != report.n || cert.t != report.t || cert.construction != report.plan.lemma {
            return Err(err("certificate does not match report header".into()));
        }
        let a = cert.a.ok_or_else(|| err("certificate lacks parameter a".into()))?;
        let rebuilt = build_candidate(&report.plan, a).map_err(|e| err(e.to_string()))?;
        if rebuilt != cert.trace_poly {
            return Err(err("trace polynomial differs from the plan's candidate".into()));
        }
    }
    Ok(())
}

impl SearchReport {
    /// One CSV row per examined `a`: `a,verdict,detail` where detail is `α`
    /// to 15 decimals or the failure reason.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut rows: Vec<(i64, &str, String)> = self
            .certificates
            .iter()
            .map(|c| {
                let alpha = match c.alpha.split_once('.') {
                    Some((i, f)) => format!("{i}.{}", &f[..f.len().min(15)]),
                    None => c.alpha.clone(),
                };
                (c.a.unwrap_or_default(), "certified", alpha)
            })
            .chain(
                self.failures
                    .iter()
                    .map(|f| (f.a, "rejected", format!("{}: {}", f.check, f.reason))),
            )
            .collect();
        rows.sort_by_key(|r| r.0);
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["a", "verdict", "detail"])?;
        for (a, verdict, detail) in rows {
            w.write_record([a.to_string(), verdict.to_string(), detail])?;
        }
        w.flush()?;
        Ok(())
    }
}
