//! Irreducibility testing for monic squarefree integer polynomials.
//!
//! A cheap modular degree filter runs first: the factor degrees of `f mod p`
//! constrain the degrees of any integer factor, so if the achievable subset
//! sums over several primes only agree on `{0, deg f}`, `f` is irreducible.
//! When the filter is inconclusive we run Zassenhaus: factor modulo one good
//! prime, Hensel-lift past a Mignotte-style coefficient bound, and try subset
//! products as true factors.

mod gf;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intpoly::IntPoly;
use gf::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("zero or constant polynomial")]
    Constant,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("recombination gave up after {0} subsets")]
    Inconclusive(u64),
}

/// Knobs for [`is_irreducible_with`].
#[derive(Debug, Clone)]
pub struct FactorConfig {
    /// Maximum number of primes used by the degree filter.
    pub filter_primes: usize,
    /// Recombination stops with [`FactorError::Inconclusive`] past this many subsets.
    pub max_subsets: u64,
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig { filter_primes: 5, max_subsets: 1 << 24, seed: 0x5a1e }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Irreducible,
    Reducible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ModularDegreeFilter,
    ExactFactorization,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessDetail {
    /// Factor degrees of `f mod p` for each prime used.
    DegreeFilter { primes: Vec<u64>, degree_multisets: Vec<Vec<usize>> },
    Factorization {
        prime: u64,
        /// Lifting modulus is `prime^modulus_exponent`.
        modulus_exponent: u32,
        /// Bound on the absolute value of any coefficient of a factor.
        coefficient_bound: String,
        modular_factor_degrees: Vec<usize>,
        subsets_tried: u64,
        factor: Option<IntPoly>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityWitness {
    pub verdict: Verdict,
    pub method: Method,
    pub detail: WitnessDetail,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("witness replay failed: {0}")]
pub struct ReplayError(pub String);

impl IrreducibilityWitness {
    /// Re-checks the witness against `p`.
    ///
    /// A reducible verdict costs one exact division, a filter verdict only the
    /// subset-sum intersection. An irreducible verdict from exact
    /// factorisation has no short certificate and is re-derived.
    pub fn replay(&self, p: &IntPoly) -> Result<(), ReplayError> {
        let deg = p.degree().ok_or_else(|| ReplayError("zero polynomial".into()))?;
        match (&self.verdict, &self.detail) {
            (Verdict::Irreducible, WitnessDetail::DegreeFilter { primes, degree_multisets }) => {
                if primes.len() != degree_multisets.len() {
                    return Err(ReplayError("primes and degree lists differ in length".into()));
                }
                for (q, ds) in primes.iter().zip(degree_multisets) {
                    if ds.iter().sum::<usize>() != deg {
                        return Err(ReplayError(format!("degrees mod {q} do not sum to {deg}")));
                    }
                }
                let common = common_subset_sums(deg, degree_multisets);
                if common == [0, deg] {
                    Ok(())
                } else {
                    Err(ReplayError(format!("common subset sums {common:?} exceed {{0, {deg}}}")))
                }
            }
            (Verdict::Reducible, WitnessDetail::Factorization { factor: Some(g), .. }) => {
                let dg = g.degree().unwrap_or(0);
                if dg == 0 || dg >= deg {
                    return Err(ReplayError("stored factor is trivial".into()));
                }
                p.div_exact(g)
                    .map(|_| ())
                    .ok_or_else(|| ReplayError("stored factor does not divide".into()))
            }
            (Verdict::Irreducible, WitnessDetail::Factorization { factor: None, .. }) => {
                match find_factor(p, &FactorConfig::default()) {
                    Ok(None) => Ok(()),
                    Ok(Some(g)) => Err(ReplayError(format!("found factor {g}"))),
                    Err(e) => Err(ReplayError(e.to_string())),
                }
            }
            _ => Err(ReplayError("verdict and detail are inconsistent".into())),
        }
    }
}

/// Subset sums achievable in every multiset, ascending.
fn common_subset_sums(deg: usize, multisets: &[Vec<usize>]) -> Vec<usize> {
    let mut common = vec![true; deg + 1];
    for ds in multisets {
        let mut reach = vec![false; deg + 1];
        reach[0] = true;
        for &d in ds {
            for s in (d..=deg).rev() {
                if reach[s - d] {
                    reach[s] = true;
                }
            }
        }
        for (c, r) in common.iter_mut().zip(reach) {
            *c &= r;
        }
    }
    common.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| i).collect()
}

fn validate(p: &IntPoly) -> Result<usize, FactorError> {
    let deg = match p.degree() {
        None | Some(0) => return Err(FactorError::Constant),
        Some(d) => d,
    };
    if !p.is_monic() {
        return Err(FactorError::NotMonic);
    }
    if !crate::roots::is_separable(p) {
        return Err(FactorError::NotSquarefree);
    }
    Ok(deg)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Odd primes at which `p` stays squarefree, with their distinct-degree splittings.
/// A prime together with the distinct-degree factorisation of `f mod p`.
type PrimeSplit = (u64, Vec<(usize, gf::Poly)>);

fn good_primes(p: &IntPoly, count: usize) -> Vec<PrimeSplit> {
    (3u64..)
        .filter(|&q| is_prime(q))
        .filter_map(|q| {
            let field = Field::new(q);
            let fq = field.reduce(p);
            field.is_squarefree(&fq).then(|| (q, field.distinct_degree(&fq)))
        })
        .take(count)
        .collect()
}

fn degree_multiset(ddf: &[(usize, Vec<u64>)]) -> Vec<usize> {
    ddf.iter()
        .flat_map(|(d, g)| std::iter::repeat_n(*d, gf::degree(g).unwrap() / d))
        .collect()
}

pub fn is_irreducible(p: &IntPoly) -> Result<IrreducibilityWitness, FactorError> {
    is_irreducible_with(p, &FactorConfig::default())
}

pub fn is_irreducible_with(
    p: &IntPoly,
    config: &FactorConfig,
) -> Result<IrreducibilityWitness, FactorError> {
    let deg = validate(p)?;
    let mut primes = Vec::new();
    let mut multisets = Vec::new();
    for (q, ddf) in good_primes(p, config.filter_primes) {
        primes.push(q);
        multisets.push(degree_multiset(&ddf));
        if common_subset_sums(deg, &multisets) == [0, deg] {
            return Ok(IrreducibilityWitness {
                verdict: Verdict::Irreducible,
                method: Method::ModularDegreeFilter,
                detail: WitnessDetail::DegreeFilter { primes, degree_multisets: multisets },
            });
        }
    }
    let outcome = zassenhaus(p, config)?;
    Ok(IrreducibilityWitness {
        verdict: if outcome.factor.is_some() { Verdict::Reducible } else { Verdict::Irreducible },
        method: Method::ExactFactorization,
        detail: WitnessDetail::Factorization {
            prime: outcome.prime,
            modulus_exponent: outcome.exponent,
            coefficient_bound: outcome.bound.to_string(),
            modular_factor_degrees: outcome.modular_degrees,
            subsets_tried: outcome.subsets_tried,
            factor: outcome.factor,
        },
    })
}

/// Zassenhaus search for a proper factor, skipping the degree filter.
pub fn find_factor(p: &IntPoly, config: &FactorConfig) -> Result<Option<IntPoly>, FactorError> {
    validate(p)?;
    Ok(zassenhaus(p, config)?.factor)
}

struct ZassenhausOutcome {
    prime: u64,
    exponent: u32,
    bound: BigInt,
    modular_degrees: Vec<usize>,
    subsets_tried: u64,
    factor: Option<IntPoly>,
}

fn zassenhaus(p: &IntPoly, config: &FactorConfig) -> Result<ZassenhausOutcome, FactorError> {
    let deg = p.degree().unwrap();
    let candidates = good_primes(p, config.filter_primes.max(1));
    let (q, ddf) = candidates
        .into_iter()
        .min_by_key(|(_, ddf)| degree_multiset(ddf).len())
        .expect("a squarefree polynomial has good primes");
    let field = Field::new(q);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ q);
    let mut modular: Vec<Vec<u64>> = ddf
        .iter()
        .flat_map(|(d, g)| field.equal_degree(g, *d, &mut rng))
        .collect();
    modular.sort();
    let modular_degrees: Vec<usize> = modular.iter().map(|g| gf::degree(g).unwrap()).collect();

    // any factor of degree <= deg has coefficients bounded by 2^deg * |p|_2
    let bound = (BigInt::one() << deg) * (p.norm_squared().sqrt() + BigInt::one());
    let target = &bound * 2 + 1;
    let mut modulus = BigInt::from(q);
    let mut exponent = 1u32;
    while modulus < target {
        modulus = &modulus * &modulus;
        exponent *= 2;
    }

    let mut outcome = ZassenhausOutcome {
        prime: q,
        exponent,
        bound,
        modular_degrees,
        subsets_tried: 0,
        factor: None,
    };
    let r = modular.len();
    if r == 1 {
        return Ok(outcome);
    }
    let lifted = multifactor_lift(p, &modular, field, &modulus);
    let constant = p.coeff(0);
    for size in 1..=r / 2 {
        for subset in (0..r).combinations(size) {
            outcome.subsets_tried += 1;
            if outcome.subsets_tried > config.max_subsets {
                return Err(FactorError::Inconclusive(config.max_subsets));
            }
            let prod = subset
                .iter()
                .fold(IntPoly::one(), |acc, &i| reduce_mod(&(&acc * &lifted[i]), &modulus));
            let cand = symmetric_mod(&prod, &modulus);
            let c0 = cand.coeff(0);
            if !constant.is_zero() && (c0.is_zero() || !(&constant % &c0).is_zero()) {
                continue;
            }
            if p.div_exact(&cand).is_some() {
                outcome.factor = Some(cand);
                return Ok(outcome);
            }
        }
    }
    Ok(outcome)
}

fn reduce_mod(p: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(p.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric_mod(p: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        p.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lifts `f ≡ ∏ factors (mod q)` to a factorisation modulo `modulus = q^(2^i)`.
fn multifactor_lift(f: &IntPoly, factors: &[Vec<u64>], field: Field, modulus: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![reduce_mod(f, modulus)];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[Vec<u64>]| fs.iter().fold(vec![1u64], |acc, g| field.mul(&acc, g));
    let g = prod(&factors[..mid]);
    let h = prod(&factors[mid..]);
    let (big_g, big_h) = hensel_pair(f, &g, &h, field, modulus);
    let mut out = multifactor_lift(&big_g, &factors[..mid], field, modulus);
    out.extend(multifactor_lift(&big_h, &factors[mid..], field, modulus));
    out
}

/// Quadratic Hensel lifting of `f ≡ g h (mod q)` with `g, h` monic and coprime.
fn hensel_pair(
    f: &IntPoly,
    g: &[u64],
    h: &[u64],
    field: Field,
    modulus: &BigInt,
) -> (IntPoly, IntPoly) {
    let (one, s, _) = field.ext_gcd(g, h);
    debug_assert_eq!(one, vec![1]);
    // normalise so deg s < deg h and deg t < deg g
    let s = field.rem(&s, h);
    let t = field.div_rem(&field.sub(&[1], &field.mul(&s, g)), h).0;

    let mut m = BigInt::from(field.p);
    let (mut g, mut h, mut s, mut t) = (field.lift(g), field.lift(h), field.lift(&s), field.lift(&t));
    let one = IntPoly::one();
    while &m < modulus {
        let m2 = &m * &m;
        let md = |p: &IntPoly| reduce_mod(p, &m2);
        let e = md(&(f - &(&g * &h)));
        let (q, r) = md(&(&s * &e)).div_rem_monic(&h);
        let g2 = md(&(&(&g + &(&t * &e)) + &(&q * &g)));
        let h2 = md(&(&h + &r));
        let b = md(&(&(&(&s * &g2) + &(&t * &h2)) - &one));
        let (c, d) = md(&(&s * &b)).div_rem_monic(&h2);
        let s2 = md(&(&s - &d));
        let t2 = md(&(&(&t - &(&t * &b)) - &(&c * &g2)));
        (g, h, s, t) = (g2, h2, s2, t2);
        m = m2;
    }
    (g, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigpolys::{cheb, ctrace};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn reciprocal_quadratic_is_irreducible() {
        let w = is_irreducible(&p(&[1, -5, 1])).unwrap();
        assert_eq!(w.verdict, Verdict::Irreducible);
        w.replay(&p(&[1, -5, 1])).unwrap();
    }

    #[test]
    fn difference_of_squares_is_reducible() {
        let f = p(&[-1, 0, 1]);
        let w = is_irreducible(&f).unwrap();
        assert_eq!(w.verdict, Verdict::Reducible);
        let WitnessDetail::Factorization { factor: Some(g), .. } = &w.detail else {
            panic!("expected a factor")
        };
        assert!(*g == p(&[-1, 1]) || *g == p(&[1, 1]));
        w.replay(&f).unwrap();
    }

    #[test]
    fn c12_is_reducible() {
        let c12 = ctrace(12).unwrap();
        let w = is_irreducible(&c12).unwrap();
        assert_eq!(w.verdict, Verdict::Reducible);
        w.replay(&c12).unwrap();
    }

    #[test]
    fn product_of_irreducible_cubics() {
        // x^3 - 3x + 1 (t_3 + 1 shifted, irreducible) times x^3 - x - 1
        let f = &p(&[1, -3, 0, 1]) * &p(&[-1, -1, 0, 1]);
        let w = is_irreducible(&f).unwrap();
        assert_eq!(w.verdict, Verdict::Reducible);
        w.replay(&f).unwrap();
    }

    #[test]
    fn swinnerton_dyer_like_case_goes_to_recombination() {
        // x^4 + 1 splits into quadratics or linears modulo every prime
        let f = p(&[1, 0, 0, 0, 1]);
        let w = is_irreducible(&f).unwrap();
        assert_eq!(w.verdict, Verdict::Irreducible);
        assert_eq!(w.method, Method::ExactFactorization);
        w.replay(&f).unwrap();
    }

    #[test]
    fn precondition_errors() {
        assert_eq!(is_irreducible(&p(&[2, 1])).map(|_| ()), Ok(()));
        assert_eq!(is_irreducible(&p(&[1, 0, 2])), Err(FactorError::NotMonic));
        assert_eq!(is_irreducible(&p(&[1, 2, 1])), Err(FactorError::NotSquarefree));
        assert_eq!(is_irreducible(&p(&[5])), Err(FactorError::Constant));
        assert_eq!(is_irreducible(&IntPoly::zero()), Err(FactorError::Constant));
    }

    #[test]
    fn subset_cap_is_reported() {
        let f = &(&cheb(1) * &p(&[-1, 1])) * &p(&[1, 1]);
        let cfg = FactorConfig { filter_primes: 5, max_subsets: 0, seed: 1 };
        assert_eq!(find_factor(&f, &cfg), Err(FactorError::Inconclusive(0)));
    }

    #[test]
    fn corrupted_filter_witness_fails_replay() {
        let f = p(&[1, -5, 1]);
        let w = IrreducibilityWitness {
            verdict: Verdict::Irreducible,
            method: Method::ModularDegreeFilter,
            detail: WitnessDetail::DegreeFilter { primes: vec![3], degree_multisets: vec![vec![1, 1]] },
        };
        assert!(w.replay(&f).is_err());
    }

    #[test]
    fn subset_sums() {
        assert_eq!(common_subset_sums(4, &[vec![1, 3], vec![2, 2]]), vec![0, 4]);
        assert_eq!(common_subset_sums(4, &[vec![1, 3], vec![1, 1, 2]]), vec![0, 1, 3, 4]);
    }
}
