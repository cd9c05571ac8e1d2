//! Cross-checks against independent oracles: floating-point eigenvalues, exhaustive
//! dispatcher tables, mpmath-computed Salem numbers and exact factorisation.

use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use salem_core::construct::{self, build_candidate, dispatch, SearchOptions};
use salem_core::factor::{self, FactorConfig, Verdict};
use salem_core::roots::{self, SturmChain};
use salem_core::salem::{self, Construction};
use salem_core::trigpolys::{ctrace, cheb};
use salem_core::{gcd_over_rationals, IntPoly, Rational};

fn eigenvalues(p: &IntPoly) -> Vec<(f64, f64)> {
    let d = p.degree().unwrap();
    let lc = p.leading_coeff().unwrap().to_f64().unwrap();
    let c: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap() / lc).collect();
    let m = DMatrix::from_fn(d, d, |i, j| if j == d - 1 { -c[i] } else if i == j + 1 { 1.0 } else { 0.0 });
    m.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect()
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, monic: bool) -> IntPoly {
    let d = rng.gen_range(1..=max_deg);
    let mut c: Vec<i64> = (0..d).map(|_| rng.gen_range(-10..=10)).collect();
    c.push(if monic { 1 } else { *[-3, -2, -1, 1, 2, 3].get(rng.gen_range(0..6)).unwrap() });
    IntPoly::from_i64s(&c)
}

#[test]
fn sturm_counts_match_companion_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut compared = 0;
    while compared < 100 {
        let p = random_poly(&mut rng, 10, false);
        if !roots::is_separable(&p) {
            continue;
        }
        let eig = eigenvalues(&p);
        // skip polynomials whose classification is ambiguous in floating point
        if eig.iter().any(|&(_, im)| im.abs() > 1e-9 && im.abs() < 1e-4) {
            continue;
        }
        let real: Vec<f64> = eig.iter().filter(|z| z.1.abs() <= 1e-9).map(|z| z.0).collect();
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count(None, None), real.len(), "p = {p}");
        let ivs = roots::isolate_all(&p).unwrap();
        assert_eq!(ivs.len(), real.len());
        for iv in &ivs {
            let (lo, hi) = (iv.lo.to_f64().unwrap(), iv.hi.to_f64().unwrap());
            let inside = real.iter().filter(|&&r| r > lo - 1e-7 && r <= hi + 1e-7).count();
            assert_eq!(inside, 1, "p = {p}, interval ({lo}, {hi}]");
        }
        compared += 1;
    }
}

#[test]
fn degree_filter_agrees_with_exact_factorisation() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let exact_only = FactorConfig { filter_primes: 0, ..FactorConfig::default() };
    let mut compared = 0;
    let mut reducible = 0;
    while compared < 200 {
        let product = compared % 2 == 0;
        let p = if product {
            let a = random_poly(&mut rng, 5, true);
            let b = random_poly(&mut rng, 5, true);
            &a * &b
        } else {
            random_poly(&mut rng, 10, true)
        };
        if !roots::is_separable(&p) {
            continue;
        }
        let w = factor::is_irreducible(&p).unwrap();
        w.replay(&p).unwrap();
        let f = factor::find_factor(&p, &exact_only).unwrap();
        assert_eq!(w.verdict == Verdict::Irreducible, f.is_none(), "p = {p}");
        if let Some(g) = f {
            assert!(g.degree().unwrap() >= 1 && g.degree() < p.degree());
            assert!(p.div_exact(&g).is_some(), "p = {p}, factor {g}");
            reducible += 1;
        }
        if product {
            assert_eq!(w.verdict, Verdict::Reducible, "p = {p}");
        }
        compared += 1;
    }
    assert!(reducible >= 100);
}

#[test]
fn cyclotomic_style_products_factor() {
    // C_n splits over Q exactly as the product of the minimal polynomials of 2cos(2πj/n)
    for n in [15u64, 21, 24, 28, 36] {
        let c = ctrace(n).unwrap();
        let w = factor::is_irreducible(&c).unwrap();
        assert_eq!(w.verdict, Verdict::Reducible, "C_{n}");
    }
    for k in [3u64, 5, 7, 9] {
        let w = factor::is_irreducible(&cheb(2u64.pow(k as u32))).unwrap();
        // t_m for m a power of two is the minimal polynomial of 2cos(π/2m)
        assert_eq!(w.verdict, Verdict::Irreducible, "t_(2^{k})");
    }
}

#[test]
fn dispatcher_is_total_and_parity_consistent() {
    let c5 = ctrace(5).unwrap();
    for n in (4..=100u64).step_by(8) {
        let cn = ctrace(n).unwrap();
        let shares = gcd_over_rationals(&cn, &c5.negate_variable()).unwrap().degree() != Some(0);
        assert_eq!(shares, n % 5 == 0, "C_{n} against C_5(-x)");
        if n % 5 == 0 {
            continue;
        }
        let min = (n / 2 + 3) as usize;
        for t in (min..=min + 16).step_by(2) {
            let plan = dispatch(n, t).unwrap_or_else(|e| panic!("({n},{t}): {e}"));
            let fixed = plan.fixed_product();
            assert_eq!(fixed.degree().unwrap() + 2, t, "({n},{t})");
            for (i, f) in plan.factors.iter().enumerate() {
                for g in &plan.factors[i + 1..] {
                    let d = gcd_over_rationals(&f.poly, &g.poly).unwrap().degree();
                    assert_eq!(d, Some(0), "({n},{t}): {} and {}", f.name, g.name);
                }
            }
            assert!(roots::is_separable(&fixed), "({n},{t})");
            if let Some(ev) = &plan.parity_evidence {
                assert_eq!(ev.plan_factors_in_unit_interval % 2, 0, "({n},{t}) {}", plan.summary());
                assert_eq!(ev.r_2_plus_4k as usize, {
                    let k = plan.k.unwrap();
                    roots::count_open(&cheb(2 + 4 * k), &Rational::from_integer(0.into()), &Rational::from_integer(1.into()))
                });
            }
            let r = build_candidate(&plan, 5).unwrap();
            assert_eq!(r.degree(), Some(t));
        }
    }
}

#[test]
fn l31_product_is_separable() {
    let plan = dispatch(12, 9).unwrap();
    let r = &build_candidate(&plan, 5).unwrap() + &IntPoly::one();
    assert!(roots::is_separable(&r));
}

#[test]
fn alpha_matches_high_precision_values() {
    // largest real root of S, computed independently with mpmath at 60 digits and truncated
    let expected = [
        (3, "2.157058497393853700582581703873"),
        (4, "3.441538197602085995825827114753"),
        (5, "4.572599339382846935868753623883"),
        (6, "5.651483422674294856637184983253"),
        (7, "6.704958870621915430010269298277"),
    ];
    let plan = dispatch(12, 9).unwrap();
    let report = construct::search_plan(&plan, &SearchOptions { a_max: 7, want: 5, ..Default::default() });
    let got: Vec<(i64, &str)> = report.certificates.iter().map(|c| (c.a.unwrap(), c.alpha.as_str())).collect();
    assert_eq!(got, expected);

    let trace = salem_core::trace_extract(&IntPoly::from_i64s(&[1, -3, 1])).unwrap();
    assert_eq!(trace, IntPoly::from_i64s(&[-3, 1]));
    let beta = roots::isolate_roots(&trace, &Rational::from_integer(2.into()), &Rational::from_integer(4.into()))
        .unwrap()
        .remove(0);
    let alpha = salem::alpha_from_beta(&trace, &beta, 30).unwrap();
    assert_eq!(alpha.decimal, "2.618033988749894848204586834365");
}

#[test]
fn certificates_survive_json_and_detect_tampering() {
    let plan = dispatch(12, 11).unwrap();
    let report = construct::search_plan(&plan, &SearchOptions { want: 2, ..Default::default() });
    assert_eq!(report.certificates.len(), 2);
    assert!(report.certificates.iter().all(|c| c.construction == Construction::L32));
    let json = serde_json::to_string(&report).unwrap();
    let back: construct::SearchReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
    construct::verify_report(&back).unwrap();

    let cert = &report.certificates[0];
    let mut bad = cert.clone();
    bad.alpha.replace_range(5..6, if &cert.alpha[5..6] == "1" { "2" } else { "1" });
    assert!(salem::verify_certificate(&bad).is_err());
    let mut bad = cert.clone();
    bad.resultant = 3;
    assert!(salem::verify_certificate(&bad).is_err());
    // α^d - 1 divides α^12 - 1, so every divisor d of 12 also gives a unit
    for d in [1u64, 2, 3, 4, 6] {
        let mut other = salem::certify_trace(&cert.trace_poly, d).unwrap();
        other.a = cert.a;
        other.construction = cert.construction;
        assert_eq!(other.alpha, cert.alpha);
        let mut relabelled = cert.clone();
        relabelled.n = d;
        relabelled.resultant = other.resultant;
        salem::verify_certificate(&relabelled).unwrap();
    }
    let mut bad = cert.clone();
    bad.n = 5;
    assert!(salem::verify_certificate(&bad).is_err());
    let mut bad = cert.clone();
    bad.beta_interval = report.certificates[1].beta_interval.clone();
    assert!(salem::verify_certificate(&bad).is_err());

    let mut bad = report.clone();
    bad.certificates[1].a = Some(bad.certificates[1].a.unwrap() + 1);
    assert!(construct::verify_report(&bad).is_err());
}

#[test]
fn search_is_deterministic_and_ascending() {
    let plan = dispatch(12, 15).unwrap();
    let opts = SearchOptions { a_min: 20, a_max: 40, want: 3, ..Default::default() };
    let a = construct::search_plan(&plan, &opts);
    let b = construct::search_plan(&plan, &opts);
    assert_eq!(a, b);
    let certified: Vec<i64> = a.certificates.iter().map(|c| c.a.unwrap()).collect();
    assert!(certified.windows(2).all(|w| w[0] < w[1]));
    assert!(a.failures.iter().all(|f| f.a < *certified.last().unwrap()));
    assert_eq!(a.distinct_salem_count, a.certificates.len());
}

#[test]
fn linear_factor_beta_sits_above_a() {
    let plan = construct::plan_theorem11(3, 5, &IntPoly::from_i64s(&[-2, 0, 1])).unwrap();
    let report = construct::search_plan(&plan, &SearchOptions { a_max: 60, want: 3, ..Default::default() });
    assert!(!report.certificates.is_empty());
    for c in &report.certificates {
        let a = c.a.unwrap();
        let (lo, hi) = (Rational::from_integer(a.into()), Rational::from_integer((a + 1).into()));
        assert_eq!(roots::count_open(&c.trace_poly, &lo, &hi), 1);
        assert_eq!(roots::count_open(&c.trace_poly, &Rational::from_integer(2.into()), &lo), 0);
        assert_eq!(c.resultant.abs(), 1);
    }
}
