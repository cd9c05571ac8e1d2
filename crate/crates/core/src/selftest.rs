//! Exact identity and parity suites over configurable index ranges.

use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::intpoly::{compose_trace_lift, gcd_over_rationals, trace_extract, IntPoly};
use crate::trigpolys::{cheb, ctrace, rk_formula, rk_sturm};

/// Deliberate faults for exercising the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Perturbs the constant coefficient of `C_n` for `n ≡ 0 (mod 8)`.
    CorruptCtrace,
}

#[derive(Debug, Clone)]
pub struct SelftestConfig {
    /// `C_{4k} = t_k C_{2k}` for `k <= identity_k`; the `8k` form uses half the range.
    pub identity_k: u64,
    /// Coprimality of `C_n, C_m` for `3 <= n, m <= gcd_nm`.
    pub gcd_nm: u64,
    /// Chebyshev/trace coprimality for `k <= cheb_k`, `n <= cheb_n`, `4 ∤ n`.
    pub cheb_k: u64,
    pub cheb_n: u64,
    /// `t_{2k}` against `C_n`, `n ≡ 4 (mod 8)`, `n <= even_n`, `k <= even_k`.
    pub even_n: u64,
    pub even_k: u64,
    /// Root-count formula against Sturm for `k <= rk_max`.
    pub rk_max: u64,
    pub round_trips: usize,
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            identity_k: 64,
            gcd_nm: 48,
            cheb_k: 40,
            cheb_n: 40,
            even_n: 60,
            even_k: 30,
            rk_max: 200,
            round_trips: 200,
            seed: 0,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub assertions: usize,
    pub failures: usize,
    /// First few failing instances.
    pub examples: Vec<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult { name, assertions: 0, failures: 0, examples: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.assertions += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 3 {
                self.examples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn total_assertions(&self) -> usize {
        self.checks.iter().map(|c| c.assertions).sum()
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {} ({} assertions, {} failures)", c.name, c.assertions, c.failures)?;
            for e in &c.examples {
                writeln!(f, "    {e}")?;
            }
        }
        let verdict = if self.passed() { "all checks passed" } else { "FAILED" };
        write!(f, "seed {}: {} assertions, {verdict}", self.seed, self.total_assertions())
    }
}

struct Source {
    fault: Option<Fault>,
}

impl Source {
    fn ctrace(&self, n: u64) -> IntPoly {
        let c = ctrace(n).expect("n >= 1");
        match self.fault {
            Some(Fault::CorruptCtrace) if n % 8 == 0 => &c + &IntPoly::one(),
            _ => c,
        }
    }
}

fn coprime(p: &IntPoly, q: &IntPoly) -> bool {
    gcd_over_rationals(p, q).unwrap().degree() == Some(0)
}

pub fn run(config: &SelftestConfig) -> SelftestReport {
    let src = Source { fault: config.fault };
    let mut checks = Vec::new();

    let mut c = CheckResult::new("C_4k = t_k * C_2k");
    for k in 1..=config.identity_k {
        c.check(src.ctrace(4 * k) == &cheb(k) * &src.ctrace(2 * k), || format!("k = {k}"));
    }
    checks.push(c);

    let mut c = CheckResult::new("C_8k = t_2k * C_4k");
    for k in 1..=config.identity_k / 2 {
        c.check(src.ctrace(8 * k) == &cheb(2 * k) * &src.ctrace(4 * k), || format!("k = {k}"));
    }
    checks.push(c);

    let traces: Vec<IntPoly> = (0..=config.gcd_nm.max(config.cheb_n).max(config.even_n))
        .map(|n| if n == 0 { IntPoly::one() } else { src.ctrace(n) })
        .collect();

    let mut c = CheckResult::new("gcd(C_n, C_m) = 1 iff gcd(n, m) in {1, 2}");
    for n in 3..=config.gcd_nm {
        for m in 3..=config.gcd_nm {
            let expect = n.gcd(&m) <= 2;
            let got = coprime(&traces[n as usize], &traces[m as usize]);
            c.check(got == expect, || format!("n = {n}, m = {m}: coprime = {got}"));
        }
    }
    checks.push(c);

    let chebs: Vec<IntPoly> = (0..=config.cheb_k.max(2 * config.even_k)).map(cheb).collect();

    let mut c = CheckResult::new("gcd(t_k, C_n) = 1 for n not divisible by 4");
    for k in 1..=config.cheb_k {
        for n in (1..=config.cheb_n).filter(|n| n % 4 != 0) {
            c.check(coprime(&chebs[k as usize], &traces[n as usize]), || format!("k = {k}, n = {n}"));
        }
    }
    checks.push(c);

    let mut c = CheckResult::new("gcd(t_2k, C_n) = 1 for n = 4 mod 8");
    for n in (4..=config.even_n).step_by(8) {
        for k in 1..=config.even_k {
            c.check(coprime(&chebs[2 * k as usize], &traces[n as usize]), || format!("k = {k}, n = {n}"));
        }
    }
    checks.push(c);

    let mut c = CheckResult::new("r_k formula = Sturm count of t_k on (0, 1)");
    let mut rk = vec![0u64];
    for k in 1..=config.rk_max {
        let formula = rk_formula(k);
        let sturm = rk_sturm(k);
        c.check(formula as usize == sturm, || format!("k = {k}: formula {formula}, Sturm {sturm}"));
        rk.push(sturm as u64);
    }
    checks.push(c);

    let mut c = CheckResult::new("r_4k even iff k = 0 mod 3");
    for k in (1..).take_while(|k| 4 * k <= config.rk_max) {
        let r = rk[4 * k as usize];
        c.check((r % 2 == 0) == (k % 3 == 0), || format!("k = {k}: r = {r}"));
    }
    checks.push(c);

    let mut c = CheckResult::new("r_(2+4k) odd iff k = 1 mod 3");
    for k in (0..).take_while(|k| 2 + 4 * k <= config.rk_max) {
        let r = rk[(2 + 4 * k) as usize];
        c.check((r % 2 == 1) == (k % 3 == 1), || format!("k = {k}: r = {r}"));
    }
    checks.push(c);

    let mut c = CheckResult::new("t_k(-x) = (-1)^k t_k(x)");
    for k in 1..=config.cheb_k {
        let t = &chebs[k as usize];
        let expect = if k % 2 == 1 { -t } else { t.clone() };
        c.check(t.negate_variable() == expect, || format!("k = {k}"));
    }
    checks.push(c);

    let mut c = CheckResult::new("C_n odd for n = 0 mod 4, even for n = 2 mod 4");
    for n in (4..=config.gcd_nm).step_by(2) {
        let p = &traces[n as usize];
        let expect = if n % 4 == 0 { -p } else { p.clone() };
        c.check(p.negate_variable() == expect, || format!("n = {n}"));
    }
    checks.push(c);

    let mut c = CheckResult::new("trace extract inverts trace lift");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for i in 0..config.round_trips {
        let deg = rng.gen_range(1..=10usize);
        let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-50..=50)).collect();
        coeffs.push(rng.gen_range(1..=5));
        let t = IntPoly::from_i64s(&coeffs);
        let s = compose_trace_lift(&t, deg).unwrap();
        let ok = s.degree() == Some(2 * deg) && s.is_reciprocal() && trace_extract(&s).ok() == Some(t.clone());
        c.check(ok, || format!("trial {i}: T = {t}"));
    }
    checks.push(c);

    SelftestReport { seed: config.seed, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SelftestConfig {
        SelftestConfig {
            identity_k: 12,
            gcd_nm: 16,
            cheb_k: 10,
            cheb_n: 12,
            even_n: 20,
            even_k: 6,
            rk_max: 30,
            round_trips: 20,
            seed: 7,
            fault: None,
        }
    }

    #[test]
    fn small_ranges_pass() {
        let report = run(&small());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn corrupted_trace_names_identity() {
        let report = run(&SelftestConfig { fault: Some(Fault::CorruptCtrace), ..small() });
        assert!(!report.passed());
        let failed: Vec<_> = report.failed_checks().map(|c| c.name).collect();
        assert!(failed.contains(&"C_4k = t_k * C_2k"), "{failed:?}");
    }

    #[test]
    fn deterministic_output() {
        let a = run(&small()).to_string();
        let b = run(&small()).to_string();
        assert_eq!(a, b);
    }
}
