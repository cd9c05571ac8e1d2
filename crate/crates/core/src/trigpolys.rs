//! The trace polynomials `C_n` and the Chebyshev-type polynomials `t_k`.
//!
//! `t_k` is normalised by `t_k(2 cos θ) = 2 cos kθ` and generated by
//! `t_{k+2} = x t_{k+1} - t_k` from `t_1 = x`, `t_2 = x^2 - 2`. `C_n` is the
//! trace polynomial of `(x^n - 1)/(x - 1)` (odd `n`) or `(x^n - 1)/(x^2 - 1)`
//! (even `n`); its roots are `2 cos(2jπ/n)`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intpoly::{trace_extract, IntPoly, Rational};
use crate::roots;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("index n must be at least 1")]
    ZeroN,
}

/// The exponent `n` of `α^n - 1`, with the congruence data the constructions branch on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TraceFamilyIndex(u64);

impl TraceFamilyIndex {
    pub fn new(n: u64) -> Result<Self, IndexError> {
        if n == 0 {
            return Err(IndexError::ZeroN);
        }
        Ok(TraceFamilyIndex(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn mod4(self) -> u64 {
        self.0 % 4
    }

    pub fn mod8(self) -> u64 {
        self.0 % 8
    }

    pub fn divisible_by_5(self) -> bool {
        self.0 % 5 == 0
    }

    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }
}

/// Index `k >= 0` of `t_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChebIndex(pub u64);

/// `t_k` for `k >= 1`; `t_0` is the constant `1` so that it is a monic degree-0 factor.
pub fn cheb(k: u64) -> IntPoly {
    match k {
        0 => IntPoly::one(),
        1 => IntPoly::x(),
        _ => {
            let x = IntPoly::x();
            let mut prev = IntPoly::x();
            let mut cur = IntPoly::from_i64s(&[-2, 0, 1]);
            for _ in 2..k {
                let next = &(&x * &cur) - &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
    }
}

/// `C_n`, extracted exactly from `U_n = (x^n - 1)/(x - 1)` or `(x^n - 1)/(x^2 - 1)`.
pub fn ctrace(n: u64) -> Result<IntPoly, IndexError> {
    let idx = TraceFamilyIndex::new(n)?;
    let n = idx.get() as usize;
    // (x^n - 1)/(x - 1) = 1 + x + ... + x^{n-1}; (x^n - 1)/(x^2 - 1) = 1 + x^2 + ... + x^{n-2}
    let u = if idx.is_odd() {
        IntPoly::new(vec![BigInt::from(1); n])
    } else {
        IntPoly::new((0..n - 1).map(|i| BigInt::from(((i + 1) % 2) as i64)).collect())
    };
    Ok(trace_extract(&u).expect("U_n is reciprocal of even degree"))
}

/// Closed-form count of roots of `t_k` in the open interval `(0, 1)`:
/// `(k - ε)/6` with `ε ∈ {0, 1, 2, 3, -2, 5}` and `k ≡ ε (mod 6)`.
///
/// `k = 0` gives `0`, matching `t_0 = 1`.
pub fn rk_formula(k: u64) -> u64 {
    const EPSILON: [i64; 6] = [0, 1, 2, 3, -2, 5];
    let eps = EPSILON[(k % 6) as usize];
    let diff = k as i64 - eps;
    assert!(
        diff >= 0 && diff % 6 == 0,
        "epsilon table corrupted: k = {k}, eps = {eps}"
    );
    (diff / 6) as u64
}

/// Number of roots of `C_n` in the open interval `(0, 1)`, by Sturm counting.
pub fn cn_roots_in_unit_interval(n: u64) -> Result<usize, IndexError> {
    let c = ctrace(n)?;
    Ok(roots::count_open(&c, &Rational::from_integer(0.into()), &Rational::from_integer(1.into())))
}

/// Sturm count of `t_k` on `(0, 1)`.
pub fn rk_sturm(k: u64) -> usize {
    roots::count_open(
        &cheb(k),
        &Rational::from_integer(0.into()),
        &Rational::from_integer(1.into()),
    )
}
