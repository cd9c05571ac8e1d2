//! Dense polynomials over a small prime field `F_p`, coefficients in `[0, p)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::intpoly::IntPoly;

pub(crate) type Poly = Vec<u64>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Field {
    pub p: u64,
}

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

impl Field {
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 31)).contains(&p));
        Field { p }
    }

    pub fn reduce(&self, f: &IntPoly) -> Poly {
        let p = BigInt::from(self.p);
        trim(f.coeffs().iter().map(|c| c.mod_floor(&p).to_u64().unwrap()).collect())
    }

    pub fn lift(&self, a: &[u64]) -> IntPoly {
        IntPoly::new(a.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow_scalar(a, self.p - 2)
    }

    fn pow_scalar(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulm(acc, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        acc
    }

    #[cfg(test)]
    pub fn add(&self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        trim((0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect())
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        trim((0..n)
            .map(|i| {
                (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p
            })
            .collect())
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> Poly {
        trim(a.iter().map(|&x| self.mulm(x, c)).collect())
    }

    pub fn monic(&self, a: &[u64]) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (Poly, Poly) {
        let db = degree(b).expect("division by zero polynomial");
        let inv = self.inv(b[db]);
        let mut r = a.to_vec();
        if r.len() <= db {
            return (Vec::new(), trim(r));
        }
        let mut q = vec![0u64; r.len() - db];
        for i in (0..q.len()).rev() {
            let c = self.mulm(r[i + db], inv);
            if c == 0 {
                continue;
            }
            q[i] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + self.p - self.mulm(c, bj)) % self.p;
            }
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> Poly {
        self.div_rem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> Poly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = std::mem::replace(&mut b, r);
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc = *r0.last().expect("ext_gcd of two zero polynomials");
        let inv = self.inv(lc);
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn mul_mod(&self, a: &[u64], b: &[u64], m: &[u64]) -> Poly {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &[u64], mut e: u64, m: &[u64]) -> Poly {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&[1], m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(&acc, &base, m);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_mod(&base, &base, m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d: Poly = trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
                .collect(),
        );
        if d.is_empty() {
            return degree(f) == Some(0);
        }
        degree(&self.gcd(f, &d)) == Some(0)
    }

    /// Distinct-degree factorisation of a monic squarefree `f`:
    /// pairs `(d, g_d)` where `g_d` is the product of all degree-`d` factors.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(usize, Poly)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x = vec![0, 1];
        let mut h = self.rem(&x, &rest);
        let mut d = 0;
        while degree(&rest).unwrap_or(0) >= 2 * (d + 1) {
            d += 1;
            h = self.pow_mod(&h, self.p, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &x));
            if degree(&g).unwrap_or(0) > 0 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((d, g));
            }
        }
        if let Some(dr) = degree(&rest) {
            if dr > 0 {
                out.push((dr, rest));
            }
        }
        out
    }

    /// Cantor–Zassenhaus splitting of `g`, a product of distinct monic degree-`d` irreducibles.
    pub fn equal_degree<R: Rng>(&self, g: &[u64], d: usize, rng: &mut R) -> Vec<Poly> {
        let n = degree(g).unwrap();
        if n == d {
            return vec![g.to_vec()];
        }
        assert!(self.p % 2 == 1, "equal-degree splitting needs an odd prime");
        loop {
            let a: Poly = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if degree(&a).unwrap_or(0) == 0 {
                continue;
            }
            // a^(1 + p + ... + p^(d-1)) then ^((p-1)/2) gives a^((p^d - 1)/2)
            let mut frob = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                frob = self.pow_mod(&frob, self.p, g);
                norm = self.mul_mod(&norm, &frob, g);
            }
            let b = self.pow_mod(&norm, (self.p - 1) / 2, g);
            let w = self.gcd(g, &self.sub(&b, &[1]));
            let dw = degree(&w).unwrap_or(0);
            if dw > 0 && dw < n {
                let other = self.div_rem(g, &w).0;
                let mut out = self.equal_degree(&w, d, rng);
                out.extend(self.equal_degree(&other, d, rng));
                return out;
            }
        }
    }
}
