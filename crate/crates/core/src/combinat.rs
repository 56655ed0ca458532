//! Pochhammer symbols, generalized binomials, factorials and harmonic numbers.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;

/// Product of `start + step*i` over `i in 0..len`, with `x = p/q` scaled to integers.
fn scaled_product(x: &Rational, len: u64, rising: bool) -> Rational {
    let p = x.numer();
    let q = x.denom();
    let mut num = BigInt::one();
    let mut offset = BigInt::from(0);
    for _ in 0..len {
        if rising {
            num *= p + &offset;
        } else {
            num *= p - &offset;
        }
        offset += q;
    }
    let den = num_traits::pow::Pow::pow(q, len);
    Rational::new(num, den).expect("positive denominator")
}

/// Rising factorial `(x)_k = x(x+1)...(x+k-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Rational, k: u64) -> Rational {
    scaled_product(x, k, true)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Ordinary binomial coefficient for `0 <= k`; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial with rational upper argument and integer lower index:
/// `a(a-1)...(a-m+1) / m!`.
///
/// A binomial whose lower index is itself shifted by a rational, such as
/// `C(n+l, k+l)`, is evaluated as `gbinom(n+l, n-k)`; the two agree whenever
/// the difference `n-k` is a nonnegative integer.
pub fn gbinom(a: &Rational, m: u64) -> Rational {
    let falling = scaled_product(a, m, false);
    falling
        .checked_div(&Rational::from(factorial(m)))
        .expect("factorial is nonzero")
}

/// `C(2k + 2l, k)`, equal to `(k + 2l + 1)_k / k!`.
pub fn binom2k_shift(k: u64, ell: &Rational) -> Rational {
    let two_l = ell * Rational::from(2);
    gbinom(&(Rational::from(2 * k) + two_l), k)
}

/// `C(a, m)` for integer `a` and `m`, zero unless `0 <= m <= a` or `a < 0`.
/// Follows the falling-factorial convention for negative `a`.
pub fn binom_signed(a: i64, m: i64) -> Rational {
    if m < 0 {
        return Rational::zero();
    }
    gbinom(&Rational::from(a), m as u64)
}

#[derive(Default)]
struct Tables {
    h: Vec<Rational>,
    o: Vec<Rational>,
}

/// Memoized harmonic numbers `H_n` and odd harmonic numbers
/// `O_r = 1 + 1/3 + ... + 1/(2r-1)`. Tables grow on demand under a lock;
/// readers of already-built indices only take the shared lock.
pub struct HarmonicCache {
    tables: RwLock<Tables>,
}

impl Default for HarmonicCache {
    fn default() -> Self {
        Self::new()
    }
}

impl HarmonicCache {
    pub fn new() -> Self {
        HarmonicCache {
            tables: RwLock::new(Tables {
                h: vec![Rational::zero()],
                o: vec![Rational::zero()],
            }),
        }
    }

    /// Process-wide cache.
    pub fn global() -> &'static HarmonicCache {
        static CACHE: OnceLock<HarmonicCache> = OnceLock::new();
        CACHE.get_or_init(HarmonicCache::new)
    }

    pub fn harmonic(&self, n: usize) -> Rational {
        if let Some(v) = self.tables.read().unwrap().h.get(n) {
            return v.clone();
        }
        let mut t = self.tables.write().unwrap();
        while t.h.len() <= n {
            let i = t.h.len();
            let next = t.h[i - 1].clone() + Rational::frac(1, i as i64);
            t.h.push(next);
        }
        t.h[n].clone()
    }

    pub fn odd_harmonic(&self, r: usize) -> Rational {
        if let Some(v) = self.tables.read().unwrap().o.get(r) {
            return v.clone();
        }
        let mut t = self.tables.write().unwrap();
        while t.o.len() <= r {
            let i = t.o.len();
            let next = t.o[i - 1].clone() + Rational::frac(1, 2 * i as i64 - 1);
            t.o.push(next);
        }
        t.o[r].clone()
    }
}

pub fn harmonic(n: usize) -> Rational {
    HarmonicCache::global().harmonic(n)
}

pub fn odd_harmonic(r: usize) -> Rational {
    HarmonicCache::global().odd_harmonic(r)
}
