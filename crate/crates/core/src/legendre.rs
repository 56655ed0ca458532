//! Shifted Legendre polynomials `P_n(2x-1)` on `[0, 1]`, their exact moments,
//! and the odd-harmonic analogue of the Reed Dawson identity obtained from the
//! `ln(x)/sqrt(x)` moment.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::{binom, harmonic, odd_harmonic};
use crate::error::{Error, Result};
use crate::gamma::{GammaExpr, GammaValue};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedLegendre {
    n: u64,
    coeffs: Vec<BigInt>,
}

impl ShiftedLegendre {
    pub fn degree(&self) -> u64 {
        self.n
    }

    /// `coeffs()[j]` is the coefficient of `x^j`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + Rational::from(c.clone())
        })
    }
}

/// Expands `P_n(2x-1) = sum_k C(n,k)^2 (x-1)^{n-k} x^k` into monomial coefficients.
pub fn shifted_legendre(n: u64) -> ShiftedLegendre {
    let len = n as usize + 1;
    let mut coeffs = vec![BigInt::zero(); len];
    // power = (x-1)^(n-k), grown one factor at a time as k decreases
    let mut power = vec![BigInt::from(1)];
    for k in (0..=n).rev() {
        let w = binom(n, k);
        let w = &w * &w;
        for (i, c) in power.iter().enumerate() {
            coeffs[k as usize + i] += &w * c;
        }
        if k > 0 {
            let mut next = vec![BigInt::zero(); power.len() + 1];
            for (i, c) in power.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c;
            }
            power = next;
        }
    }
    ShiftedLegendre { n, coeffs }
}

/// `∫_0^1 x^p P_n(2x-1) dx = Γ(p+1)^2 / (Γ(p-n+1) Γ(p+n+2))`, reduced exactly.
pub fn moment(p: &Rational, n: u64) -> Result<GammaValue> {
    if *p <= Rational::from(-1) {
        return Err(Error::Precondition(format!("moment needs p > -1, got {p}")));
    }
    let one = Rational::one();
    let nr = Rational::from(n);
    Ok(GammaExpr::new(one.clone())
        .gamma(p + &one, 2)
        .gamma(p - &nr + &one, -1)
        .gamma(p + &nr + Rational::from(2), -1)
        .reduce())
}

/// Term-by-term integral `sum_j c_j / (p + j + 1)` with `p = p_num / p_den`.
pub fn moment_exact_by_expansion(p_num: i64, p_den: i64, n: u64) -> Result<Rational> {
    let p = Rational::new(p_num, p_den)?;
    moment_by_expansion(&p, n)
}

pub fn moment_by_expansion(p: &Rational, n: u64) -> Result<Rational> {
    if *p <= Rational::from(-1) {
        return Err(Error::Precondition(format!("moment needs p > -1, got {p}")));
    }
    let poly = shifted_legendre(n);
    let mut sum = Rational::zero();
    for (j, c) in poly.coeffs().iter().enumerate() {
        let den = p + Rational::from(j + 1);
        sum += Rational::from(c.clone()).checked_div(&den)?;
    }
    Ok(sum)
}

/// `∫_0^1 ln(x)/sqrt(x) P_n(2x-1) dx` term by term, using
/// `∫_0^1 x^{j-1/2} ln x dx = -4/(2j+1)^2`.
pub fn lhs_log_moment_sqrt(n: u64) -> Rational {
    shifted_legendre(n)
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let d = 2 * j as i64 + 1;
            Rational::from(c.clone()) * Rational::frac(-4, d * d)
        })
        .sum()
}

/// `4(-1)^n H_n/(2n+1) - 8(-1)^n H_{2n}/(2n+1) - 4(-1)^n/(2n+1)^2`.
pub fn rhs_log_moment_sqrt(n: u64) -> Rational {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let d = 2 * n as i64 + 1;
    harmonic(n as usize) * Rational::frac(4 * sign, d)
        - harmonic(2 * n as usize) * Rational::frac(8 * sign, d)
        - Rational::frac(4 * sign, d * d)
}

pub fn log_moment_sqrt(n: u64) -> (Rational, Rational) {
    (lhs_log_moment_sqrt(n), rhs_log_moment_sqrt(n))
}

/// `sum_{k=0}^n (-1/4)^k C(n,k) C(2k,k) O_k`.
pub fn lhs_odd_knuth(n: u64) -> Rational {
    (0..=n)
        .map(|k| {
            Rational::frac(-1, 4)
                .pow(k as i64)
                .expect("nonnegative power")
                * Rational::from(binom(n, k) * binom(2 * k, k))
                * odd_harmonic(k as usize)
        })
        .sum()
}

/// `-(1/4)^n C(2n,n) O_n`.
pub fn rhs_odd_knuth(n: u64) -> Rational {
    -(Rational::frac(1, 4)
        .pow(n as i64)
        .expect("nonnegative power")
        * Rational::from(binom(2 * n, n))
        * odd_harmonic(n as usize))
}

pub fn identity_odd_knuth(n: u64) -> (Rational, Rational) {
    (lhs_odd_knuth(n), rhs_odd_knuth(n))
}

/// Integer and half-integer exponents in `(-1, 10]`.
pub fn moment_points() -> Vec<Rational> {
    (-1..=20).map(|j| Rational::frac(j, 2)).collect()
}
