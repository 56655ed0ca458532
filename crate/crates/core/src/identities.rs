//! Both sides of the Reed Dawson family and the binomial-harmonic sums.
//!
//! Every `lhs_*` is a direct term-by-term sum; every `rhs_*` is the closed form.

use crate::combinat::{binom, binom2k_shift, gbinom, harmonic, odd_harmonic};
use crate::error::Result;
use crate::rational::Rational;

fn half_neg() -> Rational {
    Rational::frac(-1, 2)
}

fn int(n: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from(n.into())
}

fn pow(base: &Rational, exp: u64) -> Rational {
    base.pow(exp as i64).expect("nonnegative power")
}

/// `sum_{k=0}^n (-1/2)^k C(n,k) C(2k,k)`.
pub fn lhs_knuth_old(n: u64) -> Rational {
    (0..=n)
        .map(|k| pow(&half_neg(), k) * int(binom(n, k)) * int(binom(2 * k, k)))
        .sum()
}

/// `2^-n C(n, n/2)` for even `n`, else 0.
pub fn rhs_knuth_old(n: u64) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    pow(&Rational::frac(1, 2), n) * int(binom(n, n / 2))
}

/// `sum_{k=0}^n (-1/2)^k C(n+l, k+l) C(2k+2l, k)`, with `C(n+l, k+l)` read as
/// `gbinom(n+l, n-k)`.
pub fn lhs_prop1(n: u64, ell: &Rational) -> Rational {
    let top = Rational::from(n) + ell;
    (0..=n)
        .map(|k| pow(&half_neg(), k) * gbinom(&top, n - k) * binom2k_shift(k, ell))
        .sum()
}

/// `2^-n C(n+l, n/2)` for even `n`, else 0.
pub fn rhs_prop1(n: u64, ell: &Rational) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    pow(&Rational::frac(1, 2), n) * gbinom(&(Rational::from(n) + ell), n / 2)
}

/// `l` is a negative integer in `[-n, -1]`, where `C(n+l, k+l)` stops agreeing
/// with its integer-difference reading.
pub fn prop1_excluded(n: u64, ell: &Rational) -> bool {
    ell.as_nonpositive_integer()
        .is_some_and(|m| m >= 1 && m <= n)
}

/// `sum_{k=0}^n (-1/2)^k C(n,k) C(2k+2l,k) / C(k+l,k)`.
pub fn lhs_prop2(n: u64, ell: &Rational) -> Result<Rational> {
    let mut sum = Rational::zero();
    for k in 0..=n {
        let den = gbinom(&(Rational::from(k) + ell), k);
        let term = pow(&half_neg(), k) * int(binom(n, k)) * binom2k_shift(k, ell);
        sum += term.checked_div(&den)?;
    }
    Ok(sum)
}

/// `2^-n C(n, n/2) / C(n/2 + l, n/2)` for even `n`, else 0.
pub fn rhs_prop2(n: u64, ell: &Rational) -> Result<Rational> {
    if n % 2 == 1 {
        return Ok(Rational::zero());
    }
    let m = n / 2;
    let den = gbinom(&(Rational::from(m) + ell), m);
    (pow(&Rational::frac(1, 2), n) * int(binom(n, m))).checked_div(&den)
}

/// `C(k+l, k) = 0` for some `k <= n`.
pub fn prop2_excluded(n: u64, ell: &Rational) -> bool {
    prop1_excluded(n, ell)
}

/// `sum_{k=0}^{2n} (-1/2)^k C(2k,k) C(2n,k) (3H_k - 2H_{2k})`.
pub fn lhs_example_3hk(n: u64) -> Rational {
    (0..=2 * n)
        .map(|k| {
            let h = harmonic(k as usize) * Rational::from(3)
                - harmonic(2 * k as usize) * Rational::from(2);
            pow(&half_neg(), k) * int(binom(2 * k, k)) * int(binom(2 * n, k)) * h
        })
        .sum()
}

/// `4^-n C(2n,n) H_n`.
pub fn rhs_example_3hk(n: u64) -> Rational {
    pow(&Rational::frac(1, 4), n) * int(binom(2 * n, n)) * harmonic(n as usize)
}

/// `sum_{k=0}^m (-2)^k C(m,k) H_k / (k+1)`.
pub fn lhs_corollary(m: u64) -> Rational {
    (0..=m)
        .map(|k| {
            pow(&Rational::from(-2), k)
                * int(binom(m, k))
                * harmonic(k as usize)
                * Rational::frac(1, k as i64 + 1)
        })
        .sum()
}

/// `-2/(m+1) O_{(m+1)/2}` for odd `m`, else 0.
pub fn rhs_corollary(m: u64) -> Rational {
    if m % 2 == 0 {
        return Rational::zero();
    }
    Rational::frac(-2, m as i64 + 1) * odd_harmonic(((m + 1) / 2) as usize)
}

/// `sum_{k=0}^{2n} (-2)^k C(2n+1,k) H_k / (k+1)`.
pub fn lhs_corollary_intermediate(n: u64) -> Rational {
    (0..=2 * n)
        .map(|k| {
            pow(&Rational::from(-2), k)
                * int(binom(2 * n + 1, k))
                * harmonic(k as usize)
                * Rational::frac(1, k as i64 + 1)
        })
        .sum()
}

/// `(4^n - 1) H_{2n} / (n+1) + H_n / (2(n+1)) + (4^n - 1) / ((n+1)(2n+1))`.
pub fn rhs_corollary_intermediate(n: u64) -> Rational {
    let four_n_minus_1 = pow(&Rational::from(4), n) - Rational::one();
    let n1 = n as i64 + 1;
    &four_n_minus_1 * harmonic(2 * n as usize) * Rational::frac(1, n1)
        + harmonic(n as usize) * Rational::frac(1, 2 * n1)
        + four_n_minus_1 * Rational::frac(1, n1 * (2 * n as i64 + 1))
}

/// `sum_{k=0}^{2n} (-1/2)^k C(2n,k) 4^k x^k / (k+1)`.
pub fn lhs_gf_polynomial(n: u64, x: &Rational) -> Rational {
    (0..=2 * n)
        .map(|k| {
            pow(&half_neg(), k)
                * int(binom(2 * n, k))
                * pow(&Rational::from(4), k)
                * pow(x, k)
                * Rational::frac(1, k as i64 + 1)
        })
        .sum()
}

/// `(2x(1-2x)^{2n} - (1-2x)^{2n} + 1) / (2(2n+1)x)`, with the limit value 1 at `x = 0`.
pub fn rhs_gf_polynomial(n: u64, x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Ok(Rational::one());
    }
    let two = Rational::from(2);
    let base = pow(&(Rational::one() - &two * x), 2 * n);
    let num = &two * x * &base - &base + Rational::one();
    num.checked_div(&(Rational::from(2 * (2 * n + 1)) * x))
}

/// The `2n+1` distinct points `x = j/3`, `j = 0..=2n`, enough to pin a
/// polynomial of degree `2n`.
pub fn gf_polynomial_points(n: u64) -> Vec<Rational> {
    (0..=2 * n as i64).map(|j| Rational::frac(j, 3)).collect()
}

/// `sum_{k=0}^{2n} (-1)^k C(2n,k) C(2n+k,k) C(2k,k) 4^{2n-k} H_k`.
pub fn lhs_tauraso(n: u64) -> Rational {
    (0..=2 * n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let b = binom(2 * n, k) * binom(2 * n + k, k) * binom(2 * k, k) * sign;
            int(b) * pow(&Rational::from(4), 2 * n - k) * harmonic(k as usize)
        })
        .sum()
}

/// `C(2n,n)^2 H_{2n}`.
pub fn rhs_tauraso(n: u64) -> Rational {
    let c = binom(2 * n, n);
    int(&c * &c) * harmonic(2 * n as usize)
}

pub fn identity_knuth_old(n: u64) -> (Rational, Rational) {
    (lhs_knuth_old(n), rhs_knuth_old(n))
}

pub fn identity_prop1(n: u64, ell: &Rational) -> (Rational, Rational) {
    (lhs_prop1(n, ell), rhs_prop1(n, ell))
}

pub fn identity_prop2(n: u64, ell: &Rational) -> Result<(Rational, Rational)> {
    Ok((lhs_prop2(n, ell)?, rhs_prop2(n, ell)?))
}

pub fn identity_example31(n: u64) -> (Rational, Rational) {
    (lhs_example_3hk(n), rhs_example_3hk(n))
}

pub fn identity_corollary(m: u64) -> (Rational, Rational) {
    (lhs_corollary(m), rhs_corollary(m))
}

pub fn identity_corollary_intermediate(n: u64) -> (Rational, Rational) {
    (lhs_corollary_intermediate(n), rhs_corollary_intermediate(n))
}

pub fn identity_gf_polynomial(n: u64, x: &Rational) -> Result<(Rational, Rational)> {
    Ok((lhs_gf_polynomial(n, x), rhs_gf_polynomial(n, x)?))
}

pub fn identity_tauraso(n: u64) -> (Rational, Rational) {
    (lhs_tauraso(n), rhs_tauraso(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn both(v: i64, d: i64) -> (Rational, Rational) {
        (q(v, d), q(v, d))
    }

    #[test]
    fn knuth_examples() {
        assert_eq!(identity_knuth_old(2), both(1, 2));
        assert_eq!(identity_knuth_old(1), both(0, 1));
        assert_eq!(identity_knuth_old(0), both(1, 1));
        assert_eq!(identity_knuth_old(4), both(3, 8));
    }

    #[test]
    fn prop1_examples() {
        assert_eq!(identity_prop1(2, &Rational::zero()), both(1, 2));
        assert_eq!(identity_prop1(2, &q(1, 2)), both(5, 8));
        for ell in [q(-1, 3), q(1, 2), q(7, 5), Rational::from(2)] {
            assert_eq!(identity_prop1(3, &ell), both(0, 1));
        }
        assert!(prop1_excluded(2, &Rational::from(-1)));
        assert!(!prop1_excluded(2, &Rational::from(-3)));
        assert!(!prop1_excluded(2, &Rational::zero()));
    }

    #[test]
    fn prop2_examples() {
        assert_eq!(identity_prop2(2, &Rational::one()).unwrap(), both(1, 4));
        assert_eq!(identity_prop2(2, &Rational::zero()).unwrap(), both(1, 2));
        assert_eq!(identity_prop2(1, &q(1, 3)).unwrap(), both(0, 1));
        assert!(identity_prop2(3, &Rational::from(-2)).is_err());
    }

    #[test]
    fn harmonic_sum_examples() {
        assert_eq!(identity_example31(1), both(1, 2));
        assert_eq!(identity_example31(0), both(0, 1));
        let (l, r) = identity_example31(2);
        assert_eq!(l, r);

        assert_eq!(identity_corollary(1), both(-1, 1));
        assert_eq!(identity_corollary(3), both(-2, 3));
        assert_eq!(identity_corollary(2), both(0, 1));

        assert_eq!(identity_corollary_intermediate(1), both(3, 1));
        assert_eq!(identity_corollary_intermediate(0), both(0, 1));
        let (l, r) = identity_corollary_intermediate(2);
        assert_eq!(l, r);

        assert_eq!(identity_tauraso(1), both(6, 1));
        assert_eq!(identity_tauraso(0), both(0, 1));
        let (l, r) = identity_tauraso(2);
        assert_eq!(l, r);
    }

    #[test]
    fn gf_polynomial_examples() {
        assert_eq!(
            identity_gf_polynomial(1, &Rational::one()).unwrap(),
            both(1, 3)
        );
        assert_eq!(
            identity_gf_polynomial(5, &Rational::zero()).unwrap(),
            both(1, 1)
        );
        let (l, r) = identity_gf_polynomial(2, &q(1, 3)).unwrap();
        assert_eq!(l, r);
        // polynomial rewriting (1 - (1-2x)^{2n+1}) / (2(2n+1)x)
        let x = q(-3, 7);
        let n = 4;
        let alt = (Rational::one()
            - (Rational::one() - &x * Rational::from(2))
                .pow(2 * n + 1)
                .unwrap())
        .checked_div(&(Rational::from(2 * (2 * n + 1)) * &x))
        .unwrap();
        assert_eq!(rhs_gf_polynomial(n as u64, &x).unwrap(), alt);
    }

    #[test]
    fn odd_corollary_is_intermediate_plus_last_term() {
        for n in 0..40u64 {
            let m = 2 * n + 1;
            let last = Rational::from(-2).pow(m as i64).unwrap()
                * harmonic(m as usize)
                * q(1, m as i64 + 1);
            assert_eq!(lhs_corollary(m), lhs_corollary_intermediate(n) + &last);
            assert_eq!(rhs_corollary(m), rhs_corollary_intermediate(n) + last);
        }
    }
}
