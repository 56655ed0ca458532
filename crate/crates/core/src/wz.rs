//! Checking Wilf–Zeilberger certificates on exact grids.
//!
//! A pair `(F, R)` with `G = R·F` is a WZ pair when
//! `F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k)` for all integers `n, k`. When `F`
//! has finite support in `k`, summing over `k` telescopes and `sum_k F(n,k)`
//! does not depend on `n`.
//!
//! Where the certificate's denominator vanishes, `G` is only defined as the
//! limit in which the pole cancels a zero of `F`. A pair may carry a closed form
//! for those limit values; without one such points are reported as
//! [`Error::CertificateDenominatorZero`].

use crate::combinat::{binom, binom2k_shift, gbinom};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Evaluator = fn(u64, i64, &Rational) -> Result<Rational>;

#[derive(Clone, Copy)]
pub struct WzPair {
    pub name: &'static str,
    pub description: &'static str,
    /// `F(n, k)`; callers only pass `k` inside [`WzPair::support`].
    f: Evaluator,
    /// `R(n, k)`; `Err(CertificateDenominatorZero)` at its poles.
    certificate: Evaluator,
    /// `G(n, k)` at the certificate's poles.
    removable: Option<Evaluator>,
    /// Inclusive `k` range outside of which `F(n, ·)` is zero.
    support: fn(u64) -> (i64, i64),
}

impl WzPair {
    pub fn f(&self, n: u64, k: i64, ell: &Rational) -> Result<Rational> {
        let (lo, hi) = (self.support)(n);
        if k < lo || k > hi {
            return Ok(Rational::zero());
        }
        (self.f)(n, k, ell)
    }

    pub fn support(&self, n: u64) -> (i64, i64) {
        (self.support)(n)
    }

    pub fn certificate(&self, n: u64, k: i64, ell: &Rational) -> Result<Rational> {
        (self.certificate)(n, k, ell)
    }

    /// `G(n, k) = R(n, k) F(n, k)`, falling back to the removable-limit closed
    /// form at poles of `R`.
    pub fn g(&self, n: u64, k: i64, ell: &Rational) -> Result<Rational> {
        match self.certificate(n, k, ell) {
            Ok(r) => Ok(r * self.f(n, k, ell)?),
            Err(Error::CertificateDenominatorZero { .. }) if self.removable.is_some() => {
                (self.removable.unwrap())(n, k, ell)
            }
            Err(e) => Err(e),
        }
    }

    /// The same pair with the limit closed form dropped, so that every pole of
    /// `R` surfaces as an error.
    pub fn strict(mut self) -> Self {
        self.removable = None;
        self
    }
}

/// `F(n+1,k) - F(n,k) - G(n,k+1) + G(n,k)`.
pub fn wz_residual(pair: &WzPair, n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    Ok(pair.f(n + 1, k, ell)? - pair.f(n, k, ell)? - pair.g(n, k + 1, ell)? + pair.g(n, k, ell)?)
}

/// `sum_k F(n, k)` for `n = 0..=n_max`.
pub fn wz_sum_constant(pair: &WzPair, n_max: u64, ell: &Rational) -> Result<Vec<Rational>> {
    (0..=n_max)
        .map(|n| {
            let (lo, hi) = pair.support(n);
            (lo..=hi)
                .map(|k| pair.f(n, k, ell))
                .sum::<Result<Rational>>()
        })
        .collect()
}

fn even_support(n: u64) -> (i64, i64) {
    (0, 2 * n as i64)
}

fn rat(k: i64) -> Rational {
    Rational::from(k)
}

fn neg_half_pow(k: i64) -> Result<Rational> {
    Rational::frac(-1, 2).pow(k)
}

fn four_pow(n: u64) -> Rational {
    Rational::from(4).pow(n as i64).expect("nonnegative power")
}

/// `C(2n+l, k+l) C(2k+2l, k) 4^n (-1/2)^k / C(2n+l, n)`.
fn f_prop1(n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    let top = Rational::from(2 * n) + ell;
    let num = gbinom(&top, (2 * n as i64 - k) as u64)
        * binom2k_shift(k as u64, ell)
        * four_pow(n)
        * neg_half_pow(k)?;
    num.checked_div(&gbinom(&top, n))
}

/// `G(n,k) = -k(k+2l) C(2n+2+l, k+l) C(2k+2l,k) 4^n (-1/2)^k / ((2n+l+1)(2n+l+2) C(2n+l,n))`,
/// the pole-free form of `R·F`.
fn g_prop1_removable(n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    if k < 0 || k > 2 * n as i64 + 2 {
        return Ok(Rational::zero());
    }
    let top = Rational::from(2 * n) + ell;
    let kr = rat(k);
    let lead = -(&kr * (&kr + ell * Rational::from(2)));
    let shifted = gbinom(&(&top + Rational::from(2)), (2 * n as i64 + 2 - k) as u64);
    let num = lead * shifted * binom2k_shift(k as u64, ell) * four_pow(n) * neg_half_pow(k)?;
    let den = (&top + Rational::one()) * (&top + Rational::from(2)) * gbinom(&top, n);
    num.checked_div(&den)
}

/// `C(2n,k) C(2k+2l,k) (-1/2)^k / C(k+l,k)` divided by `4^-n C(2n,n) / C(n+l,n)`.
fn f_prop2(n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    let ku = k as u64;
    let term = (neg_half_pow(k)? * Rational::from(binom(2 * n, ku)) * binom2k_shift(ku, ell))
        .checked_div(&gbinom(&(Rational::from(ku) + ell), ku))?;
    term.checked_div(&prop2_even_value(n, ell)?)
}

fn prop2_even_value(n: u64, ell: &Rational) -> Result<Rational> {
    (Rational::from(binom(2 * n, n)) * four_pow(n).recip()?)
        .checked_div(&gbinom(&(Rational::from(n) + ell), n))
}

/// Pole-free `R·F` for the second pair: `C(2n,k)/((k-2n-1)(k-2n-2)) = C(2n+2,k)/((2n+1)(2n+2))`.
fn g_prop2_removable(n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    if k < 0 || k > 2 * n as i64 + 2 {
        return Ok(Rational::zero());
    }
    let ku = k as u64;
    let kr = rat(k);
    let lead = -(&kr * (&kr + ell * Rational::from(2)));
    let term =
        (lead * neg_half_pow(k)? * Rational::from(binom(2 * n + 2, ku)) * binom2k_shift(ku, ell))
            .checked_div(&gbinom(&(Rational::from(ku) + ell), ku))?;
    term.checked_div(&(Rational::from((2 * n + 1) * (2 * n + 2)) * prop2_even_value(n, ell)?))
}

/// `-k(k+2l) / ((-2n+k-1)(-2n+k-2))`.
fn cert_prop1(n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    let n = n as i64;
    certificate_ratio(
        n,
        k,
        ell,
        Rational::zero(),
        (-2 * n + k - 1) * (-2 * n + k - 2),
    )
}

/// `-k(k+2l) / ((k-2n-2)(k-2n-1))`.
fn cert_prop2(n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    let n = n as i64;
    certificate_ratio(
        n,
        k,
        ell,
        Rational::zero(),
        (k - 2 * n - 2) * (k - 2 * n - 1),
    )
}

/// Numerator `k(k+2l+1)` instead of `k(k+2l)`.
fn cert_corrupt_numerator(n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    let n = n as i64;
    certificate_ratio(
        n,
        k,
        ell,
        Rational::one(),
        (k - 2 * n - 1) * (k - 2 * n - 2),
    )
}

/// Denominator `(k-2n-2)(k-2n-3)` instead of `(k-2n-2)(k-2n-1)`.
fn cert_corrupt_denominator(n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    let n = n as i64;
    certificate_ratio(
        n,
        k,
        ell,
        Rational::zero(),
        (k - 2 * n - 2) * (k - 2 * n - 3),
    )
}

fn certificate_ratio(
    n: i64,
    k: i64,
    ell: &Rational,
    extra: Rational,
    den: i64,
) -> Result<Rational> {
    if den == 0 {
        return Err(Error::CertificateDenominatorZero { n: n as usize, k });
    }
    let kr = rat(k);
    let num = -(&kr * (&kr + ell * Rational::from(2) + extra));
    Ok(num * Rational::frac(1, den))
}

/// Normalized summand with `(-1/3)^k` in place of `(-1/2)^k`.
fn f_corrupt_summand(n: u64, k: i64, ell: &Rational) -> Result<Rational> {
    let scale = Rational::frac(2, 3).pow(k)?;
    Ok(f_prop1(n, k, ell)? * scale)
}

pub const PROP1: WzPair = WzPair {
    name: "prop1",
    description: "shifted Reed Dawson sum over 0..=2n, normalized to 1",
    f: f_prop1,
    certificate: cert_prop1,
    removable: Some(g_prop1_removable),
    support: even_support,
};

pub const PROP2: WzPair = WzPair {
    name: "prop2",
    description: "Reed Dawson sum with C(k+l,k) divisor over 0..=2n, normalized to 1",
    f: f_prop2,
    certificate: cert_prop2,
    removable: Some(g_prop2_removable),
    support: even_support,
};

pub const NEGATIVE_CONTROL: WzPair = WzPair {
    name: "negative-control",
    description: "first pair with certificate numerator k(k+2l+1)",
    f: f_prop1,
    certificate: cert_corrupt_numerator,
    removable: None,
    support: even_support,
};

pub const NEGATIVE_CONTROL_DENOMINATOR: WzPair = WzPair {
    name: "negative-control-denominator",
    description: "second pair with certificate denominator (k-2n-2)(k-2n-3)",
    f: f_prop2,
    certificate: cert_corrupt_denominator,
    removable: None,
    support: even_support,
};

pub const NEGATIVE_CONTROL_SUMMAND: WzPair = WzPair {
    name: "negative-control-summand",
    description: "first certificate against a summand with (-1/3)^k",
    f: f_corrupt_summand,
    certificate: cert_prop1,
    removable: None,
    support: even_support,
};

pub fn register_prop1_certificate() -> WzPair {
    PROP1
}

pub fn register_prop2_certificate() -> WzPair {
    PROP2
}

pub const ALL_PAIRS: [WzPair; 5] = [
    PROP1,
    PROP2,
    NEGATIVE_CONTROL,
    NEGATIVE_CONTROL_DENOMINATOR,
    NEGATIVE_CONTROL_SUMMAND,
];

pub fn find_pair(name: &str) -> Option<WzPair> {
    ALL_PAIRS.iter().copied().find(|p| p.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualPoint {
    pub n: u64,
    pub k: i64,
    pub ell: Rational,
    pub residual: Result<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSum {
    pub n: u64,
    pub ell: Rational,
    pub sum: Result<Rational>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridReport {
    pub residuals: Vec<ResidualPoint>,
    pub row_sums: Vec<RowSum>,
}

impl GridReport {
    pub fn nonzero_residuals(&self) -> impl Iterator<Item = &ResidualPoint> {
        self.residuals
            .iter()
            .filter(|p| matches!(&p.residual, Ok(r) if !r.is_zero()))
    }

    pub fn undefined_residuals(&self) -> impl Iterator<Item = &ResidualPoint> {
        self.residuals.iter().filter(|p| p.residual.is_err())
    }

    pub fn bad_row_sums(&self) -> impl Iterator<Item = &RowSum> {
        self.row_sums
            .iter()
            .filter(|r| !matches!(&r.sum, Ok(s) if s.is_one()))
    }

    pub fn passed(&self) -> bool {
        self.nonzero_residuals().next().is_none()
            && self.undefined_residuals().next().is_none()
            && self.bad_row_sums().next().is_none()
    }
}

/// Residuals on `0 <= n <= n_max`, `-1 <= k <= 2n+3`, and row sums, for every `l` in `ells`.
pub fn check_grid(pair: &WzPair, n_max: u64, ells: &[Rational]) -> GridReport {
    let mut report = GridReport::default();
    for ell in ells {
        for n in 0..=n_max {
            for k in -1..=2 * n as i64 + 3 {
                report.residuals.push(ResidualPoint {
                    n,
                    k,
                    ell: ell.clone(),
                    residual: wz_residual(pair, n, k, ell),
                });
            }
        }
        match wz_sum_constant(pair, n_max, ell) {
            Ok(sums) => report
                .row_sums
                .extend(sums.into_iter().enumerate().map(|(n, s)| RowSum {
                    n: n as u64,
                    ell: ell.clone(),
                    sum: Ok(s),
                })),
            Err(e) => report.row_sums.push(RowSum {
                n: 0,
                ell: ell.clone(),
                sum: Err(e),
            }),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn g_vanishes_at_k_zero() {
        for pair in [PROP1, PROP2] {
            for n in 0..6 {
                assert_eq!(pair.g(n, 0, &q(1, 3)).unwrap(), Rational::zero());
            }
        }
    }

    #[test]
    fn removable_form_matches_product_away_from_poles() {
        for pair in [PROP1, PROP2] {
            let limit = pair.removable.unwrap();
            for ell in [q(-1, 3), q(1, 2), Rational::from(2)] {
                for n in 0..8u64 {
                    for k in -1..=2 * n as i64 + 4 {
                        if let Ok(r) = pair.certificate(n, k, &ell) {
                            let product = r * pair.f(n, k, &ell).unwrap();
                            assert_eq!(
                                limit(n, k, &ell).unwrap(),
                                product,
                                "{} n={n} k={k}",
                                pair.name
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn strict_pair_reports_certificate_poles() {
        let strict = PROP1.strict();
        let err = wz_residual(&strict, 2, 4, &q(1, 2)).unwrap_err();
        assert_eq!(err, Error::CertificateDenominatorZero { n: 2, k: 5 });
        assert_eq!(
            wz_residual(&strict, 2, 3, &q(1, 2)).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn certificates_verify_small_grid() {
        for pair in [PROP1, PROP2] {
            let report = check_grid(&pair, 6, &[q(1, 4), Rational::zero(), q(7, 5)]);
            assert!(report.passed(), "{}", pair.name);
        }
    }

    #[test]
    fn row_sums_are_one() {
        for ell in [Rational::zero(), q(1, 2)] {
            let sums = wz_sum_constant(&PROP1, 20, &ell).unwrap();
            assert_eq!(sums.len(), 21);
            assert!(sums.iter().all(Rational::is_one));
        }
        assert!(wz_sum_constant(&PROP2, 10, &q(1, 3))
            .unwrap()
            .iter()
            .all(Rational::is_one));
    }

    #[test]
    fn negative_controls_fail() {
        let grid = [q(1, 4), q(1, 2)];
        let r = check_grid(&NEGATIVE_CONTROL, 4, &grid);
        assert!(r.nonzero_residuals().count() > 0);
        assert!(
            r.bad_row_sums().next().is_none(),
            "row sums depend on F only"
        );

        let r = check_grid(&NEGATIVE_CONTROL_DENOMINATOR, 4, &grid);
        assert!(r.nonzero_residuals().count() > 0);

        let r = check_grid(&NEGATIVE_CONTROL_SUMMAND, 4, &grid);
        assert!(r.nonzero_residuals().count() > 0);
        assert!(r.bad_row_sums().count() > 0);
    }

    #[test]
    fn lookup() {
        assert_eq!(find_pair("prop2").unwrap().name, "prop2");
        assert!(find_pair("nope").is_none());
        assert_eq!(register_prop1_certificate().name, "prop1");
        assert_eq!(register_prop2_certificate().name, "prop2");
    }
}
