//! Terminating hypergeometric series `pFq[upper; lower | z]` over exact rationals.

use crate::combinat::pochhammer;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperSeries {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    argument: Rational,
    termination: usize,
}

impl HyperSeries {
    /// Builds a series that terminates at `k = N`, where `-N` is the nonpositive
    /// integer upper parameter of smallest magnitude. Lower parameters in
    /// `{-N, ..., 0}` are rejected.
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Result<Self> {
        let termination = upper
            .iter()
            .filter_map(Rational::as_nonpositive_integer)
            .min()
            .ok_or(Error::NonTerminating)? as usize;
        if let Some(bad) = lower.iter().find(|b| {
            b.as_nonpositive_integer()
                .is_some_and(|m| m as usize <= termination)
        }) {
            return Err(Error::LowerParameterVanishes {
                param: bad.to_string(),
                termination,
            });
        }
        Ok(HyperSeries {
            upper,
            lower,
            argument,
            termination,
        })
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn argument(&self) -> &Rational {
        &self.argument
    }

    pub fn termination_index(&self) -> usize {
        self.termination
    }

    /// Sum of all terms `k = 0..=N`; each term is obtained from the previous one
    /// by the ratio `prod(a+k) / prod(b+k) * z / (k+1)`.
    pub fn eval_terminating(&self) -> Result<Rational> {
        let mut term = Rational::one();
        let mut sum = Rational::one();
        for k in 0..self.termination {
            let kr = Rational::from(k);
            let mut num = &self.argument * Rational::one();
            for a in &self.upper {
                num *= a + &kr;
            }
            let mut den = Rational::from(k + 1);
            for b in &self.lower {
                den *= b + &kr;
            }
            term = (term * num).checked_div(&den)?;
            sum += &term;
        }
        Ok(sum)
    }

    /// The `k`-th term computed directly from Pochhammer symbols.
    pub fn term(&self, k: u64) -> Result<Rational> {
        let num: Rational = self.upper.iter().map(|a| pochhammer(a, k)).product();
        let den: Rational = self
            .lower
            .iter()
            .map(|b| pochhammer(b, k))
            .product::<Rational>()
            * Rational::from(crate::combinat::factorial(k));
        (num * self.argument.pow(k as i64)?).checked_div(&den)
    }
}

fn two_f_one(a: Rational, b: Rational, c: Rational, z: Rational) -> Result<HyperSeries> {
    HyperSeries::new(vec![a, b], vec![c], z)
}

/// `2F1[-2n, a; 2a | 2] = (1/2)_n / (a + 1/2)_n`.
pub fn kummer_even(n: u64, a: &Rational) -> Result<Rational> {
    let two_a = a * Rational::from(2);
    if two_a.as_nonpositive_integer().is_some_and(|m| m <= 2 * n) {
        return Err(Error::Precondition(format!(
            "2a = {two_a} is a nonpositive integer >= -2n"
        )));
    }
    let den = pochhammer(&(a + Rational::frac(1, 2)), n);
    if den.is_zero() {
        return Err(Error::Precondition(format!(
            "(a + 1/2)_n vanishes at a = {a}"
        )));
    }
    pochhammer(&Rational::frac(1, 2), n).checked_div(&den)
}

/// `2F1[-2n, a; 2a | 2]` as a series descriptor.
pub fn kummer_even_series(n: u64, a: &Rational) -> Result<HyperSeries> {
    two_f_one(
        Rational::from(-2 * n as i64),
        a.clone(),
        a * Rational::from(2),
        Rational::from(2),
    )
}

/// `2F1[-(2n+1), a; 2a | 2] = 0`: the odd-parity companion of [`kummer_even`].
pub fn kummer_odd_zero(n: u64, a: &Rational) -> Result<Rational> {
    let two_a = a * Rational::from(2);
    if two_a
        .as_nonpositive_integer()
        .is_some_and(|m| m <= 2 * n + 1)
    {
        return Err(Error::Precondition(format!(
            "2a = {two_a} is a nonpositive integer >= -(2n+1)"
        )));
    }
    Ok(Rational::zero())
}

/// `2F1[-(2n+1), a; 2a | 2]` as a series descriptor.
pub fn kummer_odd_series(n: u64, a: &Rational) -> Result<HyperSeries> {
    two_f_one(
        Rational::from(-(2 * n as i64) - 1),
        a.clone(),
        a * Rational::from(2),
        Rational::from(2),
    )
}

/// `2F1[-2n, a; 2a + 1 | 2]`. This series does not vanish in general
/// (`n = 1, a = 1` gives `1/3`); it is kept so the printed form can be checked.
pub fn kummer_shifted_lower_series(n: u64, a: &Rational) -> Result<HyperSeries> {
    two_f_one(
        Rational::from(-2 * n as i64),
        a.clone(),
        a * Rational::from(2) + Rational::one(),
        Rational::from(2),
    )
}

/// `2F1[a, b; (a+b+1)/2 | 1/2]`, the series side of Gauss's second theorem.
pub fn gauss_second_series(a: &Rational, b: &Rational) -> Result<HyperSeries> {
    let c = (a + b + Rational::one()) * Rational::frac(1, 2);
    two_f_one(a.clone(), b.clone(), c, Rational::frac(1, 2))
}

/// `2F1[-n, l + 1/2; 2l + 1 | 2]`, the hypergeometric form of
/// `sum_k (-1/2)^k C(n,k) C(2k+2l,k) / C(k+l,k)`.
///
/// The sum runs over `0..=n`, so a lower parameter vanishing anywhere in that
/// range is rejected even when `l + 1/2` would truncate the series earlier.
pub fn prop2_as_2f1(n: u64, ell: &Rational) -> Result<HyperSeries> {
    let lower = ell * Rational::from(2) + Rational::one();
    if lower.as_nonpositive_integer().is_some_and(|m| m < n) {
        return Err(Error::LowerParameterVanishes {
            param: lower.to_string(),
            termination: n as usize,
        });
    }
    two_f_one(
        Rational::from(-(n as i64)),
        ell + Rational::frac(1, 2),
        ell * Rational::from(2) + Rational::one(),
        Rational::from(2),
    )
}

/// `2F1[-n, l + 1/2; 2l + 1 | 2]` times `Γ(n+l+1) / (Γ(n+1) Γ(l+1)) = C(n+l, n)`,
/// the hypergeometric form of the shifted Reed Dawson sum.
pub fn prop1_via_2f1(n: u64, ell: &Rational) -> Result<Rational> {
    let prefactor = crate::combinat::gbinom(&(Rational::from(n) + ell), n);
    Ok(prefactor * prop2_as_2f1(n, ell)?.eval_terminating()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{gauss_second_rhs, GammaValue};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn series(upper: &[Rational], lower: &[Rational], z: Rational) -> HyperSeries {
        HyperSeries::new(upper.to_vec(), lower.to_vec(), z).unwrap()
    }

    #[test]
    fn eval_examples() {
        let s = series(
            &[Rational::from(-2), Rational::from(1)],
            &[Rational::from(2)],
            Rational::from(2),
        );
        assert_eq!(s.eval_terminating().unwrap(), q(1, 3));
        let s = series(
            &[Rational::from(-2), Rational::from(2)],
            &[q(1, 2)],
            q(1, 2),
        );
        assert_eq!(s.eval_terminating().unwrap(), Rational::from(-1));
        let s = series(&[Rational::zero()], &[], Rational::zero());
        assert_eq!(s.termination_index(), 0);
        assert_eq!(s.eval_terminating().unwrap(), Rational::one());
    }

    #[test]
    fn termination_uses_smallest_magnitude() {
        let s = series(
            &[Rational::from(-5), Rational::from(-2)],
            &[q(1, 3)],
            Rational::one(),
        );
        assert_eq!(s.termination_index(), 2);
    }

    #[test]
    fn invalid_series_rejected() {
        assert_eq!(
            HyperSeries::new(vec![q(1, 2)], vec![], Rational::one()),
            Err(Error::NonTerminating)
        );
        assert!(matches!(
            HyperSeries::new(
                vec![Rational::from(-3)],
                vec![Rational::from(-2)],
                Rational::one()
            ),
            Err(Error::LowerParameterVanishes { .. })
        ));
        assert!(HyperSeries::new(
            vec![Rational::from(-3)],
            vec![Rational::from(-4)],
            Rational::one()
        )
        .is_ok());
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(kummer_even(1, &Rational::one()).unwrap(), q(1, 3));
        assert_eq!(kummer_even(0, &q(5, 7)).unwrap(), Rational::one());
        assert_eq!(kummer_even(2, &q(1, 2)).unwrap(), q(3, 8));
        assert_eq!(
            kummer_even_series(2, &q(1, 2))
                .unwrap()
                .eval_terminating()
                .unwrap(),
            q(3, 8)
        );

        for (n, a) in [
            (0, q(5, 7)),
            (1, Rational::one()),
            (1, q(3, 2)),
            (2, Rational::from(2)),
        ] {
            assert_eq!(
                kummer_odd_series(n, &a)
                    .unwrap()
                    .eval_terminating()
                    .unwrap(),
                Rational::zero()
            );
            assert_eq!(kummer_odd_zero(n, &a).unwrap(), Rational::zero());
        }
        assert!(kummer_odd_zero(3, &q(-3, 2)).is_err());
        assert!(kummer_odd_zero(0, &q(-1, 2)).is_err());
        assert!(kummer_even(2, &q(-1, 2)).is_err());
    }

    #[test]
    fn shifted_lower_series_does_not_vanish() {
        // 1 + (-2)(1)/(3) * 2 + (-2)(-1)(1)(2)/((3)(4)(2)) * 4 = 1 - 4/3 + 2/3
        let s = kummer_shifted_lower_series(1, &Rational::one()).unwrap();
        assert_eq!(s.eval_terminating().unwrap(), q(1, 3));
        let s = kummer_shifted_lower_series(1, &q(3, 2)).unwrap();
        assert_eq!(s.eval_terminating().unwrap(), q(1, 4));
    }

    #[test]
    fn prop2_series_examples() {
        assert_eq!(
            prop2_as_2f1(2, &Rational::one())
                .unwrap()
                .eval_terminating()
                .unwrap(),
            q(1, 4)
        );
        assert_eq!(
            prop2_as_2f1(1, &Rational::zero())
                .unwrap()
                .eval_terminating()
                .unwrap(),
            Rational::zero()
        );
        assert_eq!(
            prop2_as_2f1(0, &q(2, 9))
                .unwrap()
                .eval_terminating()
                .unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn kummer_grid() {
        let grid: Vec<Rational> = [
            (1, 3),
            (2, 5),
            (1, 1),
            (7, 4),
            (-1, 3),
            (-2, 7),
            (5, 2),
            (3, 1),
        ]
        .iter()
        .map(|&(p, d)| q(p, d))
        .collect();
        for n in 0..=30u64 {
            for a in &grid {
                let brute = kummer_even_series(n, a)
                    .unwrap()
                    .eval_terminating()
                    .unwrap();
                assert_eq!(brute, kummer_even(n, a).unwrap(), "n={n} a={a}");
                let brute = kummer_odd_series(n, a).unwrap().eval_terminating().unwrap();
                assert_eq!(brute, kummer_odd_zero(n, a).unwrap(), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn gauss_second_terminating() {
        for n in 0..=20i64 {
            for b in [q(1, 3), q(2, 7), q(-5, 3), q(9, 4)] {
                let a = Rational::from(-n);
                let brute = gauss_second_series(&a, &b)
                    .unwrap()
                    .eval_terminating()
                    .unwrap();
                let closed = gauss_second_rhs(&a, &b);
                if n % 2 == 1 {
                    assert_eq!(closed, GammaValue::Zero);
                } else {
                    assert!(
                        matches!(closed, GammaValue::Finite { s: 0, .. })
                            || closed == GammaValue::Zero
                    );
                }
                assert_eq!(brute, closed.to_rational().unwrap(), "n={n} b={b}");
            }
        }
    }

    #[test]
    fn recurrence_matches_direct_terms() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut checked = 0;
        while checked < 100 {
            let n = rng.gen_range(0..12i64);
            let mut upper = vec![Rational::from(-n)];
            for _ in 0..rng.gen_range(0..3) {
                upper.push(q(rng.gen_range(-20..20), rng.gen_range(1..7)));
            }
            let lower: Vec<Rational> = (0..rng.gen_range(0..3))
                .map(|_| q(rng.gen_range(-20..20), rng.gen_range(1..7)))
                .collect();
            let z = q(rng.gen_range(-9..9), rng.gen_range(1..5));
            let Ok(s) = HyperSeries::new(upper, lower, z) else {
                continue;
            };
            let direct: Rational = (0..=s.termination_index() as u64)
                .map(|k| s.term(k).unwrap())
                .sum();
            assert_eq!(s.eval_terminating().unwrap(), direct);
            checked += 1;
        }
    }
}
