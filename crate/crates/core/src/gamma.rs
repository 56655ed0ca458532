//! Exact reduction of products of Gamma functions at rational arguments.
//!
//! A [`GammaExpr`] is `scalar * prod Γ(a_i)^(e_i)`. [`GammaExpr::reduce`] groups
//! the arguments by their class modulo 1, rewrites every member of a class as
//! the class representative times a Pochhammer product, and then evaluates what
//! is left: factorials for positive integers, `√π` for the half-integer class.
//! Nonpositive integer arguments are poles of Γ and are classified instead of
//! evaluated.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::{factorial, pochhammer};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct GammaExpr {
    scalar: Rational,
    /// argument -> nonzero exponent
    factors: BTreeMap<Rational, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaValue {
    /// `q * π^(s/2)`, `q != 0`.
    Finite {
        q: Rational,
        s: i64,
    },
    Zero,
    Pole,
    Irreducible(GammaExpr),
}

impl GammaValue {
    /// Rational value of a `Finite { s: 0 }` or `Zero` result.
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            GammaValue::Finite { q, s: 0 } => Ok(q.clone()),
            GammaValue::Zero => Ok(Rational::zero()),
            other => Err(Error::NotRational(format!("{other:?}"))),
        }
    }
}

impl GammaExpr {
    pub fn new(scalar: Rational) -> Self {
        GammaExpr {
            scalar,
            factors: BTreeMap::new(),
        }
    }

    /// Multiplies by `Γ(arg)^exp`, merging with an existing factor at the same argument.
    pub fn gamma(mut self, arg: Rational, exp: i64) -> Self {
        self.push(arg, exp);
        self
    }

    pub fn push(&mut self, arg: Rational, exp: i64) {
        if exp == 0 {
            return;
        }
        let e = *self
            .factors
            .entry(arg.clone())
            .and_modify(|e| *e += exp)
            .or_insert(exp);
        if e == 0 {
            self.factors.remove(&arg);
        }
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.factors.iter().map(|(a, e)| (a, *e))
    }

    pub fn reduce(&self) -> GammaValue {
        let mut scalar = self.scalar.clone();
        let mut sqrt_pi = 0i64;
        let mut residual = GammaExpr::new(Rational::one());
        let mut numer_poles = 0i64;
        let mut denom_poles = 0i64;

        let mut classes: BTreeMap<Rational, Vec<(&Rational, i64)>> = BTreeMap::new();
        for (arg, exp) in self.factors() {
            classes.entry(arg.fract()).or_default().push((arg, exp));
        }

        for (rep, members) in classes {
            if rep.is_zero() {
                for (arg, exp) in members {
                    if arg.is_positive() {
                        let m = arg.to_i64().expect("argument fits in i64") as u64;
                        let f = Rational::from(factorial(m - 1));
                        scalar *= f.pow(exp).expect("factorial is nonzero");
                    } else {
                        residual.push(arg.clone(), exp);
                        if exp > 0 {
                            numer_poles += exp;
                        } else {
                            denom_poles -= exp;
                        }
                    }
                }
                continue;
            }

            // Γ(rep + j) = Γ(rep) (rep)_j for j >= 0, Γ(rep) / (rep + j)_{-j} for j < 0.
            let mut total = 0i64;
            for (arg, exp) in members {
                let shift = arg.floor();
                let j: i64 = i64::try_from(shift).expect("shift fits in i64");
                let ratio = if j >= 0 {
                    pochhammer(&rep, j as u64)
                } else {
                    pochhammer(arg, j.unsigned_abs())
                        .recip()
                        .expect("non-integer Pochhammer is nonzero")
                };
                scalar *= ratio.pow(exp).expect("non-integer Pochhammer is nonzero");
                total += exp;
            }
            if total != 0 {
                if rep == Rational::frac(1, 2) {
                    sqrt_pi += total;
                } else {
                    residual.push(rep, total);
                }
            }
        }

        if numer_poles > 0 && (denom_poles > 0 || scalar.is_zero()) {
            return GammaValue::Irreducible(residual.finish(scalar, sqrt_pi));
        }
        if numer_poles > 0 {
            return GammaValue::Pole;
        }
        if denom_poles > 0 || scalar.is_zero() {
            return GammaValue::Zero;
        }
        if !residual.factors.is_empty() {
            return GammaValue::Irreducible(residual.finish(scalar, sqrt_pi));
        }
        GammaValue::Finite {
            q: scalar,
            s: sqrt_pi,
        }
    }

    fn finish(mut self, scalar: Rational, sqrt_pi: i64) -> GammaExpr {
        self.scalar = scalar;
        self.push(Rational::frac(1, 2), sqrt_pi);
        self
    }
}

impl fmt::Debug for GammaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        for (arg, exp) in &self.factors {
            write!(f, "·Γ({arg})^{exp}")?;
        }
        Ok(())
    }
}

/// Right-hand side of Gauss's second summation theorem,
/// `√π Γ((a+b+1)/2) / (Γ((a+1)/2) Γ((b+1)/2))`, reduced.
pub fn gauss_second_rhs(a: &Rational, b: &Rational) -> GammaValue {
    let half = Rational::frac(1, 2);
    GammaExpr::new(Rational::one())
        .gamma(half.clone(), 1)
        .gamma((a + b + Rational::one()) * &half, 1)
        .gamma((a + Rational::one()) * &half, -1)
        .gamma((b + Rational::one()) * &half, -1)
        .reduce()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::gbinom;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn g(arg: Rational) -> GammaExpr {
        GammaExpr::new(Rational::one()).gamma(arg, 1)
    }

    #[test]
    fn half_integer_values() {
        assert_eq!(g(q(5, 2)).reduce(), GammaValue::Finite { q: q(3, 4), s: 1 });
        assert_eq!(
            g(q(-1, 2)).reduce(),
            GammaValue::Finite { q: q(-2, 1), s: 1 }
        );
        assert_eq!(
            g(q(1, 2)).reduce(),
            GammaValue::Finite {
                q: Rational::one(),
                s: 1
            }
        );
        assert_eq!(
            g(Rational::from(5)).reduce(),
            GammaValue::Finite {
                q: Rational::from(24),
                s: 0
            }
        );
    }

    #[test]
    fn half_integer_closed_forms() {
        // Γ(m+1/2) = (2m)! √π / (4^m m!), Γ(1/2-m) = (-4)^m m! √π / (2m)!
        for m in 0..25u64 {
            let f2m = Rational::from(factorial(2 * m));
            let fm = Rational::from(factorial(m));
            let up = f2m
                .checked_div(&(Rational::from(4).pow(m as i64).unwrap() * &fm))
                .unwrap();
            let down = (Rational::from(-4).pow(m as i64).unwrap() * &fm)
                .checked_div(&f2m)
                .unwrap();
            let mr = Rational::from(m);
            assert_eq!(
                g(&mr + q(1, 2)).reduce(),
                GammaValue::Finite { q: up, s: 1 }
            );
            assert_eq!(
                g(q(1, 2) - &mr).reduce(),
                GammaValue::Finite { q: down, s: 1 }
            );
        }
    }

    #[test]
    fn pochhammer_ratio_at_third() {
        let x = q(1, 3);
        let e = GammaExpr::new(Rational::one())
            .gamma(&x + Rational::from(3), 1)
            .gamma(x, -1);
        assert_eq!(e.reduce(), GammaValue::Finite { q: q(28, 27), s: 0 });
    }

    #[test]
    fn pole_semantics() {
        assert_eq!(g(Rational::zero()).reduce(), GammaValue::Pole);
        let den = GammaExpr::new(Rational::one()).gamma(Rational::zero(), -1);
        assert_eq!(den.reduce(), GammaValue::Zero);
        let both = GammaExpr::new(Rational::one())
            .gamma(Rational::from(-1), 1)
            .gamma(Rational::from(-3), -1);
        assert!(matches!(both.reduce(), GammaValue::Irreducible(_)));
        let zero_times_pole = GammaExpr::new(Rational::zero()).gamma(Rational::from(-2), 1);
        assert!(matches!(
            zero_times_pole.reduce(),
            GammaValue::Irreducible(_)
        ));
        let zero_scalar = GammaExpr::new(Rational::zero()).gamma(q(1, 3), 1);
        assert_eq!(zero_scalar.reduce(), GammaValue::Zero);
    }

    #[test]
    fn same_argument_merges() {
        let e = GammaExpr::new(Rational::from(3))
            .gamma(q(1, 3), 2)
            .gamma(q(1, 3), -2);
        assert_eq!(e.factors().count(), 0);
        assert_eq!(
            e.reduce(),
            GammaValue::Finite {
                q: Rational::from(3),
                s: 0
            }
        );
    }

    #[test]
    fn generic_class_is_irreducible() {
        match g(q(7, 3)).reduce() {
            GammaValue::Irreducible(r) => {
                assert_eq!(r.scalar(), &q(4, 9));
                assert_eq!(r.factors().collect::<Vec<_>>(), vec![(&q(1, 3), 1)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reflection_at_half_integers() {
        for m in 0..=20i64 {
            let e = GammaExpr::new(Rational::one())
                .gamma(Rational::from(m) + q(1, 2), 1)
                .gamma(q(1, 2) - Rational::from(m), 1);
            let sign = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                e.reduce(),
                GammaValue::Finite {
                    q: Rational::from(sign),
                    s: 2
                }
            );
        }
    }

    #[test]
    fn gauss_second_examples() {
        assert_eq!(
            gauss_second_rhs(&Rational::from(-2), &Rational::from(2)),
            GammaValue::Finite {
                q: Rational::from(-1),
                s: 0
            }
        );
        assert_eq!(
            gauss_second_rhs(&Rational::from(-3), &q(2, 7)),
            GammaValue::Zero
        );
        assert_eq!(
            gauss_second_rhs(&Rational::zero(), &Rational::zero()),
            GammaValue::Finite {
                q: Rational::one(),
                s: 0
            }
        );
    }

    #[test]
    fn shifted_binomial_via_gamma() {
        // C(n+l, k+l) = Γ(n+l+1) / (Γ(k+l+1) Γ(n-k+1)) agrees with gbinom(n+l, n-k).
        for ell in [q(-1, 3), q(1, 4), q(1, 2), q(7, 5), Rational::from(2)] {
            for n in 0..12u64 {
                for k in 0..=n {
                    let e = GammaExpr::new(Rational::one())
                        .gamma(Rational::from(n + 1) + &ell, 1)
                        .gamma(Rational::from(k + 1) + &ell, -1)
                        .gamma(Rational::from(n - k + 1), -1);
                    let expect = gbinom(&(Rational::from(n) + &ell), n - k);
                    assert_eq!(
                        e.reduce().to_rational().unwrap(),
                        expect,
                        "n={n} k={k} l={ell}"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn reorder_and_split_invariance(
            args in proptest::collection::vec((-12i64..12, 1i64..5, -2i64..3), 1..6),
            seed in any::<u64>(),
        ) {
            let mut forward = GammaExpr::new(Rational::frac(3, 5));
            let mut split = GammaExpr::new(Rational::frac(3, 5));
            for (p, d, e) in &args {
                forward.push(Rational::frac(*p, *d), *e);
            }
            let mut order: Vec<usize> = (0..args.len()).collect();
            order.sort_by_key(|i| seed.rotate_left(*i as u32) ^ *i as u64);
            for i in order {
                let (p, d, e) = args[i];
                // Γ(x)^e as e separate single-exponent factors
                for _ in 0..e.abs() {
                    split.push(Rational::frac(p, d), e.signum());
                }
            }
            prop_assert_eq!(forward.reduce(), split.reduce());
        }
    }
}
