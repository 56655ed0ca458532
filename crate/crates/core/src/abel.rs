//! Modified Abel lemma on summation by parts, truncated at a finite cutoff.
//!
//! With `∇τ_i = τ_i - τ_{i-1}` and `Δ̇τ_i = τ_i - τ_{i+1}`,
//!
//! ```text
//! sum_{i=1}^{M} B_i ∇A_i = A_M B_{M+1} - A_0 B_1 + sum_{i=1}^{M} A_i Δ̇B_i
//! ```
//!
//! holds for any two sequences. The boundary term `A_M B_{M+1}` stands in for
//! the limit of the infinite form.

use crate::combinat::{binom, binom2k_shift, gbinom, pochhammer};
use crate::error::{Error, Result};
use crate::identities::prop1_excluded;
use crate::rational::Rational;

type Seq<'a> = Box<dyn Fn(u64) -> Result<Rational> + Send + Sync + 'a>;

pub struct SequencePair<'a> {
    a: Seq<'a>,
    b: Seq<'a>,
    cutoff: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelSides {
    /// `sum B_i ∇A_i`
    pub lhs: Rational,
    pub boundary: Rational,
    /// `sum A_i Δ̇B_i`
    pub tail: Rational,
}

impl AbelSides {
    pub fn rhs(&self) -> Rational {
        &self.boundary + &self.tail
    }
}

impl<'a> SequencePair<'a> {
    pub fn new(
        a: impl Fn(u64) -> Result<Rational> + Send + Sync + 'a,
        b: impl Fn(u64) -> Result<Rational> + Send + Sync + 'a,
        cutoff: u64,
    ) -> Self {
        SequencePair {
            a: Box::new(a),
            b: Box::new(b),
            cutoff,
        }
    }

    pub fn from_slices(a: &'a [Rational], b: &'a [Rational]) -> Result<Self> {
        if a.is_empty() || b.len() < 2 || b.len() < a.len() + 1 {
            return Err(Error::Precondition(
                "need len(B) >= len(A) + 1 and len(A) >= 1".into(),
            ));
        }
        let cutoff = a.len() as u64 - 1;
        Ok(SequencePair::new(
            move |i| Ok(a[i as usize].clone()),
            move |i| Ok(b[i as usize].clone()),
            cutoff,
        ))
    }

    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    pub fn with_cutoff(mut self, cutoff: u64) -> Self {
        self.cutoff = cutoff;
        self
    }

    pub fn sides(&self) -> Result<AbelSides> {
        let m = self.cutoff;
        let a: Vec<Rational> = (0..=m).map(&self.a).collect::<Result<_>>()?;
        let b: Vec<Rational> = (0..=m + 1).map(&self.b).collect::<Result<_>>()?;
        let mut lhs = Rational::zero();
        let mut tail = Rational::zero();
        for i in 1..=m as usize {
            lhs += &b[i] * (&a[i] - &a[i - 1]);
            tail += &a[i] * (&b[i] - &b[i + 1]);
        }
        let boundary = &a[m as usize] * &b[m as usize + 1] - &a[0] * &b[1];
        Ok(AbelSides {
            lhs,
            boundary,
            tail,
        })
    }
}

/// Left side minus right side of the truncated lemma; zero for every pair.
pub fn abel_transform_residual(pair: &SequencePair<'_>) -> Result<Rational> {
    let s = pair.sides()?;
    Ok(&s.lhs - s.rhs())
}

/// `A_i = -(i-n)(-n)_i / (n i!)` and `B_i = 2^i (l+1/2)_i / (2l+1)_i`.
///
/// `A_i` vanishes for `i >= n`, so any cutoff `M >= n` gives the same sums.
pub fn reed_dawson_pair(n: u64, ell: Rational, cutoff: u64) -> Result<SequencePair<'static>> {
    if n == 0 {
        return Err(Error::Precondition("the pair divides by n".into()));
    }
    let neg_n = Rational::from(-(n as i64));
    let a = move |i: u64| -> Result<Rational> {
        let num = -(Rational::from(i) + &neg_n) * pochhammer(&neg_n, i);
        num.checked_div(&(Rational::from(n) * Rational::from(crate::combinat::factorial(i))))
    };
    let b = move |i: u64| -> Result<Rational> {
        let num = Rational::from(2).pow(i as i64)? * pochhammer(&(&ell + Rational::frac(1, 2)), i);
        num.checked_div(&pochhammer(
            &(&ell * Rational::from(2) + Rational::one()),
            i,
        ))
    };
    Ok(SequencePair::new(a, b, cutoff))
}

/// `sum_{k=0}^n (-1/2)^k C(n+l,k+l) C(2k+2l,k) k(n-k)/(k+2l+1)`.
pub fn lhs_abel1(n: u64, ell: &Rational) -> Result<Rational> {
    let top = Rational::from(n) + ell;
    let mut sum = Rational::zero();
    for k in 0..=n {
        let weight = Rational::from(k * (n - k))
            .checked_div(&(Rational::from(k + 1) + ell * Rational::from(2)))?;
        sum += Rational::frac(-1, 2).pow(k as i64)?
            * gbinom(&top, n - k)
            * binom2k_shift(k, ell)
            * weight;
    }
    Ok(sum)
}

/// `-2^-n n C(n+l, n/2)` for even `n`, else 0.
pub fn rhs_abel1(n: u64, ell: &Rational) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    -(Rational::frac(1, 2)
        .pow(n as i64)
        .expect("nonnegative power")
        * Rational::from(n)
        * gbinom(&(Rational::from(n) + ell), n / 2))
}

/// `k + 2l + 1 = 0` for some `0 <= k <= n`, or a singular shifted binomial.
pub fn abel1_excluded(n: u64, ell: &Rational) -> bool {
    let shift = ell * Rational::from(2) + Rational::one();
    shift.as_nonpositive_integer().is_some_and(|m| m <= n) || prop1_excluded(n, ell)
}

pub fn identity_abel1(n: u64, ell: &Rational) -> Result<(Rational, Rational)> {
    Ok((lhs_abel1(n, ell)?, rhs_abel1(n, ell)))
}

/// `sum_{k=0}^n (-1/2)^k C(2k,k) C(n,k) (2k+1)(k^2+3k+3)(n-k) / ((k+1)^2 (k+2)(k+3))`.
pub fn lhs_abel2(n: u64) -> Rational {
    (0..=n)
        .map(|k| {
            let k_i = k as i64;
            let weight = Rational::frac(
                (2 * k_i + 1) * (k_i * k_i + 3 * k_i + 3) * (n as i64 - k_i),
                (k_i + 1) * (k_i + 1) * (k_i + 2) * (k_i + 3),
            );
            Rational::frac(-1, 2).pow(k_i).expect("nonnegative power")
                * Rational::from(binom(2 * k, k) * binom(n, k))
                * weight
        })
        .sum()
}

/// `1/2 - C(n,n/2)(n+1) / (2^n (n+2))` for even `n`, `1/2` for odd `n`.
pub fn rhs_abel2(n: u64) -> Rational {
    let half = Rational::frac(1, 2);
    if n % 2 == 1 {
        return half;
    }
    half.clone()
        - half.pow(n as i64).expect("nonnegative power")
            * Rational::from(binom(n, n / 2))
            * Rational::frac(n as i64 + 1, n as i64 + 2)
}

pub fn identity_abel2(n: u64) -> (Rational, Rational) {
    (lhs_abel2(n), rhs_abel2(n))
}
