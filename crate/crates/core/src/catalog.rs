//! Registry of named identities and the per-case verifier.
//!
//! Each [`Identity`] pairs a brute-force left-hand side with a closed-form
//! right-hand side over a parameter space, and a validity predicate that
//! excludes parameters where either side hits a vanishing denominator.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{gauss_second_rhs, GammaValue};
use crate::rational::Rational;
use crate::{abel, hyper, identities as id, legendre};

/// One parameter assignment: an index `n` and, for identities with a second
/// parameter, its rational value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Case {
    pub n: u64,
    pub value: Option<Rational>,
}

impl Case {
    pub fn index(n: u64) -> Self {
        Case { n, value: None }
    }

    pub fn with(n: u64, value: Rational) -> Self {
        Case {
            n,
            value: Some(value),
        }
    }

    fn rational(&self) -> Result<&Rational> {
        self.value
            .as_ref()
            .ok_or_else(|| Error::Precondition("case is missing its rational parameter".into()))
    }
}

#[derive(Clone, Copy, Debug)]
pub enum ParamSpace {
    /// `n = 0..=n_max`.
    Index,
    /// `n = 0..=n_max` crossed with the sweep's rational grid.
    Grid { name: &'static str },
    /// `n = 0..=n_max` crossed with identity-specific points.
    Points {
        name: &'static str,
        points: fn(u64) -> Vec<Rational>,
    },
}

impl ParamSpace {
    pub fn rational_name(&self) -> Option<&'static str> {
        match self {
            ParamSpace::Index => None,
            ParamSpace::Grid { name } | ParamSpace::Points { name, .. } => Some(name),
        }
    }
}

type Side = fn(&Case) -> Result<Rational>;

pub struct Identity {
    pub name: &'static str,
    pub family: &'static str,
    pub description: &'static str,
    pub space: ParamSpace,
    lhs: Side,
    rhs: Side,
    validity: fn(&Case) -> bool,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity")
            .field("name", &self.name)
            .field("space", &self.space)
            .finish_non_exhaustive()
    }
}

impl Identity {
    pub fn lhs(&self, case: &Case) -> Result<Rational> {
        (self.lhs)(case)
    }

    pub fn rhs(&self, case: &Case) -> Result<Rational> {
        (self.rhs)(case)
    }

    pub fn is_valid(&self, case: &Case) -> bool {
        (self.validity)(case)
    }

    /// All cases for `n <= n_max`; grid identities use `grid`.
    pub fn cases(&self, n_max: u64, grid: &[Rational]) -> Vec<Case> {
        let mut out = Vec::new();
        for n in 0..=n_max {
            match self.space {
                ParamSpace::Index => out.push(Case::index(n)),
                ParamSpace::Grid { .. } => {
                    out.extend(grid.iter().cloned().map(|v| Case::with(n, v)))
                }
                ParamSpace::Points { points, .. } => {
                    out.extend(points(n).into_iter().map(|v| Case::with(n, v)))
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: &'static str,
    pub case: Case,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub status: Status,
    pub reason: Option<String>,
    pub elapsed: Duration,
}

/// Evaluates both sides of `identity` at `case` and compares them exactly.
/// Cases outside the validity region are skipped; evaluator errors become
/// failures carrying the error text.
pub fn verify(identity: &'static Identity, case: &Case) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport {
        identity: identity.name,
        case: case.clone(),
        lhs: None,
        rhs: None,
        status: Status::Skip,
        reason: None,
        elapsed: Duration::ZERO,
    };
    if !identity.is_valid(case) {
        report.reason = Some("outside validity region".into());
        report.elapsed = start.elapsed();
        return report;
    }
    let lhs = identity.lhs(case);
    let rhs = identity.rhs(case);
    report.elapsed = start.elapsed();
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            report.status = if l == r { Status::Pass } else { Status::Fail };
            if report.status == Status::Fail {
                report.reason = Some("sides differ".into());
            }
            report.lhs = Some(l);
            report.rhs = Some(r);
        }
        (l, r) => {
            report.status = Status::Fail;
            let err = l
                .as_ref()
                .err()
                .or(r.as_ref().err())
                .expect("one side failed");
            report.reason = Some(err.to_string());
            report.lhs = l.ok();
            report.rhs = r.ok();
        }
    }
    report
}

/// `{-1/3, -1/4, 0, 1/4, 1/3, 1/2, 1, 3/2, 2, 7/5}`.
pub fn default_ell_grid() -> Vec<Rational> {
    [
        (-1, 3),
        (-1, 4),
        (0, 1),
        (1, 4),
        (1, 3),
        (1, 2),
        (1, 1),
        (3, 2),
        (2, 1),
        (7, 5),
    ]
    .iter()
    .map(|&(p, q)| Rational::frac(p, q))
    .collect()
}

fn always(_: &Case) -> bool {
    true
}

fn ell_of(c: &Case) -> &Rational {
    c.value.as_ref().expect("grid case carries a rational")
}

fn has_value(c: &Case) -> bool {
    c.value.is_some()
}

fn gauss_second_valid(c: &Case) -> bool {
    let Some(b) = &c.value else { return false };
    let a = Rational::from(-(c.n as i64));
    hyper::gauss_second_series(&a, b).is_ok()
        && matches!(
            gauss_second_rhs(&a, b),
            GammaValue::Finite { s: 0, .. } | GammaValue::Zero
        )
}

static CATALOG: [Identity; 18] = [
    Identity {
        name: "knuth-old-sum",
        family: "reed-dawson",
        description: "sum (-1/2)^k C(n,k) C(2k,k) = 2^-n C(n,n/2) for even n, 0 for odd n",
        space: ParamSpace::Index,
        lhs: |c| Ok(id::lhs_knuth_old(c.n)),
        rhs: |c| Ok(id::rhs_knuth_old(c.n)),
        validity: always,
    },
    Identity {
        name: "prop1-general-ell",
        family: "reed-dawson",
        description: "sum (-1/2)^k C(n+l,k+l) C(2k+2l,k) = 2^-n C(n+l,n/2) for even n, 0 for odd n",
        space: ParamSpace::Grid { name: "ell" },
        lhs: |c| Ok(id::lhs_prop1(c.n, c.rational()?)),
        rhs: |c| Ok(id::rhs_prop1(c.n, c.rational()?)),
        validity: |c| has_value(c) && !id::prop1_excluded(c.n, ell_of(c)),
    },
    Identity {
        name: "prop1-hypergeometric-form",
        family: "reed-dawson",
        description: "shifted Reed Dawson sum equals C(n+l,n) 2F1[-n, l+1/2; 2l+1 | 2]",
        space: ParamSpace::Grid { name: "ell" },
        lhs: |c| Ok(id::lhs_prop1(c.n, c.rational()?)),
        rhs: |c| hyper::prop1_via_2f1(c.n, c.rational()?),
        validity: |c| {
            has_value(c)
                && !id::prop1_excluded(c.n, ell_of(c))
                && hyper::prop2_as_2f1(c.n, ell_of(c)).is_ok()
        },
    },
    Identity {
        name: "prop2-general-ell",
        family: "reed-dawson",
        description: "sum (-1/2)^k C(n,k) C(2k+2l,k)/C(k+l,k) = 2^-n C(n,n/2)/C(n/2+l,n/2) for even n, 0 for odd n",
        space: ParamSpace::Grid { name: "ell" },
        lhs: |c| id::lhs_prop2(c.n, c.rational()?),
        rhs: |c| id::rhs_prop2(c.n, c.rational()?),
        validity: |c| has_value(c) && !id::prop2_excluded(c.n, ell_of(c)),
    },
    Identity {
        name: "prop2-hypergeometric-form",
        family: "reed-dawson",
        description: "sum (-1/2)^k C(n,k) C(2k+2l,k)/C(k+l,k) equals 2F1[-n, l+1/2; 2l+1 | 2]",
        space: ParamSpace::Grid { name: "ell" },
        lhs: |c| id::lhs_prop2(c.n, c.rational()?),
        rhs: |c| hyper::prop2_as_2f1(c.n, c.rational()?)?.eval_terminating(),
        validity: |c| {
            has_value(c)
                && !id::prop2_excluded(c.n, ell_of(c))
                && hyper::prop2_as_2f1(c.n, ell_of(c)).is_ok()
        },
    },
    Identity {
        name: "kummer-2f1-even",
        family: "hypergeometric",
        description: "2F1[-2n, a; 2a | 2] = (1/2)_n / (a+1/2)_n",
        space: ParamSpace::Grid { name: "a" },
        lhs: |c| hyper::kummer_even_series(c.n, c.rational()?)?.eval_terminating(),
        rhs: |c| hyper::kummer_even(c.n, c.rational()?),
        validity: |c| has_value(c) && hyper::kummer_even(c.n, ell_of(c)).is_ok(),
    },
    Identity {
        name: "kummer-2f1-odd",
        family: "hypergeometric",
        description: "2F1[-(2n+1), a; 2a | 2] = 0",
        space: ParamSpace::Grid { name: "a" },
        lhs: |c| hyper::kummer_odd_series(c.n, c.rational()?)?.eval_terminating(),
        rhs: |c| hyper::kummer_odd_zero(c.n, c.rational()?),
        validity: |c| has_value(c) && hyper::kummer_odd_zero(c.n, ell_of(c)).is_ok(),
    },
    Identity {
        name: "gauss-second-terminating",
        family: "hypergeometric",
        description: "2F1[-n, b; (1-n+b)/2 | 1/2] = sqrt(pi) G((1-n+b)/2) / (G((1-n)/2) G((b+1)/2))",
        space: ParamSpace::Grid { name: "b" },
        lhs: |c| hyper::gauss_second_series(&Rational::from(-(c.n as i64)), c.rational()?)?.eval_terminating(),
        rhs: |c| gauss_second_rhs(&Rational::from(-(c.n as i64)), c.rational()?).to_rational(),
        validity: gauss_second_valid,
    },
    Identity {
        name: "example-3hk-2h2k",
        family: "binomial-harmonic",
        description: "sum_{k<=2n} (-1/2)^k C(2k,k) C(2n,k) (3H_k - 2H_2k) = 4^-n C(2n,n) H_n",
        space: ParamSpace::Index,
        lhs: |c| Ok(id::lhs_example_3hk(c.n)),
        rhs: |c| Ok(id::rhs_example_3hk(c.n)),
        validity: always,
    },
    Identity {
        name: "corollary-odd-harmonic",
        family: "binomial-harmonic",
        description: "sum_{k<=m} (-2)^k C(m,k) H_k/(k+1) = -2/(m+1) O_{(m+1)/2} for odd m, 0 for even m",
        space: ParamSpace::Index,
        lhs: |c| Ok(id::lhs_corollary(c.n)),
        rhs: |c| Ok(id::rhs_corollary(c.n)),
        validity: always,
    },
    Identity {
        name: "corollary-intermediate",
        family: "binomial-harmonic",
        description: "sum_{k<=2n} (-2)^k C(2n+1,k) H_k/(k+1) = (4^n-1)H_2n/(n+1) + H_n/(2(n+1)) + (4^n-1)/((n+1)(2n+1))",
        space: ParamSpace::Index,
        lhs: |c| Ok(id::lhs_corollary_intermediate(c.n)),
        rhs: |c| Ok(id::rhs_corollary_intermediate(c.n)),
        validity: always,
    },
    Identity {
        name: "gf-polynomial",
        family: "binomial-harmonic",
        description: "sum_{k<=2n} (-1/2)^k C(2n,k) 4^k x^k/(k+1) = (2x(1-2x)^2n - (1-2x)^2n + 1)/(2(2n+1)x) at 2n+1 points",
        space: ParamSpace::Points { name: "x", points: id::gf_polynomial_points },
        lhs: |c| Ok(id::lhs_gf_polynomial(c.n, c.rational()?)),
        rhs: |c| id::rhs_gf_polynomial(c.n, c.rational()?),
        validity: has_value,
    },
    Identity {
        name: "tauraso-h2n",
        family: "binomial-harmonic",
        description: "sum_{k<=2n} (-1)^k C(2n,k) C(2n+k,k) C(2k,k) 4^(2n-k) H_k = C(2n,n)^2 H_2n",
        space: ParamSpace::Index,
        lhs: |c| Ok(id::lhs_tauraso(c.n)),
        rhs: |c| Ok(id::rhs_tauraso(c.n)),
        validity: always,
    },
    Identity {
        name: "legendre-moment",
        family: "fourier-legendre",
        description: "int_0^1 x^p P_n(2x-1) dx = G(p+1)^2 / (G(p-n+1) G(p+n+2)) for p in {-1/2, 0, ..., 10}",
        space: ParamSpace::Points { name: "p", points: |_| legendre::moment_points() },
        lhs: |c| legendre::moment_by_expansion(c.rational()?, c.n),
        rhs: |c| legendre::moment(c.rational()?, c.n)?.to_rational(),
        validity: |c| c.value.as_ref().is_some_and(|p| *p > Rational::from(-1)),
    },
    Identity {
        name: "fl-log-moment",
        family: "fourier-legendre",
        description: "int_0^1 ln(x)/sqrt(x) P_n(2x-1) dx = 4(-1)^n H_n/(2n+1) - 8(-1)^n H_2n/(2n+1) - 4(-1)^n/(2n+1)^2",
        space: ParamSpace::Index,
        lhs: |c| Ok(legendre::lhs_log_moment_sqrt(c.n)),
        rhs: |c| Ok(legendre::rhs_log_moment_sqrt(c.n)),
        validity: always,
    },
    Identity {
        name: "odd-knuth",
        family: "fourier-legendre",
        description: "sum (-1/4)^k C(n,k) C(2k,k) O_k = -(1/4)^n C(2n,n) O_n",
        space: ParamSpace::Index,
        lhs: |c| Ok(legendre::lhs_odd_knuth(c.n)),
        rhs: |c| Ok(legendre::rhs_odd_knuth(c.n)),
        validity: always,
    },
    Identity {
        name: "abel-shifted-reed-dawson",
        family: "abel",
        description: "sum (-1/2)^k C(n+l,k+l) C(2k+2l,k) k(n-k)/(k+2l+1) = -2^-n n C(n+l,n/2) for even n, 0 for odd n",
        space: ParamSpace::Grid { name: "ell" },
        lhs: |c| abel::lhs_abel1(c.n, c.rational()?),
        rhs: |c| Ok(abel::rhs_abel1(c.n, c.rational()?)),
        validity: |c| has_value(c) && !abel::abel1_excluded(c.n, ell_of(c)),
    },
    Identity {
        name: "abel-rational-weight",
        family: "abel",
        description: "sum (-1/2)^k C(2k,k) C(n,k) (2k+1)(k^2+3k+3)(n-k)/((k+1)^2(k+2)(k+3)) = 1/2 - [n even] C(n,n/2)(n+1)/(2^n(n+2))",
        space: ParamSpace::Index,
        lhs: |c| Ok(abel::lhs_abel2(c.n)),
        rhs: |c| Ok(abel::rhs_abel2(c.n)),
        validity: always,
    },
];

/// Every registered identity, sorted by name.
pub fn catalog() -> Vec<&'static Identity> {
    let mut all: Vec<&'static Identity> = CATALOG.iter().collect();
    all.sort_by_key(|i| i.name);
    all
}

pub fn find(name: &str) -> Option<&'static Identity> {
    CATALOG.iter().find(|i| i.name == name)
}
