//! Closed-form generating-function factors.
//!
//! Every family is a product of these atoms. Each atom is assembled from
//! elementary series (`e^x`, `log(1+x)`, the polylogarithm of `1 − e^{−x}`)
//! with exact division, so requesting order `N` computes the pieces at
//! `N + consumed_orders()` first.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use super::Series;
use crate::coeffring::{MultiPoly, Rational};
use crate::engine::{Engine, Mutation};
use crate::error::{Error, Result};

/// One factor of a generating function.
///
/// Symbolic arguments are polynomials: a slot is usually a bare symbol
/// (`γ`), but the identities also need `−γ`, `η − ω` and `η + ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AtomSpec {
    /// `(1+x)^p`
    OnePlusXPow(MultiPoly),
    /// `e^{c·x}` for a polynomial `c` of degree at most one.
    ExpLinear(MultiPoly),
    /// `log(1+x)`
    Log1p,
    /// `log(1+x)/x`
    Log1pOverX,
    /// `log(1+x) / Li_k(1 − e^{−x})`
    Log1pOverPolylog { k: i32 },
    /// `Li_k(1 − e^{−x}) / (e^x − 1)`
    PolylogOverExpm1 { k: i32 },
    /// `Li_k(1 − e^{−x}) / log(1+x)`
    PolylogOverLog1p { k: i32 },
    /// `(x^m / (λe^x − Σ_{l<m} x^l/l!))^a`
    ApostolBernoulliCore { m: u32, lambda: Rational, a: u32 },
    /// `(2 / (λe^x + 1))^a`
    ApostolEulerCore { lambda: Rational, a: u32 },
    /// `(2x / (λe^x + 1))^a`
    ApostolGenocchiCore { lambda: Rational, a: u32 },
}

impl AtomSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            AtomSpec::ApostolBernoulliCore { m: 0, .. } => {
                Err(Error::InvalidParameter("m must be a positive integer".into()))
            }
            AtomSpec::ApostolEulerCore { lambda, .. } | AtomSpec::ApostolGenocchiCore { lambda, .. }
                if *lambda == Rational::from(-1) =>
            {
                Err(Error::InvalidParameter("lambda must not equal -1".into()))
            }
            AtomSpec::ExpLinear(c) if c.total_degree() > 1 => {
                Err(Error::InvalidParameter("exponential argument must be linear".into()))
            }
            _ => Ok(()),
        }
    }

    /// Orders lost to divisions while building this atom.
    pub fn consumed_orders(&self) -> usize {
        match self {
            AtomSpec::OnePlusXPow(_)
            | AtomSpec::ExpLinear(_)
            | AtomSpec::Log1p
            | AtomSpec::ApostolEulerCore { .. }
            | AtomSpec::ApostolGenocchiCore { .. } => 0,
            AtomSpec::Log1pOverX
            | AtomSpec::Log1pOverPolylog { .. }
            | AtomSpec::PolylogOverExpm1 { .. }
            | AtomSpec::PolylogOverLog1p { .. } => 1,
            AtomSpec::ApostolBernoulliCore { m, lambda, a } => {
                if *a > 0 && lambda.is_one() {
                    *m as usize
                } else {
                    0
                }
            }
        }
    }

    /// Whether the coefficients involve a symbol.
    pub fn is_symbolic(&self) -> bool {
        matches!(self, AtomSpec::OnePlusXPow(_) | AtomSpec::ExpLinear(_))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AtomSpec::OnePlusXPow(_) => "ONE_PLUS_X_POW_SYM",
            AtomSpec::ExpLinear(_) => "EXP_LINEAR",
            AtomSpec::Log1p => "LOG1P",
            AtomSpec::Log1pOverX => "LOG1P_OVER_X",
            AtomSpec::Log1pOverPolylog { .. } => "LOG1P_OVER_POLYLOG",
            AtomSpec::PolylogOverExpm1 { .. } => "POLYLOG_OVER_EXPM1",
            AtomSpec::PolylogOverLog1p { .. } => "POLYLOG_OVER_LOG1P",
            AtomSpec::ApostolBernoulliCore { .. } => "APOSTOL_BERNOULLI_CORE",
            AtomSpec::ApostolEulerCore { .. } => "APOSTOL_EULER_CORE",
            AtomSpec::ApostolGenocchiCore { .. } => "APOSTOL_GENOCCHI_CORE",
        }
    }
}

impl fmt::Display for AtomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomSpec::OnePlusXPow(p) => write!(f, "(1+x)^({p})"),
            AtomSpec::ExpLinear(c) => write!(f, "exp(({c})x)"),
            AtomSpec::Log1p => write!(f, "log(1+x)"),
            AtomSpec::Log1pOverX => write!(f, "log(1+x)/x"),
            AtomSpec::Log1pOverPolylog { k } => write!(f, "log(1+x)/Li_{k}(1-e^-x)"),
            AtomSpec::PolylogOverExpm1 { k } => write!(f, "Li_{k}(1-e^-x)/(e^x-1)"),
            AtomSpec::PolylogOverLog1p { k } => write!(f, "Li_{k}(1-e^-x)/log(1+x)"),
            AtomSpec::ApostolBernoulliCore { m, lambda, a } => {
                write!(f, "(x^{m}/({lambda}e^x - T_{}(x)))^{a}", m - 1)
            }
            AtomSpec::ApostolEulerCore { lambda, a } => write!(f, "(2/({lambda}e^x+1))^{a}"),
            AtomSpec::ApostolGenocchiCore { lambda, a } => write!(f, "(2x/({lambda}e^x+1))^{a}"),
        }
    }
}

fn inv_factorials(order: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut f = Rational::one();
    for n in 0..=order {
        if n > 0 {
            f = f.checked_div(&Rational::from(n as i64)).expect("n > 0");
        }
        out.push(f.clone());
    }
    out
}

fn exp_x(order: usize) -> Series {
    Series::from_rationals(inv_factorials(order))
}

/// `λe^x + shift` with the first `drop_terms` exponential terms removed,
/// i.e. `λe^x − Σ_{l<m} x^l/l!` when `shift = 0` and `drop_terms = m`.
fn apostol_denominator(lambda: &Rational, drop_terms: usize, shift: &Rational, order: usize) -> Series {
    Series::from_rationals(inv_factorials(order).into_iter().enumerate().map(|(n, f)| {
        let mut c = lambda * &f;
        if n < drop_terms {
            c -= f;
        }
        if n == 0 {
            c += shift;
        }
        c
    }))
}

/// `Li_k(1 − e^{−x})` to the given order, by composing the polylogarithm
/// series `Σ_{j≥1} z^j / j^k` with `z = 1 − e^{−x}`.
pub fn polylog_of_one_minus_exp_neg(k: i32, order: usize) -> Series {
    let inner = Series::from_rationals(inv_factorials(order).into_iter().enumerate().map(|(n, f)| match n {
        0 => Rational::zero(),
        n if n % 2 == 1 => f,
        _ => -f,
    }));
    let outer: Vec<Rational> = (0..=order)
        .map(|j| match j {
            0 => Rational::zero(),
            j => Rational::from(j as i64).pow(-k).expect("j >= 1"),
        })
        .collect();
    Series::compose(&outer, &inner).expect("1 - e^-x has zero constant term")
}

impl Engine {
    /// `log(1+x)`
    pub(crate) fn log1p(&self, order: usize) -> Series {
        Series::from_rationals((0..=order).map(|n| match n {
            0 => Rational::zero(),
            2 if self.is(Mutation::Log1pSignFlip) => Rational::frac(1, 2),
            n if n % 2 == 1 => Rational::frac(1, n as i64),
            n => Rational::frac(-1, n as i64),
        }))
    }

    /// Builds an atom exactly to `order`.
    pub fn atom(&self, spec: &AtomSpec, order: usize) -> Result<Series> {
        let raw = self.atom_at_working_order(spec, order + spec.consumed_orders())?;
        raw.truncate(order)
    }

    /// Builds the atom's pieces at `working` order and returns whatever
    /// survives the divisions (order `working − consumed_orders()`).
    pub fn atom_at_working_order(&self, spec: &AtomSpec, working: usize) -> Result<Series> {
        spec.validate()?;
        if spec.is_symbolic() {
            return self.build_atom(spec, working);
        }
        type Key = (AtomSpec, usize, Option<Mutation>);
        static MEMO: OnceLock<Mutex<HashMap<Key, Series>>> = OnceLock::new();
        let memo = MEMO.get_or_init(Default::default);
        let key = (spec.clone(), working, self.mutation());
        if let Some(hit) = memo.lock().expect("atom memo").get(&key) {
            return Ok(hit.clone());
        }
        let series = self.build_atom(spec, working)?;
        memo.lock().expect("atom memo").insert(key, series.clone());
        Ok(series)
    }

    fn build_atom(&self, spec: &AtomSpec, working: usize) -> Result<Series> {
        let w = working;
        let series = match spec {
            AtomSpec::OnePlusXPow(p) => {
                let inv = inv_factorials(w);
                Series::from_coeffs(
                    self.falling_factorials(p, w as u32)
                        .iter()
                        .zip(&inv)
                        .map(|(ff, f)| ff.scale(f))
                        .collect(),
                )
            }
            AtomSpec::ExpLinear(c) => {
                let inv = inv_factorials(w);
                let mut power = MultiPoly::one();
                let mut coeffs = Vec::with_capacity(w + 1);
                for (n, f) in inv.iter().enumerate() {
                    if n > 0 {
                        power = &power * c;
                    }
                    coeffs.push(power.scale(f));
                }
                Series::from_coeffs(coeffs)
            }
            AtomSpec::Log1p => self.log1p(w),
            AtomSpec::Log1pOverX => self.log1p(w).div(&Series::monomial(1, w))?,
            AtomSpec::Log1pOverPolylog { k } => self.log1p(w).div(&polylog_of_one_minus_exp_neg(*k, w))?,
            AtomSpec::PolylogOverExpm1 { k } => {
                let expm1 = exp_x(w).sub(&Series::one(w));
                polylog_of_one_minus_exp_neg(*k, w).div(&expm1)?
            }
            AtomSpec::PolylogOverLog1p { k } => polylog_of_one_minus_exp_neg(*k, w).div(&self.log1p(w))?,
            AtomSpec::ApostolBernoulliCore { m, lambda, a } => {
                if *a == 0 {
                    Series::one(w)
                } else {
                    let den = apostol_denominator(lambda, *m as usize, &Rational::zero(), w);
                    Series::monomial(*m as usize, w).div(&den)?.pow(*a)
                }
            }
            AtomSpec::ApostolEulerCore { lambda, a } => {
                let den = apostol_denominator(lambda, 0, &Rational::one(), w);
                let two = Series::one(w).scale(&Rational::from(2));
                two.div(&den)?.pow(*a)
            }
            AtomSpec::ApostolGenocchiCore { lambda, a } => {
                let den = apostol_denominator(lambda, 0, &Rational::one(), w);
                let two_x = Series::monomial(1, w).scale(&Rational::from(2));
                two_x.div(&den)?.pow(*a)
            }
        };
        Ok(series)
    }
}
