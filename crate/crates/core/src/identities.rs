//! Machine checks of the GABPDP identities.
//!
//! Each check builds the two sides of an identity as sequences of exact
//! polynomials and compares them index by index. Nothing is sampled: a
//! pass means the two sides agree as elements of `ℚ[γ, η, ω]` for every
//! index up to the requested order.
//!
//! Substitutions such as `γ → γ + ω` are done on the polynomials
//! themselves ([`MultiPoly::substitute`]), not by rebuilding the series
//! with shifted atoms, so those checks exercise two independent routes.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeffring::{binom, MultiPoly, Rational, Symbol};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::families::{FamilySpec, Params};

/// The nine identities, named by what they relate.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// `P_n = Σ C(n,j) D^{(k)}_{n−j}(γ) B^{[m−1]}_{j,a}(η;λ)`
    DaeheeSplit,
    /// `P_n(γ) = (P_{n+1}(γ+1) − P_{n+1}(γ)) / (n+1)`
    GammaDifference,
    /// `P_n(γ+ω) = Σ C(n,j) P_{n−j}(γ) (ω)_j`
    GammaAddition,
    /// `Σ C(n,j) B^{(k)}_j P_{n−j} = Σ C(n,j) B_j Q_{n−j}`, `Q` the log(1+x)/x variant
    PolyBernoulliExchange,
    /// `B^{[m−1]}_{n,a}(η;λ) = Σ C(n,j) b^{(k)}_j(−γ) P_{n−j}`
    SecondKindInversion,
    /// `P_{b+c}(η) = Σ_{n≤b,q≤c} C(b,n)C(c,q)(η−ω)^{n+q} P_{b+c−n−q}(ω)`
    ImplicitSummation,
    /// `P_{n,a+b}(γ,η+ω) = Σ C(n,j) P_{n−j,a}(γ,η) B^{[m−1]}_{j,b}(ω;λ)`
    OrderSplit,
    /// `P_n = Σ C(n,j) D^{(k)}_{n−j}(γ; η−ω) B^{[m−1]}_{j,a}(ω;λ)`
    EtaSplit,
    /// `P_n(η+1) = Σ C(n,j) P_{n−j}(η)`
    EtaUnitShift,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::DaeheeSplit,
        Theorem::GammaDifference,
        Theorem::GammaAddition,
        Theorem::PolyBernoulliExchange,
        Theorem::SecondKindInversion,
        Theorem::ImplicitSummation,
        Theorem::OrderSplit,
        Theorem::EtaSplit,
        Theorem::EtaUnitShift,
    ];

    /// Stable identifier used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            Theorem::DaeheeSplit => "2.1",
            Theorem::GammaDifference => "2.2",
            Theorem::GammaAddition => "2.3",
            Theorem::PolyBernoulliExchange => "2.4",
            Theorem::SecondKindInversion => "2.5",
            Theorem::ImplicitSummation => "3.1",
            Theorem::OrderSplit => "3.2",
            Theorem::EtaSplit => "3.3",
            Theorem::EtaUnitShift => "3.4",
        }
    }

    pub fn from_id(id: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.id() == id.trim())
    }
}

/// Collapses of the GABPDP family onto older families.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reduction {
    /// `m = 1`: Apostol-Bernoulli based poly-Daehee.
    LevelOne,
    /// `m = 1, λ = 1, a = 1`: poly-Daehee times Bernoulli.
    BernoulliPolyDaehee,
    /// `k = 1`: Bernoulli based Daehee.
    PolylogOne,
    /// `m = 1, a = 0, η = 0`: poly-Daehee.
    PolyDaehee,
    /// `m = 1, k = 1, a = 0, η = 0`: Daehee.
    Daehee,
}

impl Reduction {
    pub const ALL: [Reduction; 5] = [
        Reduction::LevelOne,
        Reduction::BernoulliPolyDaehee,
        Reduction::PolylogOne,
        Reduction::PolyDaehee,
        Reduction::Daehee,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Reduction::LevelOne => "1",
            Reduction::BernoulliPolyDaehee => "2",
            Reduction::PolylogOne => "3",
            Reduction::PolyDaehee => "4",
            Reduction::Daehee => "5",
        }
    }

    pub fn applies(self, p: &GridPoint) -> bool {
        match self {
            Reduction::LevelOne => p.m == 1,
            Reduction::BernoulliPolyDaehee => p.m == 1 && p.a == 1 && p.lambda.is_one(),
            Reduction::PolylogOne => p.k == 1,
            Reduction::PolyDaehee => p.m == 1 && p.a == 0,
            Reduction::Daehee => p.m == 1 && p.a == 0 && p.k == 1,
        }
    }
}

/// Classical number sequences checked against recurrences that never
/// touch the series engine.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Anchor {
    Bernoulli,
    Daehee,
    Euler,
    ApostolBernoulli,
}

impl Anchor {
    pub const ALL: [Anchor; 4] = [
        Anchor::Bernoulli,
        Anchor::Daehee,
        Anchor::Euler,
        Anchor::ApostolBernoulli,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Anchor::Bernoulli => "bernoulli",
            Anchor::Daehee => "daehee",
            Anchor::Euler => "euler",
            Anchor::ApostolBernoulli => "apostol_bernoulli_lambda2",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Anchor(Anchor),
    Theorem(Theorem),
    Reduction(Reduction),
}

impl Check {
    fn tag(self) -> &'static str {
        match self {
            Check::Anchor(_) => "ANCHOR",
            Check::Theorem(_) => "THM",
            Check::Reduction(_) => "RED",
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            Check::Anchor(a) => a.id(),
            Check::Theorem(t) => t.id(),
            Check::Reduction(r) => r.id(),
        }
    }
}

/// One parameter combination of the verification grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridPoint {
    pub k: i32,
    pub m: u32,
    pub a: u32,
    pub lambda: Rational,
}

impl GridPoint {
    pub fn new(k: i32, m: u32, a: u32, lambda: Rational) -> Self {
        GridPoint { k, m, a, lambda }
    }

    fn params(&self) -> Params {
        Params {
            k: self.k,
            m: self.m,
            a: self.a,
            b: 0,
            lambda: self.lambda.clone(),
        }
    }

    fn with_a(&self, a: u32) -> Params {
        Params { a, ..self.params() }
    }
}

impl Ord for GridPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k, self.m, self.a, &self.lambda).cmp(&(other.k, other.m, other.a, &other.lambda))
    }
}

impl PartialOrd for GridPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Parameter ranges for a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub ks: Vec<i32>,
    pub ms: Vec<u32>,
    pub as_: Vec<u32>,
    pub bs: Vec<u32>,
    pub lambdas: Vec<Rational>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            ks: vec![-2, -1, 0, 1, 2, 3],
            ms: vec![1, 2, 3],
            as_: vec![0, 1, 2],
            bs: vec![0, 1],
            lambdas: ["1", "2", "-3/2", "1/3"]
                .iter()
                .map(|s| s.parse().expect("literal"))
                .collect(),
        }
    }
}

impl Grid {
    pub fn points(&self) -> Vec<GridPoint> {
        let mut out = Vec::new();
        for &k in &self.ks {
            for &m in &self.ms {
                for &a in &self.as_ {
                    for lambda in &self.lambdas {
                        out.push(GridPoint::new(k, m, a, lambda.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.ks.is_empty() || self.ms.is_empty() || self.as_.is_empty() || self.bs.is_empty() || self.lambdas.is_empty()
    }
}

/// The two sides of an identity, index by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    pub lhs: Vec<MultiPoly>,
    pub rhs: Vec<MultiPoly>,
}

impl Sides {
    pub fn first_mismatch(&self) -> Option<usize> {
        if self.lhs.len() != self.rhs.len() {
            return Some(self.lhs.len().min(self.rhs.len()));
        }
        self.lhs.iter().zip(&self.rhs).position(|(l, r)| l != r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    /// Index of the first differing member. For the implicit summation
    /// formula this is `b·(C+1) + c`.
    pub index: usize,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub check: Check,
    pub point: Option<GridPoint>,
    pub b: Option<u32>,
    pub order: usize,
    pub status: Status,
    pub first_fail: Option<Discrepancy>,
    /// Set when the engine refused to build one of the sides.
    pub error: Option<String>,
}

impl IdentityReport {
    fn from_sides(check: Check, point: Option<GridPoint>, b: Option<u32>, order: usize, sides: Sides) -> Self {
        let first_fail = sides.first_mismatch().map(|index| Discrepancy {
            index,
            lhs: sides.lhs.get(index).cloned().unwrap_or_default(),
            rhs: sides.rhs.get(index).cloned().unwrap_or_default(),
        });
        IdentityReport {
            check,
            point,
            b,
            order,
            status: if first_fail.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            first_fail,
            error: None,
        }
    }

    fn from_error(check: Check, point: Option<GridPoint>, b: Option<u32>, order: usize, err: Error) -> Self {
        IdentityReport {
            check,
            point,
            b,
            order,
            status: Status::Error,
            first_fail: None,
            error: Some(err.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn sort_key(&self) -> (Check, Option<&GridPoint>, Option<u32>) {
        (self.check, self.point.as_ref(), self.b)
    }

    pub fn record(&self) -> ReportRecord {
        let p = self.point.as_ref();
        ReportRecord {
            kind: self.check.tag(),
            id: self.check.id(),
            k: p.map(|p| p.k),
            m: p.map(|p| p.m),
            a: p.map(|p| p.a),
            b: self.b,
            lambda: p.map(|p| p.lambda.to_string()),
            order: self.order,
            status: self.status,
            first_fail: self.first_fail.as_ref().map(|d| FailRecord {
                n: d.index,
                lhs: d.lhs.to_string(),
                rhs: d.rhs.to_string(),
            }),
            error: self.error.clone(),
        }
    }
}

impl fmt::Display for IdentityReport {
    /// `THM <id> k=<k> m=<m> a=<a> λ=<p/q> N=<N>: PASS|FAIL[ n=<n>]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.check.tag(), self.check.id())?;
        if let Some(p) = &self.point {
            write!(f, " k={} m={} a={}", p.k, p.m, p.a)?;
            if let Some(b) = self.b {
                write!(f, " b={b}")?;
            }
            write!(f, " λ={}", p.lambda)?;
        }
        write!(f, " N={}: ", self.order)?;
        match self.status {
            Status::Pass => f.write_str("PASS"),
            Status::Fail => {
                f.write_str("FAIL")?;
                if let Some(d) = &self.first_fail {
                    write!(f, " n={}", d.index)?;
                }
                Ok(())
            }
            Status::Error => write!(f, "ERROR {}", self.error.as_deref().unwrap_or("")),
        }
    }
}

/// Flat, serializable view of a report.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub kind: &'static str,
    pub id: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub order: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_fail: Option<FailRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FailRecord {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

// ---- building blocks ----

fn sym(s: Symbol) -> MultiPoly {
    MultiPoly::symbol(s)
}

fn members(engine: &Engine, spec: &FamilySpec, order: usize) -> Result<Vec<MultiPoly>> {
    Ok(engine.family(spec, order)?.members)
}

fn gabpdp(params: Params) -> Result<FamilySpec> {
    FamilySpec::new("gabpdp", params)
}

/// `Σ_j C(n,j) f_{n−j} g_j` for every `n` up to the common length.
fn binomial_convolution(f: &[MultiPoly], g: &[MultiPoly]) -> Vec<MultiPoly> {
    let len = f.len().min(g.len());
    (0..len)
        .map(|n| {
            let mut acc = MultiPoly::zero();
            for j in 0..=n {
                let (a, b) = (&f[n - j], &g[j]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let c = binom(n as u32, j as u32);
                match (a.as_constant(), b.as_constant()) {
                    (Some(ca), _) => acc.add_scaled(b, &(ca * &c)),
                    (None, Some(cb)) => acc.add_scaled(a, &(cb * &c)),
                    (None, None) => acc.add_product(&a.scale(&c), b),
                }
            }
            acc
        })
        .collect()
}

/// `P_n = (P_{n+1}(γ+1) − P_{n+1}(γ)) / (n+1)` for `n < len − 1`.
pub fn gamma_difference_sides(table: &[MultiPoly]) -> Sides {
    let n_max = table.len().saturating_sub(1);
    let one = MultiPoly::one();
    let rhs = (0..n_max)
        .map(|n| {
            let next = &table[n + 1];
            let diff = &next.shift(Symbol::Gamma, &one) - next;
            diff.scale(&Rational::frac(1, n as i64 + 1))
        })
        .collect();
    Sides {
        lhs: table[..n_max].to_vec(),
        rhs,
    }
}

/// `P_n(γ+ω) = Σ C(n,j) P_{n−j}(γ) (ω)_j`
pub fn gamma_addition_sides(engine: &Engine, table: &[MultiPoly]) -> Sides {
    let omega = sym(Symbol::Omega);
    let lhs = table.iter().map(|p| p.shift(Symbol::Gamma, &omega)).collect();
    let falling = engine.falling_factorials(&omega, table.len().saturating_sub(1) as u32);
    Sides {
        lhs,
        rhs: binomial_convolution(table, &falling),
    }
}

/// `P_n(η+1) = Σ C(n,j) P_{n−j}(η)`
pub fn eta_unit_shift_sides(table: &[MultiPoly]) -> Sides {
    let lhs = table.iter().map(|p| p.shift(Symbol::Eta, &MultiPoly::one())).collect();
    let ones = vec![MultiPoly::one(); table.len()];
    Sides {
        lhs,
        rhs: binomial_convolution(table, &ones),
    }
}

/// Both sides of a theorem at one grid point.
///
/// `b` is only read by [`Theorem::OrderSplit`]. The implicit summation
/// formula runs with `B = C = min(6, order/2)`.
pub fn theorem_sides(engine: &Engine, theorem: Theorem, point: &GridPoint, b: u32, order: usize) -> Result<Sides> {
    let p = point.params();
    let n = order;
    let sides = match theorem {
        Theorem::DaeheeSplit => {
            let lhs = members(engine, &gabpdp(p.clone())?, n)?;
            let daehee = members(engine, &FamilySpec::new("poly_daehee", p.clone())?, n)?;
            let core = members(engine, &FamilySpec::new("gen_apostol_bernoulli_m", p)?, n)?;
            Sides {
                lhs,
                rhs: binomial_convolution(&daehee, &core),
            }
        }
        Theorem::GammaDifference => gamma_difference_sides(&members(engine, &gabpdp(p)?, n)?),
        Theorem::GammaAddition => gamma_addition_sides(engine, &members(engine, &gabpdp(p)?, n)?),
        Theorem::PolyBernoulliExchange => {
            let table = members(engine, &gabpdp(p.clone())?, n)?;
            let zero = MultiPoly::zero();
            let poly_bernoulli = FamilySpec::new("poly_bernoulli", p.clone())?.with_exp(zero.clone())?;
            let bernoulli = FamilySpec::new("bernoulli", p.clone())?.with_exp(zero)?;
            let based = members(engine, &FamilySpec::new("bernoulli_based_daehee", p)?, n)?;
            Sides {
                lhs: binomial_convolution(&members(engine, &poly_bernoulli, n)?, &table),
                rhs: binomial_convolution(&members(engine, &bernoulli, n)?, &based),
            }
        }
        Theorem::SecondKindInversion => {
            let table = members(engine, &gabpdp(p.clone())?, n)?;
            let core = members(engine, &FamilySpec::new("gen_apostol_bernoulli_m", p.clone())?, n)?;
            let second_kind = FamilySpec::new("poly_bernoulli_2nd", p)?.with_pow(-sym(Symbol::Gamma))?;
            Sides {
                lhs: core,
                rhs: binomial_convolution(&members(engine, &second_kind, n)?, &table),
            }
        }
        Theorem::ImplicitSummation => {
            let bc = (n / 2).min(6);
            return implicit_summation_sides(engine, point, bc, bc);
        }
        Theorem::OrderSplit => {
            let lhs_spec = gabpdp(point.with_a(point.a + b))?.with_exp(&sym(Symbol::Eta) + &sym(Symbol::Omega))?;
            let table = members(engine, &gabpdp(p)?, n)?;
            let core = FamilySpec::new("gen_apostol_bernoulli_m", point.with_a(b))?.with_exp(Symbol::Omega)?;
            Sides {
                lhs: members(engine, &lhs_spec, n)?,
                rhs: binomial_convolution(&table, &members(engine, &core, n)?),
            }
        }
        Theorem::EtaSplit => {
            let table = members(engine, &gabpdp(p.clone())?, n)?;
            let two_param = FamilySpec::new("poly_daehee_two_param", p.clone())?
                .with_exp(&sym(Symbol::Eta) - &sym(Symbol::Omega))?;
            let core = FamilySpec::new("gen_apostol_bernoulli_m", p)?.with_exp(Symbol::Omega)?;
            Sides {
                lhs: table,
                rhs: binomial_convolution(&members(engine, &two_param, n)?, &members(engine, &core, n)?),
            }
        }
        Theorem::EtaUnitShift => eta_unit_shift_sides(&members(engine, &gabpdp(p)?, n)?),
    };
    Ok(sides)
}

/// Implicit summation formula for all `b ≤ big_b`, `c ≤ big_c`, flattened
/// as index `b·(big_c+1) + c`.
pub fn implicit_summation_sides(engine: &Engine, point: &GridPoint, big_b: usize, big_c: usize) -> Result<Sides> {
    let order = big_b + big_c;
    let spec = gabpdp(point.params())?;
    let at_eta = members(engine, &spec, order)?;
    let at_omega = members(engine, &spec.with_exp(Symbol::Omega)?, order)?;
    let diff = &sym(Symbol::Eta) - &sym(Symbol::Omega);
    let diff_pows: Vec<MultiPoly> = (0..=order).map(|s| diff.pow(s as u32)).collect();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for b in 0..=big_b {
        for c in 0..=big_c {
            lhs.push(at_eta[b + c].clone());
            let mut acc = MultiPoly::zero();
            for s in 0..=(b + c) {
                // Σ over n ≤ b, q ≤ c with n + q = s
                let weight: Rational = (0..=b.min(s))
                    .filter(|nn| s - nn <= c)
                    .map(|nn| binom(b as u32, nn as u32) * binom(c as u32, (s - nn) as u32))
                    .sum();
                if weight.is_zero() {
                    continue;
                }
                acc.add_product(&diff_pows[s].scale(&weight), &at_omega[b + c - s]);
            }
            rhs.push(acc);
        }
    }
    Ok(Sides { lhs, rhs })
}

/// Both sides of a collapse onto an older family.
pub fn reduction_sides(engine: &Engine, reduction: Reduction, point: &GridPoint, order: usize) -> Result<Sides> {
    if !reduction.applies(point) {
        return Err(Error::InvalidParameter(format!(
            "reduction {} does not apply at k={} m={} a={} lambda={}",
            reduction.id(),
            point.k,
            point.m,
            point.a,
            point.lambda
        )));
    }
    let p = point.params();
    let n = order;
    let spec = gabpdp(p.clone())?;
    let sides = match reduction {
        Reduction::LevelOne => Sides {
            lhs: members(engine, &spec, n)?,
            rhs: members(engine, &FamilySpec::new("apostol_bernoulli_based_poly_daehee", p)?, n)?,
        },
        Reduction::BernoulliPolyDaehee => {
            let daehee = members(engine, &FamilySpec::new("poly_daehee", p.clone())?, n)?;
            let bernoulli = FamilySpec::new("bernoulli", p)?.with_exp(Symbol::Eta)?;
            Sides {
                lhs: members(engine, &spec, n)?,
                rhs: binomial_convolution(&daehee, &members(engine, &bernoulli, n)?),
            }
        }
        Reduction::PolylogOne => Sides {
            lhs: members(engine, &spec, n)?,
            rhs: members(engine, &FamilySpec::new("bernoulli_based_daehee", p)?, n)?,
        },
        Reduction::PolyDaehee => Sides {
            lhs: members(engine, &spec.with_exp(MultiPoly::zero())?, n)?,
            rhs: members(engine, &FamilySpec::new("poly_daehee", p)?, n)?,
        },
        Reduction::Daehee => Sides {
            lhs: members(engine, &spec.with_exp(MultiPoly::zero())?, n)?,
            rhs: members(engine, &FamilySpec::new("daehee", p)?, n)?,
        },
    };
    Ok(sides)
}

/// Engine-built numbers (left) against a recurrence (right).
pub fn anchor_sides(engine: &Engine, anchor: Anchor, order: usize) -> Result<Sides> {
    let zero = MultiPoly::zero();
    let base = Params::default();
    let (spec, expected) = match anchor {
        Anchor::Bernoulli => (
            FamilySpec::new("bernoulli", base)?.with_exp(zero)?,
            apostol_bernoulli_numbers(&Rational::one(), order),
        ),
        Anchor::Daehee => (
            FamilySpec::new("daehee", base)?.with_pow(zero)?,
            (0..=order)
                .map(|n| {
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    Rational::factorial(n as u32) * Rational::frac(sign, n as i64 + 1)
                })
                .collect(),
        ),
        Anchor::Euler => (FamilySpec::new("euler_numbers", base)?, euler_numbers(order)),
        Anchor::ApostolBernoulli => {
            let lambda = Rational::from(2);
            let params = Params {
                lambda: lambda.clone(),
                ..base
            };
            (
                FamilySpec::new("apostol_bernoulli_a", params)?.with_exp(zero)?,
                apostol_bernoulli_numbers(&lambda, order),
            )
        }
    };
    Ok(Sides {
        lhs: members(engine, &spec, order)?,
        rhs: expected.into_iter().map(MultiPoly::constant).collect(),
    })
}

/// Numbers of `x/(λe^x − 1)` from `λ Σ_{j≤n} C(n,j) A_j − A_n = [n = 1]`.
/// At `λ = 1` the leading power cancels and the Bernoulli recurrence
/// `Σ_{j≤n} C(n+1,j) B_j = [n = 0]` is used instead.
fn apostol_bernoulli_numbers(lambda: &Rational, order: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let value = if lambda.is_one() {
            let rhs = if n == 0 { Rational::one() } else { Rational::zero() };
            let partial: Rational = (0..n).map(|j| binom(n as u32 + 1, j as u32) * &out[j]).sum();
            (rhs - partial)
                .checked_div(&binom(n as u32 + 1, n as u32))
                .expect("nonzero binomial")
        } else {
            let rhs = if n == 1 { Rational::one() } else { Rational::zero() };
            let partial: Rational = (0..n).map(|j| binom(n as u32, j as u32) * &out[j]).sum();
            (rhs - lambda * &partial)
                .checked_div(&(lambda - &Rational::one()))
                .expect("lambda != 1")
        };
        out.push(value);
    }
    out
}

/// Numbers of `2/(e^x + 1)` from `Σ_{j≤n} C(n,j) E_j + E_n = 2[n = 0]`.
fn euler_numbers(order: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let rhs = if n == 0 { Rational::from(2) } else { Rational::zero() };
        let partial: Rational = (0..n).map(|j| binom(n as u32, j as u32) * &out[j]).sum();
        out.push((rhs - partial).checked_div(&Rational::from(2)).expect("two"));
    }
    out
}

// ---- verifiers ----

pub fn verify_theorem(engine: &Engine, theorem: Theorem, point: &GridPoint, b: u32, order: usize) -> IdentityReport {
    let check = Check::Theorem(theorem);
    let b_shown = (theorem == Theorem::OrderSplit).then_some(b);
    match theorem_sides(engine, theorem, point, b, order) {
        Ok(s) => IdentityReport::from_sides(check, Some(point.clone()), b_shown, order, s),
        Err(e) => IdentityReport::from_error(check, Some(point.clone()), b_shown, order, e),
    }
}

pub fn verify_reduction(engine: &Engine, reduction: Reduction, point: &GridPoint, order: usize) -> IdentityReport {
    let check = Check::Reduction(reduction);
    match reduction_sides(engine, reduction, point, order) {
        Ok(s) => IdentityReport::from_sides(check, Some(point.clone()), None, order, s),
        Err(e) => IdentityReport::from_error(check, Some(point.clone()), None, order, e),
    }
}

pub fn verify_anchor(engine: &Engine, anchor: Anchor, order: usize) -> IdentityReport {
    let check = Check::Anchor(anchor);
    match anchor_sides(engine, anchor, order) {
        Ok(s) => IdentityReport::from_sides(check, None, None, order, s),
        Err(e) => IdentityReport::from_error(check, None, None, order, e),
    }
}

fn point(k: i32, m: u32, a: u32, lambda: &Rational) -> GridPoint {
    GridPoint::new(k, m, a, lambda.clone())
}

pub fn verify_thm_2_1(k: i32, m: u32, a: u32, lambda: &Rational, order: usize) -> IdentityReport {
    verify_theorem(&Engine::new(), Theorem::DaeheeSplit, &point(k, m, a, lambda), 0, order)
}

pub fn verify_thm_2_2(k: i32, m: u32, a: u32, lambda: &Rational, order: usize) -> IdentityReport {
    verify_theorem(
        &Engine::new(),
        Theorem::GammaDifference,
        &point(k, m, a, lambda),
        0,
        order,
    )
}

pub fn verify_thm_2_3(k: i32, m: u32, a: u32, lambda: &Rational, order: usize) -> IdentityReport {
    verify_theorem(
        &Engine::new(),
        Theorem::GammaAddition,
        &point(k, m, a, lambda),
        0,
        order,
    )
}

pub fn verify_thm_2_4(k: i32, m: u32, a: u32, lambda: &Rational, order: usize) -> IdentityReport {
    verify_theorem(
        &Engine::new(),
        Theorem::PolyBernoulliExchange,
        &point(k, m, a, lambda),
        0,
        order,
    )
}

pub fn verify_thm_2_5(k: i32, m: u32, a: u32, lambda: &Rational, order: usize) -> IdentityReport {
    verify_theorem(
        &Engine::new(),
        Theorem::SecondKindInversion,
        &point(k, m, a, lambda),
        0,
        order,
    )
}

pub fn verify_thm_3_1(k: i32, m: u32, a: u32, lambda: &Rational, big_b: usize, big_c: usize) -> IdentityReport {
    let p = point(k, m, a, lambda);
    let check = Check::Theorem(Theorem::ImplicitSummation);
    let order = big_b + big_c;
    match implicit_summation_sides(&Engine::new(), &p, big_b, big_c) {
        Ok(s) => IdentityReport::from_sides(check, Some(p), None, order, s),
        Err(e) => IdentityReport::from_error(check, Some(p), None, order, e),
    }
}

pub fn verify_thm_3_2(k: i32, m: u32, a: u32, b: u32, lambda: &Rational, order: usize) -> IdentityReport {
    verify_theorem(&Engine::new(), Theorem::OrderSplit, &point(k, m, a, lambda), b, order)
}

pub fn verify_thm_3_3(k: i32, m: u32, a: u32, lambda: &Rational, order: usize) -> IdentityReport {
    verify_theorem(&Engine::new(), Theorem::EtaSplit, &point(k, m, a, lambda), 0, order)
}

pub fn verify_thm_3_4(k: i32, m: u32, a: u32, lambda: &Rational, order: usize) -> IdentityReport {
    verify_theorem(&Engine::new(), Theorem::EtaUnitShift, &point(k, m, a, lambda), 0, order)
}

/// Which checks a suite run includes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub theorems: Vec<Theorem>,
    pub reductions: bool,
    pub anchors: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            theorems: Theorem::ALL.to_vec(),
            reductions: true,
            anchors: true,
        }
    }
}

impl SuiteOptions {
    pub fn only(theorem: Theorem) -> Self {
        SuiteOptions {
            theorems: vec![theorem],
            reductions: false,
            anchors: false,
        }
    }
}

enum Task {
    Theorem(Theorem, GridPoint, u32),
    Reduction(Reduction, GridPoint),
    Anchor(Anchor),
}

/// Runs every selected check over the grid. Reports come back sorted by
/// check and parameters regardless of execution order.
pub fn run_suite(engine: &Engine, grid: &Grid, order: usize, options: &SuiteOptions) -> Vec<IdentityReport> {
    let mut tasks = Vec::new();
    if options.anchors {
        tasks.extend(Anchor::ALL.map(Task::Anchor));
    }
    for p in grid.points() {
        for &t in &options.theorems {
            if t == Theorem::OrderSplit {
                for &b in &grid.bs {
                    tasks.push(Task::Theorem(t, p.clone(), b));
                }
            } else {
                tasks.push(Task::Theorem(t, p.clone(), 0));
            }
        }
        if options.reductions {
            for r in Reduction::ALL {
                if r.applies(&p) {
                    tasks.push(Task::Reduction(r, p.clone()));
                }
            }
        }
    }
    let mut reports: Vec<IdentityReport> = tasks
        .into_par_iter()
        .map(|task| match task {
            Task::Theorem(t, p, b) => verify_theorem(engine, t, &p, b, order),
            Task::Reduction(r, p) => verify_reduction(engine, r, &p, order),
            Task::Anchor(a) => verify_anchor(engine, a, order),
        })
        .collect();
    reports.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    reports
}
