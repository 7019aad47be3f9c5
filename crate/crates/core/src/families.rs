//! Named polynomial families, each an ordered product of atoms.
//!
//! A family is described by a [`FamilySpec`]; building it at order `N`
//! multiplies the atom series and reads off `P_n = n!·[x^n]` for
//! `n = 0..=N`.
//!
//! Two slots carry the free parameters of a family: the base of the
//! binomial factor `(1+x)^•` and the rate of the exponential factor
//! `e^{•x}`. By default they hold `γ` and `η` (or `γ` alone for the
//! one-parameter classical families), but any polynomial can be bound,
//! which is how the identities obtain `P_n(−γ)`, `P_n(γ; η−ω)` and so on.

use std::collections::BTreeMap;

use crate::coeffring::{MultiPoly, Rational, Symbol};
use crate::engine::{Engine, Mutation};
use crate::error::{Error, Result};
use crate::series::{AtomSpec, Series};

/// Numeric parameters shared by all families. Families ignore the ones
/// they do not use.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    /// Polylogarithm index.
    pub k: i32,
    /// Truncation index of the generalized Apostol-Bernoulli core, `m ≥ 1`.
    pub m: u32,
    /// Order of the core (`r` for higher-order poly-Bernoulli).
    pub a: u32,
    /// Second order, used by the order-splitting identity.
    pub b: u32,
    pub lambda: Rational,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            k: 1,
            m: 1,
            a: 1,
            b: 0,
            lambda: Rational::one(),
        }
    }
}

/// What the binomial and exponential slots are bound to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bindings {
    pub pow: MultiPoly,
    pub exp: MultiPoly,
}

impl Bindings {
    pub fn new(pow: impl Into<MultiPoly>, exp: impl Into<MultiPoly>) -> Self {
        Bindings {
            pow: pow.into(),
            exp: exp.into(),
        }
    }
}

/// An atom raised to a non-negative power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub atom: AtomSpec,
    pub power: u32,
}

impl Factor {
    fn once(atom: AtomSpec) -> Self {
        Factor { atom, power: 1 }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Slot {
    Pow,
    Exp,
}

struct FamilyDef {
    name: &'static str,
    description: &'static str,
    /// Symbol the exponential slot holds by default.
    exp_default: Symbol,
    factors: fn(&Params, &Bindings) -> Vec<Factor>,
    slots: &'static [Slot],
}

fn pow(b: &Bindings) -> Factor {
    Factor::once(AtomSpec::OnePlusXPow(b.pow.clone()))
}

fn exp(b: &Bindings) -> Factor {
    Factor::once(AtomSpec::ExpLinear(b.exp.clone()))
}

fn bernoulli_core(m: u32, lambda: &Rational, a: u32) -> Factor {
    Factor::once(AtomSpec::ApostolBernoulliCore {
        m,
        lambda: lambda.clone(),
        a,
    })
}

fn euler_core(lambda: &Rational, a: u32) -> Factor {
    Factor::once(AtomSpec::ApostolEulerCore {
        lambda: lambda.clone(),
        a,
    })
}

fn genocchi_core(lambda: &Rational, a: u32) -> Factor {
    Factor::once(AtomSpec::ApostolGenocchiCore {
        lambda: lambda.clone(),
        a,
    })
}

fn log_over_polylog(k: i32) -> Factor {
    Factor::once(AtomSpec::Log1pOverPolylog { k })
}

const POW: &[Slot] = &[Slot::Pow];
const EXP: &[Slot] = &[Slot::Exp];
const BOTH: &[Slot] = &[Slot::Pow, Slot::Exp];
const NONE: &[Slot] = &[];

static FAMILIES: &[FamilyDef] = &[
    FamilyDef {
        name: "daehee",
        description: "Daehee polynomials, (1+x)^g log(1+x)/x",
        exp_default: Symbol::Eta,
        factors: |_, b| vec![pow(b), Factor::once(AtomSpec::Log1pOverX)],
        slots: POW,
    },
    FamilyDef {
        name: "euler",
        description: "Euler polynomials, e^(gx) 2/(e^x+1)",
        exp_default: Symbol::Gamma,
        factors: |_, b| vec![exp(b), euler_core(&Rational::one(), 1)],
        slots: EXP,
    },
    FamilyDef {
        name: "euler_numbers",
        description: "Euler numbers, 2/(e^x+1)",
        exp_default: Symbol::Gamma,
        factors: |_, _| vec![euler_core(&Rational::one(), 1)],
        slots: NONE,
    },
    FamilyDef {
        name: "bernoulli",
        description: "Bernoulli polynomials, e^(gx) x/(e^x-1)",
        exp_default: Symbol::Gamma,
        factors: |_, b| vec![exp(b), bernoulli_core(1, &Rational::one(), 1)],
        slots: EXP,
    },
    FamilyDef {
        name: "poly_bernoulli",
        description: "poly-Bernoulli polynomials, e^(gx) Li_k(1-e^-x)/(e^x-1)",
        exp_default: Symbol::Gamma,
        factors: |p, b| vec![exp(b), Factor::once(AtomSpec::PolylogOverExpm1 { k: p.k })],
        slots: EXP,
    },
    FamilyDef {
        name: "poly_bernoulli_higher",
        description: "higher-order poly-Bernoulli polynomials, e^(gx) (Li_k(1-e^-x)/(e^x-1))^a",
        exp_default: Symbol::Gamma,
        factors: |p, b| {
            vec![
                exp(b),
                Factor {
                    atom: AtomSpec::PolylogOverExpm1 { k: p.k },
                    power: p.a,
                },
            ]
        },
        slots: EXP,
    },
    FamilyDef {
        name: "poly_daehee",
        description: "poly-Daehee polynomials, (1+x)^g log(1+x)/Li_k(1-e^-x)",
        exp_default: Symbol::Eta,
        factors: |p, b| vec![pow(b), log_over_polylog(p.k)],
        slots: POW,
    },
    FamilyDef {
        name: "poly_bernoulli_2nd",
        description: "poly-Bernoulli polynomials of the second kind, (1+x)^g Li_k(1-e^-x)/log(1+x)",
        exp_default: Symbol::Eta,
        factors: |p, b| vec![pow(b), Factor::once(AtomSpec::PolylogOverLog1p { k: p.k })],
        slots: POW,
    },
    FamilyDef {
        name: "gen_bernoulli_a",
        description: "generalized Bernoulli polynomials of order a",
        exp_default: Symbol::Gamma,
        factors: |p, b| vec![exp(b), bernoulli_core(1, &Rational::one(), p.a)],
        slots: EXP,
    },
    FamilyDef {
        name: "gen_euler_a",
        description: "generalized Euler polynomials of order a",
        exp_default: Symbol::Gamma,
        factors: |p, b| vec![exp(b), euler_core(&Rational::one(), p.a)],
        slots: EXP,
    },
    FamilyDef {
        name: "gen_genocchi_a",
        description: "generalized Genocchi polynomials of order a",
        exp_default: Symbol::Gamma,
        factors: |p, b| vec![exp(b), genocchi_core(&Rational::one(), p.a)],
        slots: EXP,
    },
    FamilyDef {
        name: "apostol_bernoulli_a",
        description: "Apostol-Bernoulli polynomials of order a, e^(gx) (x/(lambda e^x-1))^a",
        exp_default: Symbol::Gamma,
        factors: |p, b| vec![exp(b), bernoulli_core(1, &p.lambda, p.a)],
        slots: EXP,
    },
    FamilyDef {
        name: "apostol_euler_a",
        description: "Apostol-Euler polynomials of order a, e^(gx) (2/(lambda e^x+1))^a",
        exp_default: Symbol::Gamma,
        factors: |p, b| vec![exp(b), euler_core(&p.lambda, p.a)],
        slots: EXP,
    },
    FamilyDef {
        name: "apostol_genocchi_a",
        description: "Apostol-Genocchi polynomials of order a, e^(gx) (2x/(lambda e^x+1))^a",
        exp_default: Symbol::Gamma,
        factors: |p, b| vec![exp(b), genocchi_core(&p.lambda, p.a)],
        slots: EXP,
    },
    FamilyDef {
        name: "gen_apostol_bernoulli_m",
        description: "generalized Apostol-Bernoulli polynomials of order a and level m-1",
        exp_default: Symbol::Eta,
        factors: |p, b| vec![exp(b), bernoulli_core(p.m, &p.lambda, p.a)],
        slots: EXP,
    },
    FamilyDef {
        name: "gabpdp",
        description: "generalized Apostol-Bernoulli poly-Daehee polynomials",
        exp_default: Symbol::Eta,
        factors: |p, b| {
            vec![
                pow(b),
                log_over_polylog(p.k),
                exp(b),
                bernoulli_core(p.m, &p.lambda, p.a),
            ]
        },
        slots: BOTH,
    },
    FamilyDef {
        name: "bernoulli_based_daehee",
        description: "Bernoulli based Daehee polynomials, gabpdp with log(1+x)/x",
        exp_default: Symbol::Eta,
        factors: |p, b| {
            vec![
                pow(b),
                Factor::once(AtomSpec::Log1pOverX),
                exp(b),
                bernoulli_core(p.m, &p.lambda, p.a),
            ]
        },
        slots: BOTH,
    },
    FamilyDef {
        name: "poly_daehee_two_param",
        description: "poly-Daehee polynomials with exponential factor, (1+x)^g log(1+x)/Li_k(1-e^-x) e^(ex)",
        exp_default: Symbol::Eta,
        factors: |p, b| vec![pow(b), log_over_polylog(p.k), exp(b)],
        slots: BOTH,
    },
    FamilyDef {
        name: "apostol_bernoulli_based_poly_daehee",
        description: "Apostol-Bernoulli based poly-Daehee polynomials",
        exp_default: Symbol::Eta,
        factors: |p, b| vec![bernoulli_core(1, &p.lambda, p.a), log_over_polylog(p.k), pow(b), exp(b)],
        slots: BOTH,
    },
    FamilyDef {
        name: "apostol_euler_based_poly_daehee",
        description: "Apostol-Euler based poly-Daehee polynomials",
        exp_default: Symbol::Eta,
        factors: |p, b| vec![euler_core(&p.lambda, p.a), log_over_polylog(p.k), pow(b), exp(b)],
        slots: BOTH,
    },
    FamilyDef {
        name: "apostol_genocchi_based_poly_daehee",
        description: "Apostol-Genocchi based poly-Daehee polynomials",
        exp_default: Symbol::Eta,
        factors: |p, b| vec![genocchi_core(&p.lambda, p.a), log_over_polylog(p.k), pow(b), exp(b)],
        slots: BOTH,
    },
    FamilyDef {
        name: "apostol_bernoulli_based_daehee",
        description: "Apostol-Bernoulli based Daehee polynomials",
        exp_default: Symbol::Eta,
        factors: |p, b| {
            vec![
                bernoulli_core(1, &p.lambda, p.a),
                Factor::once(AtomSpec::Log1pOverX),
                pow(b),
                exp(b),
            ]
        },
        slots: BOTH,
    },
    FamilyDef {
        name: "apostol_euler_based_daehee",
        description: "Apostol-Euler based Daehee polynomials",
        exp_default: Symbol::Eta,
        factors: |p, b| {
            vec![
                euler_core(&p.lambda, p.a),
                Factor::once(AtomSpec::Log1pOverX),
                pow(b),
                exp(b),
            ]
        },
        slots: BOTH,
    },
    FamilyDef {
        name: "apostol_genocchi_based_daehee",
        description: "Apostol-Genocchi based Daehee polynomials",
        exp_default: Symbol::Eta,
        factors: |p, b| {
            vec![
                genocchi_core(&p.lambda, p.a),
                Factor::once(AtomSpec::Log1pOverX),
                pow(b),
                exp(b),
            ]
        },
        slots: BOTH,
    },
];

fn lookup(name: &str) -> Result<&'static FamilyDef> {
    let normalized = name.trim().replace('-', "_");
    FAMILIES
        .iter()
        .find(|d| d.name == normalized)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

/// A fully parameterized family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: &'static str,
    pub params: Params,
    pub bindings: Bindings,
    pub factors: Vec<Factor>,
}

impl FamilySpec {
    /// The named family with its default slot bindings.
    pub fn new(name: &str, params: Params) -> Result<FamilySpec> {
        let def = lookup(name)?;
        let bindings = Bindings::new(Symbol::Gamma, def.exp_default);
        FamilySpec::with_bindings(name, params, bindings)
    }

    pub fn with_bindings(name: &str, params: Params, bindings: Bindings) -> Result<FamilySpec> {
        let def = lookup(name)?;
        if params.m == 0 {
            return Err(Error::InvalidParameter("m must be a positive integer".into()));
        }
        if def.slots == BOTH {
            if let (Some(p), Some(e)) = (bare_symbol(&bindings.pow), bare_symbol(&bindings.exp)) {
                if p == e {
                    return Err(Error::InvalidParameter(format!(
                        "binomial and exponential slots are both bound to {p}"
                    )));
                }
            }
        }
        let factors = (def.factors)(&params, &bindings);
        debug_assert!(!factors.is_empty());
        for f in &factors {
            f.atom.validate()?;
        }
        Ok(FamilySpec {
            name: def.name,
            params,
            bindings,
            factors,
        })
    }

    pub fn rebind(&self, bindings: Bindings) -> Result<FamilySpec> {
        FamilySpec::with_bindings(self.name, self.params.clone(), bindings)
    }

    /// Same family with the exponential slot bound to `exp`.
    pub fn with_exp(&self, exp: impl Into<MultiPoly>) -> Result<FamilySpec> {
        self.rebind(Bindings {
            pow: self.bindings.pow.clone(),
            exp: exp.into(),
        })
    }

    /// Same family with the binomial slot bound to `pow`.
    pub fn with_pow(&self, pow: impl Into<MultiPoly>) -> Result<FamilySpec> {
        self.rebind(Bindings {
            pow: pow.into(),
            exp: self.bindings.exp.clone(),
        })
    }

    pub fn description(&self) -> &'static str {
        lookup(self.name).map(|d| d.description).unwrap_or("")
    }

    /// Symbols the members can depend on.
    pub fn symbols(&self) -> Vec<Symbol> {
        let def = lookup(self.name).expect("spec names come from the catalog");
        let mut out = Vec::new();
        for slot in def.slots {
            let bound = match slot {
                Slot::Pow => &self.bindings.pow,
                Slot::Exp => &self.bindings.exp,
            };
            for s in Symbol::ALL {
                if bound.contains(s) && !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    /// Internal working order used for a requested output order.
    pub fn working_order(&self, order: usize) -> usize {
        order + (self.params.m * self.params.a) as usize + 2
    }
}

fn bare_symbol(p: &MultiPoly) -> Option<Symbol> {
    Symbol::ALL.into_iter().find(|s| *p == MultiPoly::symbol(*s))
}

/// Every catalogued family with default parameters and bindings.
pub fn family_catalog() -> Vec<FamilySpec> {
    FAMILIES
        .iter()
        .map(|d| FamilySpec::new(d.name, Params::default()).expect("defaults are valid"))
        .collect()
}

pub fn family_names() -> Vec<&'static str> {
    FAMILIES.iter().map(|d| d.name).collect()
}

/// Members `P_0..=P_order` of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTable {
    pub spec: FamilySpec,
    pub order: usize,
    pub members: Vec<MultiPoly>,
}

impl FamilyTable {
    pub fn member(&self, n: usize) -> Result<&MultiPoly> {
        self.members.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.order,
        })
    }

    /// Exact value of `P_n` at the assignment.
    pub fn member_eval(&self, n: usize, at: &BTreeMap<Symbol, Rational>) -> Result<Rational> {
        self.member(n)?.eval(at)
    }
}

impl Engine {
    /// Builds `P_0..=P_order` of a family.
    pub fn family(&self, spec: &FamilySpec, order: usize) -> Result<FamilyTable> {
        let product = self.family_series(spec, order)?;
        Ok(FamilyTable {
            spec: spec.clone(),
            order,
            members: product.extract_sequence(),
        })
    }

    /// The generating function of a family, exact through `x^order`.
    pub fn family_series(&self, spec: &FamilySpec, order: usize) -> Result<Series> {
        let working = if self.is(Mutation::DropGuardOrder) {
            order
        } else {
            spec.working_order(order)
        };
        let mut scalar = Vec::new();
        let mut symbolic = Vec::new();
        for f in &spec.factors {
            let mut s = self.atom_at_working_order(&f.atom, working)?;
            if f.power != 1 {
                s = s.pow(f.power);
            }
            if s.order() > order {
                s = s.truncate(order)?;
            }
            if s.coeffs().iter().all(|c| c.as_constant().is_some()) {
                scalar.push(s);
            } else {
                symbolic.push(s);
            }
        }
        let product = scalar
            .iter()
            .chain(symbolic.iter())
            .fold(Series::one(order), |acc, s| acc.mul(s));
        if product.order() < order {
            if !self.is(Mutation::DropGuardOrder) {
                return Err(Error::InsufficientOrder {
                    reached: product.order(),
                    needed: order,
                });
            }
            let mut coeffs = product.coeffs().to_vec();
            coeffs.resize(order + 1, MultiPoly::zero());
            return Series::new(order, coeffs);
        }
        Ok(product)
    }
}

/// [`Engine::family`] on the default engine.
pub fn family_build(spec: &FamilySpec, order: usize) -> Result<FamilyTable> {
    Engine::new().family(spec, order)
}

/// Value of member `n` at an assignment.
pub fn family_member_eval(table: &FamilyTable, n: usize, at: &BTreeMap<Symbol, Rational>) -> Result<Rational> {
    table.member_eval(n, at)
}
