//! Sparse polynomials in the fixed symbol set {γ, η, ω}.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// One of the three free parameters a family member can depend on.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Gamma,
    Eta,
    Omega,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Gamma, Symbol::Eta, Symbol::Omega];

    pub fn index(self) -> usize {
        match self {
            Symbol::Gamma => 0,
            Symbol::Eta => 1,
            Symbol::Omega => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Gamma => "gamma",
            Symbol::Eta => "eta",
            Symbol::Omega => "omega",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent triple `(e_γ, e_η, e_ω)`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn of(sym: Symbol, exp: u32) -> Monomial {
        let mut e = [0; 3];
        e[sym.index()] = exp;
        Monomial(e)
    }

    pub fn exp(self, sym: Symbol) -> u32 {
        self.0[sym.index()]
    }

    pub fn total_degree(self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    fn without(self, sym: Symbol) -> Monomial {
        let mut e = self.0;
        e[sym.index()] = 0;
        Monomial(e)
    }

    /// Display order: higher total degree first, then γ-heavier first.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

/// A polynomial over [`Rational`] in γ, η, ω.
///
/// Stored as a map from exponent triple to coefficient. Zero coefficients are
/// never stored, so structural equality is polynomial equality and the zero
/// polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(Monomial::ONE, c)
    }

    pub fn symbol(sym: Symbol) -> Self {
        MultiPoly::term(Monomial::of(sym, 1), Rational::one())
    }

    pub fn term(mono: Monomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MultiPoly { terms }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in rendering order (see [`Monomial::display_cmp`]).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`MultiPoly::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    /// The value if this polynomial has no symbolic terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, sym: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exp(sym)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.terms.keys().any(|m| m.exp(sym) > 0)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// `self += other * c`, the workhorse of series convolution.
    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(*m, v * c);
        }
    }

    /// `self += a * b` without building the intermediate product.
    pub fn add_product(&mut self, a: &MultiPoly, b: &MultiPoly) {
        for (ma, va) in &a.terms {
            for (mb, vb) in &b.terms {
                self.add_term(ma.mul(*mb), va * vb);
            }
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(p−1)…(p−j+1)`, the falling factorial of this polynomial.
    pub fn falling_factorial(&self, j: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for i in 0..j {
            let factor = self - &MultiPoly::constant(Rational::from(i as i64));
            acc = &acc * &factor;
        }
        acc
    }

    /// Evaluates at a full assignment of the occurring symbols.
    pub fn eval(&self, at: &BTreeMap<Symbol, Rational>) -> Result<Rational> {
        let mut powers: [Vec<Rational>; 3] = Default::default();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for sym in Symbol::ALL {
                let e = m.exp(sym) as usize;
                if e == 0 {
                    continue;
                }
                let x = at.get(&sym).ok_or(Error::MissingAssignment(sym))?;
                let cache = &mut powers[sym.index()];
                if cache.is_empty() {
                    cache.push(Rational::one());
                }
                while cache.len() <= e {
                    let next = cache.last().unwrap() * x;
                    cache.push(next);
                }
                v *= &cache[e];
            }
            total += v;
        }
        Ok(total)
    }

    /// Replaces `sym` by the polynomial `by` (exact composition).
    pub fn substitute(&self, sym: Symbol, by: &MultiPoly) -> MultiPoly {
        if !self.contains(sym) {
            return self.clone();
        }
        let mut powers = vec![MultiPoly::one()];
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(sym) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * by;
                powers.push(next);
            }
            let rest = m.without(sym);
            for (pm, pc) in &powers[e].terms {
                out.add_term(rest.mul(*pm), c * pc);
            }
        }
        out
    }

    /// Partial evaluation: fixes `sym` to a rational value.
    pub fn specialize(&self, sym: Symbol, value: &Rational) -> MultiPoly {
        self.substitute(sym, &MultiPoly::constant(value.clone()))
    }

    /// `sym ↦ sym + shift`, as used by the shift identities.
    pub fn shift(&self, sym: Symbol, shift: &MultiPoly) -> MultiPoly {
        self.substitute(sym, &(&MultiPoly::symbol(sym) + shift))
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.values().all(|c| !c.is_zero() && c.is_reduced())
    }

    pub fn render(&self, names: &SymbolNames) -> String {
        render_with(self, names, Style::Plain)
    }

    pub fn render_latex(&self) -> String {
        render_with(self, &SymbolNames::latex(), Style::Latex)
    }
}

/// Falling factorial `(s)_j` of a bare symbol.
pub fn falling_factorial(sym: Symbol, j: u32) -> MultiPoly {
    MultiPoly::symbol(sym).falling_factorial(j)
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Symbol> for MultiPoly {
    fn from(s: Symbol) -> Self {
        MultiPoly::symbol(s)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Names used when rendering γ, η, ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolNames(pub [String; 3]);

impl SymbolNames {
    pub fn latex() -> Self {
        SymbolNames([r"\gamma".into(), r"\eta".into(), r"\omega".into()])
    }

    pub fn get(&self, sym: Symbol) -> &str {
        &self.0[sym.index()]
    }
}

impl Default for SymbolNames {
    fn default() -> Self {
        SymbolNames(["g".into(), "e".into(), "w".into()])
    }
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Style {
    Plain,
    Latex,
}

fn render_with(p: &MultiPoly, names: &SymbolNames, style: Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (mono, coeff)) in p.sorted_terms().into_iter().enumerate() {
        let negative = coeff.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = coeff.abs();
        let mut factors: Vec<String> = Vec::new();
        if !magnitude.is_one() || *mono == Monomial::ONE {
            factors.push(match style {
                Style::Plain => magnitude.to_string(),
                Style::Latex if magnitude.is_integer() => magnitude.to_string(),
                Style::Latex => format!(r"\frac{{{}}}{{{}}}", magnitude.numer(), magnitude.denom()),
            });
        }
        for sym in Symbol::ALL {
            let e = mono.exp(sym);
            let name = names.get(sym);
            match (e, style) {
                (0, _) => {}
                (1, _) => factors.push(name.to_string()),
                (e, Style::Plain) => factors.push(format!("{name}^{e}")),
                (e, Style::Latex) => factors.push(format!("{name}^{{{e}}}")),
            }
        }
        let sep = match style {
            Style::Plain => "*",
            Style::Latex => " ",
        };
        out.push_str(&factors.join(sep));
    }
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&SymbolNames::default()))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
