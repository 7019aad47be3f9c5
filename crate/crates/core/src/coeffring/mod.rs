//! Exact coefficient arithmetic: rationals and polynomials in γ, η, ω.

mod poly;
mod rational;

pub use poly::{falling_factorial, Monomial, MultiPoly, Symbol, SymbolNames};
pub use rational::{binom, Rational};
