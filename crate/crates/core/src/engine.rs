//! The evaluation context shared by atoms, families and verifiers.

use crate::coeffring::{MultiPoly, Rational};

/// Deliberate defects that can be switched on to check that the
/// verification suite notices a broken engine.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Flips the sign of the `x²` coefficient of `log(1+x)`.
    Log1pSignFlip,
    /// Builds families at the requested order without guard digits and
    /// zero-fills whatever the divisions consumed.
    DropGuardOrder,
    /// Starts the falling-factorial product at `i = 1` instead of `i = 0`.
    FallingFactorialOffByOne,
}

/// Evaluation context. The default engine is the correct one.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Engine {
    mutation: Option<Mutation>,
}

impl Engine {
    pub const fn new() -> Self {
        Engine { mutation: None }
    }

    pub const fn with_mutation(mutation: Mutation) -> Self {
        Engine {
            mutation: Some(mutation),
        }
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    pub(crate) fn is(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }

    /// `p(p−1)…(p−j+1)`; every falling factorial in the engine goes through here.
    pub fn falling_factorial(&self, p: &MultiPoly, j: u32) -> MultiPoly {
        if !self.is(Mutation::FallingFactorialOffByOne) {
            return p.falling_factorial(j);
        }
        (1..=j).fold(MultiPoly::one(), |acc, i| {
            &acc * &(p - &MultiPoly::constant(Rational::from(i as i64)))
        })
    }

    /// `[(p)_0, (p)_1, …, (p)_upto]`, each built from the previous one.
    pub fn falling_factorials(&self, p: &MultiPoly, upto: u32) -> Vec<MultiPoly> {
        let start = if self.is(Mutation::FallingFactorialOffByOne) {
            1
        } else {
            0
        };
        let mut out = Vec::with_capacity(upto as usize + 1);
        let mut acc = MultiPoly::one();
        out.push(acc.clone());
        for i in 0..upto {
            acc = &acc * &(p - &MultiPoly::constant(Rational::from((i + start) as i64)));
            out.push(acc.clone());
        }
        out
    }
}
