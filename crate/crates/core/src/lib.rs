//! Exact engine for the generalized Apostol-Bernoulli poly-Daehee
//! polynomials and their relatives.
//!
//! Every family is defined by a generating function that is a product of
//! closed-form factors (`(1+x)^γ`, `e^{ηx}`, `log(1+x)/Li_k(1−e^{−x})`,
//! Apostol-type cores). The engine expands those products as truncated
//! formal power series with coefficients in `ℚ[γ, η, ω]`, so family
//! members come out as exact polynomials and identities between families
//! can be checked as polynomial equalities.
//!
//! ```
//! use polydaehee_core::{family_build, FamilySpec, Params};
//!
//! let daehee = family_build(&FamilySpec::new("daehee", Params::default())?, 2)?;
//! assert_eq!(daehee.members[1].to_string(), "g - 1/2");
//! # Ok::<(), polydaehee_core::Error>(())
//! ```

pub mod coeffring;
pub mod engine;
mod error;
pub mod families;
pub mod identities;
pub mod series;

pub use coeffring::{binom, falling_factorial, Monomial, MultiPoly, Rational, Symbol, SymbolNames};
pub use engine::{Engine, Mutation};
pub use error::{Error, Result};
pub use families::{
    family_build, family_catalog, family_member_eval, family_names, Bindings, FamilySpec, FamilyTable, Params,
};
pub use identities::{run_suite, Check, Grid, GridPoint, IdentityReport, Reduction, Status, SuiteOptions, Theorem};
pub use series::{AtomSpec, Series};
