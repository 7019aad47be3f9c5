#![allow(dead_code)]

pub mod oracle;

use oracle::{Poly, Q};
use polydaehee_core::{MultiPoly, Rational};

/// Engine polynomial in oracle form, via the textual rational.
pub fn to_oracle(p: &MultiPoly) -> Poly {
    p.terms().map(|(m, c)| (m.0, oracle::parse(&c.to_string()))).collect()
}

pub fn to_oracle_table(members: &[MultiPoly]) -> Vec<Poly> {
    members.iter().map(to_oracle).collect()
}

pub fn to_oracle_scalars(members: &[MultiPoly]) -> Vec<Q> {
    members
        .iter()
        .map(|p| oracle::parse(&p.as_constant().expect("constant member").to_string()))
        .collect()
}

pub fn rational(s: &str) -> Rational {
    s.parse().expect("rational literal")
}
