//! Table and report rendering.

use std::fmt::Write as _;

use polydaehee_core::{FamilyTable, IdentityReport, Monomial, MultiPoly, Params, Rational, SymbolNames};
use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::CliError;

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableJson {
    pub family: String,
    pub params: ParamsJson,
    pub order: usize,
    pub members: Vec<MemberJson>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ParamsJson {
    pub k: i32,
    pub m: u32,
    pub a: u32,
    pub lambda: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MemberJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub e_gamma: u32,
    pub e_eta: u32,
    pub e_omega: u32,
    pub coeff: String,
}

impl TableJson {
    pub fn new(family: &str, params: &Params, members: &[MultiPoly]) -> Self {
        TableJson {
            family: family.to_string(),
            params: ParamsJson {
                k: params.k,
                m: params.m,
                a: params.a,
                lambda: params.lambda.to_string(),
            },
            order: members.len().saturating_sub(1),
            members: members
                .iter()
                .enumerate()
                .map(|(n, p)| MemberJson {
                    n,
                    terms: p
                        .sorted_terms()
                        .into_iter()
                        .map(|(m, c)| TermJson {
                            e_gamma: m.0[0],
                            e_eta: m.0[1],
                            e_omega: m.0[2],
                            coeff: c.to_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// The members back as polynomials.
    pub fn polys(&self) -> Result<Vec<MultiPoly>, CliError> {
        self.members
            .iter()
            .map(|m| {
                let terms = m
                    .terms
                    .iter()
                    .map(|t| {
                        let c: Rational = t.coeff.parse()?;
                        Ok((Monomial([t.e_gamma, t.e_eta, t.e_omega]), c))
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(MultiPoly::from_terms(terms))
            })
            .collect()
    }
}

/// Parses `table --format json` output back into polynomials.
pub fn parse_table_json(text: &str) -> Result<Vec<MultiPoly>, CliError> {
    let table: TableJson = serde_json::from_str(text).map_err(|e| CliError::Usage(e.to_string()))?;
    table.polys()
}

pub fn table(table: &FamilyTable, members: &[MultiPoly], format: Format, names: &SymbolNames) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for (n, p) in members.iter().enumerate() {
                let _ = writeln!(out, "P_{n} = {}", p.render(names));
            }
        }
        Format::Csv => {
            for (n, p) in members.iter().enumerate() {
                let _ = writeln!(out, "{n},{}", p.render(names));
            }
        }
        Format::Latex => {
            for (n, p) in members.iter().enumerate() {
                let _ = writeln!(out, r"\(P_{{{n}}} = {}\)", p.render_latex());
            }
        }
        Format::Json => {
            let json = TableJson::new(table.spec.name, &table.spec.params, members);
            out = serde_json::to_string_pretty(&json).expect("table json");
            out.push('\n');
        }
    }
    out
}

pub fn reports_text(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{r}");
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(out, "PASSED {passed}/{}", reports.len());
    out
}

pub fn reports_json(reports: &[IdentityReport]) -> String {
    let records: Vec<_> = reports.iter().map(IdentityReport::record).collect();
    let mut out = serde_json::to_string_pretty(&records).expect("report json");
    out.push('\n');
    out
}
