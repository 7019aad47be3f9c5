//! Acceptance criteria, one line each.
//!
//! Every criterion runs even if an earlier one fails; the test fails at
//! the end if any line says FAIL. Lines go to the raw stderr handle so
//! they show without `--nocapture`.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::io::Write;
use std::process::Command;
use std::time::Instant;

use common::oracle::{self, Q};
use common::{to_oracle_scalars, to_oracle_table};
use num_traits::{One, Zero};
use polydaehee_core::identities::{run_suite, Grid, SuiteOptions, Theorem};
use polydaehee_core::{family_build, AtomSpec, Engine, FamilySpec, MultiPoly, Mutation, Params, Rational, Series};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn params(k: i32, m: u32, a: u32, lambda: &Rational) -> Params {
    Params {
        k,
        m,
        a,
        b: 0,
        lambda: lambda.clone(),
    }
}

fn tally(reports: &[polydaehee_core::IdentityReport]) -> Verdict {
    let bad: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    if bad.is_empty() {
        Ok(format!("{} reports", reports.len()))
    } else {
        Err(format!(
            "{} of {} not passing, first: {}",
            bad.len(),
            reports.len(),
            bad[0]
        ))
    }
}

fn identity_suite() -> Verdict {
    let options = SuiteOptions {
        theorems: Theorem::ALL.to_vec(),
        reductions: false,
        anchors: false,
    };
    let grid = Grid::default();
    let reports = run_suite(&Engine::new(), &grid, 16, &options);
    let expected = grid.points().len() * (Theorem::ALL.len() - 1 + grid.bs.len());
    if reports.len() != expected {
        return Err(format!("expected {expected} reports, got {}", reports.len()));
    }
    tally(&reports)
}

fn reductions() -> Verdict {
    let options = SuiteOptions {
        theorems: vec![],
        reductions: true,
        anchors: false,
    };
    let reports = run_suite(&Engine::new(), &Grid::default(), 16, &options);
    if reports.is_empty() {
        return Err("no applicable grid slice".into());
    }
    tally(&reports)
}

fn anchors() -> Verdict {
    // oracle values first, checked against the literal lists
    let bern_literal = ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30"].map(oracle::parse);
    if oracle::bernoulli_numbers(8) != bern_literal {
        return Err("oracle Bernoulli numbers disagree with the literal list".into());
    }
    let ab_literal = [0, 1, -4, 18].map(oracle::qi);
    if oracle::apostol_bernoulli_numbers(&oracle::qi(2), 3) != ab_literal {
        return Err("oracle Apostol-Bernoulli numbers disagree with 1, -4, 18".into());
    }
    let euler_oracle = oracle::euler_numbers(8);
    if euler_oracle[..4] != [oracle::qi(1), oracle::q(-1, 2), Q::zero(), oracle::q(1, 4)] {
        return Err("oracle Euler sequence is off".into());
    }

    let zero = MultiPoly::zero();
    let one = Rational::one();
    let build = |spec: FamilySpec| family_build(&spec, 8).map(|t| to_oracle_scalars(&t.members));
    let engine_bern = build(
        FamilySpec::new("bernoulli", params(1, 1, 1, &one))
            .unwrap()
            .with_exp(zero.clone())
            .unwrap(),
    );
    let engine_daehee = build(
        FamilySpec::new("daehee", params(1, 1, 1, &one))
            .unwrap()
            .with_pow(zero.clone())
            .unwrap(),
    );
    let engine_euler = build(FamilySpec::new("euler_numbers", params(1, 1, 1, &one)).unwrap());
    let engine_ab = build(
        FamilySpec::new("apostol_bernoulli_a", params(1, 1, 1, &Rational::from(2)))
            .unwrap()
            .with_exp(zero)
            .unwrap(),
    );
    let checks = [
        ("bernoulli", engine_bern, oracle::bernoulli_numbers(8)),
        ("daehee", engine_daehee, oracle::daehee_numbers(8)),
        ("euler", engine_euler, euler_oracle),
        (
            "apostol_bernoulli_lambda2",
            engine_ab,
            oracle::apostol_bernoulli_numbers(&oracle::qi(2), 8),
        ),
    ];
    for (name, engine, expected) in checks {
        match engine {
            Ok(values) if values == expected => {}
            Ok(values) => return Err(format!("{name}: engine {values:?} vs oracle {expected:?}")),
            Err(e) => return Err(format!("{name}: {e}")),
        }
    }
    Ok("bernoulli, daehee, euler, apostol-bernoulli(2) at n <= 8".into())
}

/// Exact series `x / (e^x − 1)`, `log(1+x)/x`, `x/log(1+x)` from the oracle.
fn polylog_closed_forms() -> Verdict {
    const N: usize = 16;
    let len = N + 1;
    let fact = |n: usize| (1..=n).fold(Q::one(), |acc, i| acc * oracle::qi(i as i64));
    let log_over_x: Vec<Q> = (0..len)
        .map(|n| oracle::q(if n % 2 == 0 { 1 } else { -1 }, n as i64 + 1))
        .collect();
    let expm1_over_x: Vec<Q> = (0..len).map(|n| fact(n + 1).recip()).collect();
    let cases = [
        (AtomSpec::Log1pOverPolylog { k: 1 }, log_over_x.clone()),
        (
            AtomSpec::PolylogOverExpm1 { k: 1 },
            oracle::div(&[Q::one()], &expm1_over_x, len),
        ),
        (
            AtomSpec::PolylogOverLog1p { k: 1 },
            oracle::div(&[Q::one()], &log_over_x, len),
        ),
    ];
    for (spec, closed) in cases {
        let built = Engine::new().atom(&spec, N).map_err(|e| e.to_string())?;
        let got = series_scalars(&built);
        if got != closed {
            return Err(format!("{spec} differs from its closed form"));
        }
    }
    Ok(format!("3 atoms to order {N}"))
}

fn series_scalars(s: &Series) -> Vec<Q> {
    to_oracle_scalars(s.coeffs())
}

fn vanishing_prefix() -> Verdict {
    let grid = Grid::default();
    let mut checked = 0;
    for p in grid.points() {
        if p.lambda.is_one() || p.a == 0 {
            continue;
        }
        let spec = FamilySpec::new("gabpdp", params(p.k, p.m, p.a, &p.lambda)).map_err(|e| e.to_string())?;
        let table = family_build(&spec, 16).map_err(|e| e.to_string())?;
        let prefix = (p.m * p.a) as usize;
        if let Some(n) = (0..prefix).find(|&n| !table.members[n].is_zero()) {
            return Err(format!("P_{n} nonzero at {p:?}"));
        }
        if table.members[prefix].is_zero() {
            return Err(format!("P_{prefix} unexpectedly zero at {p:?}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} grid points"))
}

fn oracle_equivalence() -> Verdict {
    let grid = Grid::default();
    let mut points = grid.points();
    points.shuffle(&mut ChaCha8Rng::seed_from_u64(2024));
    let sample = &points[..12];
    for p in sample {
        let spec = FamilySpec::new("gabpdp", params(p.k, p.m, p.a, &p.lambda)).map_err(|e| e.to_string())?;
        let engine = to_oracle_table(&family_build(&spec, 10).map_err(|e| e.to_string())?.members);
        let lambda = oracle::parse(&p.lambda.to_string());
        if engine != oracle::gabpdp(p.k, p.m, p.a, &lambda, 10) {
            return Err(format!("table differs at {p:?}"));
        }
    }
    Ok(format!("{} random grid points at N=10", sample.len()))
}

fn negative_controls() -> Verdict {
    let grid = Grid::default();
    let mut found = Vec::new();
    for mutation in [
        Mutation::Log1pSignFlip,
        Mutation::DropGuardOrder,
        Mutation::FallingFactorialOffByOne,
    ] {
        let reports = run_suite(&Engine::with_mutation(mutation), &grid, 8, &SuiteOptions::default());
        let fails = reports.iter().filter(|r| !r.passed()).count();
        if fails == 0 {
            return Err(format!("{mutation:?} produced no failure"));
        }
        found.push(format!("{mutation:?}: {fails}"));
    }
    Ok(found.join(", "))
}

fn determinism() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_polydaehee");
    let verify = || {
        Command::new(bin)
            .args(["verify", "--order", "12"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (verify()?, verify()?);
    if !first.status.success() {
        return Err(format!("verify exited with {:?}", first.status.code()));
    }
    if first.stdout != second.stdout {
        return Err("two verify runs differ".into());
    }
    for (family, extra) in [
        ("gabpdp", vec!["--k", "-2", "--m", "2", "--a", "2", "--lambda", "-3/2"]),
        ("poly_daehee_two_param", vec!["--k", "3"]),
        ("apostol_genocchi_based_daehee", vec!["--lambda", "1/3", "--a", "2"]),
    ] {
        let mut args = vec!["table", "--family", family, "--order", "10", "--format", "json"];
        args.extend(extra.iter().copied());
        let out = Command::new(bin).args(&args).output().map_err(|e| e.to_string())?;
        let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        let parsed = polydaehee_cli::parse_table_json(&text).map_err(|e| e.to_string())?;
        let spec = build_spec(family, &extra).map_err(|e| e.to_string())?;
        let direct = family_build(&spec, 10).map_err(|e| e.to_string())?.members;
        if parsed != direct {
            return Err(format!("{family} JSON does not round-trip"));
        }
    }
    Ok(format!(
        "{} bytes identical, 3 JSON tables round-trip",
        first.stdout.len()
    ))
}

fn build_spec(family: &str, flags: &[&str]) -> polydaehee_core::Result<FamilySpec> {
    let mut p = Params::default();
    for pair in flags.chunks(2) {
        match pair[0] {
            "--k" => p.k = pair[1].parse().unwrap(),
            "--m" => p.m = pair[1].parse().unwrap(),
            "--a" => p.a = pair[1].parse().unwrap(),
            "--lambda" => p.lambda = pair[1].parse()?,
            other => panic!("unexpected flag {other}"),
        }
    }
    FamilySpec::new(family, p)
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("identity suite, default grid, N=16", identity_suite),
        ("special-case reductions, N=16", reductions),
        ("classical anchors vs oracle", anchors),
        ("Li_1 closed-form atoms", polylog_closed_forms),
        ("vanishing prefix P_n = 0 for n < m*a", vanishing_prefix),
        ("engine tables vs naive oracle", oracle_equivalence),
        ("negative controls", negative_controls),
        ("determinism and JSON round-trip", determinism),
    ];
    let mut err = std::io::stderr();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        let line = match &verdict {
            Ok(detail) => format!("ACCEPTANCE {} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                format!("ACCEPTANCE {} {name}: FAIL ({why}; {secs:.1}s)", i + 1)
            }
        };
        let _ = writeln!(err, "{line}");
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
