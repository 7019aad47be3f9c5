mod common;

use std::collections::BTreeMap;

use common::rational;
use polydaehee_core::identities::{run_suite, theorem_sides, verify_thm_3_2, Grid, GridPoint, SuiteOptions, Theorem};
use polydaehee_core::{family_build, Engine, FamilySpec, MultiPoly, Mutation, Params, Rational, Status, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn point(k: i32, m: u32, a: u32, lambda: &str) -> GridPoint {
    GridPoint::new(k, m, a, rational(lambda))
}

fn small_grid() -> Grid {
    Grid {
        ks: vec![-1, 2],
        ms: vec![1, 2],
        as_: vec![0, 1],
        bs: vec![1],
        lambdas: vec![rational("1"), rational("-3/2")],
    }
}

fn random_assignment(rng: &mut ChaCha8Rng) -> BTreeMap<Symbol, Rational> {
    Symbol::ALL
        .into_iter()
        .map(|s| (s, Rational::frac(rng.gen_range(-40..=40), rng.gen_range(1..=9))))
        .collect()
}

#[test]
fn symbolic_pass_implies_pointwise_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let engine = Engine::new();
    let p = point(2, 2, 1, "1/3");
    for theorem in Theorem::ALL {
        let sides = theorem_sides(&engine, theorem, &p, 1, 8).unwrap();
        assert_eq!(sides.first_mismatch(), None, "{theorem:?}");
        for _ in 0..100 {
            let at = random_assignment(&mut rng);
            let n = rng.gen_range(0..sides.lhs.len());
            assert_eq!(
                sides.lhs[n].eval(&at).unwrap(),
                sides.rhs[n].eval(&at).unwrap(),
                "{theorem:?} n={n}"
            );
        }
    }
}

#[test]
fn substitution_matches_rebuilt_slots() {
    let spec = FamilySpec::new(
        "gabpdp",
        Params {
            k: -1,
            m: 2,
            a: 1,
            b: 0,
            lambda: rational("2"),
        },
    )
    .unwrap();
    let order = 7;
    let base = family_build(&spec, order).unwrap().members;
    let g = MultiPoly::symbol(Symbol::Gamma);
    let e = MultiPoly::symbol(Symbol::Eta);
    let w = MultiPoly::symbol(Symbol::Omega);
    let one = MultiPoly::one();
    let routes = [
        (Symbol::Gamma, one.clone(), spec.with_pow(&g + &one).unwrap()),
        (Symbol::Gamma, w.clone(), spec.with_pow(&g + &w).unwrap()),
        (Symbol::Eta, one.clone(), spec.with_exp(&e + &one).unwrap()),
        (Symbol::Eta, w.clone(), spec.with_exp(&e + &w).unwrap()),
    ];
    for (sym, by, rebuilt) in routes {
        let substituted: Vec<MultiPoly> = base.iter().map(|p| p.shift(sym, &by)).collect();
        assert_eq!(
            substituted,
            family_build(&rebuilt, order).unwrap().members,
            "{sym} + {by}"
        );
    }
}

#[test]
fn each_mutation_breaks_the_suite() {
    let grid = small_grid();
    for mutation in [
        Mutation::Log1pSignFlip,
        Mutation::DropGuardOrder,
        Mutation::FallingFactorialOffByOne,
    ] {
        let reports = run_suite(&Engine::with_mutation(mutation), &grid, 8, &SuiteOptions::default());
        assert!(
            reports.iter().any(|r| r.status == Status::Fail),
            "{mutation:?} went unnoticed"
        );
    }
    let clean = run_suite(&Engine::new(), &grid, 8, &SuiteOptions::default());
    assert!(clean.iter().all(|r| r.passed()));
}

#[test]
fn grid_order_does_not_matter() {
    let grid = small_grid();
    let mut reversed = grid.clone();
    reversed.ks.reverse();
    reversed.ms.reverse();
    reversed.as_.reverse();
    reversed.lambdas.reverse();
    let opts = SuiteOptions::default();
    assert_eq!(
        run_suite(&Engine::new(), &grid, 6, &opts),
        run_suite(&Engine::new(), &reversed, 6, &opts)
    );
}

#[test]
fn order_split_from_zero_matches_daehee_split_shape() {
    // a = 0, b = 1: LHS is P_{n,1}(γ, η+ω), RHS convolves P_{n,0} with the ω-core
    let r = verify_thm_3_2(2, 1, 0, 1, &rational("2"), 8);
    assert!(r.passed());
    let sides = theorem_sides(&Engine::new(), Theorem::OrderSplit, &point(2, 1, 0, "2"), 1, 6).unwrap();
    let at_zero: Vec<MultiPoly> = sides
        .lhs
        .iter()
        .map(|p| p.specialize(Symbol::Omega, &Rational::zero()))
        .collect();
    let split = theorem_sides(&Engine::new(), Theorem::DaeheeSplit, &point(2, 1, 1, "2"), 0, 6).unwrap();
    assert_eq!(at_zero, split.lhs);
}

#[test]
fn report_records_serialize() {
    let r = verify_thm_3_2(1, 1, 1, 1, &rational("-3/2"), 4);
    let json = serde_json::to_value(r.record()).unwrap();
    assert_eq!(json["kind"], "THM");
    assert_eq!(json["id"], "3.2");
    assert_eq!(json["b"], 1);
    assert_eq!(json["lambda"], "-3/2");
    assert_eq!(json["status"], "PASS");
    assert!(json.get("first_fail").is_none());
}
