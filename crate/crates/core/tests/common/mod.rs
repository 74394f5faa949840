//! Shared fixtures: a seeded generator of random scalars and the property
//! suites run both by `properties.rs` and by the acceptance harness.

#![allow(dead_code)]

use std::collections::BTreeMap;

use jacobi_core::geometry::{jacobi_bracket, lie_bracket, poisson_bracket, Chart, MultivectorField};
use jacobi_core::jacobi::table1::table1_catalog;
use jacobi_core::poisson::poissonize;
use jacobi_core::symexpr::{parse_scalar, rational, Context, Scalar, Symbol};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};

pub const SEED: [u8; 32] = *b"bianchi-jacobi-poisson-seed-2024";
pub const CASES: u32 = 1000;

pub const NAMES: [&str; 4] = ["x", "y", "z", "s"];

const ATOMS: &[&str] = &[
    "x", "y", "z", "s", "x^2", "exp(s)", "exp(-s)", "exp(x - s)", "sin(z)", "cos(z)",
    "cos(2*z)", "sinh(z)", "cosh(y)", "3/2",
];

pub fn ctx() -> Context {
    Context::with_coordinates(&NAMES)
}

pub fn chart() -> Chart {
    Chart::from_names(&NAMES).unwrap()
}

pub fn coords() -> Vec<Symbol> {
    chart().coords().to_vec()
}

pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

/// Sum of up to three terms, each a rational times a product of up to three atoms.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    let term = (
        -9i64..=9,
        1i64..=5,
        prop::collection::vec(0..ATOMS.len(), 1..=3),
    );
    prop::collection::vec(term, 1..=3).prop_map(|terms| {
        let ctx = ctx();
        terms
            .into_iter()
            .map(|(n, d, atoms)| {
                atoms
                    .iter()
                    .map(|&a| parse_scalar(ATOMS[a], &ctx).unwrap())
                    .fold(Scalar::constant(rational(n, d)), |acc, f| acc * f)
            })
            .sum()
    })
}

fn run<S, F>(cases: u32, strategy: S, test: F) -> Result<(), String>
where
    S: Strategy,
    S::Value: std::fmt::Debug,
    F: Fn(S::Value) -> Result<(), TestCaseError>,
{
    runner(cases).run(&strategy, test).map_err(|e| match e {
        TestError::Fail(why, value) => format!("{why}; input {value:?}"),
        TestError::Abort(why) => format!("aborted: {why}"),
    })
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    run(cases, (scalar(), scalar(), scalar()), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        Ok(())
    })
}

pub fn leibniz(cases: u32) -> Result<(), String> {
    let vars = coords();
    run(cases, (scalar(), scalar(), 0..4usize), move |(a, b, k)| {
        let v = &vars[k];
        let lhs = (&a * &b).differentiate(v).unwrap();
        let rhs = a.differentiate(v).unwrap() * &b + &a * &b.differentiate(v).unwrap();
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

/// `{f,g} = −{g,f}` for the II Poissonization and the II Jacobi bracket,
/// and `[X,Y] = −[Y,X]` for vector fields.
pub fn antisymmetry(cases: u32) -> Result<(), String> {
    let entry = table1_catalog()[0].entries[0].clone();
    let group = entry.group();
    let p = poissonize(&group).unwrap();
    let three = Chart::from_names(&NAMES[..3]).unwrap();
    let ch = chart();
    let fields = (
        prop::collection::vec(scalar(), 4),
        prop::collection::vec(scalar(), 4),
    );
    run(cases, (scalar(), scalar(), fields), move |(f, g, (xs, ys))| {
        let fg = poisson_bracket(&f, &g, p.field()).unwrap();
        let gf = poisson_bracket(&g, &f, p.field()).unwrap();
        prop_assert!((&fg + &gf).is_zero());
        // Jacobi bracket on the 3-chart: drop s-dependence by fixing s = 0
        let at0: BTreeMap<Symbol, Scalar> =
            [(Symbol::coordinate("s"), Scalar::zero())].into_iter().collect();
        let (f3, g3) = (f.substitute(&at0).unwrap(), g.substitute(&at0).unwrap());
        let jfg = jacobi_bracket(&f3, &g3, group.lambda(), group.e()).unwrap();
        let jgf = jacobi_bracket(&g3, &f3, group.lambda(), group.e()).unwrap();
        prop_assert!((&jfg + &jgf).is_zero());
        prop_assert_eq!(group.chart(), &three);
        let x = MultivectorField::vector(&ch, xs).unwrap();
        let y = MultivectorField::vector(&ch, ys).unwrap();
        let xy = lie_bracket(&x, &y).unwrap();
        let yx = lie_bracket(&y, &x).unwrap();
        prop_assert!(xy.add(&yx).unwrap().is_zero());
        Ok(())
    })
}

pub fn round_trip(cases: u32) -> Result<(), String> {
    let ctx = ctx();
    run(cases, scalar(), move |a| {
        let text = a.to_string();
        let back = parse_scalar(&text, &ctx).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(back, a, "printed as {}", text);
        Ok(())
    })
}

pub const FD_STEP: f64 = 1e-5;
pub const FD_TOL: f64 = 1e-8;

/// Central differences against the symbolic derivative at points in
/// `[-1, 1]^4`; the tolerance scales with the magnitude of `f` and `f′`.
pub fn finite_differences(cases: u32) -> Result<(), String> {
    let vars = coords();
    let point = prop::array::uniform4(-1.0f64..1.0);
    run(cases, (scalar(), 0..4usize, point), move |(f, k, pt)| {
        let at = |shift: f64| -> BTreeMap<Symbol, f64> {
            vars.iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), pt[i] + if i == k { shift } else { 0.0 }))
                .collect()
        };
        let d = f.differentiate(&vars[k]).unwrap().evaluate_f64(&at(0.0)).unwrap();
        let plus = f.evaluate_f64(&at(FD_STEP)).unwrap();
        let minus = f.evaluate_f64(&at(-FD_STEP)).unwrap();
        let fd = (plus - minus) / (2.0 * FD_STEP);
        let scale = 1f64.max(d.abs()).max(plus.abs());
        prop_assert!((fd - d).abs() <= FD_TOL * scale, "fd {} vs {} for {}", fd, d, f);
        Ok(())
    })
}
