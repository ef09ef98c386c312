//! Acceptance run: one PASS/FAIL line per criterion, with wall-clock time
//! against the pinned budget. Every comparison is exact.

mod common;

use std::time::{Duration, Instant};

use mtdyck::closedform::{family_polynomial, FormulaFamily};
use mtdyck::polynomial::{substitute, BivarPoly};
use mtdyck::report::Comparison;
use mtdyck::transforms;
use mtdyck::verify;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn from_comparisons(cs: &[Comparison]) -> Self {
        Self {
            checks: cs.len(),
            failures: cs.iter().filter(|c| !c.holds()).map(|c| c.to_string()).collect(),
        }
    }
}

fn criterion(id: u32, name: &str, budget: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = run();
    let elapsed = start.elapsed();
    let ok = out.failures.is_empty() && out.checks > 0 && elapsed <= budget;
    println!(
        "criterion {id} [{}] {name}: {} checks, {} failures, {:.2}s (budget {}s)",
        if ok { "PASS" } else { "FAIL" },
        out.checks,
        out.failures.len(),
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    for f in out.failures.iter().take(10) {
        println!("    {f}");
    }
    ok
}

fn suite(res: mtdyck::Result<Vec<Comparison>>) -> Outcome {
    match res {
        Ok(cs) => Outcome::from_comparisons(&cs),
        Err(e) => Outcome {
            checks: 1,
            failures: vec![format!("error: {e}")],
        },
    }
}

fn p(s: &str) -> BivarPoly {
    s.parse().unwrap()
}

fn golden() -> Outcome {
    use FormulaFamily as F;
    let fp = |f, m, n, t| family_polynomial(f, m, n, t).unwrap();
    let n242 = fp(F::N, 2, 4, 2);
    let a242 = fp(F::A, 2, 4, 2);
    let b242 = fp(F::B, 2, 4, 2);
    let a231 = fp(F::A, 2, 3, 1);
    let cs = vec![
        Comparison::new("N_{2,4,2}", &n242, p("x^2y^2 + 4x^2y + 9x^2 + 2xy + 8x + 1")),
        Comparison::new("N_{2,4,2}(x,1)", n242.specialize_y(1), p("14x^2 + 10x + 1")),
        Comparison::new("N_{2,4,2}(x,0)", n242.specialize_y(0), p("9x^2 + 8x + 1")),
        Comparison::new("A_{2,4,2}", &a242, p("x^2y^2 + x^2y + x^2 + 5xy + 8x + 9")),
        Comparison::new("A_{2,4,2}(x,0)", a242.specialize_y(0), p("x^2 + 8x + 9")),
        Comparison::new("B_{2,4,2}", &b242, p("3x^2 + 3xy + y^2 + 10x + 3y + 5")),
        Comparison::new("B_{2,4,2}(x,0)", b242.specialize_y(0), p("3x^2 + 10x + 5")),
        Comparison::new("A_{2,3,1}", &a231, p("x^2y^2 + 4xy + 2x + 5")),
        Comparison::new(
            "F-transform of A_{2,3,1}",
            substitute(&a231, &transforms::f_triangle(2)).unwrap(),
            p("7x^2 + 4xy + y^2 + 6x + 2y + 1"),
        ),
        Comparison::new(
            "Sm_{2,4,2}",
            fp(F::Sm, 2, 4, 2),
            p("x^2y^2 + x^2y + x^2 + 8xy + 11x + 25"),
        ),
        Comparison::new(
            "Pm_{2,4,2}",
            fp(F::Pm, 2, 4, 2),
            p("x^2y^2 + x^2y + x^2 + 6xy + 10x + 18"),
        ),
    ];
    Outcome::from_comparisons(&cs)
}

fn arrangement() -> Outcome {
    let mut cs = Vec::new();
    let mut err = None;
    match verify::arrangement(3, 4) {
        Ok(c) => cs.extend(c),
        Err(e) => err = Some(e),
    }
    match verify::arrangement_cell(2, 5) {
        Ok(c) => cs.extend(c),
        Err(e) => err = Some(e),
    }
    let mut out = Outcome::from_comparisons(&cs);
    if let Some(e) = err {
        out.failures.push(format!("error: {e}"));
    }
    out
}

fn property<S: Strategy>(
    runner: &mut TestRunner,
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
    failures: &mut Vec<String>,
) {
    if let Err(e) = runner.run(&strategy, test) {
        failures.push(format!("{name}: {e}"));
    }
}

fn properties() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 64,
        failure_persistence: None,
        ..Config::default()
    });
    let mut failures = Vec::new();
    property(
        &mut runner,
        "path validity",
        common::path_params(),
        common::path_validity,
        &mut failures,
    );
    property(
        &mut runner,
        "binomial conventions",
        (-25i64..25, -3i64..12),
        common::binom_conventions,
        &mut failures,
    );
    property(
        &mut runner,
        "substitution homomorphism",
        (common::small_poly(), common::small_poly()),
        common::substitution_homomorphism,
        &mut failures,
    );
    property(
        &mut runner,
        "truncation consistency",
        common::truncation_params(),
        common::truncation_consistency,
        &mut failures,
    );
    property(
        &mut runner,
        "wall partition",
        common::simplex_params(),
        common::wall_partition,
        &mut failures,
    );
    Outcome { checks: 5, failures }
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, "golden examples", secs(1), golden),
        criterion(2, "closed forms vs brute force, m<=3, t<=n<=7", secs(300), || {
            suite(verify::formulas(3, 7))
        }),
        criterion(
            3,
            "functional equations and extractions, m<=3, t<=n<=6",
            secs(120),
            || suite(verify::series(3, 6)),
        ),
        criterion(4, "valley-marking bijection, m<=3, n<=6", secs(120), || {
            suite(verify::bijection(3, 6))
        }),
        criterion(5, "negative-m reciprocity, m<=3, 2<=n<=7", secs(60), || {
            suite(verify::reciprocity(3, 7))
        }),
        criterion(6, "simplex lattice points, m<=3, n<=5", secs(120), || {
            suite(verify::ehrhart(3, 5))
        }),
        criterion(
            7,
            "arrangement regions and flats, m<=3, n<=4 and (2,5)",
            secs(300),
            arrangement,
        ),
        criterion(8, "randomized invariants", secs(120), properties),
    ];
    let passed = results.iter().filter(|ok| **ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
