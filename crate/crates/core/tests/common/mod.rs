//! Property checks shared by the property-test target and the acceptance run.

#![allow(dead_code)]

use mtdyck::closedform::binom;
use mtdyck::paths::{count, enumerate, LatticePath, PathKind};
use mtdyck::polynomial::{substitute, BivarPoly};
use mtdyck::reciprocity::{simplex_points, wall_counts};
use mtdyck::series::{solve_functional_equation, EquationId};
use mtdyck::transforms::f_triangle;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn path_params() -> impl Strategy<Value = (u32, u32, u32, PathKind)> {
    (1u32..=3, 1u32..=6).prop_flat_map(|(m, n)| (Just(m), Just(n), 1..=n, prop::sample::select(PathKind::ALL.to_vec())))
}

/// Every enumerated path re-validates, has the requested kind, and respects
/// the counted inclusions `ret <= val_m` and `cd <= dg_m`.
pub fn path_validity((m, n, t, kind): (u32, u32, u32, PathKind)) -> Result<(), TestCaseError> {
    let paths = enumerate(kind, m, n, t).unwrap();
    prop_assert_eq!(paths.len() as u64, count(kind, m, n, t).unwrap());
    for p in &paths {
        let again = LatticePath::new(p.steps().to_vec(), m, t).unwrap();
        prop_assert_eq!(&again, p);
        prop_assert!(p.is_kind(kind), "{} is not {}", p, kind.name());
        prop_assert!(p.steps()[..t as usize].iter().all(|s| s.letter() == 'N'));
        let s = p.stats();
        prop_assert!(s.ret <= s.val_residue(m));
        prop_assert!(s.cd <= s.dg_m);
        prop_assert!(s.dg_m <= s.dg);
    }
    Ok(())
}

/// Falling-factorial binomials: vanish for `k < 0`, obey Pascal's rule for
/// every top, and negate the top as `(-1)^k C(a + k - 1, k)`.
pub fn binom_conventions((top, k): (i64, i64)) -> Result<(), TestCaseError> {
    if k < 0 {
        prop_assert_eq!(binom(top, k), BigInt::from(0));
        return Ok(());
    }
    prop_assert_eq!(binom(top, 0), BigInt::from(1));
    if k >= 1 {
        prop_assert_eq!(binom(top, k), binom(top - 1, k) + binom(top - 1, k - 1));
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    prop_assert_eq!(binom(-top, k), BigInt::from(sign) * binom(top + k - 1, k));
    if top >= 0 && k > top {
        prop_assert_eq!(binom(top, k), BigInt::from(0));
    }
    Ok(())
}

pub fn small_poly() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), -6i64..=6), 0..6).prop_map(|terms| {
        let mut p = BivarPoly::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, BigInt::from(c));
        }
        p
    })
}

/// The F-substitution with prefactor `x^{dx} (x+1)^{dy}` clears every
/// denominator of `p`; the prefactors of a product multiply.
fn clearing(p: &BivarPoly, dx: u32, dy: u32) -> BivarPoly {
    let spec = f_triangle(0).with_prefactor(BivarPoly::x().pow(dx) * (BivarPoly::x() + BivarPoly::one()).pow(dy));
    substitute(p, &spec).unwrap()
}

pub fn substitution_homomorphism((p, q): (BivarPoly, BivarPoly)) -> Result<(), TestCaseError> {
    let (px, py) = (p.x_degree().unwrap_or(0), p.y_degree().unwrap_or(0));
    let (qx, qy) = (q.x_degree().unwrap_or(0), q.y_degree().unwrap_or(0));
    let lhs = clearing(&p, px, py) * clearing(&q, qx, qy);
    let rhs = clearing(&(&p * &q), px + qx, py + qy);
    prop_assert_eq!(lhs, rhs);
    let sum_l = clearing(&p, 3, 3) + clearing(&q, 3, 3);
    prop_assert_eq!(sum_l, clearing(&(&p + &q), 3, 3));
    Ok(())
}

pub fn truncation_params() -> impl Strategy<Value = (EquationId, u32, u32, usize, usize)> {
    (
        prop::sample::select(EquationId::ALL.to_vec()),
        1u32..=3,
        1u32..=3,
        2usize..=7,
    )
        .prop_flat_map(|(eq, m, t, k)| (Just(eq), Just(m), Just(t), Just(k), 1..k))
}

/// Solving at order `K` and reading `z^j` agrees with solving at order `j`.
pub fn truncation_consistency((eq, m, t, k, j): (EquationId, u32, u32, usize, usize)) -> Result<(), TestCaseError> {
    let long = solve_functional_equation(eq, m, t, k, k).unwrap();
    let short = solve_functional_equation(eq, m, t, j, j).unwrap();
    prop_assert_eq!(long.coeff(j), short.coeff(j));
    prop_assert_eq!(long.truncate(j), short);
    Ok(())
}

pub fn simplex_params() -> impl Strategy<Value = (u32, u32)> {
    (2u32..=5, 1u32..=16)
}

/// Exactly-`k` wall counts partition the point set.
pub fn wall_partition((n, dilation): (u32, u32)) -> Result<(), TestCaseError> {
    let points = simplex_points(n, dilation).unwrap();
    let counts = wall_counts(&points, n);
    prop_assert_eq!(counts.iter().sum::<u64>(), points.len() as u64);
    for p in &points {
        let on: u32 = (0..n as usize).filter(|&f| p.on_facet(f, dilation as i64)).count() as u32;
        prop_assert_eq!(on, p.walls_hit);
    }
    Ok(())
}
