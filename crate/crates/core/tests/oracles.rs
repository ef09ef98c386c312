//! Path counts from a lattice-point recursion, independent of the
//! enumerator, against enumeration and the family polynomials at `(1, 1)`.

use mtdyck::closedform::{dyck_count, family_polynomial, FormulaFamily};
use mtdyck::paths::{count, PathKind};
use num_bigint::BigInt;

/// Number of paths to `(mn, n)` by dynamic programming over lattice points.
/// The forced prefix of `t` north steps is collapsed into the start `(0, t)`.
fn dp_count(kind: PathKind, m: u32, n: u32, t: u32) -> u64 {
    let (w, h, t) = ((m * n) as usize, n as usize, t as usize);
    let m = m as usize;
    let diagonals = !matches!(kind, PathKind::Dyck | PathKind::DyckNoReturns);
    let strict = matches!(
        kind,
        PathKind::DyckNoReturns | PathKind::Positive | PathKind::PositiveMdiv
    );
    let mdiv = matches!(kind, PathKind::SmallMdiv | PathKind::PositiveMdiv);
    let allowed = |x: usize, y: usize| x <= m * y && (!strict || x < m * y || (x, y) == (w, h));
    let mut ways = vec![vec![0u64; w + 1]; h + 1];
    ways[t][0] = 1;
    for y in t..=h {
        for x in 0..=w {
            if (x, y) == (0, t) || !allowed(x, y) {
                continue;
            }
            let mut v = 0;
            if y > t {
                v += ways[y - 1][x];
            }
            if x > 0 {
                v += ways[y][x - 1];
            }
            if diagonals && x > 0 && y > t && x - 1 != m * (y - 1) && (!mdiv || x % m == 0) {
                v += ways[y - 1][x - 1];
            }
            ways[y][x] = v;
        }
    }
    ways[h][w]
}

#[test]
fn counts_agree_with_recursion() {
    use FormulaFamily as F;
    for m in 1..=3u32 {
        for n in 1..=6u32 {
            for t in 1..=n {
                for kind in PathKind::ALL {
                    assert_eq!(
                        count(kind, m, n, t).unwrap(),
                        dp_count(kind, m, n, t),
                        "{kind:?} m={m} n={n} t={t}"
                    );
                }
                let d = dp_count(PathKind::Dyck, m, n, t);
                assert_eq!(dyck_count(m as i64, n, t).unwrap(), BigInt::from(d));
                let one = BigInt::from(1);
                let at_one = |f| family_polynomial(f, m as i64, n, t).unwrap().eval(&one, &one);
                assert_eq!(at_one(F::N), BigInt::from(d));
                assert_eq!(at_one(F::A), BigInt::from(d));
                assert_eq!(at_one(F::S), BigInt::from(dp_count(PathKind::Small, m, n, t)));
                assert_eq!(at_one(F::F), BigInt::from(dp_count(PathKind::Small, m, n, t)));
                assert_eq!(at_one(F::Sm), BigInt::from(dp_count(PathKind::SmallMdiv, m, n, t)));
                assert_eq!(at_one(F::Fm), BigInt::from(dp_count(PathKind::SmallMdiv, m, n, t)));
                assert_eq!(at_one(F::P), BigInt::from(dp_count(PathKind::Positive, m, n, t)));
                assert_eq!(at_one(F::Pm), BigInt::from(dp_count(PathKind::PositiveMdiv, m, n, t)));
            }
        }
    }
}

#[test]
fn worked_counts() {
    assert_eq!(dp_count(PathKind::Dyck, 2, 4, 2), 25);
    assert_eq!(dp_count(PathKind::SmallMdiv, 2, 4, 2), 47);
    assert_eq!(dp_count(PathKind::PositiveMdiv, 2, 4, 2), 37);
    // small Schröder numbers 1, 3, 11, 45
    let small: Vec<u64> = (1..=4).map(|n| dp_count(PathKind::Small, 1, n, 1)).collect();
    assert_eq!(small, vec![1, 3, 11, 45]);
}
