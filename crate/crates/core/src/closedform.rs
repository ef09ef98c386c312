//! Closed-form coefficient formulas for the nine path-counting families.
//!
//! Every formula is evaluated for any nonzero integer `m`, including negative
//! values. Binomials use the falling-factorial convention, so `C(top, k)` is
//! defined for negative `top`. Fractional prefactors are carried as exact
//! rationals and the final value must be an integer.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{param_err, Error, Result};
use crate::polynomial::BivarPoly;

/// The polynomial families with explicit coefficient formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormulaFamily {
    /// Valleys and returns of Dyck paths.
    N,
    /// `m`-valleys and returns of Dyck paths.
    A,
    /// `i`-valleys (`i < m`) and returns of Dyck paths.
    B,
    /// Small Schröder paths by `codim - ret` and returns.
    F,
    /// `m`-divisible small Schröder paths by `codim - ret` and returns.
    Fm,
    /// Small Schröder paths by diagonals and cornered diagonals.
    S,
    /// `m`-divisible small Schröder paths by `m`-diagonals and cornered diagonals.
    Sm,
    /// Positive Schröder paths by diagonals and cornered diagonals.
    P,
    /// `m`-divisible positive Schröder paths.
    Pm,
}

impl FormulaFamily {
    pub const ALL: [FormulaFamily; 9] = [
        Self::N,
        Self::A,
        Self::B,
        Self::F,
        Self::Fm,
        Self::S,
        Self::Sm,
        Self::P,
        Self::Pm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::N => "N",
            Self::A => "A",
            Self::B => "B",
            Self::F => "F",
            Self::Fm => "Fm",
            Self::S => "S",
            Self::Sm => "Sm",
            Self::P => "P",
            Self::Pm => "Pm",
        }
    }

    /// Index pairs `(a, b)` summed over for the family at `(n, t)`.
    pub fn index_range(self, n: u32, t: u32) -> Vec<(u32, u32)> {
        let r = n - t;
        let mut out = Vec::new();
        match self {
            Self::N | Self::A | Self::S | Self::Sm | Self::P | Self::Pm => {
                for a in 0..=r {
                    for b in 0..=a {
                        out.push((a, b));
                    }
                }
            }
            Self::B | Self::F | Self::Fm => {
                for a in 0..=r {
                    for b in 0..=(r - a) {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for FormulaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// `C(top, k)` with the falling-factorial convention; zero for `k < 0`.
pub fn binom(top: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if top >= 0 && k > top {
        return BigInt::zero();
    }
    // symmetric shortcut keeps the product short for nonnegative tops
    let k = if top >= 0 && 2 * k > top { top - k } else { k };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= top - i;
        den *= i + 1;
    }
    num / den
}

fn q(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn qi(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn qb(top: i64, k: i64) -> BigRational {
    q(binom(top, k))
}

/// `num / den`, where a zero numerator wins over a zero denominator.
///
/// Several formulas contain removable `0/0` terms at boundary indices (for
/// example `(a - b)/(n - b - 1)` with `a = b = n - 1`); those terms vanish.
fn frac(num: i64, den: i64) -> Result<BigRational> {
    if num == 0 {
        return Ok(BigRational::zero());
    }
    if den == 0 {
        return Err(Error::IntegralityViolation {
            context: "fraction with zero denominator".into(),
            value: format!("{num}/0"),
        });
    }
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

fn to_integer(v: BigRational, context: impl FnOnce() -> String) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::IntegralityViolation {
            context: context(),
            value: v.to_string(),
        })
    }
}

pub(crate) fn check_params(m: i64, n: u32, t: u32) -> Result<()> {
    if m == 0 {
        return param_err("m must be nonzero");
    }
    if n == 0 || t == 0 {
        return param_err("n and t must be positive");
    }
    if t > n {
        return param_err(format!("t = {t} exceeds n = {n}"));
    }
    Ok(())
}

/// Coefficient of `x^a y^b` in the family polynomial.
pub fn coeff(family: FormulaFamily, m: i64, n: u32, t: u32, a: i64, b: i64) -> Result<BigInt> {
    check_params(m, n, t)?;
    let (n, t) = (n as i64, t as i64);
    let mn = m * n;
    let value: BigRational = match family {
        FormulaFamily::N => {
            qb(n - t, a) * qb(mn - b - 1, a - b) - qi(m) * qb(n - t + 1, a + 1) * qb(mn - b - 2, a - b - 1)
        }
        FormulaFamily::A => {
            qb(n - b - 2, a - b) * qb(mn - t + 1, n - t - a) - qi(m) * qb(n - b - 1, a - b) * qb(mn - t, n - t - a - 1)
        }
        FormulaFamily::B => frac(t + b, n)? * qb(n, a) * qb(mn - t - b - 1, n - t - a - b),
        FormulaFamily::F => frac(t + b, n)? * qb(mn + a - 1, a) * qb(mn, n - t - a - b),
        FormulaFamily::Fm => frac(t + b, n)? * qb(mn + a - 1, a) * qb(n, n - t - a - b),
        FormulaFamily::S => {
            let mut sum = BigRational::zero();
            for i in 1..=(n - t + 1) {
                let binoms = qb(mn - i + a - b, a - b) * qb(n - t + 1, n - t - i + 1) * qb(mn, i - a - 1);
                if binoms.is_zero() {
                    continue;
                }
                let d = mn - i + a - b;
                // for a = b the first and last fractions sum to (n-i+a+1)/n;
                // this form has no pole at m = 1, i = n
                let head = if a == b {
                    frac(n - i + a + 1, n)?
                } else {
                    frac((n - i) * (mn - i + a + 1), n * d)? + frac((b + 1) * (m - 1), d)?
                };
                let factor = head - frac(n - t - i + 1, n - t + 1)?;
                sum += factor * binoms;
            }
            sum
        }
        FormulaFamily::Sm => {
            let mut sum = BigRational::zero();
            for i in 1..=(n - t + 1) {
                let binoms = qb(n - i + a - b, a - b) * qb(mn - t + 1, n - t - i + 1) * qb(n, i - a - 1);
                if binoms.is_zero() {
                    continue;
                }
                // (n-i)/(n-i+a-b) cancels for a = b, including at i = n
                let head = if a == b {
                    frac(n - i + a + 1, n)?
                } else {
                    frac((n - i) * (n - i + a + 1), n * (n - i + a - b))?
                };
                let factor = head - frac(m * (n - t - i + 1), mn - t + 1)?;
                sum += factor * binoms;
            }
            sum
        }
        FormulaFamily::P => {
            let binoms = qb(mn - b - 1, a - b) * qb(mn + n - t - a - 1, n - t - a);
            if binoms.is_zero() {
                BigRational::zero()
            } else {
                (frac(t + a, n)? - frac(m * (a - b), mn - b - 1)?) * binoms
            }
        }
        FormulaFamily::Pm => {
            let binoms = qb(n - b - 1, a - b) * qb(mn + n - t - a - 1, n - t - a);
            if binoms.is_zero() {
                BigRational::zero()
            } else {
                (frac(t + a, n)? - frac(a - b, n - b - 1)?) * binoms
            }
        }
    };
    to_integer(value, || format!("{family}(m={m}, n={n}, t={t}, a={a}, b={b})"))
}

/// The family polynomial assembled over the family's index range.
pub fn family_polynomial(family: FormulaFamily, m: i64, n: u32, t: u32) -> Result<BivarPoly> {
    check_params(m, n, t)?;
    let mut p = BivarPoly::zero();
    for (a, b) in family.index_range(n, t) {
        p.add_term(a, b, coeff(family, m, n, t, a as i64, b as i64)?);
    }
    Ok(p)
}

/// `d(m; n, t, a, b)`: the `A`-family coefficient.
pub fn d_coeff(m: i64, n: u32, t: u32, a: i64, b: i64) -> Result<BigInt> {
    coeff(FormulaFamily::A, m, n, t, a, b)
}

/// `p(m; n, t, a, b)`: the `Pm`-family coefficient.
pub fn p_coeff(m: i64, n: u32, t: u32, a: i64, b: i64) -> Result<BigInt> {
    coeff(FormulaFamily::Pm, m, n, t, a, b)
}

/// Named single-variable specializations and counting numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Specialization {
    /// `N(x, 1)` at `t = 1`.
    NarT1,
    /// `N(x, 0)` at `t = 1`.
    NarNoret,
    /// `A(x, 1) = B(x, 1)` at `t = 1`.
    BallT1,
    /// `A(x, 0)` at `t = 1`; needs `n >= 2`.
    BallNoretM,
    /// `B(x, 0)` at `t = 1`.
    BallNoretI,
    /// Fuss-Catalan number.
    Cat,
    /// Positive Fuss-Catalan number.
    CatPlus,
    /// Points of the dilated simplex in exactly `k` walls (dilation `mn + 1`).
    NarK,
    /// Points of the dilated simplex in exactly `k` walls (dilation `mn - 1`).
    NarPlusK,
    /// `A(x, 1)` for general `t`, passed as the extra index.
    RankGen,
}

/// Result of [`specialization`]: either a polynomial in `x` or a number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecValue {
    Poly(BivarPoly),
    Int(BigInt),
}

impl SpecValue {
    pub fn into_poly(self) -> BivarPoly {
        match self {
            SpecValue::Poly(p) => p,
            SpecValue::Int(v) => BivarPoly::constant(v),
        }
    }
}

/// Evaluates a specialization. `extra` is `k` for the wall counts and `t`
/// for `RankGen`; it is ignored otherwise.
pub fn specialization(kind: Specialization, m: i64, n: u32, extra: Option<u32>) -> Result<SpecValue> {
    if m == 0 || n == 0 {
        return param_err("m must be nonzero and n positive");
    }
    let ni = n as i64;
    let mn = m * ni;
    let ctx = |r: i64| move || format!("{kind:?}(m={m}, n={n}, index {r})");
    let series = |f: &dyn Fn(i64) -> Result<BigRational>| -> Result<SpecValue> {
        let mut p = BivarPoly::zero();
        for r in 0..ni {
            p.add_term(r as u32, 0, to_integer(f(r)?, ctx(r))?);
        }
        Ok(SpecValue::Poly(p))
    };
    match kind {
        Specialization::NarT1 => series(&|r| Ok(frac(1, ni)? * qb(ni, r + 1) * qb(mn, r))),
        Specialization::NarNoret => series(&|r| Ok(frac(1, ni)? * qb(ni, r + 1) * qb(mn - 2, r))),
        Specialization::BallT1 => series(&|r| Ok(frac(1, ni)? * qb(ni, r) * qb(mn, ni - r - 1))),
        Specialization::BallNoretM => {
            if n < 2 {
                return param_err("A(x, 0) formula needs n >= 2");
            }
            series(&|r| Ok(frac(m, ni - 1)? * qb(ni - 1, r) * qb(mn - 1, ni - r - 2)))
        }
        Specialization::BallNoretI => series(&|r| Ok(frac(1, ni)? * qb(ni, r) * qb(mn - 2, ni - r - 1))),
        Specialization::Cat => Ok(SpecValue::Int(cat(m, n)?)),
        Specialization::CatPlus => Ok(SpecValue::Int(cat_plus(m, n)?)),
        Specialization::NarK => {
            let k = extra.ok_or_else(|| Error::Parameter("wall count k required".into()))?;
            Ok(SpecValue::Int(nar(m, n, k as i64)?))
        }
        Specialization::NarPlusK => {
            let k = extra.ok_or_else(|| Error::Parameter("wall count k required".into()))?;
            Ok(SpecValue::Int(nar_plus(m, n, k as i64)?))
        }
        Specialization::RankGen => {
            let t = extra.ok_or_else(|| Error::Parameter("t required".into()))?;
            check_params(m, n, t)?;
            let t = t as i64;
            let mut p = BivarPoly::zero();
            for a in 0..=(ni - t) {
                let v = frac(mn * t - (t - 1) * (ni - a), ni * (mn - t + 1))? * qb(mn - t + 1, ni - t - a) * qb(ni, a);
                p.add_term(a as u32, 0, to_integer(v, ctx(a))?);
            }
            Ok(SpecValue::Poly(p))
        }
    }
}

/// `Cat(m, n) = C((m+1)n, n) / (mn + 1)`.
pub fn cat(m: i64, n: u32) -> Result<BigInt> {
    let n = n as i64;
    let v = frac(1, m * n + 1)? * qb((m + 1) * n, n);
    to_integer(v, || format!("Cat({m}, {n})"))
}

/// `Cat⁺(m, n) = C((m+1)n - 2, n) / (mn - 1)`.
///
/// When `mn = 1` the quotient is `0/0`; the value is then taken from the
/// coefficient sum of `N(x, 0)`, which is `1` for `m = n = 1`.
pub fn cat_plus(m: i64, n: u32) -> Result<BigInt> {
    let ni = n as i64;
    if m * ni == 1 {
        return match specialization(Specialization::NarNoret, m, n, None)? {
            SpecValue::Poly(p) => Ok(p.coefficient_sum()),
            SpecValue::Int(v) => Ok(v),
        };
    }
    let v = frac(1, m * ni - 1)? * qb((m + 1) * ni - 2, ni);
    to_integer(v, || format!("Cat+({m}, {n})"))
}

/// `Nar(m, n, k) = C(n-1, n-k-1) C(mn+1, n-k) / (mn + 1)`.
pub fn nar(m: i64, n: u32, k: i64) -> Result<BigInt> {
    let n = n as i64;
    let v = frac(1, m * n + 1)? * qb(n - 1, n - k - 1) * qb(m * n + 1, n - k);
    to_integer(v, || format!("Nar({m}, {n}, {k})"))
}

/// `Nar⁺(m, n, k) = C(n-1, n-k-1) C(mn-1, n-k) / (mn - 1)`.
pub fn nar_plus(m: i64, n: u32, k: i64) -> Result<BigInt> {
    let n = n as i64;
    let binoms = qb(n - 1, n - k - 1) * qb(m * n - 1, n - k);
    if binoms.is_zero() {
        return Ok(BigInt::zero());
    }
    let v = frac(1, m * n - 1)? * binoms;
    to_integer(v, || format!("Nar+({m}, {n}, {k})"))
}

/// Cardinality of the `(m, t)`-Dyck paths of height `n`:
/// `(mt + 1)/(mn + 1) · C((m+1)n - t, n - t)`.
pub fn dyck_count(m: i64, n: u32, t: u32) -> Result<BigInt> {
    check_params(m, n, t)?;
    let (n, t) = (n as i64, t as i64);
    let v = frac(m * t + 1, m * n + 1)? * qb((m + 1) * n - t, n - t);
    to_integer(v, || format!("|D({m}, {n}, {t})|"))
}

/// Sign helper: `(-1)^e`.
pub fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    #[test]
    fn binom_conventions() {
        assert_eq!(binom(-3, 3), BigInt::from(-10));
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(4, -1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(-1, 0), BigInt::one());
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(-1, 4), BigInt::one());
    }

    #[test]
    fn single_coefficients() {
        assert_eq!(coeff(FormulaFamily::N, 2, 4, 2, 2, 1).unwrap(), BigInt::from(4));
        assert_eq!(coeff(FormulaFamily::A, 2, 4, 2, 1, 1).unwrap(), BigInt::from(5));
        assert_eq!(coeff(FormulaFamily::B, 2, 4, 2, 0, 2).unwrap(), BigInt::from(1));
        assert_eq!(coeff(FormulaFamily::Sm, 2, 4, 2, 1, 1).unwrap(), BigInt::from(8));
    }

    #[test]
    fn displayed_polynomials() {
        let fp = |f, m, n, t| family_polynomial(f, m, n, t).unwrap();
        assert_eq!(fp(FormulaFamily::N, 2, 4, 2), p("x^2y^2 + 4x^2y + 9x^2 + 2xy + 8x + 1"));
        assert_eq!(fp(FormulaFamily::A, 2, 4, 2), p("x^2y^2 + x^2y + x^2 + 5xy + 8x + 9"));
        assert_eq!(fp(FormulaFamily::B, 2, 4, 2), p("3x^2 + 3xy + y^2 + 10x + 3y + 5"));
        assert_eq!(fp(FormulaFamily::A, 2, 3, 1), p("x^2y^2 + 4xy + 2x + 5"));
        assert_eq!(
            fp(FormulaFamily::Sm, 2, 4, 2),
            p("x^2y^2 + x^2y + x^2 + 8xy + 11x + 25")
        );
        assert_eq!(
            fp(FormulaFamily::Pm, 2, 4, 2),
            p("x^2y^2 + x^2y + x^2 + 6xy + 10x + 18")
        );
    }

    #[test]
    fn full_start_gives_one() {
        for f in FormulaFamily::ALL {
            for m in 1..=3 {
                assert_eq!(family_polynomial(f, m, 4, 4).unwrap(), BivarPoly::one(), "{f}");
            }
        }
    }

    #[test]
    fn counting_numbers() {
        assert_eq!(cat(2, 3).unwrap(), BigInt::from(12));
        assert_eq!(cat(3, 5).unwrap(), BigInt::from(969));
        assert_eq!(cat_plus(1, 3).unwrap(), BigInt::from(2));
        assert_eq!(cat_plus(1, 1).unwrap(), BigInt::one());
        assert_eq!(nar(1, 2, 0).unwrap(), BigInt::one());
        assert_eq!(nar_plus(1, 2, 0).unwrap(), BigInt::zero());
        assert_eq!(nar_plus(1, 2, 1).unwrap(), BigInt::one());
        assert_eq!(dyck_count(2, 4, 2).unwrap(), BigInt::from(25));
    }

    #[test]
    fn specializations_match_family_evaluations() {
        for m in 1..=3i64 {
            for n in 2..=6u32 {
                let nn = family_polynomial(FormulaFamily::N, m, n, 1).unwrap();
                let aa = family_polynomial(FormulaFamily::A, m, n, 1).unwrap();
                let sp = |k| specialization(k, m, n, None).unwrap().into_poly();
                assert_eq!(nn.specialize_y(1), sp(Specialization::NarT1));
                assert_eq!(nn.specialize_y(0), sp(Specialization::NarNoret));
                assert_eq!(aa.specialize_y(1), sp(Specialization::BallT1));
                assert_eq!(aa.specialize_y(0), sp(Specialization::BallNoretM));
                if m >= 2 {
                    let bb = family_polynomial(FormulaFamily::B, m, n, 1).unwrap();
                    assert_eq!(bb.specialize_y(0), sp(Specialization::BallNoretI));
                    assert_eq!(bb.specialize_y(1), sp(Specialization::BallT1));
                }
                assert_eq!(nn.coefficient_sum(), cat(m, n).unwrap());
                assert_eq!(nn.specialize_y(0).coefficient_sum(), cat_plus(m, n).unwrap());
            }
        }
    }

    #[test]
    fn rank_generating_function() {
        for m in 1..=3i64 {
            for n in 1..=6u32 {
                for t in 1..=n {
                    let aa = family_polynomial(FormulaFamily::A, m, n, t).unwrap();
                    let rg = specialization(Specialization::RankGen, m, n, Some(t))
                        .unwrap()
                        .into_poly();
                    assert_eq!(aa.specialize_y(1), rg, "m={m} n={n} t={t}");
                }
            }
        }
    }

    #[test]
    fn negative_m_is_integral() {
        for f in FormulaFamily::ALL {
            for m in [-3i64, -2, -1, 1, 2, 3] {
                for n in 1..=7u32 {
                    for t in 1..=n {
                        family_polynomial(f, m, n, t).unwrap_or_else(|e| panic!("{f} m={m} n={n} t={t}: {e}"));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(family_polynomial(FormulaFamily::N, 0, 3, 1).is_err());
        assert!(family_polynomial(FormulaFamily::N, 1, 3, 4).is_err());
        assert!(family_polynomial(FormulaFamily::N, 1, 3, 0).is_err());
    }
}
