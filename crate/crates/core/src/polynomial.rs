//! Sparse bivariate polynomials over the integers.
//!
//! Terms are keyed by the exponent pair `(a, b)` of `x^a y^b`. Zero
//! coefficients are never stored, so structural equality is coefficient-wise
//! equality.
//!
//! The canonical text form orders terms by descending total degree and then
//! by descending `x` exponent, e.g. `x^2*y^2 + 4*x*y + 2*x + 5`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c.into());
        p
    }

    /// Builds a polynomial from `(a, b, coeff)` triples; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (a, b, c) in terms {
            p.add_term(a, b, c.into());
        }
        p
    }

    /// Polynomial in `x` alone from its coefficient list, lowest degree first.
    pub fn from_x_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(a, c)| (a as u32, 0, c)))
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending `(a, b)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    /// Leading term in lexicographic order with `x > y`.
    fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().next_back().map(|(&k, c)| (k, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiplies by `x^da y^db`.
    pub fn shift(&self, da: u32, db: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + da, b + db), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * num_traits::pow(x.clone(), a as usize) * num_traits::pow(y.clone(), b as usize))
            .sum()
    }

    /// Substitutes an integer for `y`, leaving a polynomial in `x`.
    pub fn specialize_y(&self, y: i64) -> Self {
        let y = BigInt::from(y);
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a, 0, c * num_traits::pow(y.clone(), b as usize));
        }
        out
    }

    /// Substitutes an integer for `x`, leaving a polynomial in `y`.
    pub fn specialize_x(&self, x: i64) -> Self {
        let x = BigInt::from(x);
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(0, b, c * num_traits::pow(x.clone(), a as usize));
        }
        out
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Maps `x^a y^b` to `x^(degree - a) y^b`, i.e. `x^degree * p(1/x, y)`.
    pub fn reverse_x(&self, degree: u32) -> Result<Self> {
        if let Some(d) = self.x_degree() {
            if d > degree {
                return Err(Error::Parameter(format!(
                    "x-degree {d} exceeds reversal degree {degree}"
                )));
            }
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((degree - a, b), c.clone()))
                .collect(),
        })
    }

    /// Exact division by `divisor` using lexicographic long division.
    ///
    /// Fails with [`Error::NonPolynomialResult`] when the remainder is nonzero
    /// or a quotient coefficient would not be an integer.
    pub fn div_exact(&self, divisor: &BivarPoly) -> Result<Self> {
        let ((da, db), dc) = match divisor.leading() {
            Some(l) => l,
            None => return Err(Error::Parameter("division by the zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(((ra, rb), rc)) = rem.leading() {
            if ra < da || rb < db {
                return Err(Error::NonPolynomialResult);
            }
            let (q, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return Err(Error::NonPolynomialResult);
            }
            let step = Self::monomial(q, ra - da, rb - db);
            rem -= &(&step * divisor);
            quotient += &step;
        }
        Ok(quotient)
    }

    /// Divides every coefficient by `d`, failing if any is not a multiple.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Result<Self> {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::IntegralityViolation {
                    context: format!("coefficient of x^{a} y^{b} divided by {d}"),
                    value: format!("{c}/{d}"),
                });
            }
            out.add_term(a, b, q);
        }
        Ok(out)
    }

    /// Terms in canonical rendering order: descending total degree, then descending `a`.
    pub fn canonical_terms(&self) -> Vec<(u32, u32, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&(a, b), c)| (a, b, c.clone())).collect();
        v.sort_by_key(|t| std::cmp::Reverse((t.0 + t.1, t.0)));
        v
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.canonical_terms()
            .into_iter()
            .map(|(a, b, c)| JsonTerm {
                a,
                b,
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self> {
        let mut p = Self::zero();
        for t in terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(t.a, t.b, c);
        }
        Ok(p)
    }
}

/// One term of the JSON rendering; the coefficient is a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub a: u32,
    pub b: u32,
    pub coeff: String,
}

/// JSON document describing one generating polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub family: String,
    pub m: i64,
    pub n: u32,
    pub t: u32,
    pub terms: Vec<JsonTerm>,
}

impl PolyRecord {
    pub fn new(family: impl Into<String>, m: i64, n: u32, t: u32, poly: &BivarPoly) -> Self {
        Self {
            family: family.into(),
            m,
            n,
            t,
            terms: poly.to_json_terms(),
        }
    }

    pub fn polynomial(&self) -> Result<BivarPoly> {
        BivarPoly::from_json_terms(&self.terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(mut self, rhs: BivarPoly) -> BivarPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(mut self, rhs: BivarPoly) -> BivarPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&BivarPoly> for BivarPoly {
    fn sub_assign(&mut self, rhs: &BivarPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, -c);
        }
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut acc: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                *acc.entry((a1 + a2, b1 + b2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BivarPoly { terms: acc }
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl From<i64> for BivarPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.canonical_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, b, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (*a == 0 && *b == 0) {
                factors.push(mag.to_string());
            }
            match a {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("y".into()),
                _ => factors.push(format!("y^{b}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for BivarPoly {
    type Err = Error;

    /// Parses the canonical rendering (and any reordering of it); `*` between
    /// factors may be omitted and whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = BivarPoly::zero();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(Error::Parse(format!("expected sign at offset {pos}")));
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                pos += 1;
            }
            let (a, b, c) = parse_term(&compact[start..pos])?;
            poly.add_term(a, b, sign * c);
        }
        Ok(poly)
    }
}

fn parse_term(term: &str) -> Result<(u32, u32, BigInt)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = BigInt::one();
    let (mut a, mut b) = (0u32, 0u32);
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {term:?}")));
        }
        // allow juxtaposition such as "4xy" or "3x^2y"
        let mut rest = factor;
        let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
        if digits > 0 {
            let c: BigInt = rest[..digits].parse().map_err(|_| Error::Parse(factor.into()))?;
            coeff *= c;
            rest = &rest[digits..];
        }
        while !rest.is_empty() {
            let var = rest.as_bytes()[0];
            rest = &rest[1..];
            let mut exp = 1u32;
            if let Some(r) = rest.strip_prefix('^') {
                let d = r.bytes().take_while(u8::is_ascii_digit).count();
                if d == 0 {
                    return Err(Error::Parse(format!("missing exponent in {factor:?}")));
                }
                exp = r[..d].parse().map_err(|_| Error::Parse(factor.into()))?;
                rest = &r[d..];
            }
            match var {
                b'x' => a += exp,
                b'y' => b += exp,
                _ => return Err(Error::Parse(format!("unknown symbol in {factor:?}"))),
            }
        }
    }
    Ok((a, b, coeff))
}

/// A quotient of two polynomials, used as the image of a variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFn {
    pub num: BivarPoly,
    pub den: BivarPoly,
}

impl RationalFn {
    pub fn new(num: BivarPoly, den: BivarPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parameter("zero denominator".into()));
        }
        Ok(Self { num, den })
    }

    pub fn poly(p: BivarPoly) -> Self {
        Self {
            num: p,
            den: BivarPoly::one(),
        }
    }

    /// Parses `"num"` or `"(num)/(den)"` using the polynomial text syntax.
    pub fn parse(s: &str) -> Result<Self> {
        match split_fraction(s) {
            Some((n, d)) => Self::new(n.parse()?, d.parse()?),
            None => Ok(Self::poly(s.parse()?)),
        }
    }
}

fn split_fraction(s: &str) -> Option<(&str, &str)> {
    let s = s.trim();
    let idx = s.find(")/(")?;
    let num = s[..idx].strip_prefix('(')?;
    let den = s[idx + 3..].strip_suffix(')')?;
    Some((num, den))
}

/// `p(x, y) ↦ prefactor · p(x_image, y_image)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionSpec {
    pub x_image: RationalFn,
    pub y_image: RationalFn,
    pub prefactor: BivarPoly,
}

impl SubstitutionSpec {
    pub fn identity() -> Self {
        Self {
            x_image: RationalFn::poly(BivarPoly::x()),
            y_image: RationalFn::poly(BivarPoly::y()),
            prefactor: BivarPoly::one(),
        }
    }

    /// Convenience constructor from text, e.g. `("(x+1)/(x)", "(y+1)/(x+1)", "x^2")`.
    pub fn parse(x_image: &str, y_image: &str, prefactor: &str) -> Result<Self> {
        Ok(Self {
            x_image: RationalFn::parse(x_image)?,
            y_image: RationalFn::parse(y_image)?,
            prefactor: prefactor.parse()?,
        })
    }

    pub fn with_prefactor(mut self, prefactor: BivarPoly) -> Self {
        self.prefactor = prefactor;
        self
    }
}

/// Unreduced fraction; denominators only ever grow by multiplication.
#[derive(Clone, Debug)]
struct Fraction {
    num: BivarPoly,
    den: BivarPoly,
}

impl Fraction {
    fn from_poly(p: BivarPoly) -> Self {
        Self {
            num: p,
            den: BivarPoly::one(),
        }
    }

    /// `self * r + c`, where `c` is a fraction.
    fn mul_add(&self, r: &RationalFn, c: &Fraction) -> Fraction {
        let num = &(&self.num * &r.num) * &c.den;
        let den = &self.den * &r.den;
        let num = &num + &(&c.num * &den);
        Fraction {
            num,
            den: &den * &c.den,
        }
    }
}

/// Evaluates `spec.prefactor · p(x_image, y_image)` and clears the
/// denominator by one exact division at the end.
pub fn substitute(p: &BivarPoly, spec: &SubstitutionSpec) -> Result<BivarPoly> {
    if p.is_zero() {
        return Ok(BivarPoly::zero());
    }
    let max_a = p.x_degree().unwrap_or(0);
    let max_b = p.y_degree().unwrap_or(0);

    // Horner in x for each y-row, then Horner in y over the rows.
    let mut rows: Vec<BTreeMap<u32, BigInt>> = vec![BTreeMap::new(); max_b as usize + 1];
    for (a, b, c) in p.terms() {
        rows[b as usize].insert(a, c.clone());
    }
    let row_values: Vec<Fraction> = rows
        .iter()
        .map(|row| {
            let mut acc = Fraction::from_poly(BivarPoly::zero());
            for a in (0..=max_a).rev() {
                let c = row.get(&a).cloned().unwrap_or_default();
                acc = acc.mul_add(&spec.x_image, &Fraction::from_poly(BivarPoly::constant(c)));
            }
            acc
        })
        .collect();
    let mut acc = Fraction::from_poly(BivarPoly::zero());
    for row in row_values.iter().rev() {
        acc = acc.mul_add(&spec.y_image, row);
    }
    (&spec.prefactor * &acc.num).div_exact(&acc.den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let n242 = p("x^2*y^2 + 4*x^2*y + 9*x^2 + 2*x*y + 8*x + 1");
        assert_eq!(&n242 + &BivarPoly::zero(), n242);
        assert_eq!(&p("x+1") * &p("x-1"), p("x^2-1"));
        assert!((&n242 - &n242).is_zero());
    }

    #[test]
    fn rendering_is_canonical() {
        let a231 = p("5 + 2x + 4xy + x^2y^2");
        assert_eq!(a231.to_string(), "x^2*y^2 + 4*x*y + 2*x + 5");
        assert_eq!(p("1 - x^2").to_string(), "-x^2 + 1");
        assert_eq!(BivarPoly::zero().to_string(), "0");
        assert_eq!(p("-3").to_string(), "-3");
        assert_eq!(
            p("7x^2+4xy+y^2+6x+2y+1").to_string(),
            "7*x^2 + 4*x*y + y^2 + 6*x + 2*y + 1"
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<BivarPoly>().is_err());
        assert!("x^".parse::<BivarPoly>().is_err());
        assert!("2*z".parse::<BivarPoly>().is_err());
        assert!("x**y".parse::<BivarPoly>().is_err());
    }

    #[test]
    fn chapoton_transform_of_a231() {
        let a231 = p("x^2*y^2 + 4*x*y + 2*x + 5");
        let spec = SubstitutionSpec::parse("(x+1)/(x)", "(y+1)/(x+1)", "x^2").unwrap();
        assert_eq!(substitute(&a231, &spec).unwrap(), p("7x^2 + 4xy + y^2 + 6x + 2y + 1"));
    }

    #[test]
    fn identity_substitution() {
        let q = p("3x^3y - 2xy^4 + 11");
        assert_eq!(substitute(&q, &SubstitutionSpec::identity()).unwrap(), q);
    }

    #[test]
    fn surviving_denominator_is_rejected() {
        let spec = SubstitutionSpec::parse("(1)/(x)", "y", "1").unwrap();
        assert_eq!(substitute(&p("x+1"), &spec), Err(Error::NonPolynomialResult));
    }

    #[test]
    fn reverse_x_cases() {
        assert_eq!(p("7").reverse_x(0).unwrap(), p("7"));
        let q = p("x^2y + 3x + 1");
        assert_eq!(q.reverse_x(3).unwrap(), p("xy + 3x^2 + x^3"));
        assert_eq!(q.reverse_x(3).unwrap().reverse_x(3).unwrap(), q);
        assert!(q.reverse_x(1).is_err());
    }

    #[test]
    fn exact_division() {
        let num = &p("x^2 + 2x + 1") * &p("y - x");
        assert_eq!(num.div_exact(&p("x+1")).unwrap(), &p("x+1") * &p("y-x"));
        assert_eq!(p("x^2+1").div_exact(&p("x+1")), Err(Error::NonPolynomialResult));
        assert_eq!(p("3x").div_exact(&p("2x")), Err(Error::NonPolynomialResult));
    }

    #[test]
    fn json_round_trip() {
        let q = p("123456789012345678901234567890x^3y - 4");
        let rec = PolyRecord::new("N", 2, 4, 2, &q);
        let back = PolyRecord::from_json(&rec.to_json()).unwrap();
        assert_eq!(back.polynomial().unwrap(), q);
        assert_eq!(back, rec);
    }

    #[test]
    fn specializations_and_eval() {
        let n242 = p("x^2*y^2 + 4*x^2*y + 9*x^2 + 2*x*y + 8*x + 1");
        assert_eq!(n242.specialize_y(0), p("9x^2 + 8x + 1"));
        assert_eq!(n242.specialize_y(1), p("14x^2 + 10x + 1"));
        assert_eq!(n242.eval(&1.into(), &1.into()), BigInt::from(25));
        assert_eq!(n242.coefficient_sum(), BigInt::from(25));
    }
}
