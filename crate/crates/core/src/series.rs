//! Truncated power series in `z` with polynomial coefficients.
//!
//! Used to solve the functional equations satisfied by the path generating
//! functions and to check Lagrange–Bürmann coefficient extractions
//! numerically.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{param_err, Error, Result};
use crate::polynomial::BivarPoly;

/// `Σ_{k <= order} c_k z^k`; coefficients beyond `order` are discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BivarPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BivarPoly::zero(); order + 1],
        }
    }

    pub fn constant(c: BivarPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BivarPoly::one(), order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BivarPoly::one();
        }
        s
    }

    /// Builds a series from coefficients, truncating or padding to `order`.
    pub fn from_coeffs(mut coeffs: Vec<BivarPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, BivarPoly::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `⟨z^k⟩`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> BivarPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BivarPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    fn same_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.same_order(other);
        Self {
            coeffs: (0..=k).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = self.same_order(other);
        Self {
            coeffs: (0..=k).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = self.same_order(other);
        let mut out = Self::zero(k);
        for (i, a) in self.coeffs.iter().enumerate().take(k + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(k + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BivarPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![BivarPoly::zero(); k.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take((order + 1).saturating_sub(k)).cloned());
        Self::from_coeffs(coeffs, order)
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let unit = if *c0 == BivarPoly::one() {
            BigInt::one()
        } else if *c0 == BivarPoly::constant(-1) {
            -BigInt::one()
        } else {
            return Err(Error::NotInvertible(format!("constant term {c0} is not ±1")));
        };
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = BivarPoly::constant(unit.clone());
        for k in 1..=order {
            let mut acc = BivarPoly::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &inv.coeffs[k - j]);
            }
            inv.coeffs[k] = (-acc).scale(&unit);
        }
        Ok(inv)
    }

    /// `outer(self)` for a power series `outer`; `self` must have zero constant term.
    pub fn compose_series(outer: &TruncatedSeries, inner: &TruncatedSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm(format!(
                "inner series starts with {}",
                inner.coeffs[0]
            )));
        }
        let order = inner.order().min(outer.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in outer.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse of `s = c z + …` with `c = ±1`.
    ///
    /// Writes `s = z · v` and iterates `G ← z · (1/v)(G)` from zero.
    pub fn compositional_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible("series has a nonzero constant term".into()));
        }
        let order = self.order();
        let v = Self::from_coeffs(self.coeffs[1..].to_vec(), order);
        let w = v.reciprocal()?;
        let mut g = Self::zero(order);
        for _ in 0..order {
            g = Self::compose_series(&w, &g)?.shift(1);
        }
        Ok(g)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*z^{k}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Polynomial in an auxiliary variable `w` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPoly {
    coeffs: Vec<BivarPoly>,
}

impl WPoly {
    pub fn new(mut coeffs: Vec<BivarPoly>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(BivarPoly::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BivarPoly::zero());
        }
        Self { coeffs }
    }

    pub fn identity() -> Self {
        Self::new(vec![BivarPoly::zero(), BivarPoly::one()])
    }

    /// `(w + 1)^p (x w + 1)^q`.
    pub fn product_form(p: u32, q: u32) -> Self {
        let w1 = Self::new(vec![BivarPoly::one(), BivarPoly::one()]);
        let xw1 = Self::new(vec![BivarPoly::one(), BivarPoly::x()]);
        w1.pow(p).mul(&xw1.pow(q))
    }

    pub fn coeffs(&self) -> &[BivarPoly] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BivarPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::new(vec![BivarPoly::one()]), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&BigInt::from(k)))
                .collect(),
        )
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.coeffs.clone(), order)
    }

    /// `self(inner)`, truncated at the order of `inner`.
    pub fn compose(&self, inner: &TruncatedSeries) -> TruncatedSeries {
        let order = inner.order();
        let mut acc = TruncatedSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += c;
        }
        acc
    }
}

/// `outer(inner)` for a polynomial `outer`.
pub fn compose(outer: &WPoly, inner: &TruncatedSeries) -> TruncatedSeries {
    outer.compose(inner)
}

/// Functional equations for the shifted generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EquationId {
    /// `F = z (F + 1)(1 + xF)^m`: valleys, `t = 1`, `y = 1`.
    Basic,
    /// `z (F + 1)(1 + xF)^{m-1}`: valleys, `t = 1`, no returns.
    Noret,
    /// Valleys and returns for general `t`.
    Full,
    /// `H = z (H + 1)^m (1 + xH)`: `i`-valleys, `t = 1`, `y = 1`.
    Mval,
    /// `z (H + 1)^m`: `m`-valleys, `t = 1`, no returns.
    MvalNoretM,
    /// `z (H + 1)^{m-1}(1 + xH)`: `i`-valleys (`i < m`), `t = 1`, no returns.
    MvalNoretI,
    /// `m`-valleys and returns for general `t`.
    MvalFullM,
    /// `i`-valleys (`i < m`) and returns for general `t`.
    MvalFullI,
}

impl EquationId {
    pub const ALL: [EquationId; 8] = [
        Self::Basic,
        Self::Noret,
        Self::Full,
        Self::Mval,
        Self::MvalNoretM,
        Self::MvalNoretI,
        Self::MvalFullM,
        Self::MvalFullI,
    ];
}

/// Iterates `F ← z · outer(F)` from zero; each round fixes one more coefficient.
fn fixed_point(outer: &WPoly, order: usize) -> Result<TruncatedSeries> {
    let mut f = TruncatedSeries::zero(order);
    for _ in 0..order {
        f = outer.compose(&f).shift(1);
    }
    let again = outer.compose(&f).shift(1);
    if again != f {
        return Err(Error::NonConvergence(order));
    }
    Ok(f)
}

fn one_plus_x(f: &TruncatedSeries) -> TruncatedSeries {
    let mut s = f.scale(&BivarPoly::x());
    s.coeffs[0] += &BivarPoly::one();
    s
}

fn plus_one(f: &TruncatedSeries) -> TruncatedSeries {
    let mut s = f.clone();
    s.coeffs[0] += &BivarPoly::one();
    s
}

/// Solves `eq` and returns the shifted series (generating function minus 1)
/// truncated at `z^order`. The `s`-sums of the general-`t` equations run up
/// to `s_cutoff`, which must satisfy `s_cutoff + t >= order`.
pub fn solve_functional_equation(
    eq: EquationId,
    m: u32,
    t: u32,
    order: usize,
    s_cutoff: usize,
) -> Result<TruncatedSeries> {
    if m == 0 || t == 0 || order == 0 {
        return param_err("m, t and order must be positive");
    }
    let uses_s = matches!(eq, EquationId::Full | EquationId::MvalFullM | EquationId::MvalFullI);
    if uses_s && s_cutoff + (t as usize) < order {
        return param_err(format!("s cutoff {s_cutoff} loses terms below z^{order}"));
    }
    let basic = || fixed_point(&WPoly::product_form(1, m), order);
    let mval = || fixed_point(&WPoly::product_form(m, 1), order);
    let zt = TruncatedSeries::one(order).shift(t as usize);
    match eq {
        EquationId::Basic => basic(),
        EquationId::Noret => Ok(WPoly::product_form(1, m - 1).compose(&basic()?).shift(1)),
        EquationId::Full => {
            let f1 = basic()?;
            let f0 = WPoly::product_form(1, m - 1).compose(&f1).shift(1);
            let d1 = plus_one(&f1);
            let head = zt.mul(&d1).mul(&one_plus_x(&f1).pow(m - 1 + m * (t - 1)));
            let ret = f0.scale(&(BivarPoly::x() * BivarPoly::y()));
            Ok(geometric_sum(&head, &ret, s_cutoff))
        }
        EquationId::Mval => mval(),
        EquationId::MvalNoretM => Ok(WPoly::product_form(m, 0).compose(&mval()?).shift(1)),
        EquationId::MvalNoretI => Ok(WPoly::product_form(m - 1, 1).compose(&mval()?).shift(1)),
        EquationId::MvalFullM => {
            let h1 = mval()?;
            let h0 = WPoly::product_form(m, 0).compose(&h1).shift(1);
            let c = plus_one(&h1);
            let unit = one_plus_x(&h1).mul(&c.pow(m - 1));
            let head = zt.mul(&c.pow(m)).mul(&unit.pow(t - 1));
            let ret = h0.scale(&(BivarPoly::x() * BivarPoly::y()));
            Ok(geometric_sum(&head, &ret, s_cutoff))
        }
        EquationId::MvalFullI => {
            let h1 = mval()?;
            let h0 = WPoly::product_form(m - 1, 1).compose(&h1).shift(1);
            let c = plus_one(&h1);
            let unit = one_plus_x(&h1).mul(&c.pow(m - 1));
            let head = zt.mul(&unit.pow(t));
            let ret = h0.scale(&BivarPoly::y());
            Ok(geometric_sum(&head, &ret, s_cutoff))
        }
    }
}

/// `Σ_{s=0}^{cutoff} head · ret^s`.
fn geometric_sum(head: &TruncatedSeries, ret: &TruncatedSeries, cutoff: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(head.order());
    let mut term = head.clone();
    for _ in 0..=cutoff {
        total = total.add(&term);
        term = term.mul(ret);
    }
    total
}

/// The two kernels `f` and `h`, both of the form `z / d(z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kernel {
    /// `f(z) = z / ((z + 1)(xz + 1)^m)`.
    F,
    /// `h(z) = z / ((z + 1)^m (xz + 1))`.
    H,
}

impl Kernel {
    pub fn denominator(self, m: u32) -> WPoly {
        match self {
            Kernel::F => WPoly::product_form(1, m),
            Kernel::H => WPoly::product_form(m, 1),
        }
    }

    /// Expansion of the kernel up to `z^order`.
    pub fn series(self, m: u32, order: usize) -> Result<TruncatedSeries> {
        Ok(self.denominator(m).to_series(order).reciprocal()?.shift(1))
    }
}

/// Outer functions paired with the kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outer {
    /// `(w + 1)(xw + 1)^m`.
    GBullet,
    /// `(w + 1)(xw + 1)^{m-1}`.
    GPlus,
    /// `(w + 1)^{s+1} (xw + 1)^{m(s+t) - (s+1)}`.
    G { s: u32, t: u32 },
    /// `(w + 1)^m (xw + 1)`.
    QBullet,
    /// `(w + 1)^m`.
    QPlusM,
    /// `(w + 1)^{m-1} (xw + 1)`.
    QPlusI,
    /// `(xw + 1)^{t-1} (w + 1)^{(m-1)(t-1) + m(s+1)}`.
    QM { s: u32, t: u32 },
    /// `(xw + 1)^{s+t} (w + 1)^{(s+t)(m-1)}`.
    QI { s: u32, t: u32 },
}

impl Outer {
    pub fn wpoly(self, m: u32) -> WPoly {
        match self {
            Outer::GBullet => WPoly::product_form(1, m),
            Outer::GPlus => WPoly::product_form(1, m - 1),
            Outer::G { s, t } => WPoly::product_form(s + 1, m * (s + t) - (s + 1)),
            Outer::QBullet => WPoly::product_form(m, 1),
            Outer::QPlusM => WPoly::product_form(m, 0),
            Outer::QPlusI => WPoly::product_form(m - 1, 1),
            Outer::QM { s, t } => WPoly::product_form((m - 1) * (t - 1) + m * (s + 1), t - 1),
            Outer::QI { s, t } => WPoly::product_form((s + t) * (m - 1), s + t),
        }
    }

    /// The kernel the outer function is composed with.
    pub fn kernel(self) -> Kernel {
        match self {
            Outer::GBullet | Outer::GPlus | Outer::G { .. } => Kernel::F,
            _ => Kernel::H,
        }
    }
}

/// Both sides of one Lagrange–Bürmann extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LbReport {
    pub a: u32,
    /// `⟨z^a⟩ g(F(z))` with `F` the compositional inverse of the kernel.
    pub left: BivarPoly,
    /// `(1/a) ⟨z^{-1}⟩ g'(z) k(z)^{-a}`.
    pub right: BivarPoly,
}

impl LbReport {
    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

/// Computes both sides of `⟨z^a⟩ g(F) = (1/a) ⟨z^{-1}⟩ g'(z) k(z)^{-a}`.
///
/// The left side inverts the kernel series and composes. On the right,
/// `k(z)^{-a} = z^{-a} u(z)^{-a}` with `u = k(z)/z` expanded as a power series
/// and inverted as a truncated series, so the residue is `⟨z^{a-1}⟩ g' u^{-a}`.
pub fn lagrange_burmann_check(kernel: Kernel, outer: &WPoly, a: u32, m: u32) -> Result<LbReport> {
    if a == 0 || m == 0 {
        return param_err("a and m must be positive");
    }
    let order = a as usize;
    let k = kernel.series(m, order + 1)?;
    let inverse = k.compositional_inverse()?.truncate(order);
    let left = outer.compose(&inverse).coeff(order);

    let u = TruncatedSeries::from_coeffs(k.coeffs()[1..].to_vec(), order);
    let u_neg_a = u.reciprocal()?.pow(a);
    let residue = outer.derivative().to_series(order).mul(&u_neg_a).coeff(order - 1);
    let right = residue.div_scalar_exact(&BigInt::from(a))?;
    Ok(LbReport { a, left, right })
}

/// Reassembles a `(t, s)`-indexed coefficient sum from Lagrange–Bürmann
/// extractions: `Σ_{s < n-t} w^s ⟨z^{n-t-s}⟩ g_{s,t}(K) + w^{n-t}`,
/// where `w` is `xy` or `y` and `K` the kernel inverse.
pub fn assemble_from_extractions(
    make_outer: impl Fn(u32, u32) -> Outer,
    weight: &BivarPoly,
    m: u32,
    n: u32,
    t: u32,
) -> Result<BivarPoly> {
    if t == 0 || t > n {
        return param_err("need 1 <= t <= n");
    }
    let mut total = weight.pow(n - t);
    for s in 0..(n - t) {
        let outer = make_outer(s, t);
        let rep = lagrange_burmann_check(outer.kernel(), &outer.wpoly(m), n - t - s, m)?;
        if !rep.holds() {
            return Err(Error::Parameter(format!(
                "Lagrange–Bürmann sides differ for {outer:?}: {} vs {}",
                rep.left, rep.right
            )));
        }
        total += &(&weight.pow(s) * &rep.right);
    }
    Ok(total)
}
