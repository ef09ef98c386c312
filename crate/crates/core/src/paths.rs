//! Lattice paths from `(0, 0)` to `(mn, n)` and their statistics.
//!
//! Steps are `N = (0, 1)`, `E = (1, 0)` and `D = (1, 1)`. Every path stays
//! weakly above the line `x = my` (i.e. `x <= m*y` at every vertex) and starts
//! with at least `t` north steps. Paths without diagonal steps are the
//! `(m, t)`-Dyck paths; the others are Schröder paths of various kinds.
//!
//! Enumeration is an ordered depth-first search (`N < E < D`), parallelised
//! over a frontier of prefixes while keeping the output order deterministic.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closedform::FormulaFamily;
use crate::error::{param_err, Error, Result};
use crate::polynomial::BivarPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    N,
    E,
    D,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
            Step::D => 'D',
        }
    }
}

/// Which family of paths to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathKind {
    /// `(m, t)`-Dyck paths.
    Dyck,
    /// Dyck paths without returns.
    DyckNoReturns,
    /// Small Schröder paths: no diagonal starts on `x = my`.
    Small,
    /// Small paths whose diagonals all end at `x ≡ 0 (mod m)`.
    SmallMdiv,
    /// Schröder paths touching `x = my` only at the endpoints.
    Positive,
    /// Positive paths that are also `m`-divisible.
    PositiveMdiv,
}

impl PathKind {
    pub const ALL: [PathKind; 6] = [
        Self::Dyck,
        Self::DyckNoReturns,
        Self::Small,
        Self::SmallMdiv,
        Self::Positive,
        Self::PositiveMdiv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Dyck => "dyck",
            Self::DyckNoReturns => "dyck-noret",
            Self::Small => "small",
            Self::SmallMdiv => "small-mdiv",
            Self::Positive => "positive",
            Self::PositiveMdiv => "positive-mdiv",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown path kind {s:?}")))
    }

    fn allows_diagonals(self) -> bool {
        !matches!(self, Self::Dyck | Self::DyckNoReturns)
    }

    fn m_divisible(self) -> bool {
        matches!(self, Self::SmallMdiv | Self::PositiveMdiv)
    }

    fn strict(self) -> bool {
        matches!(self, Self::DyckNoReturns | Self::Positive | Self::PositiveMdiv)
    }
}

/// Path statistics gathered in one left-to-right scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStats {
    pub val: u32,
    /// Entry `i - 1` counts the `i`-valleys; residue `0` is reported as `m`.
    pub val_by_residue: Vec<u32>,
    pub ret: u32,
    pub dg: u32,
    /// Diagonals ending at `x ≡ 0 (mod m)`.
    pub dg_m: u32,
    /// Cornered diagonals, from `(im - 1, i)` to `(im, i + 1)`.
    pub cd: u32,
    /// `n - t - dg`.
    pub codim: u32,
}

impl PathStats {
    /// Number of `i`-valleys for `1 <= i <= m`.
    pub fn val_residue(&self, i: u32) -> u32 {
        self.val_by_residue[(i - 1) as usize]
    }
}

/// A statistic usable as an exponent in [`brute_polynomial`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statistic {
    Val,
    /// `i`-valleys, `1 <= i <= m`.
    ValResidue(u32),
    Ret,
    Dg,
    DgM,
    Cd,
    Codim,
    CodimMinusRet,
}

impl Statistic {
    pub fn eval(self, s: &PathStats) -> u32 {
        match self {
            Statistic::Val => s.val,
            Statistic::ValResidue(i) => s.val_residue(i),
            Statistic::Ret => s.ret,
            Statistic::Dg => s.dg,
            Statistic::DgM => s.dg_m,
            Statistic::Cd => s.cd,
            Statistic::Codim => s.codim,
            Statistic::CodimMinusRet => s
                .codim
                .checked_sub(s.ret)
                .expect("returns never exceed the codimension"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePath {
    steps: Vec<Step>,
    m: u32,
    n: u32,
    t: u32,
}

impl LatticePath {
    /// Validates and wraps a step sequence.
    pub fn new(steps: Vec<Step>, m: u32, t: u32) -> Result<Self> {
        if m == 0 || t == 0 {
            return param_err("m and t must be positive");
        }
        let n = steps.iter().filter(|s| **s != Step::E).count() as u32;
        let widths = steps.iter().filter(|s| **s != Step::N).count() as u32;
        if n == 0 || widths != m * n {
            return Err(Error::InvalidPath(format!(
                "path must end at (m*n, n); got width {widths} for height {n}"
            )));
        }
        if t > n {
            return param_err(format!("t = {t} exceeds n = {n}"));
        }
        if steps[..t as usize].iter().any(|s| *s != Step::N) {
            return Err(Error::InvalidPath(format!("path must start with {t} north steps")));
        }
        let (mut x, mut y) = (0u32, 0u32);
        for s in &steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
                Step::D => {
                    x += 1;
                    y += 1
                }
            }
            if x > m * y {
                return Err(Error::InvalidPath(format!("vertex ({x}, {y}) lies below x = {m}y")));
            }
        }
        Ok(Self { steps, m, n, t })
    }

    /// Parses a word over `N`, `E`, `D`.
    pub fn parse(word: &str, m: u32, t: u32) -> Result<Self> {
        let steps = word
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                'D' => Ok(Step::D),
                _ => Err(Error::Parse(format!("unexpected step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps, m, t)
    }

    pub(crate) fn from_parts_unchecked(steps: Vec<Step>, m: u32, n: u32, t: u32) -> Self {
        Self { steps, m, n, t }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn params(&self) -> (u32, u32, u32) {
        (self.m, self.n, self.t)
    }

    /// Vertices visited, starting with `(0, 0)`.
    pub fn vertices(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        out.push((x, y));
        for s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
                Step::D => {
                    x += 1;
                    y += 1
                }
            }
            out.push((x, y));
        }
        out
    }

    /// Valley corners `(x, y)`, left to right.
    pub fn valleys(&self) -> Vec<(u32, u32)> {
        let verts = self.vertices();
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::E && w[1] == Step::N)
            .map(|(i, _)| verts[i + 1])
            .collect()
    }

    pub fn stats(&self) -> PathStats {
        stats_of(&self.steps, self.m, self.n, self.t)
    }

    pub fn is_dyck(&self) -> bool {
        !self.steps.contains(&Step::D)
    }

    /// No diagonal step starts on `x = my`.
    pub fn is_small(&self) -> bool {
        let verts = self.vertices();
        self.steps
            .iter()
            .zip(&verts)
            .all(|(s, &(x, y))| *s != Step::D || x != self.m * y)
    }

    /// Every diagonal ends at an `x`-coordinate divisible by `m`.
    pub fn is_m_divisible(&self) -> bool {
        let verts = self.vertices();
        self.steps
            .iter()
            .zip(&verts[1..])
            .all(|(s, &(x, _))| *s != Step::D || x % self.m == 0)
    }

    /// Interior vertices lie strictly above `x = my`.
    pub fn avoids_boundary(&self) -> bool {
        let verts = self.vertices();
        verts[1..verts.len() - 1].iter().all(|&(x, y)| x < self.m * y)
    }

    pub fn is_kind(&self, kind: PathKind) -> bool {
        let diag_ok = kind.allows_diagonals() || self.is_dyck();
        let small_ok = !kind.allows_diagonals() || self.is_small();
        let mdiv_ok = !kind.m_divisible() || self.is_m_divisible();
        let strict_ok = !kind.strict() || self.avoids_boundary();
        diag_ok && small_ok && mdiv_ok && strict_ok
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

/// Statistics of a raw step sequence. The caller guarantees validity.
pub fn stats_of(steps: &[Step], m: u32, n: u32, t: u32) -> PathStats {
    let mut st = PathStats {
        val: 0,
        val_by_residue: vec![0; m as usize],
        ret: 0,
        dg: 0,
        dg_m: 0,
        cd: 0,
        codim: 0,
    };
    let (mut x, mut y) = (0u32, 0u32);
    let mut prev: Option<Step> = None;
    for &s in steps {
        match s {
            Step::N => {
                if prev == Some(Step::E) {
                    st.val += 1;
                    let r = x % m;
                    let idx = if r == 0 { m - 1 } else { r - 1 };
                    st.val_by_residue[idx as usize] += 1;
                    if x == m * y {
                        st.ret += 1;
                    }
                }
                y += 1;
            }
            Step::E => x += 1,
            Step::D => {
                st.dg += 1;
                if x + 1 == m * y {
                    st.cd += 1;
                }
                x += 1;
                y += 1;
                if x % m == 0 {
                    st.dg_m += 1;
                }
            }
        }
        prev = Some(s);
    }
    st.codim = n - t - st.dg;
    st
}

fn check_enum_params(m: u32, n: u32, t: u32) -> Result<()> {
    if m == 0 || n == 0 || t == 0 {
        return param_err("m, n and t must be positive");
    }
    if t > n {
        return param_err(format!("t = {t} exceeds n = {n}"));
    }
    Ok(())
}

/// Search state: the prefix plus its endpoint.
#[derive(Clone)]
struct Prefix {
    steps: Vec<Step>,
    x: u32,
    y: u32,
}

#[derive(Clone, Copy)]
struct Walker {
    kind: PathKind,
    m: u32,
    n: u32,
}

impl Walker {
    fn complete(&self, p: &Prefix) -> bool {
        p.x == self.m * self.n && p.y == self.n
    }

    /// Steps admissible from the end of `p`, in `N < E < D` order.
    fn moves(&self, x: u32, y: u32) -> [Option<(Step, u32, u32)>; 3] {
        let (m, n) = (self.m, self.n);
        let end = (m * n, n);
        let vertex_ok = |nx: u32, ny: u32| nx <= m * ny && (!self.kind.strict() || nx < m * ny || (nx, ny) == end);
        let north = (y < n && vertex_ok(x, y + 1)).then_some((Step::N, x, y + 1));
        let east = (x < m * n && vertex_ok(x + 1, y)).then_some((Step::E, x + 1, y));
        let diag = (self.kind.allows_diagonals()
            && y < n
            && x < m * n
            && x != m * y
            && (!self.kind.m_divisible() || (x + 1).is_multiple_of(m))
            && vertex_ok(x + 1, y + 1))
        .then_some((Step::D, x + 1, y + 1));
        [north, east, diag]
    }

    fn children(&self, p: &Prefix) -> Vec<Prefix> {
        self.moves(p.x, p.y)
            .into_iter()
            .flatten()
            .map(|(s, x, y)| {
                let mut steps = p.steps.clone();
                steps.push(s);
                Prefix { steps, x, y }
            })
            .collect()
    }

    fn dfs(&self, steps: &mut Vec<Step>, x: u32, y: u32, visit: &mut dyn FnMut(&[Step])) {
        if x == self.m * self.n && y == self.n {
            visit(steps);
            return;
        }
        for (s, nx, ny) in self.moves(x, y).into_iter().flatten() {
            steps.push(s);
            self.dfs(steps, nx, ny, visit);
            steps.pop();
        }
    }

    /// Ordered frontier of prefixes; each complete path appears at most once.
    fn frontier(&self, t: u32, target: usize) -> Vec<Prefix> {
        let start = Prefix {
            steps: vec![Step::N; t as usize],
            x: 0,
            y: t,
        };
        let mut level = vec![start];
        loop {
            if level.len() >= target || level.iter().all(|p| self.complete(p)) {
                return level;
            }
            level = level
                .into_iter()
                .flat_map(|p| if self.complete(&p) { vec![p] } else { self.children(&p) })
                .collect();
        }
    }
}

const FRONTIER_TARGET: usize = 256;

/// Parallel fold over every path of the family.
///
/// `fold` sees the raw step sequence; per-prefix accumulators are combined
/// with `reduce` in frontier order, so order-sensitive reductions are stable.
pub fn fold_paths<T, I, F, R>(kind: PathKind, m: u32, n: u32, t: u32, init: I, fold: F, reduce: R) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &[Step]) + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_enum_params(m, n, t)?;
    let w = Walker { kind, m, n };
    let frontier = w.frontier(t, FRONTIER_TARGET);
    let parts: Vec<T> = frontier
        .into_par_iter()
        .map(|p| {
            let mut acc = init();
            let mut steps = p.steps.clone();
            w.dfs(&mut steps, p.x, p.y, &mut |s| fold(&mut acc, s));
            acc
        })
        .collect();
    Ok(parts.into_iter().fold(init(), reduce))
}

/// All paths of the family in lexicographic step order (`N < E < D`).
pub fn enumerate(kind: PathKind, m: u32, n: u32, t: u32) -> Result<Vec<LatticePath>> {
    fold_paths(
        kind,
        m,
        n,
        t,
        Vec::new,
        |acc: &mut Vec<LatticePath>, s| acc.push(LatticePath::from_parts_unchecked(s.to_vec(), m, n, t)),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

/// Number of paths in the family, without materialising them.
pub fn count(kind: PathKind, m: u32, n: u32, t: u32) -> Result<u64> {
    fold_paths(kind, m, n, t, || 0u64, |acc, _| *acc += 1, |a, b| a + b)
}

/// `(m, t)`-Dyck paths of height `n`, optionally without returns.
pub fn enumerate_dyck(m: u32, n: u32, t: u32, no_returns: bool) -> Result<Vec<LatticePath>> {
    let kind = if no_returns {
        PathKind::DyckNoReturns
    } else {
        PathKind::Dyck
    };
    enumerate(kind, m, n, t)
}

/// Schröder variants accepted by [`enumerate_schroder`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SchroderVariant {
    Small,
    SmallMdiv,
    Positive,
    PositiveMdiv,
}

impl From<SchroderVariant> for PathKind {
    fn from(v: SchroderVariant) -> Self {
        match v {
            SchroderVariant::Small => PathKind::Small,
            SchroderVariant::SmallMdiv => PathKind::SmallMdiv,
            SchroderVariant::Positive => PathKind::Positive,
            SchroderVariant::PositiveMdiv => PathKind::PositiveMdiv,
        }
    }
}

pub fn enumerate_schroder(m: u32, n: u32, t: u32, variant: SchroderVariant) -> Result<Vec<LatticePath>> {
    enumerate(variant.into(), m, n, t)
}

type Tally = HashMap<(u32, u32), u64>;

fn tally_to_poly(tally: Tally) -> BivarPoly {
    BivarPoly::from_terms(tally.into_iter().map(|((a, b), c)| (a, b, BigInt::from(c))))
}

/// `Σ x^{xstat} y^{ystat}` over a list of paths sharing `(m, n, t)`.
pub fn brute_polynomial(paths: &[LatticePath], xstat: Statistic, ystat: Statistic) -> Result<BivarPoly> {
    let Some(first) = paths.first() else {
        return Ok(BivarPoly::zero());
    };
    let params = first.params();
    if let Some(bad) = paths.iter().find(|p| p.params() != params) {
        return Err(Error::MixedParameters {
            expected: format!("{params:?}"),
            found: format!("{:?}", bad.params()),
        });
    }
    check_statistic(xstat, params.0)?;
    check_statistic(ystat, params.0)?;
    let mut tally = Tally::new();
    for p in paths {
        let s = p.stats();
        *tally.entry((xstat.eval(&s), ystat.eval(&s))).or_default() += 1;
    }
    Ok(tally_to_poly(tally))
}

fn check_statistic(s: Statistic, m: u32) -> Result<()> {
    match s {
        Statistic::ValResidue(i) if i == 0 || i > m => param_err(format!("residue {i} outside 1..={m}")),
        _ => Ok(()),
    }
}

/// Streaming variant of [`brute_polynomial`] over a whole family.
pub fn brute_polynomial_for(
    kind: PathKind,
    m: u32,
    n: u32,
    t: u32,
    xstat: Statistic,
    ystat: Statistic,
) -> Result<BivarPoly> {
    let mut polys = brute_polynomials_for(kind, m, n, t, &[(xstat, ystat)])?;
    Ok(polys.remove(0))
}

/// Several statistic pairs over one family in a single pass.
pub fn brute_polynomials_for(
    kind: PathKind,
    m: u32,
    n: u32,
    t: u32,
    stats: &[(Statistic, Statistic)],
) -> Result<Vec<BivarPoly>> {
    for &(xs, ys) in stats {
        check_statistic(xs, m)?;
        check_statistic(ys, m)?;
    }
    let k = stats.len();
    let tallies = fold_paths(
        kind,
        m,
        n,
        t,
        || vec![Tally::new(); k],
        |acc, steps| {
            let s = stats_of(steps, m, n, t);
            for (tally, &(xs, ys)) in acc.iter_mut().zip(stats) {
                *tally.entry((xs.eval(&s), ys.eval(&s))).or_default() += 1;
            }
        },
        |mut a, b| {
            for (ta, tb) in a.iter_mut().zip(b) {
                for (key, v) in tb {
                    *ta.entry(key).or_default() += v;
                }
            }
            a
        },
    )?;
    Ok(tallies.into_iter().map(tally_to_poly).collect())
}

/// Path family and statistics whose joint distribution the closed form counts.
///
/// The `B` family uses `i`-valleys for a residue `i < m`, so it needs `m >= 2`;
/// `residue` selects `i` (ignored for other families).
pub fn family_recipe(family: FormulaFamily, m: u32, residue: u32) -> Result<(PathKind, Statistic, Statistic)> {
    use FormulaFamily as F;
    use Statistic as S;
    Ok(match family {
        F::N => (PathKind::Dyck, S::Val, S::Ret),
        F::A => (PathKind::Dyck, S::ValResidue(m), S::Ret),
        F::B => {
            if residue == 0 || residue >= m {
                return param_err(format!("B family needs a residue 1 <= i < m = {m}"));
            }
            (PathKind::Dyck, S::ValResidue(residue), S::Ret)
        }
        F::F => (PathKind::Small, S::CodimMinusRet, S::Ret),
        F::Fm => (PathKind::SmallMdiv, S::CodimMinusRet, S::Ret),
        F::S => (PathKind::Small, S::Dg, S::Cd),
        F::Sm => (PathKind::SmallMdiv, S::DgM, S::Cd),
        F::P => (PathKind::Positive, S::Dg, S::Cd),
        F::Pm => (PathKind::PositiveMdiv, S::DgM, S::Cd),
    })
}

/// Brute-force family polynomial; `B` uses residue 1.
pub fn brute_family_polynomial(family: FormulaFamily, m: u32, n: u32, t: u32) -> Result<BivarPoly> {
    let (kind, xs, ys) = family_recipe(family, m, 1)?;
    brute_polynomial_for(kind, m, n, t, xs, ys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::dyck_count;
    use proptest::prelude::*;

    fn p(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_dyck_sets() {
        let words: Vec<String> = enumerate_dyck(1, 2, 1, false)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(words, ["NNEE", "NENE"]);
        assert_eq!(enumerate_dyck(2, 4, 2, false).unwrap().len(), 25);
        let only = enumerate_dyck(3, 3, 3, false).unwrap();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].to_string(), "NNNEEEEEEEEE");
    }

    #[test]
    fn dyck_counts_match_formula() {
        for m in 1..=3 {
            for n in 1..=6 {
                for t in 1..=n {
                    let c = count(PathKind::Dyck, m, n, t).unwrap();
                    assert_eq!(BigInt::from(c), dyck_count(m as i64, n, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn schroder_counts() {
        assert_eq!(count(PathKind::SmallMdiv, 2, 4, 2).unwrap(), 47);
        assert_eq!(count(PathKind::PositiveMdiv, 2, 4, 2).unwrap(), 37);
        assert_eq!(count(PathKind::Small, 2, 3, 3).unwrap(), 1);
    }

    #[test]
    fn golden_distributions() {
        let d = enumerate_dyck(2, 4, 2, false).unwrap();
        assert_eq!(
            brute_polynomial(&d, Statistic::Val, Statistic::Ret).unwrap(),
            p("x^2y^2 + 4x^2y + 9x^2 + 2xy + 8x + 1")
        );
        assert_eq!(
            brute_polynomial(&d, Statistic::ValResidue(2), Statistic::Ret).unwrap(),
            p("x^2y^2 + x^2y + x^2 + 5xy + 8x + 9")
        );
        let s = enumerate_schroder(2, 4, 2, SchroderVariant::SmallMdiv).unwrap();
        assert_eq!(
            brute_polynomial(&s, Statistic::DgM, Statistic::Cd).unwrap(),
            p("x^2y^2 + x^2y + x^2 + 8xy + 11x + 25")
        );
        assert!(brute_polynomial(&[], Statistic::Val, Statistic::Ret).unwrap().is_zero());
    }

    #[test]
    fn staircase_free_path_has_no_statistics() {
        let path = LatticePath::parse("NNNEEEEEE", 2, 1).unwrap();
        let s = path.stats();
        assert_eq!((s.val, s.ret, s.dg), (0, 0, 0));
    }

    #[test]
    fn mixed_parameters_rejected() {
        let a = enumerate_dyck(1, 2, 1, false).unwrap();
        let b = enumerate_dyck(1, 3, 1, false).unwrap();
        let mixed = vec![a[0].clone(), b[0].clone()];
        assert!(matches!(
            brute_polynomial(&mixed, Statistic::Val, Statistic::Ret),
            Err(Error::MixedParameters { .. })
        ));
    }

    #[test]
    fn invalid_paths_rejected() {
        assert!(LatticePath::parse("NEEN", 1, 1).is_err());
        assert!(LatticePath::parse("NENE", 1, 2).is_err());
        assert!(LatticePath::parse("NNE", 1, 1).is_err());
        assert!(LatticePath::parse("NXE", 1, 1).is_err());
    }

    #[test]
    fn parameter_errors() {
        assert!(enumerate_dyck(1, 2, 3, false).is_err());
        assert!(enumerate_dyck(0, 2, 1, false).is_err());
        assert!(enumerate_dyck(1, 0, 1, false).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_deterministic() {
        let a = enumerate(PathKind::Small, 2, 5, 1).unwrap();
        let b = enumerate(PathKind::Small, 2, 5, 1).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0].steps() < w[1].steps()));
    }

    proptest! {
        #[test]
        fn generated_paths_are_valid(m in 1u32..=3, n in 1u32..=5, t_off in 0u32..5, k in 0usize..6) {
            let t = 1 + t_off % n;
            let kind = PathKind::ALL[k];
            for path in enumerate(kind, m, n, t).unwrap() {
                let again = LatticePath::new(path.steps().to_vec(), m, t).unwrap();
                prop_assert_eq!(&again, &path);
                prop_assert!(path.is_kind(kind));
                let s = path.stats();
                prop_assert_eq!(s.val_by_residue.iter().sum::<u32>(), s.val);
                prop_assert!(s.ret <= s.val_residue(m));
                prop_assert!(s.cd <= s.dg_m && s.dg_m <= s.dg);
            }
        }
    }
}
