//! Dyck paths with marked valleys and small Schröder paths.
//!
//! A marked path is a Dyck path together with a subset of its valleys. Each
//! marked valley, a corner `E N` at `(p, q)`, is replaced by one diagonal step
//! from `(p - 1, q)` to `(p, q + 1)`. The inverse turns every diagonal back
//! into `E N`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{self, LatticePath, PathKind, Step};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedPath {
    base: LatticePath,
    /// Valley corners converted to diagonals, ordered by `x`.
    marks: Vec<(u32, u32)>,
}

impl MarkedPath {
    /// Checks that `base` is a Dyck path and every mark is one of its valleys.
    pub fn new(base: LatticePath, mut marks: Vec<(u32, u32)>) -> Result<Self> {
        if !base.is_dyck() {
            return Err(Error::InvalidPath(format!("{base} has diagonal steps")));
        }
        marks.sort_unstable();
        marks.dedup();
        let valleys = base.valleys();
        if let Some(bad) = marks.iter().find(|v| !valleys.contains(v)) {
            return Err(Error::InvalidPath(format!("{bad:?} is not a valley of {base}")));
        }
        Ok(Self { base, marks })
    }

    pub fn base(&self) -> &LatticePath {
        &self.base
    }

    pub fn marks(&self) -> &[(u32, u32)] {
        &self.marks
    }

    /// True if every mark is an `m`-valley.
    pub fn marks_m_divisible(&self) -> bool {
        self.marks.iter().all(|&(x, _)| x % self.base.m() == 0)
    }

    /// True if every return of the base path is marked.
    pub fn marks_all_returns(&self) -> bool {
        let m = self.base.m();
        self.base
            .valleys()
            .into_iter()
            .filter(|&(x, y)| x == m * y)
            .all(|v| self.marks.contains(&v))
    }
}

/// Every marked path over `D_{m,n,t}`; with `mdiv_only`, marks are restricted
/// to `m`-valleys. Paths come in enumeration order, subsets by increasing
/// bitmask over the (left-to-right) eligible valleys.
pub fn enumerate_marked(m: u32, n: u32, t: u32, mdiv_only: bool) -> Result<Vec<MarkedPath>> {
    let mut out = Vec::new();
    for base in paths::enumerate(PathKind::Dyck, m, n, t)? {
        let eligible: Vec<(u32, u32)> = base
            .valleys()
            .into_iter()
            .filter(|&(x, _)| !mdiv_only || x % m == 0)
            .collect();
        for mask in 0u64..(1u64 << eligible.len()) {
            let marks = eligible
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| *v)
                .collect();
            out.push(MarkedPath {
                base: base.clone(),
                marks,
            });
        }
    }
    Ok(out)
}

/// Converts the marked valleys into diagonal steps.
pub fn to_schroder(mp: &MarkedPath) -> LatticePath {
    let base = &mp.base;
    let verts = base.vertices();
    let src = base.steps();
    let mut steps = Vec::with_capacity(src.len());
    let mut i = 0;
    while i < src.len() {
        let corner = verts[i + 1];
        if src[i] == Step::E && src.get(i + 1) == Some(&Step::N) && mp.marks.contains(&corner) {
            steps.push(Step::D);
            i += 2;
        } else {
            steps.push(src[i]);
            i += 1;
        }
    }
    LatticePath::new(steps, base.m(), base.t()).expect("replacing a valley by a diagonal keeps the path valid")
}

/// Inverse of [`to_schroder`]; fails with [`Error::Domain`] if a diagonal
/// starts on `x = my`.
pub fn from_schroder(s: &LatticePath) -> Result<MarkedPath> {
    let m = s.m();
    let verts = s.vertices();
    let mut steps = Vec::with_capacity(s.steps().len() + 4);
    let mut marks = Vec::new();
    for (i, &step) in s.steps().iter().enumerate() {
        if step == Step::D {
            let (x, y) = verts[i];
            if x == m * y {
                return Err(Error::Domain(format!("{s} has a diagonal starting at ({x}, {y})")));
            }
            steps.push(Step::E);
            steps.push(Step::N);
            marks.push((x + 1, y));
        } else {
            steps.push(step);
        }
    }
    let base = LatticePath::new(steps, m, s.t())?;
    Ok(MarkedPath { base, marks })
}
