//! Dominant regions and flats of the m-Catalan arrangement of type A.
//!
//! The arrangement consists of the hyperplanes `x_i - x_j = k` for
//! `|k| <= m`. A dominant region (inside `x_1 > … > x_n`) is encoded by the
//! capped floors `c[i][j] = min(m, ⌊x_i - x_j⌋)` over pairs `i < j`.
//!
//! Feasibility of the resulting strict difference constraints is decided
//! exactly by a Bellman–Ford negative-cycle test with weights `(w, -s)`,
//! where `s` counts strict inequalities along the path.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{param_err, Error, Result};
use crate::polynomial::BivarPoly;

/// Desk-scale limits for the checked entry points.
pub const MAX_N: u32 = 5;
pub const MAX_M: u32 = 3;

/// `x_to - x_from <= bound` (strictly below if `strict`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Edge {
    from: usize,
    to: usize,
    bound: i64,
    strict: bool,
}

/// Lexicographic path weight: integer part, then minus the number of strict edges.
fn weight(e: &Edge) -> (i64, i64) {
    (e.bound, -i64::from(e.strict))
}

fn add(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    (a.0 + b.0, a.1 + b.1)
}

/// True if the difference constraints over `n` variables have a real solution.
fn feasible(n: usize, edges: &[Edge]) -> bool {
    let mut dist = vec![(0i64, 0i64); n];
    for _ in 0..n {
        let mut changed = false;
        for e in edges {
            let cand = add(dist[e.from], weight(e));
            if cand < dist[e.to] {
                dist[e.to] = cand;
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
    // still relaxing after n rounds: a negative cycle exists
    !edges.iter().any(|e| add(dist[e.from], weight(e)) < dist[e.to])
}

/// How a single pair constraint is imposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairRule {
    /// `c < x_i - x_j < c + 1`, or `x_i - x_j > m` when `c = m`.
    Region(u32),
    /// `x_i - x_j = value`.
    Equal(i64),
}

fn pair_edges(i: usize, j: usize, rule: PairRule, m: u32, out: &mut Vec<Edge>) {
    match rule {
        PairRule::Region(c) => {
            // x_i - x_j > c  <=>  x_j - x_i < -c
            out.push(Edge {
                from: i,
                to: j,
                bound: -(c as i64),
                strict: true,
            });
            if c < m {
                out.push(Edge {
                    from: j,
                    to: i,
                    bound: c as i64 + 1,
                    strict: true,
                });
            }
        }
        PairRule::Equal(v) => {
            out.push(Edge {
                from: j,
                to: i,
                bound: v,
                strict: false,
            });
            out.push(Edge {
                from: i,
                to: j,
                bound: -v,
                strict: false,
            });
        }
    }
}

fn pairs(n: u32) -> Vec<(usize, usize)> {
    let n = n as usize;
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// A hyperplane `x_i - x_j = m`, as the 0-based pair `(i, j)`.
pub type Wall = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RegionCode {
    n: u32,
    m: u32,
    /// Capped floors in lexicographic pair order `(0,1), (0,2), …, (n-2,n-1)`.
    c: Vec<u32>,
}

impl RegionCode {
    /// Validates the code; fails with [`Error::Infeasible`] if no point realises it.
    pub fn new(n: u32, m: u32, c: Vec<u32>) -> Result<Self> {
        if n < 1 || m < 1 {
            return param_err("n and m must be positive");
        }
        let expected = pairs(n).len();
        if c.len() != expected {
            return param_err(format!("expected {expected} entries, got {}", c.len()));
        }
        if c.iter().any(|&v| v > m) {
            return param_err(format!("entries must lie in 0..={m}"));
        }
        let code = Self { n, m, c };
        if !code.system_feasible(None) {
            return Err(Error::Infeasible);
        }
        Ok(code)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `c[i][j]` for 0-based `i < j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.c[self.index(i, j)]
    }

    pub fn entries(&self) -> &[u32] {
        &self.c
    }

    fn index(&self, i: usize, j: usize) -> usize {
        let n = self.n as usize;
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    /// Region constraints, with the pairs in `equal` replaced by `x_i - x_j = m`.
    fn system_feasible(&self, equal: Option<&[(usize, usize)]>) -> bool {
        let mut edges = Vec::new();
        for (i, j) in pairs(self.n) {
            let on_wall = equal.is_some_and(|eq| eq.contains(&(i, j)));
            let rule = if on_wall {
                PairRule::Equal(self.m as i64)
            } else {
                PairRule::Region(self.get(i, j))
            };
            pair_edges(i, j, rule, self.m, &mut edges);
        }
        feasible(self.n as usize, &edges)
    }

    /// Separating walls `x_i - x_j = m` (0-based pairs) and the simple ones among them.
    pub fn separating_walls(&self) -> (Vec<Wall>, Vec<Wall>) {
        let sw: Vec<(usize, usize)> = pairs(self.n)
            .into_iter()
            .filter(|&(i, j)| self.get(i, j) == self.m && self.system_feasible(Some(&[(i, j)])))
            .collect();
        let ssw = sw.iter().copied().filter(|&(i, j)| j == i + 1).collect();
        (sw, ssw)
    }
}

impl fmt::Display for RegionCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = pairs(self.n)
            .into_iter()
            .map(|(i, j)| format!("c{}{}={}", i + 1, j + 1, self.get(i, j)))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_scale(m: u32, n: u32) -> Result<()> {
    if m == 0 || n == 0 {
        return param_err("m and n must be positive");
    }
    if m > MAX_M || n > MAX_N {
        return param_err(format!(
            "(m, n) = ({m}, {n}) exceeds the limits m <= {MAX_M}, n <= {MAX_N}"
        ));
    }
    Ok(())
}

/// All dominant regions, in depth-first order over pairs.
pub fn enumerate_regions(m: u32, n: u32) -> Result<Vec<RegionCode>> {
    check_scale(m, n)?;
    Ok(enumerate_regions_unbounded(m, n))
}

/// [`enumerate_regions`] without the scale limits.
pub fn enumerate_regions_unbounded(m: u32, n: u32) -> Vec<RegionCode> {
    let all_pairs = pairs(n);
    if all_pairs.is_empty() {
        return vec![RegionCode { n, m, c: Vec::new() }];
    }
    let (i0, j0) = all_pairs[0];
    (0..=m)
        .into_par_iter()
        .map(|first| {
            let mut edges = Vec::new();
            pair_edges(i0, j0, PairRule::Region(first), m, &mut edges);
            let mut code = vec![first];
            let mut out = Vec::new();
            extend(n, m, &all_pairs, &mut code, &mut edges, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn extend(
    n: u32,
    m: u32,
    all_pairs: &[(usize, usize)],
    code: &mut Vec<u32>,
    edges: &mut Vec<Edge>,
    out: &mut Vec<RegionCode>,
) {
    if !feasible(n as usize, edges) {
        return;
    }
    if code.len() == all_pairs.len() {
        out.push(RegionCode { n, m, c: code.clone() });
        return;
    }
    let (i, j) = all_pairs[code.len()];
    for c in 0..=m {
        let mark = edges.len();
        pair_edges(i, j, PairRule::Region(c), m, edges);
        code.push(c);
        extend(n, m, all_pairs, code, edges, out);
        code.pop();
        edges.truncate(mark);
    }
}

/// `Σ_R x^{sw(R)} y^{ssw(R)}` over the dominant regions.
pub fn region_h_polynomial(m: u32, n: u32) -> Result<BivarPoly> {
    Ok(h_polynomial_of(&enumerate_regions(m, n)?))
}

pub fn h_polynomial_of(regions: &[RegionCode]) -> BivarPoly {
    let mut p = BivarPoly::zero();
    for r in regions {
        let (sw, ssw) = r.separating_walls();
        p.add_term(sw.len() as u32, ssw.len() as u32, 1.into());
    }
    p
}

/// A flat: a region together with a subset of its separating walls.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatDescriptor {
    pub region: RegionCode,
    pub wall_subset: Vec<(usize, usize)>,
    /// `n - 1 - |wall_subset|`.
    pub dim: u32,
    /// Simple separating walls of the region not among `wall_subset`.
    pub ssw: u32,
    /// The chosen walls have independent normals and meet the closed region
    /// in a face whose relative interior keeps every other constraint strict.
    pub nondegenerate: bool,
}

/// True if the pairs, read as graph edges on `n` vertices, form a forest.
fn is_forest(n: u32, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n as usize).collect();
    fn find(p: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while p[r] != r {
            r = p[r];
        }
        p[v] = r;
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

pub fn flats_of(regions: &[RegionCode]) -> Vec<FlatDescriptor> {
    regions
        .par_iter()
        .map(|r| {
            let (sw, ssw) = r.separating_walls();
            let mut flats = Vec::with_capacity(1 << sw.len());
            for mask in 0u32..(1 << sw.len()) {
                let subset: Vec<(usize, usize)> = sw
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, w)| *w)
                    .collect();
                let ssw_left = ssw.iter().filter(|w| !subset.contains(w)).count() as u32;
                let nondegenerate = is_forest(r.n, &subset) && r.system_feasible(Some(&subset));
                flats.push(FlatDescriptor {
                    region: r.clone(),
                    dim: r.n - 1 - subset.len() as u32,
                    ssw: ssw_left,
                    wall_subset: subset,
                    nondegenerate,
                });
            }
            flats
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// One descriptor per pair `(R, S)` with `S ⊆ Sw(R)`.
pub fn enumerate_flats(m: u32, n: u32) -> Result<Vec<FlatDescriptor>> {
    Ok(flats_of(&enumerate_regions(m, n)?))
}

/// `Σ_F x^{dim F - ssw F} y^{ssw F}` over the flats.
pub fn flats_f_polynomial(m: u32, n: u32) -> Result<BivarPoly> {
    Ok(f_polynomial_of(&enumerate_flats(m, n)?))
}

pub fn f_polynomial_of(flats: &[FlatDescriptor]) -> BivarPoly {
    let mut p = BivarPoly::zero();
    for f in flats {
        p.add_term(f.dim - f.ssw, f.ssw, 1.into());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    #[test]
    fn region_counts() {
        assert_eq!(enumerate_regions(1, 2).unwrap().len(), 2);
        assert_eq!(enumerate_regions(2, 3).unwrap().len(), 12);
        assert_eq!(enumerate_regions(1, 3).unwrap().len(), 5);
        assert!(enumerate_regions(4, 3).is_err());
        assert!(enumerate_regions(1, 6).is_err());
    }

    #[test]
    fn walls_for_two_points() {
        let far = RegionCode::new(2, 1, vec![1]).unwrap();
        assert_eq!(far.separating_walls(), (vec![(0, 1)], vec![(0, 1)]));
        let near = RegionCode::new(2, 1, vec![0]).unwrap();
        assert_eq!(near.separating_walls(), (vec![], vec![]));
    }

    #[test]
    fn infeasible_code() {
        // x1 - x2 < 1 and x2 - x3 < 1 but x1 - x3 > 2
        assert_eq!(RegionCode::new(3, 2, vec![0, 2, 0]), Err(Error::Infeasible));
    }

    #[test]
    fn h_polynomials() {
        assert_eq!(region_h_polynomial(2, 3).unwrap(), p("x^2y^2 + 4xy + 2x + 5"));
        assert_eq!(region_h_polynomial(1, 2).unwrap(), p("xy + 1"));
        assert_eq!(region_h_polynomial(1, 3).unwrap(), p("x^2y^2 + 2xy + x + 1"));
    }

    #[test]
    fn flat_counts_and_polynomials() {
        let flats = enumerate_flats(2, 3).unwrap();
        assert_eq!(flats.len(), 21);
        assert!(flats.iter().all(|f| f.nondegenerate));
        assert_eq!(f_polynomial_of(&flats), p("7x^2 + 4xy + y^2 + 6x + 2y + 1"));
        assert_eq!(enumerate_flats(1, 2).unwrap().len(), 3);
        assert_eq!(flats_f_polynomial(1, 2).unwrap(), p("x + y + 1"));
    }

    #[test]
    fn full_simple_subsets_have_no_remaining_simple_walls() {
        for f in enumerate_flats(2, 4).unwrap() {
            let (sw, _) = f.region.separating_walls();
            if f.wall_subset == sw && sw.iter().all(|&(i, j)| j == i + 1) {
                assert_eq!(f.ssw, 0);
            }
        }
    }
}
