//! Grid verification suites shared by the CLI and the test targets.
//!
//! Each suite returns a flat list of [`Comparison`]s; a suite passes when all
//! of them hold. Grid cells are processed in parallel but results are always
//! returned in grid order.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangement;
use crate::bijection::{enumerate_marked, from_schroder, to_schroder};
use crate::closedform::{cat, cat_plus, dyck_count, family_polynomial, specialization, FormulaFamily, Specialization};
use crate::error::{param_err, Result};
use crate::paths::{brute_polynomials_for, count, enumerate, family_recipe, PathKind, Statistic};
use crate::polynomial::{substitute, BivarPoly};
use crate::reciprocity;
use crate::report::Comparison;
use crate::series::{assemble_from_extractions, lagrange_burmann_check, solve_functional_equation, EquationId, Outer};
use crate::transforms;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Formulas,
    Series,
    Bijection,
    Reciprocity,
    Ehrhart,
    Arrangement,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Formulas,
        Suite::Series,
        Suite::Bijection,
        Suite::Reciprocity,
        Suite::Ehrhart,
        Suite::Arrangement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Formulas => "formulas",
            Suite::Series => "series",
            Suite::Bijection => "bijection",
            Suite::Reciprocity => "reciprocity",
            Suite::Ehrhart => "ehrhart",
            Suite::Arrangement => "arrangement",
        }
    }

    /// Runs the suite over `1 <= m <= max_m` and the suite's own `n` range
    /// capped by `max_n`.
    pub fn run(self, max_m: u32, max_n: u32) -> Result<Vec<Comparison>> {
        match self {
            Suite::Formulas => formulas(max_m, max_n),
            Suite::Series => series(max_m, max_n),
            Suite::Bijection => bijection(max_m, max_n),
            Suite::Reciprocity => reciprocity(max_m, max_n),
            Suite::Ehrhart => ehrhart(max_m, max_n),
            Suite::Arrangement => arrangement(max_m, max_n),
        }
    }
}

fn grid(max_m: u32, max_n: u32, min_n: u32, with_t: bool) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in min_n..=max_n {
            if with_t {
                out.extend((1..=n).map(|t| (m, n, t)));
            } else {
                out.push((m, n, 1));
            }
        }
    }
    out
}

/// Runs `cell` on every grid point in parallel and concatenates in order.
fn over_grid<F>(cells: Vec<(u32, u32, u32)>, cell: F) -> Result<Vec<Comparison>>
where
    F: Fn(u32, u32, u32) -> Result<Vec<Comparison>> + Sync,
{
    let parts: Vec<Result<Vec<Comparison>>> = cells.par_iter().map(|&(m, n, t)| cell(m, n, t)).collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn closed(family: FormulaFamily, m: u32, n: u32, t: u32) -> Result<BivarPoly> {
    family_polynomial(family, m as i64, n, t)
}

/// Closed forms against brute-force enumeration for all nine families, plus
/// the substitutions relating them.
pub fn formulas(max_m: u32, max_n: u32) -> Result<Vec<Comparison>> {
    over_grid(grid(max_m, max_n, 1, true), formulas_cell)
}

/// Label, family and statistic pair of one brute-force comparison.
type BruteEntry = (String, FormulaFamily, (Statistic, Statistic));

fn formulas_cell(m: u32, n: u32, t: u32) -> Result<Vec<Comparison>> {
    use FormulaFamily as F;
    let tag = format!("(m={m}, n={n}, t={t})");
    let mut out = Vec::new();

    // One pass per path kind, all statistic pairs at once.
    let mut by_kind: Vec<(PathKind, Vec<BruteEntry>)> = Vec::new();
    let mut push = |label: String, family: FormulaFamily, residue: u32| -> Result<()> {
        let (kind, xs, ys) = family_recipe(family, m, residue)?;
        match by_kind.iter_mut().find(|(k, _)| *k == kind) {
            Some((_, v)) => v.push((label, family, (xs, ys))),
            None => by_kind.push((kind, vec![(label, family, (xs, ys))])),
        }
        Ok(())
    };
    for family in F::ALL {
        if family == F::B {
            for i in 1..m {
                push(format!("B closed vs brute, {i}-valleys {tag}"), family, i)?;
            }
        } else {
            push(format!("{family} closed vs brute {tag}"), family, m)?;
        }
    }
    let mut brute = std::collections::HashMap::new();
    for (kind, entries) in &by_kind {
        let stats: Vec<_> = entries.iter().map(|e| e.2).collect();
        let polys = brute_polynomials_for(*kind, m, n, t, &stats)?;
        for ((label, family, _), poly) in entries.iter().zip(polys) {
            out.push(Comparison::new(label.clone(), &poly, closed(*family, m, n, t)?));
            brute.entry(*family).or_insert(poly);
        }
    }

    let nn = closed(F::N, m, n, t)?;
    let aa = closed(F::A, m, n, t)?;
    for target in [F::F, F::Fm, F::S, F::Sm, F::P, F::Pm] {
        let (source, _) = transforms::derivation(target, n, t)?;
        let src = if source == F::N { &nn } else { &aa };
        let expected = brute
            .get(&target)
            .cloned()
            .map_or_else(|| closed(target, m, n, t), Ok)?;
        out.push(Comparison::new(
            format!("{target} from {source} by substitution {tag}"),
            transforms::derive(target, src, n, t)?,
            expected,
        ));
    }
    out.push(Comparison::new(
        format!("P from S {tag}"),
        substitute(&closed(F::S, m, n, t)?, &transforms::positive_from_small())?,
        closed(F::P, m, n, t)?,
    ));
    out.push(Comparison::new(
        format!("Pm from Sm {tag}"),
        substitute(&closed(F::Sm, m, n, t)?, &transforms::positive_from_small())?,
        closed(F::Pm, m, n, t)?,
    ));

    let dyck = count(PathKind::Dyck, m, n, t)?;
    out.push(Comparison::new(
        format!("|D| vs closed count {tag}"),
        dyck,
        dyck_count(m as i64, n, t)?,
    ));
    out.push(Comparison::new(
        format!("|D| = A(1,1) = N(1,1) {tag}"),
        format!("{dyck} {dyck}"),
        format!("{} {}", aa.eval(&1.into(), &1.into()), nn.eval(&1.into(), &1.into())),
    ));

    if t == 1 {
        let bb = closed(F::B, m, n, 1)?;
        out.push(Comparison::new(
            format!("B from N {tag}"),
            substitute(&nn, &transforms::n_to_b(n))?,
            &bb,
        ));
        out.push(Comparison::new(
            format!("A from N {tag}"),
            substitute(&nn, &transforms::n_to_a(n))?,
            &aa,
        ));
        out.push(Comparison::new(
            format!("A from B {tag}"),
            substitute(&bb, &transforms::b_to_a())?,
            &aa,
        ));
        let spec = |kind| specialization(kind, m as i64, n, None).map(|v| v.into_poly());
        out.push(Comparison::new(
            format!("N(x,1) {tag}"),
            nn.specialize_y(1),
            spec(Specialization::NarT1)?,
        ));
        out.push(Comparison::new(
            format!("N(x,0) {tag}"),
            nn.specialize_y(0),
            spec(Specialization::NarNoret)?,
        ));
        out.push(Comparison::new(
            format!("A(x,1) {tag}"),
            aa.specialize_y(1),
            spec(Specialization::BallT1)?,
        ));
        out.push(Comparison::new(
            format!("B(x,1) {tag}"),
            bb.specialize_y(1),
            spec(Specialization::BallT1)?,
        ));
        if n >= 2 {
            out.push(Comparison::new(
                format!("A(x,0) {tag}"),
                aa.specialize_y(0),
                spec(Specialization::BallNoretM)?,
            ));
        }
        out.push(Comparison::new(
            format!("B(x,0) {tag}"),
            bb.specialize_y(0),
            spec(Specialization::BallNoretI)?,
        ));
        out.push(Comparison::new(format!("Cat {tag}"), dyck, cat(m as i64, n)?));
        let sums = |y: i64| {
            [&nn, &aa, &bb]
                .iter()
                .map(|p| p.eval(&1.into(), &y.into()).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        out.push(Comparison::new(
            format!("N, A, B at (1,1) vs Cat {tag}"),
            sums(1),
            [&dyck; 3].map(|c| c.to_string()).join(" "),
        ));
        let plus = cat_plus(m as i64, n)?.to_string();
        out.push(Comparison::new(
            format!("N, A, B at (1,0) vs Cat+ {tag}"),
            sums(0),
            [&plus; 3].map(|c| c.to_string()).join(" "),
        ));
    }
    out.push(Comparison::new(
        format!("A(x,1) rank generating function {tag}"),
        aa.specialize_y(1),
        specialization(Specialization::RankGen, m as i64, n, Some(t))?.into_poly(),
    ));
    Ok(out)
}

/// Functional equations and Lagrange–Bürmann extractions against the
/// closed forms.
pub fn series(max_m: u32, max_n: u32) -> Result<Vec<Comparison>> {
    if max_n == 0 {
        return Ok(Vec::new());
    }
    let order = max_n as usize;
    let mut out = Vec::new();
    let solved: Vec<Result<Vec<Comparison>>> = (1..=max_m)
        .flat_map(|m| (1..=max_n).map(move |t| (m, t)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(m, t)| series_equations(m, t, max_n, order))
        .collect();
    for s in solved {
        out.extend(s?);
    }
    out.extend(over_grid(grid(max_m, max_n, 1, true), lb_cell)?);
    Ok(out)
}

fn series_equations(m: u32, t: u32, max_n: u32, order: usize) -> Result<Vec<Comparison>> {
    use EquationId as E;
    use FormulaFamily as F;
    let mut out = Vec::new();
    let mut equations = vec![(E::Full, F::N), (E::MvalFullM, F::A)];
    if m >= 2 {
        equations.push((E::MvalFullI, F::B));
    }
    for (eq, family) in equations {
        let s = solve_functional_equation(eq, m, t, order, order)?;
        // a shorter truncation agrees on the common prefix
        if order > 1 {
            let short = solve_functional_equation(eq, m, t, order - 1, order)?;
            out.push(Comparison::new(
                format!("{eq:?} truncation consistency (m={m}, t={t})"),
                short,
                s.truncate(order - 1),
            ));
        }
        for n in t..=max_n {
            out.push(Comparison::new(
                format!("{eq:?} z^{n} vs {family} (m={m}, n={n}, t={t})"),
                s.coeff(n as usize),
                closed(family, m, n, t)?,
            ));
        }
    }
    if t == 1 {
        let mut single = vec![
            (E::Basic, Specialization::NarT1, 1),
            (E::Noret, Specialization::NarNoret, 1),
            (E::Mval, Specialization::BallT1, 1),
            (E::MvalNoretM, Specialization::BallNoretM, 2),
        ];
        if m >= 2 {
            single.push((E::MvalNoretI, Specialization::BallNoretI, 1));
        }
        for (eq, kind, min_n) in single {
            let s = solve_functional_equation(eq, m, 1, order, order)?;
            for n in min_n..=max_n {
                out.push(Comparison::new(
                    format!("{eq:?} z^{n} vs {kind:?} (m={m}, n={n})"),
                    s.coeff(n as usize),
                    specialization(kind, m as i64, n, None)?.into_poly(),
                ));
            }
        }
    }
    Ok(out)
}

fn lb_cell(m: u32, n: u32, t: u32) -> Result<Vec<Comparison>> {
    use FormulaFamily as F;
    let tag = format!("(m={m}, n={n}, t={t})");
    let xy = BivarPoly::x() * BivarPoly::y();
    let mut out = Vec::new();
    let lb = |outer: Outer, a: u32| -> Result<Comparison> {
        let rep = lagrange_burmann_check(outer.kernel(), &outer.wpoly(m), a, m)?;
        Ok(Comparison::new(
            format!("LB {outer:?} at z^{a} (m={m})"),
            rep.left,
            rep.right,
        ))
    };
    if t == 1 {
        // single-outer pairings, once per (m, a)
        let a = n;
        let mut outers = vec![Outer::GBullet, Outer::GPlus, Outer::QBullet, Outer::QPlusM];
        if m >= 2 {
            outers.push(Outer::QPlusI);
        }
        for o in outers {
            out.push(lb(o, a)?);
        }
    }
    for s in 0..n.saturating_sub(t) {
        out.push(lb(Outer::G { s, t }, n - t - s)?);
        out.push(lb(Outer::QM { s, t }, n - t - s)?);
        if m >= 2 {
            out.push(lb(Outer::QI { s, t }, n - t - s)?);
        }
    }
    out.push(Comparison::new(
        format!("N assembled from extractions {tag}"),
        assemble_from_extractions(|s, t| Outer::G { s, t }, &xy, m, n, t)?,
        closed(F::N, m, n, t)?,
    ));
    out.push(Comparison::new(
        format!("A assembled from extractions {tag}"),
        assemble_from_extractions(|s, t| Outer::QM { s, t }, &xy, m, n, t)?,
        closed(F::A, m, n, t)?,
    ));
    if m >= 2 {
        out.push(Comparison::new(
            format!("B assembled from extractions {tag}"),
            assemble_from_extractions(|s, t| Outer::QI { s, t }, &BivarPoly::y(), m, n, t)?,
            closed(F::B, m, n, t)?,
        ));
    }
    Ok(out)
}

/// The valley-marking bijection on both universes.
pub fn bijection(max_m: u32, max_n: u32) -> Result<Vec<Comparison>> {
    over_grid(grid(max_m, max_n, 1, true), bijection_cell)
}

fn bijection_cell(m: u32, n: u32, t: u32) -> Result<Vec<Comparison>> {
    let tag = format!("(m={m}, n={n}, t={t})");
    let mut out = Vec::new();
    for (mdiv, target) in [(false, PathKind::Small), (true, PathKind::SmallMdiv)] {
        let universe = if mdiv { "m-valley marks" } else { "all marks" };
        let marked = enumerate_marked(m, n, t, mdiv)?;
        let mut round_trip_failures = 0u64;
        let mut wrong_kind = 0u64;
        let mut transport_failures = 0u64;
        let mut restriction_failures = 0u64;
        let mut positivity_failures = 0u64;
        let mut images = HashSet::with_capacity(marked.len());
        for mp in &marked {
            let s = to_schroder(mp);
            if from_schroder(&s).ok().as_ref() != Some(mp) {
                round_trip_failures += 1;
            }
            if !s.is_kind(target) {
                wrong_kind += 1;
            }
            let (ps, ss) = (mp.base().stats(), s.stats());
            if ps.val != ss.val + ss.dg || ps.ret != ss.ret + ss.cd {
                transport_failures += 1;
            }
            if !mdiv && mp.marks_m_divisible() != s.is_m_divisible() {
                restriction_failures += 1;
            }
            if mp.marks_all_returns() != s.avoids_boundary() {
                positivity_failures += 1;
            }
            images.insert(s);
        }
        out.push(Comparison::new(
            format!("round trip failures, {universe} {tag}"),
            round_trip_failures,
            0,
        ));
        out.push(Comparison::new(
            format!("images outside {}, {universe} {tag}", target.name()),
            wrong_kind,
            0,
        ));
        out.push(Comparison::new(
            format!("statistic transport failures, {universe} {tag}"),
            transport_failures,
            0,
        ));
        if !mdiv {
            out.push(Comparison::new(
                format!("restriction failures {tag}"),
                restriction_failures,
                0,
            ));
        }
        out.push(Comparison::new(
            format!("positivity failures, {universe} {tag}"),
            positivity_failures,
            0,
        ));
        out.push(Comparison::new(
            format!("distinct images vs {} paths {tag}", target.name()),
            images.len(),
            count(target, m, n, t)?,
        ));
    }
    let mut inverse_failures = 0u64;
    for s in enumerate(PathKind::Small, m, n, t)? {
        match from_schroder(&s) {
            Ok(mp) if to_schroder(&mp) == s => {}
            _ => inverse_failures += 1,
        }
    }
    out.push(Comparison::new(
        format!("inverse round trip failures {tag}"),
        inverse_failures,
        0,
    ));
    Ok(out)
}

/// Negative-`m` identities for `2 <= n <= max_n`, `t = 1`.
pub fn reciprocity(max_m: u32, max_n: u32) -> Result<Vec<Comparison>> {
    over_grid(grid(max_m, max_n, 2, false), |m, n, _| {
        reciprocity::all_identities(m, n)
    })
}

/// Simplex lattice-point checks for `2 <= n <= max_n`.
pub fn ehrhart(max_m: u32, max_n: u32) -> Result<Vec<Comparison>> {
    over_grid(grid(max_m, max_n, 2, false), |m, n, _| {
        let mut out = reciprocity::nar_wall_check(m, n)?;
        for dilation in [m * n - 1, m * n + 1] {
            let points = reciprocity::simplex_points(n, dilation)?;
            let total: u64 = reciprocity::wall_counts(&points, n).iter().sum();
            out.push(Comparison::new(
                format!("wall partition at dilation {dilation} (m={m}, n={n})"),
                total,
                points.len(),
            ));
        }
        out.extend(reciprocity::ehrhart_face_check(n, m)?);
        Ok(out)
    })
}

/// Region and flat counts of the hyperplane arrangement; `max_n` and
/// `max_m` are capped by the arrangement limits unless `unbounded`.
pub fn arrangement(max_m: u32, max_n: u32) -> Result<Vec<Comparison>> {
    arrangement_with(max_m, max_n, false)
}

pub fn arrangement_with(max_m: u32, max_n: u32, unbounded: bool) -> Result<Vec<Comparison>> {
    if !unbounded && (max_m > arrangement::MAX_M || max_n > arrangement::MAX_N) {
        return param_err(format!(
            "arrangement checks are limited to m <= {} and n <= {}",
            arrangement::MAX_M,
            arrangement::MAX_N
        ));
    }
    // the regions of a single cell are enumerated in parallel already
    let mut out = Vec::new();
    for (m, n, _) in grid(max_m, max_n, 1, false) {
        out.extend(arrangement_cell(m, n)?);
    }
    Ok(out)
}

/// Checks for one `(m, n)` pair, without the size limits.
pub fn arrangement_cell(m: u32, n: u32) -> Result<Vec<Comparison>> {
    let tag = format!("(m={m}, n={n})");
    let regions = arrangement::enumerate_regions_unbounded(m, n);
    let flats = arrangement::flats_of(&regions);
    let aa = closed(FormulaFamily::A, m, n, 1)?;
    let mut out = vec![
        Comparison::new(format!("regions vs Cat {tag}"), regions.len(), cat(m as i64, n)?),
        Comparison::new(
            format!("region h-polynomial vs A {tag}"),
            arrangement::h_polynomial_of(&regions),
            &aa,
        ),
        Comparison::new(
            format!("flat f-polynomial vs Fm {tag}"),
            arrangement::f_polynomial_of(&flats),
            closed(FormulaFamily::Fm, m, n, 1)?,
        ),
        Comparison::new(
            format!("flat f-polynomial vs substituted A {tag}"),
            arrangement::f_polynomial_of(&flats),
            substitute(&aa, &transforms::f_triangle(n - 1))?,
        ),
    ];
    let degenerate = flats.iter().filter(|f| !f.nondegenerate).count();
    out.push(Comparison::new(format!("degenerate flats {tag}"), degenerate, 0));
    let expected: usize = regions.iter().map(|r| 1usize << r.separating_walls().0.len()).sum();
    out.push(Comparison::new(
        format!("flats vs Σ 2^|Sw| {tag}"),
        flats.len(),
        expected,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grids_pass() {
        for suite in Suite::ALL {
            let res = suite.run(2, 3).unwrap();
            assert!(!res.is_empty(), "{suite:?}");
            for c in &res {
                assert!(c.holds(), "{c}");
            }
        }
    }
}
