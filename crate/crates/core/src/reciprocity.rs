//! Negative-`m` reciprocity identities and lattice points of the simplex
//! `{x_1 >= x_2 >= … >= x_n >= x_1 - 1, Σ x_i = 0}` and its dilations.
//!
//! The left side of every identity is the closed form evaluated at `-m`;
//! the right side substitutes into the `+m` polynomial.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::closedform::{
    binom, cat, cat_plus, d_coeff, family_polynomial, nar, nar_plus, p_coeff, sign, FormulaFamily,
};
use crate::error::{param_err, Result};
use crate::polynomial::{substitute, BivarPoly, SubstitutionSpec};
use crate::report::Comparison;

fn poly(s: &str) -> BivarPoly {
    s.parse().expect("literal polynomial")
}

/// Substitution `(prefactor, x image, y image)` relating `-m` to `+m` at `t = 1`.
pub fn reciprocity_spec(family: FormulaFamily, n: u32) -> SubstitutionSpec {
    let e = n - 1;
    let signed = BivarPoly::constant(sign(e as i64));
    let minus_x = poly("-x").pow(e);
    let (x_img, y_img, pre) = match family {
        FormulaFamily::A => ("1 - x", "(-xy)/(1 - x)", signed),
        FormulaFamily::B => ("1 - x", "1 - y", signed),
        FormulaFamily::N => ("(x)/(x - 1)", "1 - y", poly("1 - x").pow(e)),
        FormulaFamily::F => ("(1)/(x)", "(-y)/(x)", minus_x),
        FormulaFamily::Fm => ("(-x)/(x + 1)", "(y - x)/(x + 1)", poly("x + 1").pow(e)),
        FormulaFamily::S => ("(1)/(x)", "-xy", minus_x),
        FormulaFamily::Sm => ("-x - 1", "(xy + 2)/(x + 1)", signed),
        FormulaFamily::P => ("(1)/(x)", "x - xy + 1", minus_x),
        FormulaFamily::Pm => ("-1 - x", "(xy)/(1 + x)", signed),
    };
    SubstitutionSpec::parse(x_img, y_img, "1")
        .expect("literal substitution")
        .with_prefactor(pre)
}

/// `family_{-m,n,1}(x, y)` against the substituted `family_{m,n,1}`.
pub fn verify_identity(family: FormulaFamily, m: u32, n: u32) -> Result<Comparison> {
    if m == 0 || n == 0 {
        return param_err("m and n must be positive");
    }
    let left = family_polynomial(family, -(m as i64), n, 1)?;
    let right = substitute(
        &family_polynomial(family, m as i64, n, 1)?,
        &reciprocity_spec(family, n),
    )?;
    Ok(Comparison::new(
        format!("{family}_-m reciprocity (m={m}, n={n})"),
        left,
        right,
    ))
}

/// `d(-m, n, 1, a, b) = (-1)^{n-1-a} p(m, n, 1, a, b)` for all `0 <= b <= a < n`.
pub fn verify_dyck_schroder(m: u32, n: u32) -> Result<Vec<Comparison>> {
    let mut out = Vec::new();
    let (mi, ni) = (m as i64, n as i64);
    for a in 0..ni {
        for b in 0..=a {
            let left = d_coeff(-mi, n, 1, a, b)?;
            let right = sign(ni - 1 - a) * p_coeff(mi, n, 1, a, b)?;
            out.push(Comparison::new(format!("d(-{m},{n},1,{a},{b})"), left, right));
        }
    }
    Ok(out)
}

/// `Pm_{m,n,1}(x, y) = (-1)^{n-1} A_{-m,n,1}(-x, y)`.
pub fn verify_pm_from_a(m: u32, n: u32) -> Result<Comparison> {
    let left = family_polynomial(FormulaFamily::Pm, m as i64, n, 1)?;
    let spec = SubstitutionSpec::parse("-x", "y", "1")?.with_prefactor(BivarPoly::constant(sign(n as i64 - 1)));
    let right = substitute(&family_polynomial(FormulaFamily::A, -(m as i64), n, 1)?, &spec)?;
    Ok(Comparison::new(format!("Pm from A_-m (m={m}, n={n})"), left, right))
}

/// `N_m(x+1, y+1) = (-x)^{n-1} N_{-m}((x+1)/x, -y)`.
pub fn verify_n_shift(m: u32, n: u32) -> Result<Comparison> {
    let shift = SubstitutionSpec::parse("x + 1", "y + 1", "1")?;
    let left = substitute(&family_polynomial(FormulaFamily::N, m as i64, n, 1)?, &shift)?;
    let spec = SubstitutionSpec::parse("(x + 1)/(x)", "-y", "1")?.with_prefactor(poly("-x").pow(n - 1));
    let right = substitute(&family_polynomial(FormulaFamily::N, -(m as i64), n, 1)?, &spec)?;
    Ok(Comparison::new(
        format!("N shifted reciprocity (m={m}, n={n})"),
        left,
        right,
    ))
}

/// The `y = -1` specialisation: `N_m(x+1, 0) = (-x)^{n-1} N_{-m}((x+1)/x, 1)`.
pub fn verify_n_shift_at_zero(m: u32, n: u32) -> Result<Comparison> {
    let left = substitute(
        &family_polynomial(FormulaFamily::N, m as i64, n, 1)?.specialize_y(0),
        &SubstitutionSpec::parse("x + 1", "y", "1")?,
    )?;
    let spec = SubstitutionSpec::parse("(x + 1)/(x)", "y", "1")?.with_prefactor(poly("-x").pow(n - 1));
    let right = substitute(
        &family_polynomial(FormulaFamily::N, -(m as i64), n, 1)?.specialize_y(1),
        &spec,
    )?;
    Ok(Comparison::new(
        format!("N(x+1,0) reciprocity (m={m}, n={n})"),
        left,
        right,
    ))
}

/// `Cat(-m, n) = (-1)^{n-1} Cat⁺(m-1, n)`.
pub fn verify_catalan(m: u32, n: u32) -> Result<Comparison> {
    let left = cat(-(m as i64), n)?;
    let right = sign(n as i64 - 1) * cat_plus(m as i64 - 1, n)?;
    Ok(Comparison::new(format!("Cat(-{m},{n})"), left, right))
}

/// Integer point of a dilated simplex with the number of facets containing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplexPoint {
    pub coords: Vec<i64>,
    pub walls_hit: u32,
}

impl SimplexPoint {
    /// Facet `i < n - 1` is `x_{i+1} = x_{i+2}` (0-based `i`); facet `n - 1`
    /// is `x_n = x_1 - dilation`.
    pub fn on_facet(&self, facet: usize, dilation: i64) -> bool {
        let n = self.coords.len();
        if facet + 1 < n {
            self.coords[facet] == self.coords[facet + 1]
        } else {
            self.coords[n - 1] == self.coords[0] - dilation
        }
    }
}

/// All integer points of `dilation · 𝒜` for the simplex in `R^n`.
///
/// Points are parametrised by gaps `d_i = x_i - x_{i+1} >= 0` with
/// `Σ d_i <= dilation`; the translate with coordinate sum zero is integral
/// exactly when `n` divides `Σ i·d_i`.
pub fn simplex_points(n: u32, dilation: u32) -> Result<Vec<SimplexPoint>> {
    if n < 2 {
        return param_err("simplex needs n >= 2");
    }
    let n = n as usize;
    let dil = dilation as i64;
    let mut out = Vec::new();
    let mut gaps = vec![0i64; n - 1];
    fn rec(i: usize, left: i64, gaps: &mut Vec<i64>, n: usize, out: &mut Vec<SimplexPoint>) {
        if i == gaps.len() {
            let weighted: i64 = gaps.iter().enumerate().map(|(j, d)| (j as i64 + 1) * d).sum();
            if weighted % n as i64 != 0 {
                return;
            }
            let c = -weighted / n as i64;
            let mut coords = vec![c; n];
            for k in (0..n - 1).rev() {
                coords[k] = coords[k + 1] + gaps[k];
            }
            let walls = gaps.iter().filter(|d| **d == 0).count() as u32 + u32::from(left == 0);
            debug_assert_eq!(coords.iter().sum::<i64>(), 0);
            out.push(SimplexPoint {
                coords,
                walls_hit: walls,
            });
            return;
        }
        for d in 0..=left {
            gaps[i] = d;
            rec(i + 1, left - d, gaps, n, out);
        }
        gaps[i] = 0;
    }
    rec(0, dil, &mut gaps, n, &mut out);
    Ok(out)
}

/// Number of points lying in exactly `k` walls, for `k = 0..n`.
pub fn wall_counts(points: &[SimplexPoint], n: u32) -> Vec<u64> {
    let mut counts = vec![0u64; n as usize + 1];
    for p in points {
        counts[p.walls_hit as usize] += 1;
    }
    counts
}

/// Exactly-`k` wall counts at dilations `mn + 1` and `mn - 1` against
/// `Nar(m, n, k)` and `Nar⁺(m, n, k)`, `k = 0..n-1`.
pub fn nar_wall_check(m: u32, n: u32) -> Result<Vec<Comparison>> {
    let mut out = Vec::new();
    let mn = m * n;
    let plus = wall_counts(&simplex_points(n, mn + 1)?, n);
    let minus = wall_counts(&simplex_points(n, mn - 1)?, n);
    for k in 0..n {
        out.push(Comparison::new(
            format!("points in exactly {k} walls of {}A (m={m}, n={n})", mn + 1),
            plus[k as usize],
            nar(m as i64, n, k as i64)?,
        ));
        out.push(Comparison::new(
            format!("points in exactly {k} walls of {}A (m={m}, n={n})", mn - 1),
            minus[k as usize],
            nar_plus(m as i64, n, k as i64)?,
        ));
    }
    // no point lies on all n facets
    out.push(Comparison::new(
        format!("points on every facet (m={m}, n={n})"),
        plus[n as usize] + minus[n as usize],
        0,
    ));
    Ok(out)
}

/// Proper facet subsets of the simplex, by size.
fn facet_subsets(n: u32, size: u32) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|mask| mask.count_ones() == size)
        .map(|mask| (0..n as usize).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Closed points of the face cut out by `facets`.
fn face_points(points: &[SimplexPoint], facets: &[usize], dilation: i64) -> u64 {
    points
        .iter()
        .filter(|p| facets.iter().all(|&f| p.on_facet(f, dilation)))
        .count() as u64
}

/// Relative-interior points of the face cut out by `facets`.
fn face_interior_points(points: &[SimplexPoint], facets: &[usize], dilation: i64) -> u64 {
    points
        .iter()
        .filter(|p| facets.iter().all(|&f| p.on_facet(f, dilation)) && p.walls_hit as usize == facets.len())
        .count() as u64
}

/// For every face dimension `k`:
/// - `Nar⁺(-m, n, n-1-k) = (-1)^k Σ_{i<=k} Nar(m, n, n-1-i) C(n-1-i, n-1-k)`;
/// - the same sum equals the closed lattice points of all `k`-faces of `(mn+1)𝒜`;
/// - `Nar⁺(m, n, n-1-k)` equals the interior lattice points of all `k`-faces of `(mn-1)𝒜`.
pub fn ehrhart_face_check(n: u32, m: u32) -> Result<Vec<Comparison>> {
    if n < 2 {
        return param_err("simplex needs n >= 2");
    }
    let (mi, ni) = (m as i64, n as i64);
    let big = (m * n + 1) as i64;
    let small = (m * n - 1) as i64;
    let big_points = simplex_points(n, big as u32)?;
    let small_points = simplex_points(n, small as u32)?;
    let mut out = Vec::new();
    for k in 0..ni {
        let mut sum = BigInt::zero();
        for i in 0..=k {
            sum += nar(mi, n, ni - 1 - i)? * binom(ni - 1 - i, ni - 1 - k);
        }
        let lhs = nar_plus(-mi, n, ni - 1 - k)?;
        out.push(Comparison::new(
            format!("Nar+(-{m},{n},{}) reciprocity", ni - 1 - k),
            lhs,
            sign(k) * &sum,
        ));

        let faces = facet_subsets(n, (ni - 1 - k) as u32);
        let closed: u64 = faces.iter().map(|f| face_points(&big_points, f, big)).sum();
        out.push(Comparison::new(
            format!("closed points on {k}-faces of {big}A (n={n})"),
            closed,
            &sum,
        ));

        let interior: u64 = faces
            .iter()
            .map(|f| face_interior_points(&small_points, f, small))
            .sum();
        out.push(Comparison::new(
            format!("interior points of {k}-faces of {small}A (n={n})"),
            interior,
            nar_plus(mi, n, ni - 1 - k)?,
        ));
    }
    Ok(out)
}

/// Every comparison of the reciprocity suite at `(m, n)`, `t = 1`.
pub fn all_identities(m: u32, n: u32) -> Result<Vec<Comparison>> {
    let mut out = Vec::new();
    for family in FormulaFamily::ALL {
        out.push(verify_identity(family, m, n)?);
    }
    out.extend(verify_dyck_schroder(m, n)?);
    out.push(verify_pm_from_a(m, n)?);
    out.push(verify_n_shift(m, n)?);
    out.push(verify_n_shift_at_zero(m, n)?);
    out.push(verify_catalan(m, n)?);
    Ok(out)
}
