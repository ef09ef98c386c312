//! Command implementations behind the `mtdyck` binary.
//!
//! Everything here returns rendered text so that the binary only deals with
//! argument parsing, printing and the exit status.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use anyhow::{bail, ensure, Context, Result};
use mtdyck::closedform::{family_polynomial, FormulaFamily};
use mtdyck::paths::{self, brute_family_polynomial, brute_polynomial_for, family_recipe, PathKind};
use mtdyck::polynomial::{BivarPoly, PolyRecord};
use mtdyck::reciprocity::{simplex_points, wall_counts};
use mtdyck::report::Comparison;
use mtdyck::series::{solve_functional_equation, EquationId};
use mtdyck::transforms;
use mtdyck::verify::{self, Suite};
use num_bigint::BigInt;
use serde::Serialize;

/// Default grid limits, lifted by `--unsafe-scale`.
pub const MAX_M: u32 = 3;
pub const MAX_N: u32 = 7;
pub const MAX_ARRANGEMENT_N: u32 = mtdyck::arrangement::MAX_N;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Source {
    Closed,
    Brute,
    Series,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteArg {
    Formulas,
    Series,
    Bijection,
    Reciprocity,
    Arrangement,
    All,
}

impl SuiteArg {
    /// `reciprocity` also runs the simplex checks.
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Formulas => vec![Suite::Formulas],
            SuiteArg::Series => vec![Suite::Series],
            SuiteArg::Bijection => vec![Suite::Bijection],
            SuiteArg::Reciprocity => vec![Suite::Reciprocity, Suite::Ehrhart],
            SuiteArg::Arrangement => vec![Suite::Arrangement],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

fn check_scale(m: u32, n: u32, unsafe_scale: bool) -> Result<()> {
    if !unsafe_scale && (m > MAX_M || n > MAX_N) {
        bail!("m = {m}, n = {n} is beyond the default limits (m <= {MAX_M}, n <= {MAX_N}); pass --unsafe-scale to run anyway");
    }
    Ok(())
}

pub fn path_kind(name: &str) -> Result<PathKind> {
    Ok(PathKind::parse(name)?)
}

pub fn paths_count(kind: PathKind, m: u32, n: u32, t: u32, unsafe_scale: bool, format: Format) -> Result<String> {
    check_scale(m, n, unsafe_scale)?;
    let c = paths::count(kind, m, n, t)?;
    Ok(match format {
        Format::Plain => format!("{c}\n"),
        Format::Csv => format!("kind,m,n,t,count\n{},{m},{n},{t},{c}\n", kind.name()),
        Format::Json => {
            let v = serde_json::json!({ "kind": kind.name(), "m": m, "n": n, "t": t, "count": c.to_string() });
            format!("{v}\n")
        }
    })
}

pub fn paths_list(kind: PathKind, m: u32, n: u32, t: u32, unsafe_scale: bool, format: Format) -> Result<String> {
    check_scale(m, n, unsafe_scale)?;
    let words: Vec<String> = paths::enumerate(kind, m, n, t)?.iter().map(|p| p.to_string()).collect();
    Ok(match format {
        Format::Plain => words.iter().map(|w| format!("{w}\n")).collect(),
        Format::Csv => {
            let mut s = String::from("index,path\n");
            for (i, w) in words.iter().enumerate() {
                writeln!(s, "{i},{w}").unwrap();
            }
            s
        }
        Format::Json => format!("{}\n", serde_json::to_string(&words)?),
    })
}

/// Family polynomial from the chosen source. `residue` selects the valley
/// class for brute-force `B` (default `1`).
pub fn family_poly(
    family: FormulaFamily,
    m: i64,
    n: u32,
    t: u32,
    source: Source,
    residue: Option<u32>,
    unsafe_scale: bool,
) -> Result<BivarPoly> {
    ensure!(t >= 1 && t <= n, "need 1 <= t <= n");
    if source == Source::Closed {
        return Ok(family_polynomial(family, m, n, t)?);
    }
    ensure!(m > 0, "negative m is only available for closed forms");
    let m = m as u32;
    match source {
        Source::Closed => unreachable!(),
        Source::Brute => {
            check_scale(m, n, unsafe_scale)?;
            match residue {
                Some(i) => {
                    let (kind, xs, ys) = family_recipe(family, m, i)?;
                    Ok(brute_polynomial_for(kind, m, n, t, xs, ys)?)
                }
                None => Ok(brute_family_polynomial(family, m, n, t)?),
            }
        }
        Source::Series => {
            use FormulaFamily as F;
            let from_equation = |eq| -> Result<BivarPoly> {
                let s = solve_functional_equation(eq, m, t, n as usize, n as usize)?;
                Ok(s.coeff(n as usize))
            };
            match family {
                F::N => from_equation(EquationId::Full),
                F::A => from_equation(EquationId::MvalFullM),
                F::B => {
                    ensure!(m >= 2, "B needs m >= 2 for the series source");
                    from_equation(EquationId::MvalFullI)
                }
                other => {
                    let (src, _) = transforms::derivation(other, n, t)?;
                    let base = family_poly(src, m as i64, n, t, Source::Series, None, unsafe_scale)?;
                    Ok(transforms::derive(other, &base, n, t)?)
                }
            }
        }
    }
}

pub fn render_poly(family: FormulaFamily, m: i64, n: u32, t: u32, poly: &BivarPoly, format: Format) -> String {
    match format {
        Format::Plain => format!("{poly}\n"),
        Format::Json => format!("{}\n", PolyRecord::new(family.name(), m, n, t, poly).to_json()),
        Format::Csv => {
            let mut s = String::from("family,m,n,t,a,b,coeff\n");
            for (a, b, c) in poly.canonical_terms() {
                writeln!(s, "{},{m},{n},{t},{a},{b},{c}", family.name()).unwrap();
            }
            s
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_m: u32,
    pub max_n: u32,
    pub cases: Vec<Comparison>,
    pub totals: Totals,
    /// Wall-clock time; not part of the rendered output, which must be
    /// reproducible byte for byte.
    #[serde(skip)]
    pub duration: Duration,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.totals.failed == 0
    }
}

/// Runs the requested suites. The arrangement suite is capped at its own `n`
/// limit unless `unsafe_scale` is set.
pub fn run_verification(
    which: SuiteArg,
    max_m: u32,
    max_n: u32,
    unsafe_scale: bool,
) -> Result<Vec<VerificationReport>> {
    check_scale(max_m, max_n, unsafe_scale)?;
    let mut out = Vec::new();
    for suite in which.suites() {
        let start = Instant::now();
        let (n_cap, cases) = match suite {
            Suite::Arrangement => {
                let n_cap = if unsafe_scale {
                    max_n
                } else {
                    max_n.min(MAX_ARRANGEMENT_N)
                };
                (n_cap, verify::arrangement_with(max_m, n_cap, unsafe_scale)?)
            }
            other => (
                max_n,
                other
                    .run(max_m, max_n)
                    .with_context(|| format!("suite {}", other.name()))?,
            ),
        };
        let failed = cases.iter().filter(|c| !c.holds()).count();
        out.push(VerificationReport {
            suite: suite.name().to_string(),
            max_m,
            max_n: n_cap,
            totals: Totals {
                checks: cases.len(),
                passed: cases.len() - failed,
                failed,
            },
            cases,
            duration: start.elapsed(),
        });
    }
    Ok(out)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Plain output lists failures only unless `verbose`.
pub fn render_reports(reports: &[VerificationReport], format: Format, verbose: bool) -> Result<String> {
    Ok(match format {
        Format::Plain => {
            let mut s = String::new();
            for r in reports {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    s,
                    "{} (m<={}, n<={}): {verdict} {}/{} checks",
                    r.suite, r.max_m, r.max_n, r.totals.passed, r.totals.checks
                )
                .unwrap();
                for c in r.cases.iter().filter(|c| verbose || !c.holds()) {
                    writeln!(s, "  {c}").unwrap();
                }
            }
            s
        }
        Format::Json => format!("{}\n", serde_json::to_string_pretty(reports)?),
        Format::Csv => {
            let mut s = String::from("suite,label,left,right,pass\n");
            for r in reports {
                for c in &r.cases {
                    writeln!(
                        s,
                        "{},{},{},{},{}",
                        r.suite,
                        csv_field(&c.label),
                        csv_field(&c.left),
                        csv_field(&c.right),
                        c.holds()
                    )
                    .unwrap();
                }
            }
            s
        }
    })
}

#[derive(Clone, Debug, Serialize)]
struct TableRow {
    family: String,
    m: i64,
    n: u32,
    t: u32,
    a: u32,
    b: u32,
    coeff: String,
}

/// Closed-form coefficients of `families` over the grid; `m_values` may
/// include negative values.
pub fn table(families: &[FormulaFamily], m_values: &[i64], max_n: u32, format: Format) -> Result<String> {
    let mut rows = Vec::new();
    for &family in families {
        for &m in m_values {
            for n in 1..=max_n {
                for t in 1..=n {
                    let p = family_polynomial(family, m, n, t)?;
                    for (a, b, c) in p.canonical_terms() {
                        rows.push(TableRow {
                            family: family.name().to_string(),
                            m,
                            n,
                            t,
                            a,
                            b,
                            coeff: c.to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows)?),
        Format::Plain | Format::Csv => {
            let mut s = String::from("family,m,n,t,a,b,coeff\n");
            for r in rows {
                writeln!(s, "{},{},{},{},{},{},{}", r.family, r.m, r.n, r.t, r.a, r.b, r.coeff).unwrap();
            }
            s
        }
    })
}

#[derive(Clone, Debug, Serialize)]
struct SimplexRow {
    dilation: u32,
    walls: u32,
    points: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<String>,
}

/// Exactly-`k` wall counts of the dilated simplex. With `m`, reports both
/// dilations `mn ± 1` next to the Narayana numbers they should equal.
pub fn simplex_report(n: u32, m: Option<u32>, dilation: Option<u32>, format: Format) -> Result<(String, bool)> {
    let mut rows = Vec::new();
    let mut all_ok = true;
    let dilations: Vec<(u32, Option<bool>)> = match (m, dilation) {
        (_, Some(d)) => vec![(d, None)],
        (Some(m), None) => vec![(m * n + 1, Some(false)), (m * n - 1, Some(true))],
        (None, None) => bail!("give --m or --dilation"),
    };
    for (d, plus) in dilations {
        let counts = wall_counts(&simplex_points(n, d)?, n);
        for (k, &c) in counts.iter().enumerate() {
            let expected = match (plus, m) {
                (Some(plus), Some(m)) if (k as u32) < n => {
                    let v: BigInt = if plus {
                        mtdyck::closedform::nar_plus(m as i64, n, k as i64)?
                    } else {
                        mtdyck::closedform::nar(m as i64, n, k as i64)?
                    };
                    all_ok &= v == BigInt::from(c);
                    Some(v.to_string())
                }
                _ => None,
            };
            rows.push(SimplexRow {
                dilation: d,
                walls: k as u32,
                points: c,
                expected,
            });
        }
    }
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows)?),
        Format::Csv => {
            let mut s = String::from("dilation,walls,points,expected\n");
            for r in &rows {
                writeln!(
                    s,
                    "{},{},{},{}",
                    r.dilation,
                    r.walls,
                    r.points,
                    r.expected.as_deref().unwrap_or("")
                )
                .unwrap();
            }
            s
        }
        Format::Plain => {
            let mut s = String::new();
            for r in &rows {
                write!(s, "dilation {} walls {}: {}", r.dilation, r.walls, r.points).unwrap();
                if let Some(e) = &r.expected {
                    write!(s, " (expected {e})").unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok((text, all_ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
    }

    #[test]
    fn series_source_matches_closed() {
        for family in FormulaFamily::ALL {
            let closed = family_poly(family, 2, 4, 2, Source::Closed, None, false).unwrap();
            let series = family_poly(family, 2, 4, 2, Source::Series, None, false).unwrap();
            assert_eq!(closed, series, "{family}");
        }
    }

    #[test]
    fn limits_are_enforced() {
        assert!(paths_count(PathKind::Dyck, 4, 3, 1, false, Format::Plain).is_err());
        assert!(paths_count(PathKind::Dyck, 4, 3, 1, true, Format::Plain).is_ok());
    }
}
