//! Variable substitutions relating the generating polynomials.
//!
//! Each function returns the [`SubstitutionSpec`] that maps a source family
//! to a target family, e.g. `F = x^{n-t} N((x+1)/x, (y+1)/(x+1))`.

use crate::closedform::FormulaFamily;
use crate::error::{param_err, Result};
use crate::polynomial::{substitute, BivarPoly, SubstitutionSpec};

fn spec(x: &str, y: &str, pre: BivarPoly) -> SubstitutionSpec {
    SubstitutionSpec::parse(x, y, "1")
        .expect("literal substitution")
        .with_prefactor(pre)
}

/// `x^rank p((x+1)/x, (y+1)/(x+1))`: valley data to small Schröder data by codimension.
pub fn f_triangle(rank: u32) -> SubstitutionSpec {
    spec("(x + 1)/(x)", "(y + 1)/(x + 1)", BivarPoly::x().pow(rank))
}

/// `p(x+1, (xy+1)/(x+1))`: valley data to small Schröder data by diagonals.
pub fn schroder() -> SubstitutionSpec {
    spec("x + 1", "(xy + 1)/(x + 1)", BivarPoly::one())
}

/// `p(x+1, xy/(x+1))`: valley data to positive Schröder data.
pub fn positive() -> SubstitutionSpec {
    spec("x + 1", "(xy)/(x + 1)", BivarPoly::one())
}

/// `p(x, (xy-1)/x)`: small Schröder data to positive Schröder data.
pub fn positive_from_small() -> SubstitutionSpec {
    spec("x", "(xy - 1)/(x)", BivarPoly::one())
}

/// `x^{n-1} N(1/x, y) = B` at `t = 1`.
pub fn n_to_b(n: u32) -> SubstitutionSpec {
    spec("(1)/(x)", "y", BivarPoly::x().pow(n - 1))
}

/// `x^{n-1} N(1/x, x(y-1)+1) = A` at `t = 1`.
pub fn n_to_a(n: u32) -> SubstitutionSpec {
    spec("(1)/(x)", "xy - x + 1", BivarPoly::x().pow(n - 1))
}

/// `B(x, x(y-1)+1) = A` at `t = 1`.
pub fn b_to_a() -> SubstitutionSpec {
    spec("x", "xy - x + 1", BivarPoly::one())
}

/// Source family and substitution producing a Schröder-type family from a
/// Dyck-type one.
pub fn derivation(target: FormulaFamily, n: u32, t: u32) -> Result<(FormulaFamily, SubstitutionSpec)> {
    use FormulaFamily as F;
    Ok(match target {
        F::F => (F::N, f_triangle(n - t)),
        F::Fm => (F::A, f_triangle(n - t)),
        F::S => (F::N, schroder()),
        F::Sm => (F::A, schroder()),
        F::P => (F::N, positive()),
        F::Pm => (F::A, positive()),
        other => return param_err(format!("{other} is not obtained by substitution")),
    })
}

/// Applies [`derivation`] to a given source polynomial.
pub fn derive(target: FormulaFamily, source: &BivarPoly, n: u32, t: u32) -> Result<BivarPoly> {
    let (_, s) = derivation(target, n, t)?;
    substitute(source, &s)
}
