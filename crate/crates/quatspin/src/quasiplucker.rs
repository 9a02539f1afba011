//! Quasideterminants of 2×2 quaternionic matrices and left quasi-Plücker
//! coordinates of 2×4 matrices whose columns are spinors.
//!
//! Row and column positions of a quasideterminant are 1-based (`1` or `2`).
//! Column indices of a [`SpinorQuad`] are 0-based (`0..4`).

use crate::clifford::{pdet, Mat2};
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::spinor::{bracket, Spinor};

fn inv(q: Quaternion, name: &'static str) -> Result<Quaternion> {
    q.inverse().map_err(|_| Error::UndefinedQuasideterminant(name))
}

fn check_position(p: usize, q: usize) -> Result<()> {
    if !(1..=2).contains(&p) || !(1..=2).contains(&q) {
        return Err(Error::Index(format!("quasideterminant position ({p}, {q}) must lie in {{1, 2}}²")));
    }
    Ok(())
}

/// The `(p, q)` quasideterminant of `[[a, b], [c, d]]`:
///
/// | `(p, q)` | value          |
/// |----------|----------------|
/// | `(1, 1)` | `a - b d⁻¹ c`  |
/// | `(1, 2)` | `b - a c⁻¹ d`  |
/// | `(2, 1)` | `c - d b⁻¹ a`  |
/// | `(2, 2)` | `d - c a⁻¹ b`  |
pub fn quasidet_2x2(m: &Mat2, p: usize, q: usize) -> Result<Quaternion> {
    check_position(p, q)?;
    let Mat2 { a, b, c, d } = *m;
    Ok(match (p, q) {
        (1, 1) => a - b * inv(d, "d")? * c,
        (1, 2) => b - a * inv(c, "c")? * d,
        (2, 1) => c - d * inv(b, "b")? * a,
        _ => d - c * inv(a, "a")? * b,
    })
}

/// Closed forms of the quasideterminants of a matrix with spinor columns,
/// in terms of its pseudo-determinant `P = a*d - c*b`:
/// `|A|₁₁ = d⁻¹* P*`, `|A|₁₂ = -c⁻¹* P`, `|A|₂₁ = -b⁻¹* P*`, `|A|₂₂ = a⁻¹* P`.
pub fn quasidet_closed_form(m: &Mat2, p: usize, q: usize) -> Result<Quaternion> {
    check_position(p, q)?;
    let Mat2 { a, b, c, d } = *m;
    let pd = pdet(m);
    Ok(match (p, q) {
        (1, 1) => inv(d, "d")?.star() * pd.star(),
        (1, 2) => -(inv(c, "c")?.star() * pd),
        (2, 1) => -(inv(b, "b")?.star() * pd.star()),
        _ => inv(a, "a")?.star() * pd,
    })
}

/// The same closed forms for `A = (κ₁, κ₂)`, written with the bracket:
/// for instance `|A|₁₁ = η₂⁻¹* {κ₁, κ₂}*`.
pub fn quasidet_bracket_form(k1: &Spinor, k2: &Spinor, p: usize, q: usize) -> Result<Quaternion> {
    check_position(p, q)?;
    let br = bracket(k1, k2);
    Ok(match (p, q) {
        (1, 1) => inv(k2.eta(), "d")?.star() * br.star(),
        (1, 2) => -(inv(k1.eta(), "c")?.star() * br),
        (2, 1) => -(inv(k2.xi(), "b")?.star() * br.star()),
        _ => inv(k1.xi(), "a")?.star() * br,
    })
}

/// Four spinors, viewed as the columns of a 2×4 quaternionic matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorQuad(pub [Spinor; 4]);

impl SpinorQuad {
    pub fn new(columns: [Spinor; 4]) -> Self {
        SpinorQuad(columns)
    }

    pub fn column(&self, i: usize) -> Result<&Spinor> {
        self.0.get(i).ok_or_else(|| Error::Index(format!("column {i} out of range 0..4")))
    }

    fn pair(&self, l: usize, n: usize) -> Result<Mat2> {
        Ok(Mat2::from_columns(self.column(l)?.pair(), self.column(n)?.pair()))
    }
}

fn check_distinct(idx: &[usize]) -> Result<()> {
    for (x, &i) in idx.iter().enumerate() {
        if idx[..x].contains(&i) {
            return Err(Error::Index(format!("indices {idx:?} must be distinct")));
        }
    }
    Ok(())
}

/// The left quasi-Plücker coordinate
/// `p_{lm}^n = |(κ_l, κ_n)|_{s1}⁻¹ |(κ_m, κ_n)|_{s1}` for row `s ∈ {1, 2}`.
pub fn quasi_plucker(quad: &SpinorQuad, l: usize, m: usize, n: usize, s: usize) -> Result<Quaternion> {
    check_distinct(&[l, m, n])?;
    if !(1..=2).contains(&s) {
        return Err(Error::Index(format!("row {s} must be 1 or 2")));
    }
    let den = quasidet_2x2(&quad.pair(l, n)?, s, 1)?;
    let num = quasidet_2x2(&quad.pair(m, n)?, s, 1)?;
    let den_inv = den.inverse().map_err(|_| Error::Degenerate(format!("quasideterminant of columns ({l}, {n}) is 0")))?;
    Ok(den_inv * num)
}

/// `p_{lm}^n` through lambda lengths: `{κ_n, κ_l}⁻¹ {κ_n, κ_m}`.
pub fn quasi_plucker_bracket(quad: &SpinorQuad, l: usize, m: usize, n: usize) -> Result<Quaternion> {
    check_distinct(&[l, m, n])?;
    let (kl, km, kn) = (quad.column(l)?, quad.column(m)?, quad.column(n)?);
    let den = bracket(kn, kl)
        .inverse()
        .map_err(|_| Error::Degenerate(format!("columns {n} and {l} share a center")))?;
    Ok(den * bracket(kn, km))
}

/// `p_{lm}^n` from row 1, or from row 2 when a row-1 quasideterminant is
/// undefined. A spinor column never has both entries zero, so one of the two
/// rows always works unless two columns share a center.
pub fn quasi_plucker_defined(quad: &SpinorQuad, l: usize, m: usize, n: usize) -> Result<Quaternion> {
    match quasi_plucker(quad, l, m, n, 1) {
        Err(Error::UndefinedQuasideterminant(_)) => quasi_plucker(quad, l, m, n, 2),
        r => r,
    }
}

/// `p_{lm}^n p_{mn}^l p_{nl}^m + 1`.
pub fn gr_skew_symmetry_residual(quad: &SpinorQuad, l: usize, m: usize, n: usize) -> Result<Quaternion> {
    let p = |l, m, n| quasi_plucker_defined(quad, l, m, n);
    let prod = p(l, m, n)? * p(m, n, l)? * p(n, l, m)?;
    Ok(prod + Quaternion::ONE)
}

/// `p_{ab}^l p_{ba}^m + p_{am}^l p_{ma}^b - 1`.
pub fn gr_plucker_residual(quad: &SpinorQuad, a: usize, b: usize, l: usize, m: usize) -> Result<Quaternion> {
    check_distinct(&[a, b, l, m])?;
    let p = |l, m, n| quasi_plucker_defined(quad, l, m, n);
    let lhs = p(a, b, l)? * p(b, a, m)? + p(a, m, l)? * p(m, a, b)?;
    Ok(lhs - Quaternion::ONE)
}
