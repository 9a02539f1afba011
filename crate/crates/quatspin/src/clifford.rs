//! Clifford (Vahlen) matrices: 2×2 quaternionic matrices with spinor columns
//! and pseudo-determinant 1, acting on spinors and by Möbius transformations
//! on `ℝ³ ∪ {∞}`.

use std::fmt;
use std::ops::{Mul, Sub};

use crate::error::{Error, Result};
use crate::quaternion::{Paravector, Quaternion, DEFAULT_TOL};
use crate::spinor::{pdet_columns, QuatPair, Spinor, SpinorResiduals};

/// Residuals above this bound are reported as drift instead of being
/// re-projected away.
pub const DRIFT_BOUND: f64 = 1e-6;

/// A general 2×2 quaternionic matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Mat2 {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
    pub d: Quaternion,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(Quaternion::ONE, Quaternion::ZERO, Quaternion::ZERO, Quaternion::ONE);

    pub const fn new(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_columns(k1: QuatPair, k2: QuatPair) -> Self {
        Mat2::new(k1.xi, k2.xi, k1.eta, k2.eta)
    }

    pub fn col1(&self) -> QuatPair {
        QuatPair::new(self.a, self.c)
    }

    pub fn col2(&self) -> QuatPair {
        QuatPair::new(self.b, self.d)
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        (self.a.norm_sq() + self.b.norm_sq() + self.c.norm_sq() + self.d.norm_sq()).sqrt()
    }

    pub fn scale(&self, s: f64) -> Mat2 {
        Mat2::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// Conjugate transpose with respect to `bar`.
    pub fn bar_transpose(&self) -> Mat2 {
        Mat2::new(self.a.bar(), self.c.bar(), self.b.bar(), self.d.bar())
    }

    pub fn apply(&self, v: &QuatPair) -> QuatPair {
        QuatPair::new(self.a * v.xi + self.b * v.eta, self.c * v.xi + self.d * v.eta)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        Mat2::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// `pdet M = a*d - c*b`, the pseudo-determinant of the columns `(a, c)`, `(b, d)`.
pub fn pdet(m: &Mat2) -> Quaternion {
    pdet_columns(&m.col1(), &m.col2())
}

/// Largest residual among the redundant conditions that every Clifford
/// matrix satisfies: the eight paravector conditions and the four
/// expressions equal to 1.
pub fn redundant_residual(m: &Mat2) -> f64 {
    let Mat2 { a, b, c, d } = *m;
    let para = [
        a * b.star(),
        c * d.star(),
        c.star() * a,
        d.star() * b,
        b * a.star(),
        d * c.star(),
        a.star() * c,
        b.star() * d,
    ]
    .iter()
    .map(|q| q.d.abs())
    .fold(0.0, f64::max);
    let ones = [
        a * d.star() - b * c.star(),
        d * a.star() - c * b.star(),
        d.star() * a - b.star() * c,
        a.star() * d - c.star() * b,
    ]
    .iter()
    .map(|q| (*q - Quaternion::ONE).norm())
    .fold(0.0, f64::max);
    para.max(ones)
}

/// A validated element of `SL₂$`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CliffordMatrix(Mat2);

impl CliffordMatrix {
    pub const IDENTITY: CliffordMatrix = CliffordMatrix(Mat2::IDENTITY);

    /// Validates with [`DEFAULT_TOL`].
    pub fn new(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Result<Self> {
        Self::validate(Mat2::new(a, b, c, d), DEFAULT_TOL)
    }

    /// Accepts `m` when both columns are spinors and `pdet m = 1`, each
    /// within a tolerance scaled by the entry magnitudes.
    pub fn validate(m: Mat2, tol: f64) -> Result<Self> {
        for (column, (x, y)) in [(1, (m.a, m.c)), (2, (m.b, m.d))] {
            if x.is_zero() && y.is_zero() {
                return Err(Error::ColumnNotSpinor { column, residual: 0.0 });
            }
            let bound = tol * (x.norm() * y.norm() + 1.0);
            if let Some((_, residual)) = SpinorResiduals::of(x, y).first_failure(bound) {
                return Err(Error::ColumnNotSpinor { column, residual });
            }
        }
        let p = pdet(&m);
        let scale = 1.0 + m.col1().norm() * m.col2().norm();
        let dev = (p - Quaternion::ONE).norm();
        if dev > tol * scale {
            return Err(Error::PdetNotOne(dev));
        }
        Ok(CliffordMatrix(m))
    }

    /// Wraps `m` without any check.
    pub const fn new_unchecked(m: Mat2) -> Self {
        CliffordMatrix(m)
    }

    /// Validates a product or other derived matrix. Small deviations are
    /// corrected by re-projecting the columns and rescaling by a real factor
    /// so that `pdet = 1`; larger ones are reported as drift.
    fn renormalize(m: Mat2) -> Result<Self> {
        let c1 = Spinor::new_unchecked(m.a, m.c);
        let c2 = Spinor::new_unchecked(m.b, m.d);
        let fixed = Mat2::from_columns(c1.pair(), c2.pair());
        let p = pdet(&fixed);
        let scale = 1.0 + m.col1().norm() * m.col2().norm();
        let dev = (p - Quaternion::ONE).norm();
        let col_dev = (fixed - m).norm();
        if dev > DRIFT_BOUND * scale || col_dev > DRIFT_BOUND * (1.0 + m.norm()) {
            return Err(Error::Drift(dev.max(col_dev)));
        }
        if p.re() <= 0.0 {
            return Err(Error::Drift(dev));
        }
        Ok(CliffordMatrix(fixed.scale(1.0 / p.re().sqrt())))
    }

    pub fn matrix(&self) -> Mat2 {
        self.0
    }

    pub fn a(&self) -> Quaternion {
        self.0.a
    }

    pub fn b(&self) -> Quaternion {
        self.0.b
    }

    pub fn c(&self) -> Quaternion {
        self.0.c
    }

    pub fn d(&self) -> Quaternion {
        self.0.d
    }

    /// `[[d*, -b*], [-c*, a*]]`.
    pub fn inverse(&self) -> CliffordMatrix {
        let Mat2 { a, b, c, d } = self.0;
        CliffordMatrix(Mat2::new(d.star(), -b.star(), -c.star(), a.star()))
    }

    pub fn compose(&self, other: &CliffordMatrix) -> Result<CliffordMatrix> {
        Self::renormalize(self.0 * other.0)
    }

    pub fn neg(&self) -> CliffordMatrix {
        CliffordMatrix(self.0.scale(-1.0))
    }

    /// `A κ`, re-validated as a spinor.
    pub fn act_spinor(&self, k: &Spinor) -> Result<Spinor> {
        let v = self.0.apply(&k.pair());
        let bound = DRIFT_BOUND * (v.xi.norm() * v.eta.norm() + 1.0);
        if let Some((_, r)) = SpinorResiduals::of(v.xi, v.eta).first_failure(bound) {
            return Err(Error::Drift(r));
        }
        if v.norm_sq() == 0.0 {
            return Err(Error::Drift(0.0));
        }
        Ok(Spinor::new_unchecked(v.xi, v.eta))
    }

    /// The Möbius transformation `v ↦ (av + b)(cv + d)⁻¹`, with `∞ ↦ ac⁻¹`.
    pub fn mobius_apply(&self, v: ExtendedParavector, tol: f64) -> ExtendedParavector {
        let Mat2 { a, b, c, d } = self.0;
        match v {
            ExtendedParavector::Infinity => match c.inverse() {
                Ok(ci) if c.norm() > tol * a.norm() => ExtendedParavector::Finite(Paravector::project(a * ci)),
                _ => ExtendedParavector::Infinity,
            },
            ExtendedParavector::Finite(p) => {
                let v = p.to_quaternion();
                let den = c * v + d;
                if den.norm() <= tol * (1.0 + c.norm() * v.norm() + d.norm()) {
                    return ExtendedParavector::Infinity;
                }
                let num = a * v + b;
                ExtendedParavector::Finite(Paravector::project(num * den.inverse().expect("nonzero")))
            }
        }
    }

    /// Parabolicity test `A ≠ 1`, `(A - 1)² = 0`, with the follow-up facts
    /// `a + d* = 2` and `b`, `c` paravectors.
    pub fn parabolic_report(&self, tol: f64) -> ParabolicReport {
        let n = self.0 - Mat2::IDENTITY;
        let nn = n.norm();
        let square_residual = (n * n).norm() / (1.0 + nn * nn);
        let Mat2 { a, b, c, d } = self.0;
        let scale = 1.0 + self.0.norm();
        ParabolicReport {
            parabolic: nn > tol * scale && square_residual <= tol,
            distance_from_identity: nn,
            square_residual,
            trace_residual: (a + d.star() - Quaternion::real(2.0)).norm() / scale,
            offdiag_k: b.d.abs().max(c.d.abs()) / scale,
        }
    }

    pub fn is_parabolic(&self, tol: f64) -> bool {
        self.parabolic_report(tol).parabolic
    }
}

/// Diagnostics of [`CliffordMatrix::parabolic_report`]. Residuals are
/// relative: `square_residual` is `‖(A-1)²‖ / (1 + ‖A-1‖²)` and the others
/// are divided by `1 + ‖A‖`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParabolicReport {
    pub parabolic: bool,
    pub distance_from_identity: f64,
    pub square_residual: f64,
    pub trace_residual: f64,
    pub offdiag_k: f64,
}

impl Mul for CliffordMatrix {
    type Output = CliffordMatrix;
    /// Matrix product without re-validation.
    fn mul(self, o: CliffordMatrix) -> CliffordMatrix {
        CliffordMatrix(self.0 * o.0)
    }
}

impl fmt::Display for CliffordMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A point of `ℝ³ ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedParavector {
    Finite(Paravector),
    Infinity,
}

impl ExtendedParavector {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedParavector::Infinity)
    }

    pub fn finite(&self) -> Option<Paravector> {
        match self {
            ExtendedParavector::Finite(p) => Some(*p),
            ExtendedParavector::Infinity => None,
        }
    }

    /// Equality with relative tolerance on finite points.
    pub fn approx_eq(&self, other: &ExtendedParavector, tol: f64) -> bool {
        match (self, other) {
            (ExtendedParavector::Infinity, ExtendedParavector::Infinity) => true,
            (ExtendedParavector::Finite(p), ExtendedParavector::Finite(q)) => {
                (*p - *q).norm() <= tol * 1f64.max(p.norm()).max(q.norm())
            }
            _ => false,
        }
    }
}

impl From<Paravector> for ExtendedParavector {
    fn from(p: Paravector) -> Self {
        ExtendedParavector::Finite(p)
    }
}

/// The translation `[[1, v], [0, 1]]`.
pub fn translation(v: Paravector) -> CliffordMatrix {
    CliffordMatrix(Mat2::new(Quaternion::ONE, v.to_quaternion(), Quaternion::ZERO, Quaternion::ONE))
}

/// The inversion `[[0, -1], [1, 0]]`, acting by `v ↦ -v⁻¹`.
pub fn inversion() -> CliffordMatrix {
    CliffordMatrix(Mat2::new(Quaternion::ZERO, -Quaternion::ONE, Quaternion::ONE, Quaternion::ZERO))
}

/// `[[a, 0], [0, a⁻¹*]]`, acting by `v ↦ a v a*`.
pub fn diagonal(a: Quaternion) -> Result<CliffordMatrix> {
    let ai = a.inverse()?;
    Ok(CliffordMatrix(Mat2::new(a, Quaternion::ZERO, Quaternion::ZERO, ai.star())))
}

/// The parabolic `[[1 - ac*, aa*], [-cc*, 1 + ca*]]` fixing the spinor `(a, c)`.
pub fn parabolic_from_spinor(k: &Spinor) -> CliffordMatrix {
    let (a, c) = (k.xi(), k.eta());
    let one = Quaternion::ONE;
    CliffordMatrix(Mat2::new(one - a * c.star(), a * a.star(), -(c * c.star()), one + c * a.star()))
}

/// The matrix with columns `κ` and `-κ̌ / |κ|²`.
pub fn column_completion(k: &Spinor) -> CliffordMatrix {
    let second = k.complementary().pair() * (-1.0 / k.norm_sq());
    CliffordMatrix(Mat2::from_columns(k.pair(), second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Quaternion as H;

    fn m(a: H, b: H, c: H, d: H) -> Mat2 {
        Mat2::new(a, b, c, d)
    }

    #[test]
    fn validation_examples() {
        let v = Paravector::new(0.5, -2.0, 3.0);
        assert!(CliffordMatrix::validate(translation(v).matrix(), 1e-12).is_ok());
        assert!(CliffordMatrix::new(H::J, H::ZERO, H::ZERO, -H::J).is_ok());
        assert!(matches!(
            CliffordMatrix::new(H::J, H::ZERO, H::ZERO, H::J),
            Err(Error::PdetNotOne(dev)) if (dev - 2.0).abs() < 1e-15
        ));
        assert_eq!(pdet(&m(H::J, H::ZERO, H::ZERO, H::J)), -H::ONE);
        assert!(matches!(
            CliffordMatrix::new(H::new(1.0, 0.0, 0.0, 1.0), H::ZERO, H::ONE, H::ONE),
            Err(Error::ColumnNotSpinor { column: 1, .. })
        ));
    }

    #[test]
    fn pdet_examples() {
        let d = H::new(1.0, 2.0, -1.0, 0.5);
        assert_eq!(pdet(&Mat2::IDENTITY), H::ONE);
        assert_eq!(pdet(&m(H::ONE, H::ZERO, H::ZERO, d)), d);
        assert_eq!(pdet(&inversion().matrix()), H::ONE);
    }

    #[test]
    fn inverse_examples() {
        let v = Paravector::new(1.0, -1.0, 2.0);
        assert_eq!(CliffordMatrix::IDENTITY.inverse(), CliffordMatrix::IDENTITY);
        assert_eq!(translation(v).inverse(), translation(-v));
        assert_eq!(inversion().inverse().matrix(), m(H::ZERO, H::ONE, -H::ONE, H::ZERO));
    }

    #[test]
    fn compose_examples() {
        let (u, v) = (Paravector::new(1.0, 2.0, 3.0), Paravector::new(-0.5, 0.25, 4.0));
        assert_eq!(translation(u).compose(&translation(v)).unwrap(), translation(u + v));
        assert_eq!(inversion().compose(&inversion()).unwrap(), CliffordMatrix::IDENTITY.neg());
        let a = translation(u).compose(&inversion()).unwrap();
        let id = a.compose(&a.inverse()).unwrap();
        assert!((id.matrix() - Mat2::IDENTITY).norm() < 1e-14);
    }

    #[test]
    fn mobius_examples() {
        use ExtendedParavector::*;
        let s = inversion();
        assert_eq!(s.mobius_apply(Finite(Paravector::ONE), DEFAULT_TOL), Finite(-Paravector::ONE));
        assert_eq!(s.mobius_apply(Infinity, DEFAULT_TOL), Finite(Paravector::ZERO));
        assert_eq!(s.mobius_apply(Finite(Paravector::ZERO), DEFAULT_TOL), Infinity);
        let (v, w) = (Paravector::new(1.0, 2.0, 3.0), Paravector::new(-4.0, 0.5, 0.0));
        assert_eq!(translation(v).mobius_apply(Finite(w), DEFAULT_TOL), Finite(w + v));
        assert_eq!(translation(v).mobius_apply(Infinity, DEFAULT_TOL), Infinity);
    }

    #[test]
    fn act_spinor_examples() {
        let v = Paravector::new(2.0, 0.0, -1.0);
        let e2 = Spinor::new(H::ZERO, H::ONE).unwrap();
        let e1 = Spinor::new(H::ONE, H::ZERO).unwrap();
        assert_eq!(translation(v).act_spinor(&e2).unwrap(), Spinor::new(v.to_quaternion(), H::ONE).unwrap());
        assert_eq!(inversion().act_spinor(&e1).unwrap(), e2);
        let k = Spinor::new(H::J, H::K).unwrap();
        assert_eq!(CliffordMatrix::IDENTITY.act_spinor(&k).unwrap(), k);
    }

    #[test]
    fn parabolic_examples() {
        let p0 = translation(Paravector::ONE);
        assert!(p0.is_parabolic(DEFAULT_TOL));
        assert!(!CliffordMatrix::IDENTITY.is_parabolic(DEFAULT_TOL));
        let dil = CliffordMatrix::new(H::real(2.0), H::ZERO, H::ZERO, H::real(0.5)).unwrap();
        assert!(!dil.is_parabolic(DEFAULT_TOL));
    }

    #[test]
    fn parabolic_from_spinor_examples() {
        let sp = |a, c| Spinor::new(a, c).unwrap();
        assert_eq!(parabolic_from_spinor(&sp(H::ONE, H::ZERO)).matrix(), m(H::ONE, H::ONE, H::ZERO, H::ONE));
        assert_eq!(parabolic_from_spinor(&sp(H::ZERO, H::ONE)).matrix(), m(H::ONE, H::ZERO, -H::ONE, H::ONE));
        // j* = j, so j j* = j² = -1.
        assert_eq!(parabolic_from_spinor(&sp(H::J, H::ZERO)).matrix(), m(H::ONE, -H::ONE, H::ZERO, H::ONE));
    }

    #[test]
    fn column_completion_examples() {
        let sp = |a, c| Spinor::new(a, c).unwrap();
        assert_eq!(column_completion(&sp(H::ONE, H::ZERO)).matrix(), Mat2::IDENTITY);
        assert_eq!(column_completion(&sp(H::ZERO, H::ONE)).matrix(), inversion().matrix());
        assert_eq!(column_completion(&sp(H::real(2.0), H::ZERO)).matrix(), m(H::real(2.0), H::ZERO, H::ZERO, H::real(0.5)));
    }
}
