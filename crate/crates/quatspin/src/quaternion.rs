//! Real quaternions, their three conjugations, paravectors and the σ action.
//!
//! A quaternion is written `q = a + bi + cj + dk`. Paravectors are the
//! quaternions with vanishing `k` coefficient; they model Euclidean 3-space
//! through `(x, y, z) <-> x + yi + zj`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use approx::{AbsDiffEq, RelativeEq};
use nalgebra::{Matrix3, Rotation3, UnitQuaternion, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default relative tolerance used by validators and comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn approx_eq_rel(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

/// Which of the three conjugations to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugation {
    /// `q' = a - bi - cj + dk`, an automorphism.
    Prime,
    /// `q̄ = a - bi - cj - dk`, an anti-automorphism.
    Bar,
    /// `q* = a + bi + cj - dk`, an anti-automorphism.
    Star,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion { a, b, c, d }
    }

    pub const fn real(a: f64) -> Self {
        Quaternion::new(a, 0.0, 0.0, 0.0)
    }

    pub const fn from_array(v: [f64; 4]) -> Self {
        Quaternion::new(v[0], v[1], v[2], v[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `a - bi - cj + dk`
    pub fn prime(self) -> Self {
        Quaternion::new(self.a, -self.b, -self.c, self.d)
    }

    /// `a - bi - cj - dk`
    pub fn bar(self) -> Self {
        Quaternion::new(self.a, -self.b, -self.c, -self.d)
    }

    /// `a + bi + cj - dk`
    pub fn star(self) -> Self {
        Quaternion::new(self.a, self.b, self.c, -self.d)
    }

    pub fn conjugate(self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Prime => self.prime(),
            Conjugation::Bar => self.bar(),
            Conjugation::Star => self.star(),
        }
    }

    pub fn norm_sq(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Real part.
    pub fn re(self) -> f64 {
        self.a
    }

    /// Imaginary part `bi + cj + dk`.
    pub fn im(self) -> Self {
        Quaternion::new(0.0, self.b, self.c, self.d)
    }

    pub fn is_zero(self) -> bool {
        self == Quaternion::ZERO
    }

    /// `q⁻¹ = q̄ / |q|²`.
    pub fn inverse(self) -> Result<Self> {
        let n = self.norm_sq();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroDivision);
        }
        Ok(self.bar() / n)
    }

    /// `q / |q|`.
    pub fn normalize(self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroDivision);
        }
        Ok(self / n)
    }

    /// Whether the `k` coefficient is negligible: `|d| <= tol (1 + |q|)`.
    pub fn is_paravector(self, tol: f64) -> bool {
        self.d.abs() <= tol * (1.0 + self.norm())
    }

    /// Exponential `e^a (cos|v| + v/|v| sin|v|)` with `v` the imaginary part.
    pub fn exp(self) -> Self {
        let v = self.im();
        let t = v.norm();
        let ea = self.a.exp();
        if t == 0.0 {
            return Quaternion::real(ea);
        }
        Quaternion::real(ea * t.cos()) + v * (ea * t.sin() / t)
    }

    /// Polar form `q = r e^{θu}`; see [`Polar`].
    pub fn polar(self) -> Result<Polar> {
        let r = self.norm();
        if r == 0.0 {
            return Err(Error::Domain("polar form of zero".into()));
        }
        let v = self.im();
        let s = v.norm();
        let theta = s.atan2(self.a);
        // For real q the axis is arbitrary; `i` is the fixed convention.
        let u = if s == 0.0 { Quaternion::I } else { v / s };
        Ok(Polar { r, u, theta })
    }
}

/// Polar data `q = r (cos θ + u sin θ)` with `r = |q|`, `u` a unit
/// imaginary quaternion and `θ ∈ [0, π]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Polar {
    pub r: f64,
    pub u: Quaternion,
    pub theta: f64,
}

impl Polar {
    pub fn reconstruct(&self) -> Quaternion {
        Quaternion::real(self.r * self.theta.cos()) + self.u * (self.r * self.theta.sin())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.a, self.b, self.c, self.d)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Quaternion) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (self.a, self.b, self.c, self.d);
        let (a2, b2, c2, d2) = (o.a, o.b, o.c, o.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, s: f64) -> Quaternion {
        Quaternion::new(self.a / s, self.b / s, self.c / s, self.d / s)
    }
}

impl Sum for Quaternion {
    fn sum<I: Iterator<Item = Quaternion>>(iter: I) -> Quaternion {
        iter.fold(Quaternion::ZERO, |acc, q| acc + q)
    }
}

impl From<f64> for Quaternion {
    fn from(a: f64) -> Self {
        Quaternion::real(a)
    }
}

impl AbsDiffEq for Quaternion {
    type Epsilon = f64;
    fn default_epsilon() -> f64 {
        f64::EPSILON
    }
    fn abs_diff_eq(&self, other: &Self, epsilon: f64) -> bool {
        (*self - *other).norm() <= epsilon
    }
}

impl RelativeEq for Quaternion {
    fn default_max_relative() -> f64 {
        f64::EPSILON
    }
    fn relative_eq(&self, other: &Self, epsilon: f64, max_relative: f64) -> bool {
        let diff = (*self - *other).norm();
        diff <= epsilon || diff <= max_relative * self.norm().max(other.norm())
    }
}

/// A paravector `x + yi + zj`, stored by its three real coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Paravector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Paravector {
    pub const ZERO: Paravector = Paravector::new(0.0, 0.0, 0.0);
    pub const ONE: Paravector = Paravector::new(1.0, 0.0, 0.0);
    pub const I: Paravector = Paravector::new(0.0, 1.0, 0.0);
    pub const J: Paravector = Paravector::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Paravector { x, y, z }
    }

    pub const fn from_array(v: [f64; 3]) -> Self {
        Paravector::new(v[0], v[1], v[2])
    }

    pub const fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub const fn to_quaternion(self) -> Quaternion {
        Quaternion::new(self.x, self.y, self.z, 0.0)
    }

    /// Accepts `q` when its `k` coefficient passes [`Quaternion::is_paravector`],
    /// then drops that coefficient.
    pub fn try_from_quaternion(q: Quaternion, tol: f64) -> Result<Self> {
        if q.is_paravector(tol) {
            Ok(Paravector::new(q.a, q.b, q.c))
        } else {
            Err(Error::NotParavector(q.d))
        }
    }

    /// Drops the `k` coefficient without checking it.
    pub const fn project(q: Quaternion) -> Self {
        Paravector::new(q.a, q.b, q.c)
    }

    pub fn to_vector3(self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn from_vector3(v: &Vector3<f64>) -> Self {
        Paravector::new(v[0], v[1], v[2])
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn normalize(self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroDivision);
        }
        Ok(self * (1.0 / n))
    }

    /// `v · w = Re(v w̄)`.
    pub fn dot(self, w: Paravector) -> f64 {
        (self.to_quaternion() * w.to_quaternion().bar()).re()
    }

    /// `v × w = ((v w̄ - w v̄) k) / 2`; with this product `1 × i = j`,
    /// `i × j = 1` and `j × 1 = i`.
    pub fn cross(self, w: Paravector) -> Paravector {
        let (v, w) = (self.to_quaternion(), w.to_quaternion());
        Paravector::project((v * w.bar() - w * v.bar()) * Quaternion::K / 2.0)
    }
}

impl Add for Paravector {
    type Output = Paravector;
    fn add(self, o: Paravector) -> Paravector {
        Paravector::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Paravector {
    type Output = Paravector;
    fn sub(self, o: Paravector) -> Paravector {
        Paravector::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Paravector {
    type Output = Paravector;
    fn neg(self) -> Paravector {
        Paravector::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Paravector {
    type Output = Paravector;
    fn mul(self, s: f64) -> Paravector {
        Paravector::new(self.x * s, self.y * s, self.z * s)
    }
}

impl From<Paravector> for Quaternion {
    fn from(v: Paravector) -> Quaternion {
        v.to_quaternion()
    }
}

impl AbsDiffEq for Paravector {
    type Epsilon = f64;
    fn default_epsilon() -> f64 {
        f64::EPSILON
    }
    fn abs_diff_eq(&self, other: &Self, epsilon: f64) -> bool {
        (*self - *other).norm() <= epsilon
    }
}

impl RelativeEq for Paravector {
    fn default_max_relative() -> f64 {
        f64::EPSILON
    }
    fn relative_eq(&self, other: &Self, epsilon: f64, max_relative: f64) -> bool {
        let diff = (*self - *other).norm();
        diff <= epsilon || diff <= max_relative * self.norm().max(other.norm())
    }
}

/// Dot product and cross product of two paravectors.
pub fn para_dot_cross(v: Quaternion, w: Quaternion, tol: f64) -> Result<(f64, Paravector)> {
    let v = Paravector::try_from_quaternion(v, tol)?;
    let w = Paravector::try_from_quaternion(w, tol)?;
    Ok((v.dot(w), v.cross(w)))
}

/// `σ(q)(x) = q x q*`.
pub fn sigma_apply(q: Quaternion, x: Quaternion) -> Quaternion {
    q * x * q.star()
}

/// `σ(q)` restricted to paravectors. The `k` part of the product is zero in
/// exact arithmetic and is dropped.
pub fn sigma_para(q: Quaternion, v: Paravector) -> Paravector {
    Paravector::project(sigma_apply(q, v.to_quaternion()))
}

/// Matrix of `σ(q)` on paravectors in the basis `(1, i, j)`.
pub fn sigma_matrix(q: Quaternion) -> Matrix3<f64> {
    let cols = [Paravector::ONE, Paravector::I, Paravector::J].map(|e| sigma_para(q, e).to_vector3());
    Matrix3::from_columns(&cols)
}

/// Geometric description of `σ(q)` on paravectors: rotation by `angle`
/// (right-handed in the `(1, i, j)` orientation) about the unit `axis`,
/// followed by dilation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SigmaRotation {
    pub axis: Paravector,
    pub angle: f64,
    pub dilation: f64,
}

impl SigmaRotation {
    /// Applies the rotation and dilation to `v` (Rodrigues' formula).
    pub fn apply(&self, v: Paravector) -> Paravector {
        let n = self.axis.to_vector3();
        let x = v.to_vector3();
        let (s, c) = self.angle.sin_cos();
        let r = x * c + n.cross(&x) * s + n * (n.dot(&x) * (1.0 - c));
        Paravector::from_vector3(&(r * self.dilation))
    }
}

/// For `q = r e^{θu}`, `σ(q)` is rotation by `2θ` about `-uk` with dilation `r²`.
pub fn sigma_rotation_data(q: Quaternion) -> Result<SigmaRotation> {
    let p = q.polar()?;
    Ok(SigmaRotation {
        axis: Paravector::project(-(p.u * Quaternion::K)),
        angle: 2.0 * p.theta,
        dilation: p.r * p.r,
    })
}

/// A unit quaternion `q` with `σ(q) = m`, for a rotation matrix `m` written
/// in the basis `(1, i, j)`. The result is determined up to sign.
pub fn unit_quaternion_for_rotation(m: &Matrix3<f64>) -> Quaternion {
    let uq = UnitQuaternion::from_rotation_matrix(&Rotation3::from_matrix_unchecked(*m));
    // A rotation by φ about the unit axis n is σ(e^{(φ/2) n k}).
    let (w, v) = (uq.w, uq.imag());
    Quaternion::new(w, 0.0, 0.0, 0.0) + Paravector::from_vector3(&v).to_quaternion() * Quaternion::K
}

/// A paravector square root: `w` with `w² = v`.
///
/// Writing `v = x + y u` with `u` a unit imaginary paravector and `y >= 0`,
/// the complex root `a + bi` of `x + yi` gives `w = a + b u`.
pub fn paravector_sqrt(v: Paravector) -> Paravector {
    let im = Paravector::new(0.0, v.y, v.z);
    let y = im.norm();
    let root = Complex64::new(v.x, y).sqrt();
    if y == 0.0 {
        // Negative reals: the root lies along the conventional axis i.
        return Paravector::new(root.re, root.im, 0.0);
    }
    Paravector::new(root.re, 0.0, 0.0) + im * (root.im / y)
}
