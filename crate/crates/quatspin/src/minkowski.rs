//! Minkowski space `ℝ^{1,4}`, paravector Hermitian matrices, the map `φ₁`
//! from spinors to the light cone, flags, multiflags and decorated ideal
//! points.
//!
//! Coordinates are ordered `(T, W, X, Y, Z)` and the metric is
//! `dT² - dW² - dX² - dY² - dZ²`.

use std::ops::{Add, Mul, Neg, Sub};

use approx::{AbsDiffEq, RelativeEq};
use nalgebra::{Matrix4, Vector4};

use crate::clifford::{CliffordMatrix, Mat2};
use crate::error::{Error, Result};
use crate::quaternion::{Paravector, Quaternion};
use crate::spinor::{section_s, QuatPair, Spinor};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MinkowskiPoint {
    pub t: f64,
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl MinkowskiPoint {
    pub const ZERO: MinkowskiPoint = MinkowskiPoint::new(0.0, 0.0, 0.0, 0.0, 0.0);
    /// `p₀ = (1, 0, 0, 0, 1)`, the image of the spinor `(1, 0)`.
    pub const P0: MinkowskiPoint = MinkowskiPoint::new(1.0, 0.0, 0.0, 0.0, 1.0);
    pub const DT: MinkowskiPoint = MinkowskiPoint::new(1.0, 0.0, 0.0, 0.0, 0.0);
    pub const DW: MinkowskiPoint = MinkowskiPoint::new(0.0, 1.0, 0.0, 0.0, 0.0);
    pub const DX: MinkowskiPoint = MinkowskiPoint::new(0.0, 0.0, 1.0, 0.0, 0.0);
    pub const DY: MinkowskiPoint = MinkowskiPoint::new(0.0, 0.0, 0.0, 1.0, 0.0);
    pub const DZ: MinkowskiPoint = MinkowskiPoint::new(0.0, 0.0, 0.0, 0.0, 1.0);

    pub const fn new(t: f64, w: f64, x: f64, y: f64, z: f64) -> Self {
        MinkowskiPoint { t, w, x, y, z }
    }

    pub const fn from_array(v: [f64; 5]) -> Self {
        MinkowskiPoint::new(v[0], v[1], v[2], v[3], v[4])
    }

    pub const fn to_array(self) -> [f64; 5] {
        [self.t, self.w, self.x, self.y, self.z]
    }

    /// The spatial part `(W, X, Y, Z)`.
    pub fn spatial(&self) -> Vector4<f64> {
        Vector4::new(self.w, self.x, self.y, self.z)
    }

    pub fn from_spatial(t: f64, s: &Vector4<f64>) -> Self {
        MinkowskiPoint::new(t, s[0], s[1], s[2], s[3])
    }

    /// Euclidean norm of all five coordinates.
    pub fn euclidean_norm(&self) -> f64 {
        self.to_array().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_null(&self, tol: f64) -> bool {
        minkowski_inner(self, self).abs() <= tol * (1.0 + self.t * self.t + self.spatial().norm_squared())
    }

    pub fn is_future(&self) -> bool {
        self.t > 0.0
    }

    /// `W + Xi + Yj`.
    pub fn wxy(&self) -> Paravector {
        Paravector::new(self.w, self.x, self.y)
    }
}

impl Add for MinkowskiPoint {
    type Output = MinkowskiPoint;
    fn add(self, o: MinkowskiPoint) -> MinkowskiPoint {
        MinkowskiPoint::new(self.t + o.t, self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for MinkowskiPoint {
    type Output = MinkowskiPoint;
    fn sub(self, o: MinkowskiPoint) -> MinkowskiPoint {
        MinkowskiPoint::new(self.t - o.t, self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for MinkowskiPoint {
    type Output = MinkowskiPoint;
    fn neg(self) -> MinkowskiPoint {
        self * -1.0
    }
}

impl Mul<f64> for MinkowskiPoint {
    type Output = MinkowskiPoint;
    fn mul(self, s: f64) -> MinkowskiPoint {
        MinkowskiPoint::new(self.t * s, self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl AbsDiffEq for MinkowskiPoint {
    type Epsilon = f64;
    fn default_epsilon() -> f64 {
        f64::EPSILON
    }
    fn abs_diff_eq(&self, other: &Self, epsilon: f64) -> bool {
        (*self - *other).euclidean_norm() <= epsilon
    }
}

impl RelativeEq for MinkowskiPoint {
    fn default_max_relative() -> f64 {
        f64::EPSILON
    }
    fn relative_eq(&self, other: &Self, epsilon: f64, max_relative: f64) -> bool {
        let diff = (*self - *other).euclidean_norm();
        diff <= epsilon || diff <= max_relative * self.euclidean_norm().max(other.euclidean_norm())
    }
}

/// `⟨p, q⟩ = p_T q_T - p_W q_W - p_X q_X - p_Y q_Y - p_Z q_Z`.
pub fn minkowski_inner(p: &MinkowskiPoint, q: &MinkowskiPoint) -> f64 {
    p.t * q.t - p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z
}

/// A Hermitian matrix `[[s11, s12], [s̄12, s22]]` with real diagonal and
/// paravector off-diagonal entries.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParavectorHermitian {
    pub s11: f64,
    pub s12: Paravector,
    pub s22: f64,
}

impl ParavectorHermitian {
    /// `s11 s22 - |s12|²`.
    pub fn det(&self) -> f64 {
        self.s11 * self.s22 - self.s12.norm_sq()
    }

    pub fn trace(&self) -> f64 {
        self.s11 + self.s22
    }

    pub fn to_mat2(&self) -> Mat2 {
        let s12 = self.s12.to_quaternion();
        Mat2::new(Quaternion::real(self.s11), s12, s12.bar(), Quaternion::real(self.s22))
    }

    /// Accepts a quaternionic matrix that is Hermitian with paravector
    /// entries, within `tol` relative to its norm.
    pub fn from_mat2(m: &Mat2, tol: f64) -> Result<Self> {
        let bound = tol * (1.0 + m.norm());
        let im = m.a.im().norm().max(m.d.im().norm());
        let herm = (m.b - m.c.bar()).norm();
        if im > bound || herm > bound {
            return Err(Error::Domain(format!(
                "matrix is not Hermitian (diagonal imaginary part {im:e}, asymmetry {herm:e})"
            )));
        }
        let s12 = (m.b + m.c.bar()) / 2.0;
        if s12.d.abs() > bound {
            return Err(Error::Domain(format!("off-diagonal entry has k-component {:e}", s12.d)));
        }
        Ok(ParavectorHermitian {
            s11: m.a.re(),
            s12: Paravector::project(s12),
            s22: m.d.re(),
        })
    }
}

/// `(T, W, X, Y, Z) ↦ ½ [[T + Z, W + Xi + Yj], [W - Xi - Yj, T - Z]]`.
pub fn point_to_hermitian(p: &MinkowskiPoint) -> ParavectorHermitian {
    ParavectorHermitian {
        s11: (p.t + p.z) / 2.0,
        s12: p.wxy() * 0.5,
        s22: (p.t - p.z) / 2.0,
    }
}

pub fn hermitian_to_point(s: &ParavectorHermitian) -> MinkowskiPoint {
    MinkowskiPoint::new(s.s11 + s.s22, 2.0 * s.s12.x, 2.0 * s.s12.y, 2.0 * s.s12.z, s.s11 - s.s22)
}

/// `φ₁(κ) = κ κ̄ᵀ`: `T = |κ|²`, `W + Xi + Yj = 2ξη̄`, `Z = |ξ|² - |η|²`.
pub fn phi1(k: &Spinor) -> MinkowskiPoint {
    let (xi, eta) = (k.xi(), k.eta());
    let s = ParavectorHermitian {
        s11: xi.norm_sq(),
        s12: Paravector::project(xi * eta.bar()),
        s22: eta.norm_sq(),
    };
    hermitian_to_point(&s)
}

/// `Dφ₁` at `κ` applied to the tangent vector `ν`: `κν̄ᵀ + νκ̄ᵀ`.
///
/// Fails when `ν` is not tangent to the spinor space, which shows up as a
/// `k`-component in the off-diagonal entry.
pub fn dphi1(k: &Spinor, nu: &QuatPair, tol: f64) -> Result<MinkowskiPoint> {
    let (xi, eta) = (k.xi(), k.eta());
    let s11 = 2.0 * (xi * nu.xi.bar()).re();
    let s22 = 2.0 * (eta * nu.eta.bar()).re();
    let s12 = xi * nu.eta.bar() + nu.xi * eta.bar();
    if s12.d.abs() > tol * (1.0 + k.norm() * nu.norm()) {
        return Err(Error::Domain(format!("vector is not tangent to the spinor space (k-component {:e})", s12.d)));
    }
    Ok(hermitian_to_point(&ParavectorHermitian {
        s11,
        s12: Paravector::project(s12),
        s22,
    }))
}

/// `A.p`, computed as `A S Āᵀ` on the Hermitian matrix of `p`.
pub fn act_minkowski(a: &CliffordMatrix, p: &MinkowskiPoint) -> MinkowskiPoint {
    let m = a.matrix();
    let s = point_to_hermitian(p).to_mat2();
    let r = m * s * m.bar_transpose();
    // The product is Hermitian with paravector entries up to rounding.
    let h = ParavectorHermitian {
        s11: r.a.re(),
        s12: Paravector::project((r.b + r.c.bar()) / 2.0),
        s22: r.d.re(),
    };
    hermitian_to_point(&h)
}

/// A flag `[[p, v]]`: a future null point `p` and a direction `v ∈ p⊥`
/// not parallel to `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Flag {
    pub p: MinkowskiPoint,
    pub v: MinkowskiPoint,
}

impl Flag {
    pub fn new(p: MinkowskiPoint, v: MinkowskiPoint) -> Self {
        Flag { p, v }
    }

    /// The canonical representative of the direction modulo `pℝ` and positive
    /// rescaling: subtract `(v_T/p_T) p`, landing in `T = 0`, then scale the
    /// spatial part to unit Euclidean length.
    pub fn canonical_direction(&self) -> Result<Vector4<f64>> {
        slice_direction(&self.p, &self.v).map(|(d, _)| d)
    }
}

fn slice_representative(p: &MinkowskiPoint, v: &MinkowskiPoint) -> Result<Vector4<f64>> {
    if p.t <= 0.0 {
        return Err(Error::Domain("flag basepoint must be future".into()));
    }
    let u = *v - *p * (v.t / p.t);
    Ok(u.spatial())
}

/// Unit slice direction of `v` modulo `p`, with a condition number: the size
/// of the terms entering the subtraction relative to its result.
fn slice_direction(p: &MinkowskiPoint, v: &MinkowskiPoint) -> Result<(Vector4<f64>, f64)> {
    let u = slice_representative(p, v)?;
    let n = u.norm();
    let size = v.euclidean_norm() + p.euclidean_norm() * (v.t / p.t).abs();
    if n <= 64.0 * f64::EPSILON * size {
        return Err(Error::Domain("flag direction is parallel to its basepoint".into()));
    }
    Ok((u / n, size / n))
}

fn points_close(p: &MinkowskiPoint, q: &MinkowskiPoint, tol: f64) -> bool {
    (*p - *q).euclidean_norm() <= tol * 1f64.max(p.euclidean_norm()).max(q.euclidean_norm())
}

/// Flag equality: equal basepoints and positively proportional directions
/// modulo the flagpole.
pub fn flags_equal(f1: &Flag, f2: &Flag, tol: f64) -> bool {
    if !points_close(&f1.p, &f2.p, tol) {
        return false;
    }
    match (slice_direction(&f1.p, &f1.v), slice_direction(&f2.p, &f2.v)) {
        (Ok((a, ca)), Ok((b, cb))) => (a - b).norm() <= tol * ca.max(cb),
        _ => false,
    }
}

/// Angle in `[0, π]` between two flags on a common basepoint.
pub fn flag_angle(f1: &Flag, f2: &Flag, tol: f64) -> Result<f64> {
    if !points_close(&f1.p, &f2.p, tol) {
        return Err(Error::Domain("flags have distinct basepoints".into()));
    }
    let (v, w) = (f1.v, f2.v);
    let (vv, ww, vw) = (minkowski_inner(&v, &v), minkowski_inner(&w, &w), minkowski_inner(&v, &w));
    if vv >= 0.0 || ww >= 0.0 {
        return Err(Error::Domain("flag directions must be spacelike".into()));
    }
    // The form is negative definite on spacelike directions in p⊥, so its
    // negative plays the role of the Euclidean dot product.
    Ok((-vw / (vv * ww).sqrt()).clamp(-1.0, 1.0).acos())
}

/// A multiflag `[[p, vⁱ, vʲ]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Multiflag {
    pub p: MinkowskiPoint,
    pub vi: MinkowskiPoint,
    pub vj: MinkowskiPoint,
}

impl Multiflag {
    pub fn i_flag(&self) -> Flag {
        Flag::new(self.p, self.vi)
    }

    pub fn j_flag(&self) -> Flag {
        Flag::new(self.p, self.vj)
    }
}

pub fn multiflags_equal(m1: &Multiflag, m2: &Multiflag, tol: f64) -> bool {
    flags_equal(&m1.i_flag(), &m2.i_flag(), tol) && flags_equal(&m1.j_flag(), &m2.j_flag(), tol)
}

/// `Φ₁(κ) = [[φ₁(κ), Dφ₁(s_i κ), Dφ₁(s_j κ)]]`.
pub fn multiflag_from_spinor(k: &Spinor) -> Multiflag {
    let tangent = |v| dphi1(k, &section_s(v, k), f64::INFINITY).expect("sections are tangent");
    Multiflag {
        p: phi1(k),
        vi: tangent(Paravector::I),
        vj: tangent(Paravector::J),
    }
}

/// `A` applied to each vector of a multiflag.
pub fn act_multiflag(a: &CliffordMatrix, m: &Multiflag) -> Multiflag {
    Multiflag {
        p: act_minkowski(a, &m.p),
        vi: act_minkowski(a, &m.vi),
        vj: act_minkowski(a, &m.vj),
    }
}

/// A null ray `ℓ` together with a conformal orientation-preserving map
/// `ψ` from paravectors to `ℓ⊥/ℓ`, stored through representatives of
/// `ψ(1)`, `ψ(i)`, `ψ(j)` in the `T = 0` slice.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoratedIdealPoint {
    /// Representative of `ℓ` with `T = 1`.
    pub ell: MinkowskiPoint,
    pub psi1: MinkowskiPoint,
    pub psii: MinkowskiPoint,
    pub psij: MinkowskiPoint,
    /// Common Minkowski norm of the `ψ` images, `K = -4T₀²`.
    pub k_scale: f64,
}

impl DecoratedIdealPoint {
    /// Largest violation of orthogonality to `ℓ`, mutual orthogonality and
    /// equal norm `K`, relative to `|K|`.
    pub fn conformality_residual(&self) -> f64 {
        let v = [self.psi1, self.psii, self.psij];
        let mut r: f64 = 0.0;
        for (a, va) in v.iter().enumerate() {
            r = r.max(minkowski_inner(va, &self.ell).abs());
            r = r.max((minkowski_inner(va, va) - self.k_scale).abs());
            for vb in &v[a + 1..] {
                r = r.max(minkowski_inner(va, vb).abs());
            }
        }
        r / self.k_scale.abs()
    }

    /// Determinant of `(ψ(1), ψ(i), ψ(j), radial)` in `(W, X, Y, Z)`
    /// coordinates, normalised by the norms of its columns. Positive for
    /// outward-oriented decorations.
    pub fn orientation(&self) -> f64 {
        let cols = [self.psi1.spatial(), self.psii.spatial(), self.psij.spatial(), self.ell.spatial()];
        let scale: f64 = cols.iter().map(|c| c.norm()).product();
        Matrix4::from_columns(&cols).determinant() / scale
    }

    /// The image `ψ(v)` of a paravector, as a `T = 0` representative.
    pub fn psi(&self, v: Paravector) -> MinkowskiPoint {
        self.psi1 * v.x + self.psii * v.y + self.psij * v.z
    }
}

/// Sends a multiflag with basepoint `T`-coordinate `T₀` to the decorated
/// ideal point with scale `K = -4T₀²`. The images `ψ(i)`, `ψ(j)` point along
/// the two flags; `ψ(1)` completes them to an outward-oriented frame.
pub fn multiflag_to_ideal_decoration(mf: &Multiflag) -> Result<DecoratedIdealPoint> {
    let t0 = mf.p.t;
    let (di, _) = slice_direction(&mf.p, &mf.vi)?;
    let (dj, _) = slice_direction(&mf.p, &mf.vj)?;
    let ell = mf.p * (1.0 / t0);
    let radial = ell.spatial();
    let len = 2.0 * t0;

    // Orthonormal complement of span(di, dj, radial) in ℝ⁴, by Gram-Schmidt
    // on whichever coordinate axis has the largest residual.
    let basis = gram_schmidt(&[radial, di, dj]);
    let mut best = Vector4::zeros();
    for axis in 0..4 {
        let mut e = Vector4::zeros();
        e[axis] = 1.0;
        for b in &basis {
            e -= *b * b.dot(&e);
        }
        if e.norm() > best.norm() {
            best = e;
        }
    }
    let mut d1 = best.normalize();
    if Matrix4::from_columns(&[d1, di, dj, radial]).determinant() < 0.0 {
        d1 = -d1;
    }
    Ok(DecoratedIdealPoint {
        ell,
        psi1: MinkowskiPoint::from_spatial(0.0, &(d1 * len)),
        psii: MinkowskiPoint::from_spatial(0.0, &(di * len)),
        psij: MinkowskiPoint::from_spatial(0.0, &(dj * len)),
        k_scale: -len * len,
    })
}

fn gram_schmidt(vs: &[Vector4<f64>]) -> Vec<Vector4<f64>> {
    let mut out: Vec<Vector4<f64>> = Vec::new();
    for v in vs {
        let mut u = *v;
        for b in &out {
            u -= *b * b.dot(&u);
        }
        out.push(u.normalize());
    }
    out
}

/// Inverse of [`multiflag_to_ideal_decoration`] up to flag equivalence.
pub fn ideal_decoration_to_multiflag(dip: &DecoratedIdealPoint) -> Multiflag {
    let t0 = (-dip.k_scale / 4.0).sqrt();
    Multiflag {
        p: dip.ell * t0,
        vi: dip.psii,
        vj: dip.psij,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use Quaternion as H;

    fn sp(xi: H, eta: H) -> Spinor {
        Spinor::new(xi, eta).unwrap()
    }

    #[test]
    fn hermitian_examples() {
        let s = point_to_hermitian(&MinkowskiPoint::P0);
        assert_eq!(s.to_mat2(), Mat2::new(H::ONE, H::ZERO, H::ZERO, H::ZERO));
        let s = point_to_hermitian(&MinkowskiPoint::new(1.0, 0.0, 0.0, 0.0, -1.0));
        assert_eq!(s.to_mat2(), Mat2::new(H::ZERO, H::ZERO, H::ZERO, H::ONE));
        let p = MinkowskiPoint::new(3.0, -1.0, 0.5, 2.0, 0.25);
        assert_eq!(hermitian_to_point(&point_to_hermitian(&p)), p);
        let back = ParavectorHermitian::from_mat2(&point_to_hermitian(&p).to_mat2(), 1e-12).unwrap();
        assert_eq!(hermitian_to_point(&back), p);
        assert!(ParavectorHermitian::from_mat2(&Mat2::new(H::I, H::ZERO, H::ZERO, H::ONE), 1e-12).is_err());
    }

    #[test]
    fn inner_product_examples() {
        let q0 = MinkowskiPoint::DT;
        let n = MinkowskiPoint::new(2.0, 2.0, 0.0, 0.0, 0.0);
        assert_eq!(minkowski_inner(&MinkowskiPoint::P0, &MinkowskiPoint::P0), 0.0);
        assert_eq!(minkowski_inner(&q0, &q0), 1.0);
        assert_eq!(minkowski_inner(&n, &n), 0.0);
    }

    #[test]
    fn phi1_examples() {
        assert_eq!(phi1(&sp(H::ONE, H::ZERO)), MinkowskiPoint::P0);
        assert_eq!(phi1(&sp(H::ZERO, H::ONE)), MinkowskiPoint::new(1.0, 0.0, 0.0, 0.0, -1.0));
        assert_eq!(phi1(&sp(H::ONE, H::ONE)), MinkowskiPoint::new(2.0, 2.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn dphi1_examples() {
        let k0 = sp(H::ONE, H::ZERO);
        // s₁(κ₀) = (0, -1) gives the off-diagonal entry -1, hence W = -2.
        let d1 = dphi1(&k0, &section_s(Paravector::ONE, &k0), 1e-12).unwrap();
        assert_eq!(d1, MinkowskiPoint::new(0.0, -2.0, 0.0, 0.0, 0.0));
        let di = dphi1(&k0, &section_s(Paravector::I, &k0), 1e-12).unwrap();
        assert_eq!(di, MinkowskiPoint::new(0.0, 0.0, 2.0, 0.0, 0.0));
        let dj = dphi1(&k0, &section_s(Paravector::J, &k0), 1e-12).unwrap();
        assert_eq!(dj, MinkowskiPoint::new(0.0, 0.0, 0.0, 2.0, 0.0));
        assert_eq!(dphi1(&k0, &(k0.pair() * H::I), 1e-12).unwrap(), MinkowskiPoint::ZERO);
        assert!(dphi1(&k0, &QuatPair::new(H::ZERO, H::K), 1e-12).is_err());
    }

    #[test]
    fn flag_equality_examples() {
        let p = MinkowskiPoint::P0;
        let v = MinkowskiPoint::DX;
        let f = Flag::new(p, v);
        assert!(flags_equal(&f, &Flag::new(p, v * 2.0 + p * 3.0), 1e-12));
        assert!(!flags_equal(&f, &Flag::new(p, -v), 1e-12));
        assert!(!flags_equal(&f, &Flag::new(p, MinkowskiPoint::DY), 1e-12));
    }

    #[test]
    fn flag_angle_examples() {
        let p = MinkowskiPoint::P0;
        let fx = Flag::new(p, MinkowskiPoint::DX);
        assert_eq!(flag_angle(&fx, &fx, 1e-12).unwrap(), 0.0);
        assert_relative_eq!(flag_angle(&fx, &Flag::new(p, MinkowskiPoint::DY), 1e-12).unwrap(), std::f64::consts::FRAC_PI_2);
        assert_relative_eq!(flag_angle(&fx, &Flag::new(p, -MinkowskiPoint::DX), 1e-12).unwrap(), std::f64::consts::PI);
        let other = Flag::new(MinkowskiPoint::new(1.0, 0.0, 0.0, 0.0, -1.0), MinkowskiPoint::DX);
        assert!(flag_angle(&fx, &other, 1e-12).is_err());
    }

    #[test]
    fn multiflag_of_base_spinor() {
        let mf = multiflag_from_spinor(&sp(H::ONE, H::ZERO));
        let expected = Multiflag { p: MinkowskiPoint::P0, vi: MinkowskiPoint::DX, vj: MinkowskiPoint::DY };
        assert!(multiflags_equal(&mf, &expected, 1e-12));
        let minus = multiflag_from_spinor(&sp(-H::ONE, H::ZERO));
        assert!(multiflags_equal(&mf, &minus, 1e-12));
    }

    #[test]
    fn ideal_decoration_of_base_spinor() {
        let dip = multiflag_to_ideal_decoration(&multiflag_from_spinor(&sp(H::ONE, H::ZERO))).unwrap();
        assert_eq!(dip.psii, MinkowskiPoint::DX * 2.0);
        assert_eq!(dip.psij, MinkowskiPoint::DY * 2.0);
        assert_eq!(dip.psi1, MinkowskiPoint::DW * 2.0);
        assert_eq!(dip.k_scale, -4.0);
        assert!(dip.orientation() > 0.0);

        let scaled = Multiflag { p: MinkowskiPoint::P0 * 4.0, vi: MinkowskiPoint::DX, vj: MinkowskiPoint::DY };
        let dip4 = multiflag_to_ideal_decoration(&scaled).unwrap();
        assert_eq!(dip4.k_scale, 16.0 * dip.k_scale);
    }

    #[test]
    fn act_minkowski_examples() {
        let p = MinkowskiPoint::new(2.0, 0.3, -1.0, 0.5, 1.5);
        assert_eq!(act_minkowski(&CliffordMatrix::IDENTITY, &p), p);

        let x = H::new(0.6, 0.0, 0.8, 0.0);
        let diag = CliffordMatrix::new(x, H::ZERO, H::ZERO, x.prime()).unwrap();
        assert_relative_eq!(act_minkowski(&diag, &MinkowskiPoint::P0), MinkowskiPoint::P0, epsilon = 1e-15);

        let v = Paravector::new(1.0, 2.0, -1.0);
        let w = Paravector::new(0.5, -1.0, 3.0);
        let q = MinkowskiPoint::new(0.0, w.x, w.y, w.z, 0.0);
        let moved = act_minkowski(&crate::clifford::translation(v), &q);
        assert_relative_eq!(moved, q + MinkowskiPoint::P0 * v.dot(w), epsilon = 1e-14);
    }
}
