//! Quaternionic lambda lengths between spin-decorated horospheres.
//!
//! Two independent routes are provided. [`lambda_pdet`] is the closed
//! formula `{κ₁, κ₂}`. [`lambda_geometric`] moves the pair to standard
//! position (centers `∞` and `0`) with explicit generators, then measures
//! the translation length and the frame rotation between the two
//! decorations in the upper half-space. The geometric route only sees
//! unoriented decorations, so it returns `λ` up to sign.

use nalgebra::{Matrix3, Vector3};

use crate::clifford::{translation, CliffordMatrix, ExtendedParavector, Mat2};
use crate::error::{Error, Result};
use crate::horosphere::decorated_horosphere_from_spinor;
use crate::quaternion::{unit_quaternion_for_rotation, Paravector, Quaternion};
use crate::spinor::{bracket, Spinor};

/// Tolerance for deciding that a spinor component vanishes in
/// [`reduce_to_standard`] and [`lambda_geometric`].
pub const STANDARD_POSITION_TOL: f64 = 1e-9;

/// `λ₁₂ = {κ₁, κ₂} = ξ₁*η₂ - η₁*ξ₂`.
pub fn lambda_pdet(k1: &Spinor, k2: &Spinor) -> Quaternion {
    bracket(k1, k2)
}

/// Quaternionic distance `ρ + θ v k` between two spin frames.
///
/// `(v, θ)` and `(-v, -θ)` describe the same distance, and `θ` is only
/// meaningful mod `4π`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuaternionicDistance {
    pub rho: f64,
    pub theta: f64,
    pub axis: Paravector,
}

impl QuaternionicDistance {
    /// `exp((ρ + θ v k) / 2)`.
    pub fn to_lambda(&self) -> Quaternion {
        let d = Quaternion::real(self.rho) + self.axis.to_quaternion() * Quaternion::K * self.theta;
        (d * 0.5).exp()
    }

    /// Inverts [`Self::to_lambda`] for `λ ≠ 0`, with `θ ∈ [0, 2π]`.
    ///
    /// Writing `λ / |λ| = e^{φw}`, the axis is `v = -wk` and `θ = 2φ`.
    /// For real `λ` the axis defaults to `j` (from `w = i`).
    pub fn from_lambda(lambda: Quaternion) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::Degenerate("lambda length 0: the horospheres share a center".into()));
        }
        let p = lambda.polar()?;
        Ok(QuaternionicDistance {
            rho: 2.0 * p.r.ln(),
            theta: 2.0 * p.theta,
            axis: Paravector::project(-(p.u * Quaternion::K)),
        })
    }
}

/// A Clifford matrix `A` built from the centers of a pair, together with
/// `Aκ₁` (center `∞`) and `Aκ₂` (center `0`).
#[derive(Clone, Copy, Debug)]
pub struct StandardReduction {
    pub matrix: CliffordMatrix,
    pub k1: Spinor,
    pub k2: Spinor,
}

/// The center `ξη⁻¹` of a spinor, with `∞` when `|η| <= tol |κ|`.
pub fn spinor_center(k: &Spinor, tol: f64) -> ExtendedParavector {
    if k.eta().norm() <= tol * k.norm() {
        ExtendedParavector::Infinity
    } else {
        let z = k.xi() * k.eta().inverse().expect("nonzero");
        ExtendedParavector::Finite(Paravector::project(z))
    }
}

/// Moves a pair of horospheres with distinct centers to standard position.
///
/// If `z₁ = ξ₁η₁⁻¹` is finite, `[[0, -1], [1, -z₁]]` sends it to `∞`. A
/// translation then sends the image of `z₂` to `0`. Only the centers are
/// used, never the bracket.
pub fn reduce_to_standard(k1: &Spinor, k2: &Spinor) -> Result<StandardReduction> {
    let tol = STANDARD_POSITION_TOL;
    let z1 = spinor_center(k1, tol);
    let z2 = spinor_center(k2, tol);
    let scale = 1.0 + z1.finite().map_or(0.0, |z| z.norm()) + z2.finite().map_or(0.0, |z| z.norm());
    if z1.approx_eq(&z2, tol * scale) {
        return Err(Error::Domain("the horospheres share a center".into()));
    }
    let first = match z1 {
        ExtendedParavector::Infinity => CliffordMatrix::IDENTITY,
        ExtendedParavector::Finite(z) => {
            let m = Mat2::new(Quaternion::ZERO, -Quaternion::ONE, Quaternion::ONE, -z.to_quaternion());
            CliffordMatrix::new_unchecked(m)
        }
    };
    let z2_image = match first.mobius_apply(z2, tol) {
        ExtendedParavector::Finite(v) => v,
        ExtendedParavector::Infinity => {
            return Err(Error::Domain("the horospheres share a center".into()));
        }
    };
    let matrix = translation(-z2_image) * first;
    let k1 = matrix.act_spinor(k1)?;
    let k2 = matrix.act_spinor(k2)?;
    Ok(StandardReduction { matrix, k1, k2 })
}

/// Frame `[c, a, b]` (columns, images of `1, i, j`) of a decorated
/// horosphere in the `wxy` coordinates of the upper half-space, where
/// `a, b` are the decoration directions and `c = -(a × b)`.
fn decoration_frame(k: &Spinor) -> Matrix3<f64> {
    let h = decorated_horosphere_from_spinor(k, STANDARD_POSITION_TOL);
    let a: Vector3<f64> = h.dir_i.to_vector3();
    let b: Vector3<f64> = h.dir_j.to_vector3();
    Matrix3::from_columns(&[-a.cross(&b), a, b])
}

/// Geometric lambda length of a pair in standard position: `k1` centered at
/// `∞` (η = 0) and `k2` centered at `0` (ξ = 0). Defined up to sign.
///
/// The common perpendicular is the vertical geodesic over `0`. It meets the
/// horizontal horosphere at height `|ξ₁|²` and the sphere at height
/// `|η₂|⁻²`, so `ρ = ln(|ξ₁|²|η₂|²)`. Parallel transport along a vertical
/// geodesic fixes horizontal directions, so the rotation part compares the
/// inward frame of the first decoration with the outward frame of the
/// second directly. Both frames carry the normal `-∂z` last; their first
/// vectors are the completions of the decoration directions to a positively
/// oriented basis.
pub fn lambda_geometric_standard(k1: &Spinor, k2: &Spinor, tol: f64) -> Result<Quaternion> {
    if k1.eta().norm() > tol * k1.norm() || k2.xi().norm() > tol * k2.norm() {
        return Err(Error::Domain("pair is not in standard position (centers ∞ and 0)".into()));
    }
    // Drop the numerically negligible components before reading the data.
    let k1 = Spinor::new_unchecked(k1.xi(), Quaternion::ZERO);
    let k2 = Spinor::new_unchecked(Quaternion::ZERO, k2.eta());
    let height = k1.xi().norm_sq();
    let diameter = 1.0 / k2.eta().norm_sq();
    let rho = (height / diameter).ln();

    let f1 = decoration_frame(&k1);
    let f2 = decoration_frame(&k2);
    let rotation = f1.transpose() * f2;
    let r = unit_quaternion_for_rotation(&rotation);
    Ok(r * (0.5 * rho).exp())
}

/// Geometric lambda length of an arbitrary pair with distinct centers,
/// computed after [`reduce_to_standard`]. Defined up to sign.
pub fn lambda_geometric(k1: &Spinor, k2: &Spinor) -> Result<Quaternion> {
    let red = reduce_to_standard(k1, k2)?;
    lambda_geometric_standard(&red.k1, &red.k2, 1e-6)
}

/// `min_s |a - s b| / max(|a|, |b|)` over `s = ±1`; zero when both vanish.
pub fn signed_match_residual(a: Quaternion, b: Quaternion) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        return 0.0;
    }
    (a - b).norm().min((a + b).norm()) / scale
}

fn invert(q: Quaternion, what: &str) -> Result<Quaternion> {
    q.inverse().map_err(|_| Error::Degenerate(format!("{what} = 0")))
}

/// `λ₀₂⁻¹λ₀₁λ₃₁⁻¹λ₃₂ + λ₀₂⁻¹λ₀₃λ₁₃⁻¹λ₁₂ - 1`.
pub fn ptolemy_residual(k: &[Spinor; 4]) -> Result<Quaternion> {
    let l = |a: usize, b: usize| lambda_pdet(&k[a], &k[b]);
    let l02_inv = invert(l(0, 2), "λ02")?;
    let l31_inv = invert(l(3, 1), "λ31")?;
    let l13_inv = invert(l(1, 3), "λ13")?;
    Ok(l02_inv * l(0, 1) * l31_inv * l(3, 2) + l02_inv * l(0, 3) * l13_inv * l(1, 2) - Quaternion::ONE)
}

/// Result of [`triangle_holonomy`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Holonomy {
    Finite(Quaternion),
    Infinity,
}

impl Holonomy {
    pub fn finite(&self) -> Option<Quaternion> {
        match self {
            Holonomy::Finite(q) => Some(*q),
            Holonomy::Infinity => None,
        }
    }
}

/// `λ₁₂ λ₃₂⁻¹ λ₃₁`, a paravector, or `∞` when `λ₃₂ = 0`.
pub fn triangle_holonomy(k1: &Spinor, k2: &Spinor, k3: &Spinor) -> Holonomy {
    match lambda_pdet(k3, k2).inverse() {
        Ok(inv) => Holonomy::Finite(lambda_pdet(k1, k2) * inv * lambda_pdet(k3, k1)),
        Err(_) => Holonomy::Infinity,
    }
}
