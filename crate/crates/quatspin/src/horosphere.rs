//! Horospheres in hyperbolic 4-space: the hyperboloid description
//! `⟨x, p⟩ = 1`, conversions between the hyperboloid, disc and
//! upper-half-space models, and the decorated horosphere of a spinor.

use crate::clifford::ExtendedParavector;
use crate::error::{Error, Result};
use crate::minkowski::{minkowski_inner, MinkowskiPoint};
use crate::quaternion::{sigma_para, Paravector};
use crate::spinor::Spinor;

/// The horosphere `{x : ⟨x, x⟩ = 1, x_T > 0, ⟨x, p⟩ = 1}` of a future null `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HorosphereHyp {
    pub p: MinkowskiPoint,
}

impl HorosphereHyp {
    /// Whether `x` lies on the hyperboloid and on the plane `⟨x, p⟩ = 1`.
    pub fn contains(&self, x: &MinkowskiPoint, tol: f64) -> bool {
        let scale = 1.0 + x.euclidean_norm() * (1.0 + self.p.euclidean_norm());
        x.t > 0.0
            && (minkowski_inner(x, x) - 1.0).abs() <= tol * scale
            && (minkowski_inner(x, &self.p) - 1.0).abs() <= tol * scale
    }
}

/// `p ↦` the horosphere `⟨x, p⟩ = 1`.
pub fn phi2(p: &MinkowskiPoint, tol: f64) -> Result<HorosphereHyp> {
    if !p.is_future() || !p.is_null(tol) {
        return Err(Error::Domain("horosphere covector must be null and future".into()));
    }
    Ok(HorosphereHyp { p: *p })
}

/// Light-cone point to the boundary of the upper half-space:
/// `(W + Xi + Yj) / (T - Z)`, or `∞` when `T - Z <= tol T`.
pub fn boundary_to_uhs(p: &MinkowskiPoint, tol: f64) -> ExtendedParavector {
    let den = p.t - p.z;
    if den <= tol * p.t {
        ExtendedParavector::Infinity
    } else {
        ExtendedParavector::Finite(p.wxy() * (1.0 / den))
    }
}

/// Hyperboloid to disc: `(T, W, X, Y, Z) ↦ (W, X, Y, Z) / (1 + T)`.
pub fn hyperboloid_to_disc(x: &MinkowskiPoint, tol: f64) -> Result<[f64; 4]> {
    let n = minkowski_inner(x, x);
    if x.t <= 0.0 || (n - 1.0).abs() > tol * (1.0 + x.t * x.t) {
        return Err(Error::Domain("point is not on the upper sheet of the hyperboloid".into()));
    }
    let s = 1.0 / (1.0 + x.t);
    Ok([x.w * s, x.x * s, x.y * s, x.z * s])
}

/// Light cone to the disc boundary: `(T, W, X, Y, Z) ↦ (W, X, Y, Z) / T`.
pub fn boundary_hyperboloid_to_disc(p: &MinkowskiPoint, tol: f64) -> Result<[f64; 4]> {
    if !p.is_future() || !p.is_null(tol) {
        return Err(Error::Domain("boundary point must be null and future".into()));
    }
    Ok([p.w / p.t, p.x / p.t, p.y / p.t, p.z / p.t])
}

/// Disc boundary to upper half-space boundary: `(w + xi + yj) / (1 - z)`.
pub fn disc_boundary_to_uhs(u: [f64; 4], tol: f64) -> Result<ExtendedParavector> {
    let n = u.iter().map(|c| c * c).sum::<f64>();
    if (n - 1.0).abs() > tol {
        return Err(Error::Domain("point is not on the unit sphere".into()));
    }
    let den = 1.0 - u[3];
    if den <= tol {
        return Ok(ExtendedParavector::Infinity);
    }
    Ok(ExtendedParavector::Finite(Paravector::new(u[0], u[1], u[2]) * (1.0 / den)))
}

/// A decorated horosphere in the upper half-space model.
///
/// `size` is the height when the center is `∞` and the Euclidean diameter
/// otherwise. The unit directions are read at the north pole (or anywhere on
/// a horizontal horosphere), with `∂w, ∂x, ∂y` identified with `1, i, j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoratedHorosphereUhs {
    pub center: ExtendedParavector,
    pub size: f64,
    pub dir_i: Paravector,
    pub dir_j: Paravector,
}

impl DecoratedHorosphereUhs {
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.center.approx_eq(&other.center, tol)
            && (self.size - other.size).abs() <= tol * self.size.max(other.size)
            && (self.dir_i - other.dir_i).norm() <= tol
            && (self.dir_j - other.dir_j).norm() <= tol
    }
}

/// The decorated horosphere of `κ = (ξ, η)`.
///
/// For `η ≠ 0`: center `ξη⁻¹`, diameter `|η|⁻²`, directions along
/// `σ(η⁻¹*)(i)` and `σ(η⁻¹*)(j)`. For `η = 0`: center `∞`, height `|ξ|²`,
/// directions along `σ(ξ)(i)` and `σ(ξ)(j)`. The `η = 0` branch is taken
/// when `|η| <= tol |κ|`.
pub fn decorated_horosphere_from_spinor(k: &Spinor, tol: f64) -> DecoratedHorosphereUhs {
    let (xi, eta) = (k.xi(), k.eta());
    let unit = |v: Paravector| v.normalize().expect("σ of a nonzero quaternion is injective");
    if eta.norm() <= tol * k.norm() {
        return DecoratedHorosphereUhs {
            center: ExtendedParavector::Infinity,
            size: xi.norm_sq(),
            dir_i: unit(sigma_para(xi, Paravector::I)),
            dir_j: unit(sigma_para(xi, Paravector::J)),
        };
    }
    let eta_inv = eta.inverse().expect("nonzero");
    let g = eta_inv.star();
    DecoratedHorosphereUhs {
        center: ExtendedParavector::Finite(Paravector::project(xi * eta_inv)),
        size: 1.0 / eta.norm_sq(),
        dir_i: unit(sigma_para(g, Paravector::I)),
        dir_j: unit(sigma_para(g, Paravector::J)),
    }
}
