//! Quaternionic spinors: pairs `(ξ, η)` with `ξη̄` a paravector.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::quaternion::{Paravector, Quaternion, DEFAULT_TOL};

/// An arbitrary column vector of two quaternions. Tangent vectors to the
/// spinor space and general matrix columns use this type.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct QuatPair {
    pub xi: Quaternion,
    pub eta: Quaternion,
}

impl QuatPair {
    pub const fn new(xi: Quaternion, eta: Quaternion) -> Self {
        QuatPair { xi, eta }
    }

    pub fn norm_sq(&self) -> f64 {
        self.xi.norm_sq() + self.eta.norm_sq()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }
}

impl Add for QuatPair {
    type Output = QuatPair;
    fn add(self, o: QuatPair) -> QuatPair {
        QuatPair::new(self.xi + o.xi, self.eta + o.eta)
    }
}

impl Sub for QuatPair {
    type Output = QuatPair;
    fn sub(self, o: QuatPair) -> QuatPair {
        QuatPair::new(self.xi - o.xi, self.eta - o.eta)
    }
}

impl Neg for QuatPair {
    type Output = QuatPair;
    fn neg(self) -> QuatPair {
        QuatPair::new(-self.xi, -self.eta)
    }
}

/// Right scalar multiplication `(ξ, η) x = (ξx, ηx)`.
impl Mul<Quaternion> for QuatPair {
    type Output = QuatPair;
    fn mul(self, x: Quaternion) -> QuatPair {
        QuatPair::new(self.xi * x, self.eta * x)
    }
}

impl Mul<f64> for QuatPair {
    type Output = QuatPair;
    fn mul(self, s: f64) -> QuatPair {
        QuatPair::new(self.xi * s, self.eta * s)
    }
}

/// The real inner product `⟨κ₁, κ₂⟩ = Re(ξ₁ξ̄₂ + η₁η̄₂)`.
pub fn inner_product(k1: &QuatPair, k2: &QuatPair) -> f64 {
    (k1.xi * k2.xi.bar() + k1.eta * k2.eta.bar()).re()
}

/// The pseudo-determinant of the matrix with columns `k1`, `k2`:
/// `ξ₁* η₂ - η₁* ξ₂`.
pub fn pdet_columns(k1: &QuatPair, k2: &QuatPair) -> Quaternion {
    k1.xi.star() * k2.eta - k1.eta.star() * k2.xi
}

/// The three equivalent spinor conditions, each expressed as the residual
/// that vanishes on spinors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorResiduals {
    /// `k`-coefficient of `ξη̄`.
    pub xi_eta_bar: f64,
    /// `k`-coefficient of `ξ*η`.
    pub xi_star_eta: f64,
    /// `x₀y₃ + x₁y₂ - x₂y₁ - x₃y₀` for `ξ = x₀ + x₁i + ..`, `η = y₀ + ..`.
    pub coordinate: f64,
}

impl SpinorResiduals {
    pub fn of(xi: Quaternion, eta: Quaternion) -> Self {
        let (x, y) = (xi.to_array(), eta.to_array());
        SpinorResiduals {
            xi_eta_bar: (xi * eta.bar()).d,
            xi_star_eta: (xi.star() * eta).d,
            coordinate: x[0] * y[3] + x[1] * y[2] - x[2] * y[1] - x[3] * y[0],
        }
    }

    /// The first condition that exceeds `bound`, with its residual.
    pub fn first_failure(&self, bound: f64) -> Option<(&'static str, f64)> {
        [
            ("x0 y3 + x1 y2 - x2 y1 - x3 y0 = 0", self.coordinate),
            ("xi eta-bar is a paravector", self.xi_eta_bar),
            ("xi-star eta is a paravector", self.xi_star_eta),
        ]
        .into_iter()
        .find(|(_, r)| r.abs() > bound)
    }
}

/// A validated spinor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    xi: Quaternion,
    eta: Quaternion,
}

impl Spinor {
    /// Validates with [`DEFAULT_TOL`].
    pub fn new(xi: Quaternion, eta: Quaternion) -> Result<Self> {
        Self::validate(xi, eta, DEFAULT_TOL)
    }

    /// Accepts `(ξ, η)` when it is nonzero and every spinor condition holds
    /// within `tol (|ξ||η| + 1)`, then re-projects onto the exact quadric.
    pub fn validate(xi: Quaternion, eta: Quaternion, tol: f64) -> Result<Self> {
        if xi.is_zero() && eta.is_zero() {
            return Err(Error::ZeroSpinor);
        }
        if !(xi.norm_sq() + eta.norm_sq()).is_finite() {
            return Err(Error::Domain("non-finite spinor component".into()));
        }
        let bound = tol * (xi.norm() * eta.norm() + 1.0);
        if let Some((condition, residual)) = SpinorResiduals::of(xi, eta).first_failure(bound) {
            return Err(Error::NotSpinor { condition, residual });
        }
        Ok(Self::reproject(xi, eta))
    }

    /// Builds a spinor without checking. The caller guarantees the spinor
    /// condition; the pair is still re-projected.
    pub fn new_unchecked(xi: Quaternion, eta: Quaternion) -> Self {
        Self::reproject(xi, eta)
    }

    /// Zeroes the `k` coefficient of `ξη̄` and solves back for the smaller
    /// of the two components, keeping the larger one fixed.
    fn reproject(xi: Quaternion, eta: Quaternion) -> Self {
        let mut w = xi * eta.bar();
        if w.d == 0.0 {
            return Spinor { xi, eta };
        }
        w.d = 0.0;
        if xi.norm_sq() >= eta.norm_sq() {
            // η̄ = ξ⁻¹ w
            let eta_bar = xi.inverse().expect("nonzero") * w;
            Spinor { xi, eta: eta_bar.bar() }
        } else {
            // ξ = w η̄⁻¹
            let xi = w * eta.bar().inverse().expect("nonzero");
            Spinor { xi, eta }
        }
    }

    pub fn from_pair(p: QuatPair) -> Result<Self> {
        Self::new(p.xi, p.eta)
    }

    pub fn xi(&self) -> Quaternion {
        self.xi
    }

    pub fn eta(&self) -> Quaternion {
        self.eta
    }

    pub fn pair(&self) -> QuatPair {
        QuatPair::new(self.xi, self.eta)
    }

    pub fn norm_sq(&self) -> f64 {
        self.pair().norm_sq()
    }

    pub fn norm(&self) -> f64 {
        self.pair().norm()
    }

    /// `κx` for nonzero `x`; right multiplication preserves spinors.
    pub fn right_mul(&self, x: Quaternion) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::ZeroSpinor);
        }
        Ok(Spinor::new_unchecked(self.xi * x, self.eta * x))
    }

    pub fn scale(&self, r: f64) -> Result<Self> {
        self.right_mul(Quaternion::real(r))
    }

    /// The complementary spinor `κ̌ = (η′, -ξ′)`.
    pub fn complementary(&self) -> Spinor {
        Spinor {
            xi: self.eta.prime(),
            eta: -self.xi.prime(),
        }
    }

    /// `ξη⁻¹`, or `None` when `η = 0`.
    pub fn ratio(&self) -> Option<Quaternion> {
        self.eta.inverse().ok().map(|e| self.xi * e)
    }
}

impl From<Spinor> for QuatPair {
    fn from(k: Spinor) -> QuatPair {
        k.pair()
    }
}

/// `{κ₁, κ₂} = ξ₁* η₂ - η₁* ξ₂`.
pub fn bracket(k1: &Spinor, k2: &Spinor) -> Quaternion {
    pdet_columns(&k1.pair(), &k2.pair())
}

/// The section `s_v(κ) = κ̌ v`.
pub fn section_s(v: Paravector, k: &Spinor) -> QuatPair {
    k.complementary().pair() * v.to_quaternion()
}

/// Coefficients of `ν = κx + κ̌y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentDecomposition {
    pub x: Quaternion,
    pub y: Quaternion,
}

impl TangentDecomposition {
    pub fn reconstruct(&self, k: &Spinor) -> QuatPair {
        k.pair() * self.x + k.complementary().pair() * self.y
    }
}

/// For `ν = (α, β)`: `x = (ξ̄α + η̄β)/|κ|²` and `y = (η*α - ξ*β)/|κ|²`.
pub fn decompose_tangent(k: &Spinor, nu: &QuatPair) -> TangentDecomposition {
    let n = k.norm_sq();
    let (xi, eta) = (k.xi, k.eta);
    TangentDecomposition {
        x: (xi.bar() * nu.xi + eta.bar() * nu.eta) / n,
        y: (eta.star() * nu.xi - xi.star() * nu.eta) / n,
    }
}
