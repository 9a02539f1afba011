//! Quaternionic spinors and spin-decorated horospheres in hyperbolic 4-space.
//!
//! The library follows one pipeline: a spinor `κ = (ξ, η)` gives a null
//! vector, flag data and a decorated ideal point in Minkowski space
//! ([`minkowski`]), and a decorated horosphere in the upper half-space
//! ([`horosphere`]). Lambda lengths between two such horospheres are
//! computed both by the bracket formula and geometrically ([`lambda`]), and
//! satisfy a noncommutative Ptolemy equation explained by quasi-Plücker
//! coordinates ([`quasiplucker`]). [`verify`] runs seeded randomized checks
//! of these identities.

pub mod clifford;
pub mod error;
pub mod horosphere;
pub mod lambda;
pub mod minkowski;
pub mod quasiplucker;
pub mod quaternion;
pub mod random;
pub mod spinor;
pub mod verify;

pub use clifford::{CliffordMatrix, ExtendedParavector, Mat2};
pub use error::{Error, Result};
pub use horosphere::DecoratedHorosphereUhs;
pub use lambda::{lambda_geometric, lambda_pdet, QuaternionicDistance};
pub use minkowski::{DecoratedIdealPoint, Flag, MinkowskiPoint, Multiflag};
pub use quaternion::{Paravector, Quaternion, DEFAULT_TOL};
pub use spinor::{bracket, QuatPair, Spinor};
