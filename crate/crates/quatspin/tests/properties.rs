//! Property tests. Where a closed formula is checked, the expected value is
//! computed through an independent route (real matrices, nalgebra vectors,
//! or a second construction) rather than through the function under test.

use approx::assert_relative_eq;
use nalgebra::{Matrix4, Vector3, Vector4};
use proptest::prelude::*;

use quatspin::clifford::{pdet, CliffordMatrix, ExtendedParavector, Mat2};
use quatspin::horosphere::{boundary_to_uhs, decorated_horosphere_from_spinor, hyperboloid_to_disc, phi2};
use quatspin::lambda::{
    lambda_geometric, lambda_pdet, reduce_to_standard, signed_match_residual, spinor_center, QuaternionicDistance,
};
use quatspin::minkowski::{
    act_minkowski, dphi1, flags_equal, hermitian_to_point, minkowski_inner, phi1, point_to_hermitian, Flag, MinkowskiPoint,
};
use quatspin::quasiplucker::{quasi_plucker, quasi_plucker_bracket, SpinorQuad};
use quatspin::quaternion::{paravector_sqrt, sigma_para, sigma_rotation_data, Paravector, Quaternion};
use quatspin::random::{random_clifford, rng_from_seed};
use quatspin::spinor::{bracket, decompose_tangent, inner_product, section_s, Spinor, SpinorResiduals};

fn coord() -> impl Strategy<Value = f64> {
    -3.0..3.0f64
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (coord(), coord(), coord(), coord()).prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

fn nonzero_quaternion() -> impl Strategy<Value = Quaternion> {
    quaternion().prop_filter("away from zero", |q| q.norm() > 0.1)
}

fn paravector() -> impl Strategy<Value = Paravector> {
    (coord(), coord(), coord()).prop_map(|(x, y, z)| Paravector::new(x, y, z))
}

fn unit_quaternion() -> impl Strategy<Value = Quaternion> {
    nonzero_quaternion().prop_map(|q| q.normalize().unwrap())
}

/// Spinors `(vη, η)` with finite center `v`, and occasionally `(ξ, 0)`.
fn spinor() -> impl Strategy<Value = Spinor> {
    prop_oneof![
        9 => (paravector(), nonzero_quaternion()).prop_map(|(v, eta)| Spinor::new_unchecked(v.to_quaternion() * eta, eta)),
        1 => nonzero_quaternion().prop_map(|xi| Spinor::new_unchecked(xi, Quaternion::ZERO)),
    ]
}

/// Spinors `(vη, η)` with both components bounded away from zero.
fn finite_spinor() -> impl Strategy<Value = Spinor> {
    (paravector().prop_filter("away from zero", |v| v.norm() > 0.1), nonzero_quaternion())
        .prop_map(|(v, eta)| Spinor::new_unchecked(v.to_quaternion() * eta, eta))
}

fn clifford() -> impl Strategy<Value = CliffordMatrix> {
    any::<u64>().prop_map(|s| random_clifford(&mut rng_from_seed(s), 4))
}

/// Left multiplication by `p` as a real 4×4 matrix in the basis `1, i, j, k`.
fn left_matrix(p: Quaternion) -> Matrix4<f64> {
    let [a, b, c, d] = p.to_array();
    Matrix4::new(a, -b, -c, -d, b, a, -d, c, c, d, a, -b, d, -c, b, a)
}

fn qvec(q: Quaternion) -> Vector4<f64> {
    Vector4::from(q.to_array())
}

fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_matches_real_matrix_oracle(p in quaternion(), q in quaternion()) {
        let expected = left_matrix(p) * qvec(q);
        prop_assert!((qvec(p * q) - expected).norm() <= 1e-12 * (1.0 + p.norm() * q.norm()));
    }

    #[test]
    fn conjugation_relations(q in quaternion(), p in quaternion()) {
        prop_assert_eq!(q.bar(), q.prime().star());
        prop_assert!((q + q.bar() - q.star() - q.prime()).is_zero());
        prop_assert!(close((p * q).prime(), p.prime() * q.prime(), 1e-12));
        prop_assert!(close((p * q).bar(), q.bar() * p.bar(), 1e-12));
        prop_assert!(close((p * q).star(), q.star() * p.star(), 1e-12));
    }

    #[test]
    fn inverse_is_two_sided(q in nonzero_quaternion()) {
        let inv = q.inverse().unwrap();
        prop_assert!(close(q * inv, Quaternion::ONE, 1e-12));
        prop_assert!(close(inv * q, Quaternion::ONE, 1e-12));
    }

    #[test]
    fn dot_and_cross_match_euclidean_oracle(v in paravector(), w in paravector()) {
        let (a, b) = (Vector3::new(v.x, v.y, v.z), Vector3::new(w.x, w.y, w.z));
        prop_assert!((v.dot(w) - a.dot(&b)).abs() <= 1e-12 * (1.0 + a.norm() * b.norm()));
        let c = a.cross(&b);
        prop_assert!((v.cross(w).to_vector3() - c).norm() <= 1e-12 * (1.0 + a.norm() * b.norm()));
        // v w̄ = dot - cross·k
        let reassembled = Quaternion::real(v.dot(w)) - v.cross(w).to_quaternion() * Quaternion::K;
        prop_assert!(close(v.to_quaternion() * w.to_quaternion().bar(), reassembled, 1e-12));
    }

    #[test]
    fn sigma_is_a_conformal_homomorphism(q1 in nonzero_quaternion(), q2 in nonzero_quaternion(), v in paravector(), w in paravector()) {
        let s = q1.norm_sq();
        let (sv, sw) = (sigma_para(q1, v), sigma_para(q1, w));
        prop_assert!((sv.dot(sw) - s * s * v.dot(w)).abs() <= 1e-10 * s * s * (1.0 + v.norm() * w.norm()));
        prop_assert_eq!(sigma_para(-q1, v), sigma_para(q1, v));
        let composed = sigma_para(q1, sigma_para(q2, v));
        let direct = sigma_para(q1 * q2, v);
        prop_assert!((composed - direct).norm() <= 1e-10 * (1.0 + direct.norm()));
    }

    #[test]
    fn sigma_rotation_data_reconstructs(q in nonzero_quaternion()) {
        let rot = sigma_rotation_data(q).unwrap();
        for e in [Paravector::ONE, Paravector::I, Paravector::J] {
            let expected = sigma_para(q, e);
            prop_assert!((rot.apply(e) - expected).norm() <= 1e-10 * expected.norm().max(1e-300));
        }
    }

    #[test]
    fn paravector_sqrt_squares_back(v in paravector()) {
        let r = paravector_sqrt(v).to_quaternion();
        prop_assert!(close(r * r, v.to_quaternion(), 1e-10));
    }

    #[test]
    fn spinor_space_is_closed_under_right_multiplication(k in spinor(), x in nonzero_quaternion()) {
        let kx = k.right_mul(x).unwrap();
        let r = SpinorResiduals::of(kx.xi(), kx.eta());
        prop_assert!(r.first_failure(1e-10 * (1.0 + kx.norm_sq())).is_none());
        let c = k.complementary();
        prop_assert!(SpinorResiduals::of(c.xi(), c.eta()).first_failure(1e-10 * (1.0 + c.norm_sq())).is_none());
    }

    #[test]
    fn bracket_is_antisymmetric_under_star(k1 in spinor(), k2 in spinor()) {
        prop_assert!((bracket(&k1, &k2) + bracket(&k2, &k1).star()).norm() <= 1e-12 * k1.norm() * k2.norm());
    }

    #[test]
    fn sections_scale_inner_products(k in spinor(), v in paravector(), w in paravector()) {
        let ip = inner_product(&section_s(v, &k), &section_s(w, &k));
        prop_assert!((ip - k.norm_sq() * v.dot(w)).abs() <= 1e-10 * k.norm_sq() * (1.0 + v.norm() * w.norm()));
    }

    #[test]
    fn tangent_decomposition_reconstructs(k in spinor(), x in quaternion(), y in quaternion()) {
        let nu = k.pair() * x + k.complementary().pair() * y;
        let d = decompose_tangent(&k, &nu);
        prop_assert!(close(d.x, x, 1e-10) && close(d.y, y, 1e-10));
        prop_assert!((d.reconstruct(&k) - nu).norm() <= 1e-10 * (1.0 + nu.norm()));
    }

    #[test]
    fn clifford_inverse_and_pdet(a in clifford(), k1 in spinor(), k2 in spinor()) {
        let m = a.matrix();
        let scale = 1.0 + m.norm().powi(2);
        prop_assert!((pdet(&m) - Quaternion::ONE).norm() <= 1e-10 * scale);
        prop_assert!(((a * a.inverse()).matrix() - Mat2::IDENTITY).norm() <= 1e-10 * scale);
        let (ak1, ak2) = (a.act_spinor(&k1).unwrap(), a.act_spinor(&k2).unwrap());
        let s = (k1.norm() * k2.norm()).max(ak1.norm() * ak2.norm());
        prop_assert!((bracket(&ak1, &ak2) - bracket(&k1, &k2)).norm() <= 1e-10 * s);
    }

    #[test]
    fn mobius_action_moves_centers(a in clifford(), k in spinor()) {
        let ak = a.act_spinor(&k).unwrap();
        let moved = a.mobius_apply(spinor_center(&k, 1e-12), 1e-12);
        let direct = spinor_center(&ak, 1e-12);
        // Compare on the light cone, where ∞ is an ordinary point.
        let to_disc = |z: ExtendedParavector| match z {
            ExtendedParavector::Infinity => Vector4::new(0.0, 0.0, 0.0, 1.0),
            ExtendedParavector::Finite(v) => {
                let n = v.norm_sq();
                Vector4::new(2.0 * v.x, 2.0 * v.y, 2.0 * v.z, n - 1.0) / (n + 1.0)
            }
        };
        prop_assert!((to_disc(moved) - to_disc(direct)).norm() <= 1e-8 * (1.0 + a.matrix().norm().powi(2)));
    }

    #[test]
    fn phi1_is_null_future_and_equivariant(a in clifford(), k in spinor()) {
        let p = phi1(&k);
        prop_assert!(p.is_future());
        prop_assert!(minkowski_inner(&p, &p).abs() <= 1e-12 * p.t * p.t);
        let ak = a.act_spinor(&k).unwrap();
        let lhs = phi1(&ak);
        let rhs = act_minkowski(&a, &p);
        prop_assert!((lhs - rhs).euclidean_norm() <= 1e-10 * lhs.t.max(1.0) * (1.0 + a.matrix().norm().powi(2)));
    }

    #[test]
    fn phi1_is_constant_on_unit_fibres(k in spinor(), alpha in unit_quaternion()) {
        let ka = k.right_mul(alpha).unwrap();
        prop_assert!((phi1(&ka) - phi1(&k)).euclidean_norm() <= 1e-12 * k.norm_sq());
    }

    #[test]
    fn hermitian_roundtrip_and_determinant(t in coord(), w in coord(), x in coord(), y in coord(), z in coord()) {
        let p = MinkowskiPoint::new(t, w, x, y, z);
        let s = point_to_hermitian(&p);
        prop_assert!((hermitian_to_point(&s) - p).euclidean_norm() <= 1e-14 * (1.0 + p.euclidean_norm()));
        prop_assert!((4.0 * s.det() - minkowski_inner(&p, &p)).abs() <= 1e-12 * (1.0 + p.euclidean_norm().powi(2)));
        prop_assert!((s.trace() - p.t).abs() <= 1e-15 * (1.0 + p.t.abs()));
    }

    #[test]
    fn minkowski_action_is_an_isometry(a in clifford(), p in (coord(), coord(), coord(), coord(), coord()), q in (coord(), coord(), coord(), coord(), coord())) {
        let p = MinkowskiPoint::new(p.0, p.1, p.2, p.3, p.4);
        let q = MinkowskiPoint::new(q.0, q.1, q.2, q.3, q.4);
        let (ap, aq) = (act_minkowski(&a, &p), act_minkowski(&a, &q));
        let scale = (1.0 + ap.euclidean_norm() * aq.euclidean_norm()).max(1.0 + p.euclidean_norm() * q.euclidean_norm());
        prop_assert!((minkowski_inner(&ap, &aq) - minkowski_inner(&p, &q)).abs() <= 1e-10 * scale);
    }

    #[test]
    fn flags_ignore_kernel_and_positive_scaling(k in spinor(), x in quaternion(), b in 0.1..3.0f64, v in paravector()) {
        prop_assume!(v.norm() > 0.1);
        let sv = section_s(v, &k);
        let nu = k.pair() * x + sv * b;
        let p = phi1(&k);
        let f1 = Flag::new(p, dphi1(&k, &nu, 1e-9).unwrap());
        let f2 = Flag::new(p, dphi1(&k, &sv, 1e-9).unwrap());
        prop_assert!(flags_equal(&f1, &f2, 1e-9));
        let f3 = Flag::new(p, dphi1(&k, &(sv * -1.0), 1e-9).unwrap());
        prop_assert!(!flags_equal(&f1, &f3, 1e-9));
    }

    #[test]
    fn horosphere_center_matches_light_cone(k in spinor()) {
        let h = decorated_horosphere_from_spinor(&k, 1e-12);
        let from_cone = boundary_to_uhs(&phi1(&k), 1e-12);
        prop_assert!(h.center.approx_eq(&from_cone, 1e-9));
        prop_assert!((h.dir_i.dot(h.dir_j)).abs() <= 1e-12);
        prop_assert!((h.dir_i.norm() - 1.0).abs() <= 1e-12 && (h.dir_j.norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn horosphere_points_map_into_the_disc(k in spinor(), s in paravector()) {
        // With e = ∂T and T = p_T: x₀ = e/T + (1 - 1/T²)p/2 has ⟨x₀, x₀⟩ = ⟨x₀, p⟩ = 1.
        // Adding u ⟂ e, p and then -⟨u, u⟩p/2 stays on the horosphere.
        let p = phi1(&k);
        let h = phi2(&p, 1e-9).unwrap();
        let t = p.t;
        let x0 = MinkowskiPoint::DT * (1.0 / t) + p * ((1.0 - 1.0 / (t * t)) / 2.0);
        let sp = p.spatial();
        let raw = Vector4::new(s.x, s.y, s.z, 0.0);
        let u = MinkowskiPoint::from_spatial(0.0, &(raw - sp * (raw.dot(&sp) / sp.norm_squared())));
        let x = x0 + u + p * (-minkowski_inner(&u, &u) / 2.0);
        prop_assert!(h.contains(&x, 1e-9));
        let d = hyperboloid_to_disc(&x, 1e-9).unwrap();
        prop_assert!(d.iter().map(|c| c * c).sum::<f64>() < 1.0);
    }

    #[test]
    fn geometric_lambda_matches_pdet(k1 in spinor(), k2 in spinor()) {
        prop_assume!(lambda_pdet(&k1, &k2).norm() > 1e-3 * k1.norm() * k2.norm());
        let g = lambda_geometric(&k1, &k2).unwrap();
        prop_assert!(signed_match_residual(lambda_pdet(&k1, &k2), g) <= 1e-6);
        let red = reduce_to_standard(&k1, &k2).unwrap();
        prop_assert!(red.k1.eta().norm() <= 1e-9 * red.k1.norm());
        prop_assert!(red.k2.xi().norm() <= 1e-9 * red.k2.norm());
    }

    #[test]
    fn quaternionic_distance_roundtrip(q in nonzero_quaternion()) {
        let d = QuaternionicDistance::from_lambda(q).unwrap();
        assert_relative_eq!(d.axis.norm(), 1.0, epsilon = 1e-12);
        prop_assert!(close(d.to_lambda(), q, 1e-12));
        let flipped = QuaternionicDistance { rho: d.rho, theta: -d.theta, axis: -d.axis };
        prop_assert!(close(flipped.to_lambda(), q, 1e-12));
    }

    #[test]
    fn quasi_plucker_rows_agree(ks in prop::array::uniform4(finite_spinor())) {
        for (a, ka) in ks.iter().enumerate() {
            for kb in &ks[a + 1..] {
                prop_assume!(bracket(ka, kb).norm() > 1e-2 * ka.norm() * kb.norm());
            }
        }
        let quad = SpinorQuad::new(ks);
        for (l, m, n) in [(0, 1, 2), (1, 3, 0), (3, 2, 1), (2, 0, 3)] {
            let p1 = quasi_plucker(&quad, l, m, n, 1).unwrap();
            let p2 = quasi_plucker(&quad, l, m, n, 2).unwrap();
            prop_assert!(close(p1, p2, 1e-9));
            prop_assert!(close(p1, quasi_plucker_bracket(&quad, l, m, n).unwrap(), 1e-9));
        }
    }
}
