use proptest::prelude::*;
use ruledkit_core::classification::{classify_ruled, Label};
use ruledkit_core::curve::{Moved, PolynomialCurve};
use ruledkit_core::geometry::{frenet_at, invariant_jet, invariant_jet_determinant};
use ruledkit_core::reconstruction::{gallery, off_stratum_direction, truncated_polynomial_surface, JetPrescription};
use ruledkit_core::{DualNumber, DualQuaternion, DualVector, Interval, Polynomial, Quaternion, RuledCurve, Vec3};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

fn vec3() -> impl Strategy<Value = Vec3> {
    (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64).prop_map(|(x, y, z)| Vec3::new(x, y, z))
}

fn dual() -> impl Strategy<Value = DualNumber> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(a, b)| DualNumber::new(a, b))
}

fn dual_vector() -> impl Strategy<Value = DualVector> {
    (vec3(), vec3()).prop_map(|(a, b)| DualVector::new(a, b))
}

fn motion() -> impl Strategy<Value = DualQuaternion> {
    ((-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64), vec3())
        .prop_filter("nonzero rotation", |((w, x, y, z), _)| w * w + x * x + y * y + z * z > 1e-2)
        .prop_map(|((w, x, y, z), t)| {
            let q = Quaternion::new(w, x, y, z);
            DualQuaternion::from_rotation_translation(q.scale(1.0 / q.norm()), t)
        })
}

fn poly(c: [f64; 4]) -> Polynomial {
    Polynomial::new(c.to_vec())
}

/// A polynomial surface with `e(s)` bounded away from a cylinder near 0.
fn surface() -> impl Strategy<Value = PolynomialCurve> {
    let coeffs = || [-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64];
    (coeffs(), coeffs(), coeffs(), -0.3..0.3f64, -0.3..0.3f64).prop_map(|(a, b, c, p, q)| {
        PolynomialCurve::from_base_director(
            Interval::new(-0.5, 0.5),
            [poly(a), poly(b), poly(c)],
            [poly([1.0, p, 0.0, 0.0]), poly([q, 1.0, 0.0, 0.0]), poly([0.0, p, 0.5, 0.0])],
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn epsilon_squared_is_zero(a in -5.0..5.0f64) {
        let e = DualNumber::new(0.0, a);
        let sq = e * e;
        prop_assert_eq!(sq.real, 0.0);
        prop_assert_eq!(sq.dual, 0.0);
    }

    #[test]
    fn dual_multiplication_associates(a in dual(), b in dual(), c in dual()) {
        let (l, r) = ((a * b) * c, a * (b * c));
        prop_assert!(close(l.real, r.real, 1e-12) && close(l.dual, r.dual, 1e-12));
    }

    #[test]
    fn dual_lagrange_identity(a in dual_vector(), b in dual_vector()) {
        let lhs = a.cross(b).dot(a.cross(b));
        let rhs = a.dot(a) * b.dot(b) - a.dot(b) * a.dot(b);
        prop_assert!(close(lhs.real, rhs.real, 1e-10) && close(lhs.dual, rhs.dual, 1e-10));
    }

    #[test]
    fn motion_is_isometry(g in motion(), x in vec3(), y in vec3()) {
        let (gx, gy) = (g.act(x).unwrap(), g.act(y).unwrap());
        prop_assert!(close((gx - gy).norm(), (x - y).norm(), 1e-12));
        prop_assert!((gx - g.transform_point(x)).max_abs() < 1e-12);
    }

    #[test]
    fn line_action_matches_sandwich(g in motion(), a in vec3(), d in vec3()) {
        prop_assume!(d.norm() > 1e-2);
        let d = d.normalized();
        let v = DualVector::new(d, a.cross(d));
        let (l, r) = (g.transform_line(v), g.sandwich_line(v));
        prop_assert!((l.v0 - r.v0).max_abs() < 1e-12 && (l.v1 - r.v1).max_abs() < 1e-12);
        // the moved line passes through the moved point
        let gl = l.v1 - g.transform_point(a).cross(l.v0);
        prop_assert!(gl.max_abs() < 1e-12);
    }

    #[test]
    fn motion_composition(g in motion(), h in motion(), x in vec3()) {
        let lhs = (g * h).transform_point(x);
        let rhs = g.transform_point(h.transform_point(x));
        prop_assert!((lhs - rhs).max_abs() < 1e-12);
        prop_assert!((g * g.inverse()).unit_defect() < 1e-12);
    }

    #[test]
    fn lines_stay_unit(c in surface(), s in -0.5..0.5f64) {
        let l = c.line(s).unwrap().dual_vector();
        prop_assert!(l.unit_defect() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn invariants_are_motion_invariant(c in surface(), g in motion(), s in -0.4..0.4f64) {
        let a = invariant_jet(&c, s, 3).unwrap();
        let b = invariant_jet(&Moved::new(c, g), s, 3).unwrap();
        prop_assert!(a.mismatch(&b).is_none(), "{:?} vs {:?}", a, b);
    }

    #[test]
    fn both_invariant_routes_agree(c in surface(), s in -0.4..0.4f64) {
        let a = invariant_jet(&c, s, 3).unwrap();
        let b = invariant_jet_determinant(&c, s, 3).unwrap();
        prop_assert!(a.mismatch(&b).is_none());
    }

    #[test]
    fn frenet_frame_is_dual_orthonormal(c in surface(), s in -0.4..0.4f64) {
        let (f, _, _) = frenet_at(&c, s).unwrap();
        prop_assert!(f.defect() < 1e-9);
    }

    #[test]
    fn realized_jets_match(k1 in prop::collection::vec(-2.0..2.0f64, 4), t0 in prop::collection::vec(-2.0..2.0f64, 4), t1 in prop::collection::vec(-2.0..2.0f64, 4)) {
        let p = JetPrescription::new(&k1, &t0, &t1);
        let c = truncated_polynomial_surface(&p, Interval::new(-0.25, 0.25));
        let j = invariant_jet(&c, 0.0, 3).unwrap();
        prop_assert!(j.mismatch(&p.to_jet(3)).is_none());
    }

    #[test]
    fn labels_are_motion_invariant(i in 0usize..Label::RULED_DECIDABLE.len(), g in motion()) {
        let label = Label::RULED_DECIDABLE[i];
        let entry = gallery(label).unwrap();
        let j = invariant_jet(&Moved::new(entry.curve, g), 0.0, 5).unwrap();
        prop_assert_eq!(classify_ruled(&j).unwrap().label, label);
    }

    #[test]
    fn leaving_a_stratum_lowers_codimension(i in 0usize..Label::RULED_DECIDABLE.len(), sign in prop::bool::ANY, mag in 1e-3..1e-1f64) {
        let label = Label::RULED_DECIDABLE[i];
        let entry = gallery(label).unwrap();
        let (which, k) = off_stratum_direction(label).unwrap();
        let delta = if sign { mag } else { -mag };
        let moved = entry.prescription.perturbed(which, k, delta);
        let got = classify_ruled(&moved.to_jet(5)).unwrap().label;
        prop_assert!(got.codimension().unwrap() < label.codimension().unwrap(), "{} -> {}", label, got);
    }
}

#[test]
fn labels_round_trip_through_strings() {
    for label in Label::ALL {
        assert_eq!(label.as_str().parse::<Label>().unwrap(), label);
    }
    assert!("S9".parse::<Label>().is_err());
}
