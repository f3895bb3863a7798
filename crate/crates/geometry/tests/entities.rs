use algebra_core::{parse_multivector, Metric, Multivector, Side, Signature};
use duality_join::join;
use geometry::{
    classify, entity_json, hyperplane, is_simple, line_from_points, meet, normalize, orientation,
    plane_from_points, point, polar, weight, Entity, GeometryError, Kind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mv(n: u8, s: &str) -> Multivector {
    parse_multivector(s, n).unwrap()
}

fn assert_close(got: &Multivector, expected: &Multivector, tol: f64, what: &str) {
    assert!(
        got.approx_eq(expected, tol),
        "{what}: got {got:?}, expected {expected:?}"
    );
}

fn random_point(n: u8, rng: &mut ChaCha8Rng) -> Entity {
    let coords: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
    point(n, &coords, 1.0, rng.gen_range(0.5..2.0)).unwrap()
}

#[test]
fn point_construction_matches_the_summaries() {
    let p = point(2, &[0.5, 1.0], 1.0, 1.0).unwrap();
    assert_close(p.mv(), &mv(2, "e12+0.5e20+e01"), 1e-12, "plane point");
    assert_eq!(p.kind(), Kind::FinitePoint);
    assert_eq!(p.point_coords().unwrap(), vec![0.5, 1.0]);

    let origin = point(3, &[0.0, 0.0, 0.0], 1.0, 1.0).unwrap();
    assert_close(origin.mv(), &mv(3, "e123"), 1e-12, "space origin");

    let p3 = point(3, &[2.0, 1.0, 0.0], 1.0, 1.0).unwrap();
    assert_close(p3.mv(), &mv(3, "e123+2e320+e130"), 1e-12, "space point");

    let p4 = point(4, &[0.5, 1.5, 2.0, -0.5], 1.0, 1.0).unwrap();
    assert_close(
        p4.mv(),
        &mv(4, "e1234+0.5e2340+1.5e3140+2e1240-0.5e3210"),
        1e-12,
        "four-space point",
    );
    assert_eq!(p4.point_coords().unwrap(), vec![0.5, 1.5, 2.0, -0.5]);

    let heavy = point(4, &[0.5, 1.5, 2.0, -0.5], 1.0, 2.0).unwrap();
    assert_close(
        heavy.mv(),
        &mv(4, "2e1234+e2340+3e3140+4e1240-e3210"),
        1e-12,
        "weight two point",
    );

    let p1 = point(1, &[3.0], 1.0, 1.0).unwrap();
    assert_close(p1.mv(), &mv(1, "-3e0+e1"), 1e-12, "line point");
    assert_eq!(p1.point_coords().unwrap(), vec![3.0]);
    assert_eq!(p1.kind(), Kind::FinitePoint);

    let negative = point(2, &[0.5, 1.0], -1.0, 2.0).unwrap();
    assert_close(
        negative.mv(),
        &point(2, &[0.5, 1.0], 1.0, 1.0).unwrap().mv().scaled(-2.0),
        1e-12,
        "clockwise point",
    );

    assert_eq!(
        point(2, &[0.0, 0.0], 1.0, 0.0),
        Err(GeometryError::NonPositiveWeight)
    );
}

#[test]
fn hyperplane_construction_and_classification() {
    let line = hyperplane(2, 1.0, &[-1.0, -3.0]).unwrap();
    assert_close(line.mv(), &mv(2, "e0-e1-3e2"), 1e-12, "plane line");
    assert_eq!(line.kind(), Kind::FiniteHyperplane);

    let h4 = hyperplane(4, 3.0, &[-1.0, 0.0, 0.0, 2.0]).unwrap();
    assert_close(h4.mv(), &mv(4, "3e0-e1+2e4"), 1e-12, "four-space hyperplane");
    assert_eq!(h4.kind(), Kind::FiniteHyperplane);

    let infinity = hyperplane(2, 1.0, &[0.0, 0.0]).unwrap();
    assert_close(infinity.mv(), &mv(2, "e0"), 1e-12, "line at infinity");
    assert_eq!(infinity.kind(), Kind::HyperplaneAtInfinity);

    assert_eq!(
        hyperplane(3, 0.0, &[0.0, 0.0, 0.0]),
        Err(GeometryError::ZeroHyperplane)
    );
}

#[test]
fn classification_covers_every_kind() {
    assert_eq!(classify(&mv(2, "3")).unwrap(), Kind::WholeSpace);
    assert_eq!(classify(&mv(2, "e012")).unwrap(), Kind::OriginScalar);
    assert_eq!(classify(&mv(2, "e12+0.5e20+e01")).unwrap(), Kind::FinitePoint);
    assert_eq!(classify(&mv(2, "e01+2e02")).unwrap(), Kind::PointAtInfinity);
    assert_eq!(classify(&mv(3, "e12+e10")).unwrap(), Kind::FiniteLine);
    assert_eq!(classify(&mv(3, "e01")).unwrap(), Kind::LineAtInfinity);
    assert_eq!(classify(&mv(4, "e23")).unwrap(), Kind::FinitePlane);
    assert_eq!(classify(&mv(4, "e01")).unwrap(), Kind::PlaneAtInfinity);
    assert_eq!(classify(&mv(4, "e123+e230")).unwrap(), Kind::FiniteLine);
    assert_eq!(classify(&mv(4, "e012")).unwrap(), Kind::LineAtInfinity);
    assert_eq!(classify(&mv(3, "e1")).unwrap(), Kind::FiniteHyperplane);
    assert_eq!(classify(&mv(3, "2e0")).unwrap(), Kind::HyperplaneAtInfinity);
    assert_eq!(classify(&mv(1, "-3e0+e1")).unwrap(), Kind::FinitePoint);
    assert_eq!(classify(&mv(1, "e0")).unwrap(), Kind::PointAtInfinity);

    assert_eq!(
        classify(&Multivector::zero(2, Side::Dual)),
        Err(GeometryError::Empty)
    );
    assert_eq!(classify(&mv(2, "1+e1")), Err(GeometryError::MixedGrade));
    assert_eq!(classify(&mv(3, "e01+e23")), Err(GeometryError::NotSimple));
}

#[test]
fn joins_of_points_build_flats() {
    let a = point(2, &[0.5, 1.0], 1.0, 1.0).unwrap();
    let b = point(2, &[2.0, 2.0], 1.0, 1.0).unwrap();
    let line = line_from_points(&a, &b).unwrap();
    assert_close(line.mv(), &mv(2, "e0+e1-1.5e2"), 1e-12, "line through points");
    assert_eq!(line.kind(), Kind::FiniteHyperplane);

    let p = point(3, &[0.0, 0.0, 0.0], 1.0, 1.0).unwrap();
    let q = point(3, &[1.0, 0.0, 0.0], 1.0, 1.0).unwrap();
    let r = point(3, &[0.0, 1.0, 0.0], 1.0, 1.0).unwrap();
    let plane = plane_from_points(&p, &q, &r).unwrap();
    assert_close(plane.mv(), &mv(3, "-e3"), 1e-12, "plane z=0, downward");

    let line3 = line_from_points(&q, &p).unwrap();
    assert_eq!(line3.kind(), Kind::FiniteLine);

    assert_eq!(line_from_points(&p, &p), Err(GeometryError::DegenerateJoin));
    let doubled = point(3, &[1.0, 0.0, 0.0], 1.0, 2.0).unwrap();
    assert_eq!(
        line_from_points(&q, &doubled),
        Err(GeometryError::DegenerateJoin)
    );

    let h = hyperplane(3, 1.0, &[1.0, 1.0, 1.0]).unwrap();
    assert_eq!(line_from_points(&h, &p), Err(GeometryError::NotAPoint));
}

#[test]
fn hyperplane_through_four_points_contains_them() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..25 {
        let points: Vec<_> = (0..4).map(|_| random_point(4, &mut rng)).collect();
        let h = geometry::hyperplane_from_points(&points[0], &points[1], &points[2], &points[3])
            .unwrap();
        assert_eq!(h.kind(), Kind::FiniteHyperplane);
        for p in &points {
            let incidence = join(h.mv(), p.mv()).unwrap();
            assert!(
                incidence.max_abs() <= 1e-9 * p.mv().max_abs().max(1.0),
                "point off its own hyperplane"
            );
        }
    }
}

#[test]
fn meets_intersect_flats() {
    let e1 = hyperplane(3, 0.0, &[1.0, 0.0, 0.0]).unwrap();
    let e2 = hyperplane(3, 0.0, &[0.0, 1.0, 0.0]).unwrap();
    let e3 = hyperplane(3, 0.0, &[0.0, 0.0, 1.0]).unwrap();
    let origin = meet(&[&e1, &e2, &e3]).unwrap().unwrap();
    assert_close(origin.mv(), &mv(3, "e123"), 1e-12, "origin, right-handed");
    assert_eq!(origin.kind(), Kind::FinitePoint);

    let x_axis = Entity::from_multivector(mv(3, "e23")).unwrap();
    assert_eq!(x_axis.kind(), Kind::FiniteLine);
    let hit = meet(&[&e1, &x_axis]).unwrap().unwrap();
    assert_close(hit.mv(), &mv(3, "e123"), 1e-12, "x-axis meets x=0");

    let a = hyperplane(3, 1.0, &[1.0, 0.0, 0.0]).unwrap();
    let b = hyperplane(3, 2.0, &[1.0, 0.0, 0.0]).unwrap();
    let parallel = meet(&[&a, &b]).unwrap().unwrap();
    assert_eq!(parallel.kind(), Kind::LineAtInfinity);

    assert!(meet(&[&a, &a]).unwrap().is_none());
}

#[test]
fn simplicity_tests() {
    assert!(!is_simple(&mv(3, "e01+e23")).unwrap());
    assert!(is_simple(&mv(3, "e0+2e2")).unwrap());
    assert!(is_simple(&mv(2, "e12+3e20+e01")).unwrap());
    assert!(is_simple(&mv(4, "2e01234")).unwrap());
    assert_eq!(is_simple(&mv(3, "e0+e12")), Err(GeometryError::MixedGrade));

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    // Plucker-constrained coefficient draws are simple; unconstrained grade-2
    // draws in n=3 almost never are.
    for _ in 0..50 {
        let (p10, p20, p23, p31): (f64, f64, f64, f64) = (
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let p12 = rng.gen_range(0.5..2.0);
        let p30 = -(p10 * p23 + p20 * p31) / p12;
        let line = geometry_label_mv(
            3,
            &[
                ("10", p10),
                ("20", p20),
                ("30", p30),
                ("23", p23),
                ("31", p31),
                ("12", p12),
            ],
        );
        assert!(is_simple(&line).unwrap(), "Plucker condition holds");

        let free = geometry_label_mv(
            3,
            &[
                ("10", rng.gen_range(1.0..2.0)),
                ("20", rng.gen_range(1.0..2.0)),
                ("30", rng.gen_range(1.0..2.0)),
                ("23", rng.gen_range(1.0..2.0)),
                ("31", rng.gen_range(1.0..2.0)),
                ("12", rng.gen_range(-2.0..-1.0)),
            ],
        );
        let plucker = label(&free, "10") * label(&free, "23")
            + label(&free, "20") * label(&free, "31")
            + label(&free, "30") * label(&free, "12");
        if plucker.abs() > 1e-6 {
            assert!(!is_simple(&free).unwrap(), "Plucker condition violated");
        }
    }

    // Wedges of vectors are simple by construction; in n=4 this covers both
    // the bivector and trivector tests.
    for k in 2..=3u8 {
        for _ in 0..50 {
            let mut blade = Multivector::scalar(4, Side::Dual, 1.0);
            for _ in 0..k {
                let mut v = Multivector::zero(4, Side::Dual);
                for i in 0..=4 {
                    v.set(1 << i, rng.gen_range(-1.0..1.0));
                }
                blade = algebra_core::outer(&blade, &v).unwrap();
            }
            assert!(is_simple(&blade).unwrap(), "wedge of vectors, grade {k}");
        }
    }
    // A generic trivector in n=4 is not simple.
    let twisted = mv(4, "e123+e340");
    assert!(!is_simple(&twisted).unwrap());
}

fn geometry_label_mv(n: u8, terms: &[(&str, f64)]) -> Multivector {
    let mut m = Multivector::zero(n, Side::Dual);
    for (l, v) in terms {
        let (mask, sign) = algebra_core::parse_blade_label(l, n).unwrap();
        m.set(mask, sign * v);
    }
    m
}

fn label(m: &Multivector, l: &str) -> f64 {
    let (mask, sign) = algebra_core::parse_blade_label(l, m.n()).unwrap();
    sign * m.coeff(mask)
}

#[test]
fn trivector_self_join_matches_the_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let mut lam = Multivector::zero(4, Side::Dual);
        for mask in 0..32u16 {
            if mask.count_ones() == 3 {
                lam.set(mask, rng.gen_range(-2.0..2.0));
            }
        }
        let s = |l: &str| label(&lam, l);
        let expected = geometry_label_mv(
            4,
            &[
                ("0", -2.0 * (s("410") * s("230") + s("420") * s("310") + s("430") * s("120"))),
                ("1", -2.0 * (s("120") * s("314") - s("124") * s("310") - s("410") * s("321"))),
                ("2", -2.0 * (s("124") * s("230") - s("120") * s("234") - s("420") * s("321"))),
                ("3", -2.0 * (s("234") * s("310") - s("230") * s("314") - s("430") * s("321"))),
                ("4", -2.0 * (s("410") * s("234") + s("420") * s("314") + s("430") * s("124"))),
            ],
        );
        assert_close(
            &join(&lam, &lam).unwrap(),
            &expected,
            1e-10,
            "trivector self-join",
        );
    }
}

#[test]
fn plucker_identity_in_space() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let i = Multivector::pseudoscalar(3, Side::Dual);
    for _ in 0..100 {
        let mut lam = Multivector::zero(3, Side::Dual);
        for mask in 0..16u16 {
            if mask.count_ones() == 2 {
                lam.set(mask, rng.gen_range(-2.0..2.0));
            }
        }
        let plucker = label(&lam, "10") * label(&lam, "23")
            + label(&lam, "20") * label(&lam, "31")
            + label(&lam, "30") * label(&lam, "12");
        assert_close(
            &algebra_core::outer(&lam, &lam).unwrap(),
            &i.scaled(-2.0 * plucker),
            1e-10,
            "L^L = -2 (Plucker) I",
        );
    }
}

#[test]
fn orientation_reports() {
    // A finite plane line: top-down (a, b), bottom-up (-b, a).
    let line = hyperplane(2, 0.5, &[2.0, -1.0]).unwrap();
    let report = orientation(&line).unwrap();
    assert_close(
        &report.top_down,
        &mv(2, "2E1-E2"),
        1e-12,
        "line top-down",
    );
    assert_close(&report.bottom_up, &mv(2, "E1+2E2"), 1e-12, "line bottom-up");
    assert_eq!(report.sign, 1.0);

    // A point at infinity shares the same orientation pair.
    let at_infinity = Entity::from_multivector(mv(2, "3e01+e02")).unwrap();
    // e0^(a e1 + b e2) = b e02 + a e01 canonically, so a=3, b=1.
    let report = orientation(&at_infinity).unwrap();
    assert_close(&report.top_down, &mv(2, "3E1+E2"), 1e-12, "N top-down");
    assert_close(&report.bottom_up, &mv(2, "-E1+3E2"), 1e-12, "N bottom-up");

    // Finite points carry their orientation sign from the weight part.
    let cw = point(2, &[1.0, 2.0], -1.0, 2.0).unwrap();
    assert_eq!(orientation(&cw).unwrap().sign, -1.0);
    let ccw = point(3, &[1.0, 2.0, 0.0], 1.0, 1.0).unwrap();
    assert_eq!(orientation(&ccw).unwrap().sign, 1.0);

    // The line at infinity is oriented toward or away from the origin by d.
    let toward = hyperplane(2, 2.0, &[0.0, 0.0]).unwrap();
    assert_eq!(orientation(&toward).unwrap().sign, 1.0);
    let away = hyperplane(2, -2.0, &[0.0, 0.0]).unwrap();
    assert_eq!(orientation(&away).unwrap().sign, -1.0);

    // Space line: top-down Id of the spatial part, bottom-up the negated
    // direction components.
    let p = point(3, &[2.0, 1.0, 0.0], 1.0, 1.0).unwrap();
    let q = point(3, &[2.0, 1.0, 5.0], 1.0, 1.0).unwrap();
    let line = line_from_points(&p, &q).unwrap();
    let report = orientation(&line).unwrap();
    let p23 = label(line.mv(), "23");
    let p31 = label(line.mv(), "31");
    let p12 = label(line.mv(), "12");
    assert_close(
        &report.top_down,
        &geometry_target_mv(3, &[("23", p23), ("31", p31), ("12", p12)]),
        1e-12,
        "space line top-down",
    );
    assert_close(
        &report.bottom_up,
        &geometry_target_mv(3, &[("1", -p23), ("2", -p31), ("3", -p12)]),
        1e-12,
        "space line bottom-up",
    );

    // Four-space plane: the printed perpendicular and parallel bivectors.
    let sigma = Entity::from_multivector(mv(4, "e12+e10+2e20")).unwrap();
    assert_eq!(sigma.kind(), Kind::FinitePlane);
    let report = orientation(&sigma).unwrap();
    let p = |l: &str| label(sigma.mv(), l);
    assert_close(
        &report.top_down,
        &geometry_target_mv(
            4,
            &[
                ("23", p("23")),
                ("31", p("31")),
                ("12", p("12")),
                ("41", p("41")),
                ("42", p("42")),
                ("43", p("43")),
            ],
        ),
        1e-12,
        "four-space plane top-down",
    );
    assert_close(
        &report.bottom_up,
        &geometry_target_mv(
            4,
            &[
                ("23", p("41")),
                ("31", p("42")),
                ("12", p("43")),
                ("41", p("23")),
                ("42", p("31")),
                ("43", p("12")),
            ],
        ),
        1e-12,
        "four-space plane bottom-up",
    );

    // Four-space line: top-down from the direction trivector, bottom-up its
    // negated vector counterpart.
    let a = point(4, &[0.0, 1.0, 0.0, 2.0], 1.0, 1.0).unwrap();
    let b = point(4, &[1.0, 1.0, -1.0, 0.5], 1.0, 1.0).unwrap();
    let line4 = line_from_points(&a, &b).unwrap();
    let report = orientation(&line4).unwrap();
    let s = |l: &str| label(line4.mv(), l);
    assert_close(
        &report.top_down,
        &geometry_target_mv(
            4,
            &[
                ("234", s("234")),
                ("314", s("314")),
                ("124", s("124")),
                ("321", s("321")),
            ],
        ),
        1e-12,
        "four-space line top-down",
    );
    assert_close(
        &report.bottom_up,
        &geometry_target_mv(
            4,
            &[
                ("1", -s("234")),
                ("2", -s("314")),
                ("3", -s("124")),
                ("4", -s("321")),
            ],
        ),
        1e-12,
        "four-space line bottom-up",
    );

    // Both reported blades always avoid index 0.
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 1..=4u8 {
        for _ in 0..30 {
            let e = random_point(n, &mut rng);
            let report = orientation(&e).unwrap();
            for blade in [&report.top_down, &report.bottom_up] {
                for (mask, &c) in blade.coeffs().iter().enumerate() {
                    assert!(mask & 1 == 0 || c == 0.0, "index 0 leaked into a report");
                }
            }
        }
    }
}

fn geometry_target_mv(n: u8, terms: &[(&str, f64)]) -> Multivector {
    let mut m = Multivector::zero(n, Side::Target);
    for (l, v) in terms {
        let (mask, sign) = algebra_core::parse_blade_label(l, n).unwrap();
        m.set(mask, sign * v);
    }
    m
}

#[test]
fn weights_compare_blades_of_equal_attitude() {
    let reference = Entity::from_multivector(mv(2, "e0")).unwrap();
    let doubled = Entity::from_multivector(mv(2, "2e0")).unwrap();
    assert_eq!(weight(&doubled, &reference).unwrap(), 2.0);

    let line = Entity::from_multivector(mv(3, "e12+e10")).unwrap();
    let tripled = Entity::from_multivector(line.mv().scaled(-3.0)).unwrap();
    assert!((weight(&tripled, &line).unwrap() + 3.0).abs() < 1e-12);

    let other = Entity::from_multivector(mv(2, "e1")).unwrap();
    assert_eq!(
        weight(&other, &reference),
        Err(GeometryError::MismatchedAttitude)
    );
    let skew = Entity::from_multivector(mv(3, "e12")).unwrap();
    assert_eq!(weight(&skew, &line), Err(GeometryError::MismatchedAttitude));
}

#[test]
fn normalization_under_the_euclidean_metric() {
    let sig = Signature::euclidean(2);
    let line = Entity::from_multivector(mv(2, "2e0-2e1-e2")).unwrap();
    let unit = normalize(&line, &sig).unwrap();
    assert_close(
        unit.mv(),
        &line.mv().scaled(1.0 / 5.0f64.sqrt()),
        1e-12,
        "normalized line",
    );
    let again = normalize(&unit, &sig).unwrap();
    assert_close(again.mv(), unit.mv(), 1e-12, "already normalized");

    let at_infinity = Entity::from_multivector(mv(2, "e01+2e02")).unwrap();
    assert_eq!(normalize(&at_infinity, &sig), Err(GeometryError::ZeroNorm));
}

#[test]
fn polar_elements() {
    let sig = Signature::euclidean(2);
    let a = Entity::from_multivector(mv(2, "2e0-2e1-e2")).unwrap();
    let polar_point = polar(&a, &sig).unwrap().unwrap();
    assert_close(polar_point.mv(), &mv(2, "-2e20-e01"), 1e-12, "polar point");
    assert_eq!(polar_point.kind(), Kind::PointAtInfinity);

    let p = point(2, &[0.7, -0.3], 1.0, 2.0).unwrap();
    let w = label(p.mv(), "12");
    let polar_line = polar(&p, &sig).unwrap().unwrap();
    assert_close(
        polar_line.mv(),
        &mv(2, "e0").scaled(-w),
        1e-12,
        "polar of a point is the weighted line at infinity",
    );

    let n = Entity::from_multivector(mv(2, "e01+2e02")).unwrap();
    assert!(polar(&n, &sig).unwrap().is_none());

    // In the elliptic metric the polar of the same blade is nonzero.
    let elliptic = Signature::new(2, Metric::Elliptic).unwrap();
    assert!(polar(&n, &elliptic).unwrap().is_some());
}

#[test]
fn dual_hyperplane_incidence() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for n in 2..=4u8 {
        for _ in 0..50 {
            let coords: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let p = point(n, &coords, 1.0, 1.0).unwrap();
            let normal: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let d = -normal.iter().zip(&coords).map(|(a, x)| a * x).sum::<f64>();
            let h = hyperplane(n, d, &normal).unwrap();
            let incidence = join(h.mv(), p.mv()).unwrap();
            assert!(
                incidence.max_abs() <= 1e-9 * h.mv().max_abs().max(1.0),
                "hyperplane through the point must be incident"
            );
        }
    }
}

#[test]
fn json_rendering() {
    let sig = Signature::euclidean(2);
    let p = point(2, &[0.5, 1.0], 1.0, 2.0).unwrap();
    let value = entity_json(&p, Some(&sig));
    assert_eq!(value["kind"], "FinitePoint");
    assert_eq!(value["n"], 2);
    assert_eq!(value["coeffs"]["e12"], 2.0);
    assert_eq!(value["coeffs"]["e20"], 1.0);
    assert_eq!(value["center"][0], 0.5);
    assert_eq!(value["center"][1], 1.0);
    assert!((value["norm"].as_f64().unwrap() - 2.0).abs() < 1e-12);

    let line = hyperplane(2, 1.0, &[-1.0, -3.0]).unwrap();
    let value = entity_json(&line, None);
    assert_eq!(value["kind"], "FiniteHyperplane");
    assert!(value.get("norm").is_none());
    assert!((value["center"][0].as_f64().unwrap() - 0.1).abs() < 1e-12);
    assert!(value.get("top_down").is_some());
    assert!(value.get("bottom_up").is_some());
}
