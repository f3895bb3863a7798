use algebra_core::{geometric, inner, inverse, parse_multivector, Multivector, Signature};
use euclid_ops::{angle, distance, project, project_reject, reject, reflect, scale, EuclidError, View};
use geometry::{point, Entity, Kind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sig() -> Signature {
    Signature::euclidean(2)
}

fn mv(s: &str) -> Multivector {
    parse_multivector(s, 2).unwrap()
}

fn ent(s: &str) -> Entity {
    Entity::from_multivector(mv(s)).unwrap()
}

fn assert_close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b}");
}

fn assert_mv(a: &Multivector, b: &Multivector, tol: f64) {
    assert!(a.approx_eq(b, tol), "{a:?} vs {b:?}");
}

#[test]
fn plane_distances() {
    let s = sig();
    let p = point(2, &[0.5, 1.0], 1.0, 1.0).unwrap();
    let q = point(2, &[2.0, 2.0], 1.0, 1.0).unwrap();
    assert_close(distance(&p, &q, &s).unwrap(), 13f64.sqrt() / 2.0, 1e-12);
    assert_close(
        distance(&q, &p, &s).unwrap(),
        distance(&p, &q, &s).unwrap(),
        1e-15,
    );

    // line 2 - 2x - y = 0 against the point (-3, -3)
    let a = ent("2e0-2e1-e2");
    let w = ent("e12-3e20-3e01");
    assert_close(distance(&a, &w, &s).unwrap(), 11.0 / 5f64.sqrt(), 1e-12);
    assert_close(distance(&w, &a, &s).unwrap(), 11.0 / 5f64.sqrt(), 1e-12);

    let on = point(2, &[1.0, 0.0], 1.0, 1.0).unwrap();
    assert!(distance(&a, &on, &s).unwrap() <= 1e-9);

    // |d| of a normalized line is its distance to the origin
    let origin = point(2, &[0.0, 0.0], 1.0, 1.0).unwrap();
    assert_close(distance(&a, &origin, &s).unwrap(), 2.0 / 5f64.sqrt(), 1e-12);

    let n = ent("e20+2e01");
    match distance(&n, &p, &s) {
        Err(EuclidError::UnsupportedPair { .. }) => {}
        other => panic!("expected unsupported pair, got {other:?}"),
    }
}

#[test]
fn plane_angles() {
    let s = sig();
    let a = ent("2e0-2e1-e2");
    let b1 = ent("e0+2e1-2e2");
    let b2 = ent("-e0-2e1+2e2");
    assert_close(
        angle(&a, &b1, &s).unwrap(),
        (-1.0 / 10f64.sqrt()).acos(),
        1e-12,
    );
    assert_close(
        angle(&a, &b2, &s).unwrap(),
        (1.0 / 10f64.sqrt()).acos(),
        1e-12,
    );
    assert_close(
        angle(&ent("e1"), &ent("e2"), &s).unwrap(),
        std::f64::consts::FRAC_PI_2,
        1e-12,
    );
    assert!(matches!(
        angle(&ent("e12"), &a, &s),
        Err(EuclidError::UnsupportedPair { .. })
    ));
}

#[test]
fn plane_projections() {
    let s = sig();
    let a = mv("0.5e0-e1");
    let p = mv("e12-e20-2e01");
    let n = mv("-e01");
    let b = mv("0.5e0-0.5e1-0.25e2");

    // rejection of a finite line by a finite point lands at infinity
    let (pr, rj) = project_reject(&a, &p, &s).unwrap();
    assert_mv(&(&pr + &rj), &a, 1e-12);
    assert_eq!(
        Entity::from_multivector(rj).unwrap().kind(),
        Kind::HyperplaneAtInfinity
    );

    // a point at infinity rejects to itself and projects to zero
    assert_mv(&reject(&n, &p, &s).unwrap(), &n, 1e-12);
    assert!(project(&n, &p, &s).unwrap().max_abs() <= 1e-12);

    assert_mv(&project(&b, &b, &s).unwrap(), &b, 1e-12);

    let foot = project(&p, &b, &s).unwrap();
    let foot_ent = Entity::from_multivector(foot.clone()).unwrap();
    assert_eq!(foot_ent.kind(), Kind::FinitePoint);
    let coords = foot_ent.point_coords().unwrap();
    assert_close(coords[0], 7.0 / 5.0, 1e-12);
    assert_close(coords[1], -4.0 / 5.0, 1e-12);
    assert_mv(&project(&foot, &b, &s).unwrap(), &foot, 1e-12);
    let drift = reject(&p, &b, &s).unwrap();
    assert_eq!(
        Entity::from_multivector(drift).unwrap().kind(),
        Kind::PointAtInfinity
    );

    assert!(matches!(
        project(&mv("1+e1"), &b, &s),
        Err(EuclidError::MixedGrade)
    ));
    assert!(matches!(
        distance(&ent("e1"), &ent("e2"), &Signature::new(2, algebra_core::Metric::Elliptic).unwrap()),
        Err(EuclidError::NonEuclidean)
    ));
}

#[test]
fn plane_scaling() {
    let s = sig();
    let b = mv("e1+e2");
    let q = mv("e12+e01");
    let p = mv("e12+2e01");

    let stretched = scale(&q, &b, 3.0, &s).unwrap();
    let coords = Entity::from_multivector(stretched)
        .unwrap()
        .point_coords()
        .unwrap();
    assert_close(coords[0], 1.0, 1e-12);
    assert_close(coords[1], 2.0, 1e-12);

    let through_point = scale(&q, &p, 3.0, &s).unwrap();
    let coords = Entity::from_multivector(through_point)
        .unwrap()
        .point_coords()
        .unwrap();
    assert_close(coords[0], 0.0, 1e-12);
    assert_close(coords[1], -1.0, 1e-12);

    assert_mv(&scale(&q, &b, 1.0, &s).unwrap(), &q, 0.0);

    // anything at infinity only changes weight when scaled about a point
    let n = mv("-e01");
    assert_mv(&scale(&n, &p, 4.0, &s).unwrap(), &n.scaled(4.0), 1e-12);
    assert_mv(
        &scale(&mv("e0"), &p, 2.5, &s).unwrap(),
        &mv("e0").scaled(2.5),
        1e-12,
    );

    // scaling a line agrees with gamma a + (1 - gamma) (a . b) b^-1
    let a = mv("-0.6e0+0.8e1+0.6e2");
    let gamma = 3.0;
    let direct = scale(&a, &b, gamma, &s).unwrap();
    let ab = inner(&a, &b, &s).unwrap();
    let binv = inverse(&b, &s).unwrap();
    let alt = &a.scaled(gamma) + &geometric(&ab, &binv, &s).unwrap().scaled(1.0 - gamma);
    assert_mv(&direct, &alt, 1e-12);
}

#[test]
fn plane_reflections() {
    let s = sig();
    let b = mv("e1+e2");

    let a = mv("-0.5e0+0.5e1+0.25e2");
    assert_mv(
        &reflect(&a, &b, View::TopDown, &s).unwrap(),
        &mv("-0.5e0-0.25e1-0.5e2"),
        1e-12,
    );

    // a perpendicular line and the line at infinity are fixed
    assert_mv(
        &reflect(&mv("e1-e2"), &b, View::TopDown, &s).unwrap(),
        &mv("e1-e2"),
        1e-12,
    );
    assert_mv(
        &reflect(&mv("e0"), &b, View::TopDown, &s).unwrap(),
        &mv("e0"),
        1e-12,
    );

    // bottom-up line reflection drops the minus sign
    let c = mv("6e0+4e1+e2");
    let up = reflect(&c, &b, View::BottomUp, &s).unwrap();
    let down = reflect(&c, &b, View::TopDown, &s).unwrap();
    assert_mv(&up, &down.scaled(-1.0), 1e-12);
    let image_point = point(2, &[0.0, 1.5], 1.0, 1.0).unwrap();
    assert!(duality_join::join(&up, image_point.mv()).unwrap().max_abs() <= 1e-9);

    // a positively oriented point reflects to a negatively oriented image
    let q = mv("e12-e20-e01");
    let expected = mv("-e12-e20-e01");
    assert_mv(&reflect(&q, &b, View::BottomUp, &s).unwrap(), &expected, 1e-12);
    assert_mv(&reflect(&q, &b, View::TopDown, &s).unwrap(), &expected, 1e-12);

    // reflection in a point is a half-turn and keeps the orientation
    let r = mv("e12+e20");
    assert_mv(
        &reflect(&q, &r, View::TopDown, &s).unwrap(),
        &mv("e12+3e20+e01"),
        1e-12,
    );

    let n = mv("2e02-e01");
    assert_mv(
        &reflect(&n, &b, View::TopDown, &s).unwrap(),
        &mv("e02-2e01"),
        1e-12,
    );

    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for _ in 0..200 {
        let m = mv(&format!(
            "{}e0+{}e1+{}e2",
            rng.gen_range(-1.0..1.0f64),
            rng.gen_range(1.0..2.0f64),
            rng.gen_range(-1.0..1.0f64)
        ));
        let x = point(
            2,
            &[rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)],
            1.0,
            1.0,
        )
        .unwrap();
        let y = point(
            2,
            &[rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)],
            1.0,
            1.0,
        )
        .unwrap();
        for view in [View::TopDown, View::BottomUp] {
            let twice = reflect(
                &reflect(x.mv(), &m, view, &s).unwrap(),
                &m,
                view,
                &s,
            )
            .unwrap();
            assert_mv(&twice, x.mv(), 1e-9);
        }
        let xi = Entity::from_multivector(reflect(x.mv(), &m, View::TopDown, &s).unwrap()).unwrap();
        let yi = Entity::from_multivector(reflect(y.mv(), &m, View::TopDown, &s).unwrap()).unwrap();
        assert_close(
            distance(&xi, &yi, &s).unwrap(),
            distance(&x, &y, &s).unwrap(),
            1e-9,
        );
    }
}
