//! Typed geometric entities over the dual representation: construction from
//! coordinates, classification by grade and zero-pattern, simplicity tests,
//! central points, orientation and weight extraction, normalization, and
//! polar elements.

use algebra_core::{
    blade_label, geometric, norm, outer, parse_blade_label, AlgebraError, Multivector, Side,
    Signature,
};
use duality_join::{dual_j, identity_id, join};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("empty entity")]
    Empty,
    #[error("entity must have a single grade")]
    MixedGrade,
    #[error("not a simple blade")]
    NotSimple,
    #[error("weight must be positive")]
    NonPositiveWeight,
    #[error("hyperplane coefficients are all zero")]
    ZeroHyperplane,
    #[error("expected point entities")]
    NotAPoint,
    #[error("degenerate join")]
    DegenerateJoin,
    #[error("entity at infinity")]
    AtInfinity,
    #[error("central point undefined for this kind of entity")]
    NoCentralPoint,
    #[error("mismatched attitude")]
    MismatchedAttitude,
    #[error("zero norm")]
    ZeroNorm,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    FinitePoint,
    PointAtInfinity,
    FiniteLine,
    LineAtInfinity,
    FinitePlane,
    PlaneAtInfinity,
    FiniteHyperplane,
    HyperplaneAtInfinity,
    WholeSpace,
    OriginScalar,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::FinitePoint => "FinitePoint",
            Kind::PointAtInfinity => "PointAtInfinity",
            Kind::FiniteLine => "FiniteLine",
            Kind::LineAtInfinity => "LineAtInfinity",
            Kind::FinitePlane => "FinitePlane",
            Kind::PlaneAtInfinity => "PlaneAtInfinity",
            Kind::FiniteHyperplane => "FiniteHyperplane",
            Kind::HyperplaneAtInfinity => "HyperplaneAtInfinity",
            Kind::WholeSpace => "WholeSpace",
            Kind::OriginScalar => "OriginScalar",
        }
    }
}

/// A single blade of the dual algebra together with its geometric reading.
#[derive(Debug, Clone, PartialEq)]
pub struct Entity {
    mv: Multivector,
    kind: Kind,
}

const CLASSIFY_TOL: f64 = 1e-9;

impl Entity {
    /// Wrap a dual-side multivector: it must be nonzero, homogeneous, and a
    /// simple blade.
    pub fn from_multivector(mv: Multivector) -> Result<Entity, GeometryError> {
        if mv.side() != Side::Dual {
            return Err(AlgebraError::SideMismatch.into());
        }
        let scale = mv.max_abs();
        if scale == 0.0 {
            return Err(GeometryError::Empty);
        }
        let grade = mv
            .single_grade(CLASSIFY_TOL * scale)
            .ok_or(GeometryError::MixedGrade)?;
        if !is_simple(&mv)? {
            return Err(GeometryError::NotSimple);
        }
        let kind = kind_of(&mv, grade);
        Ok(Entity { mv, kind })
    }

    pub fn mv(&self) -> &Multivector {
        &self.mv
    }

    pub fn n(&self) -> u8 {
        self.mv.n()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Coordinates of a finite point, read off the point blade. None when
    /// the weight vanishes (a point at infinity).
    pub fn point_coords(&self) -> Option<Vec<f64>> {
        let n = self.n();
        let (base, axes) = point_axes(n);
        let w = label_coeff(&self.mv, base);
        if w.abs() <= CLASSIFY_TOL * self.mv.max_abs() {
            return None;
        }
        Some(
            axes.iter()
                .map(|&(label, sign)| sign * label_coeff(&self.mv, label) / w)
                .collect(),
        )
    }
}

/// Point blade layout per dimension: the weight label and, per coordinate,
/// the label carrying it and the sign relating label coefficient to the
/// coordinate value.
fn point_axes(n: u8) -> (&'static str, &'static [(&'static str, f64)]) {
    match n {
        1 => ("1", &[("0", -1.0)]),
        2 => ("12", &[("20", 1.0), ("01", 1.0)]),
        3 => ("123", &[("320", 1.0), ("130", 1.0), ("210", 1.0)]),
        _ => (
            "1234",
            &[("2340", 1.0), ("3140", 1.0), ("1240", 1.0), ("3210", 1.0)],
        ),
    }
}

/// Coefficient of a blade named by its label index string, in the label's
/// own orientation.
fn label_coeff(m: &Multivector, label: &str) -> f64 {
    let (mask, sign) = parse_blade_label(label, m.n()).expect("label in range");
    sign * m.coeff(mask)
}

/// The part of the blade free of index 0; nonzero exactly for finite
/// entities.
fn zero_free_part(m: &Multivector) -> Multivector {
    let mut out = Multivector::zero(m.n(), m.side());
    for (mask, &c) in m.coeffs().iter().enumerate() {
        if mask & 1 == 0 {
            out.set(mask as u16, c);
        }
    }
    out
}

/// Drop index 0 from every blade that contains it (the factor F in
/// M = e0 ^ F + rest), discarding the rest.
fn strip_zero(m: &Multivector) -> Multivector {
    let mut out = Multivector::zero(m.n(), m.side());
    for (mask, &c) in m.coeffs().iter().enumerate() {
        if mask & 1 == 1 {
            out.set(mask as u16 & !1, c);
        }
    }
    out
}

fn kind_of(mv: &Multivector, grade: u8) -> Kind {
    let n = mv.n();
    let finite = zero_free_part(mv).max_abs() > CLASSIFY_TOL * mv.max_abs();
    if grade == 0 {
        return Kind::WholeSpace;
    }
    if grade == n + 1 {
        return Kind::OriginScalar;
    }
    let codim = n - grade;
    if codim == 0 {
        return if finite {
            Kind::FinitePoint
        } else {
            Kind::PointAtInfinity
        };
    }
    if grade == 1 {
        return if finite {
            Kind::FiniteHyperplane
        } else {
            Kind::HyperplaneAtInfinity
        };
    }
    if codim == 1 {
        if finite {
            Kind::FiniteLine
        } else {
            Kind::LineAtInfinity
        }
    } else {
        if finite {
            Kind::FinitePlane
        } else {
            Kind::PlaneAtInfinity
        }
    }
}

pub fn classify(mv: &Multivector) -> Result<Kind, GeometryError> {
    Ok(Entity::from_multivector(mv.clone())?.kind())
}

/// A weighted, oriented point from coordinates.
pub fn point(n: u8, coords: &[f64], orientation: f64, weight: f64) -> Result<Entity, GeometryError> {
    assert_eq!(coords.len(), usize::from(n), "one coordinate per axis");
    if weight <= 0.0 {
        return Err(GeometryError::NonPositiveWeight);
    }
    let (base, axes) = point_axes(n);
    let mut mv = Multivector::zero(n, Side::Dual);
    let scale = orientation.signum() * weight;
    set_label(&mut mv, base, scale);
    for (&(label, sign), &x) in axes.iter().zip(coords) {
        set_label(&mut mv, label, scale * sign * x);
    }
    Entity::from_multivector(mv)
}

fn set_label(m: &mut Multivector, label: &str, value: f64) {
    let (mask, sign) = parse_blade_label(label, m.n()).expect("label in range");
    m.set(mask, sign * value);
}

/// The hyperplane d + a1 x1 + ... + an xn = 0, represented by the vector
/// d e0 + sum ai ei.
pub fn hyperplane(n: u8, d: f64, normal: &[f64]) -> Result<Entity, GeometryError> {
    assert_eq!(normal.len(), usize::from(n), "one coefficient per axis");
    if d == 0.0 && normal.iter().all(|&a| a == 0.0) {
        return Err(GeometryError::ZeroHyperplane);
    }
    let mut mv = Multivector::zero(n, Side::Dual);
    mv.set(1, d);
    for (i, &a) in normal.iter().enumerate() {
        mv.set(1 << (i + 1), a);
    }
    Entity::from_multivector(mv)
}

fn join_points(points: &[&Entity]) -> Result<Entity, GeometryError> {
    for p in points {
        if !matches!(p.kind(), Kind::FinitePoint | Kind::PointAtInfinity) {
            return Err(GeometryError::NotAPoint);
        }
    }
    let mut acc = points[0].mv.clone();
    for p in &points[1..] {
        acc = join(&acc, &p.mv)?;
    }
    if acc.max_abs() <= CLASSIFY_TOL * points.iter().map(|p| p.mv.max_abs()).product::<f64>() {
        return Err(GeometryError::DegenerateJoin);
    }
    Entity::from_multivector(acc)
}

pub fn line_from_points(p: &Entity, q: &Entity) -> Result<Entity, GeometryError> {
    join_points(&[p, q])
}

pub fn plane_from_points(p: &Entity, q: &Entity, r: &Entity) -> Result<Entity, GeometryError> {
    join_points(&[p, q, r])
}

pub fn hyperplane_from_points(
    p: &Entity,
    q: &Entity,
    r: &Entity,
    s: &Entity,
) -> Result<Entity, GeometryError> {
    join_points(&[p, q, r, s])
}

/// Intersection as the outer product of the blades. A zero wedge is an
/// informative result (containment or parallelism), reported as None.
pub fn meet(entities: &[&Entity]) -> Result<Option<Entity>, GeometryError> {
    let mut acc = entities[0].mv.clone();
    for e in &entities[1..] {
        acc = outer(&acc, &e.mv)?;
        if acc.max_abs() == 0.0 {
            return Ok(None);
        }
    }
    if acc.max_abs() <= CLASSIFY_TOL * entities.iter().map(|e| e.mv.max_abs()).product::<f64>() {
        return Ok(None);
    }
    Ok(Some(Entity::from_multivector(acc)?))
}

/// Whether a homogeneous multivector is a single blade. Scalars, vectors,
/// and (co)vectors of extreme grade always are; bivectors are tested via
/// B^B and four-space trivectors via the self-join.
pub fn is_simple(m: &Multivector) -> Result<bool, GeometryError> {
    let scale = m.max_abs();
    if scale == 0.0 {
        return Ok(true);
    }
    let grade = m
        .single_grade(CLASSIFY_TOL * scale)
        .ok_or(GeometryError::MixedGrade)?;
    let budget = 1e-9 * m.l1() * m.l1();
    match grade {
        2 => Ok(outer(m, m)?.max_abs() <= budget),
        3 if m.n() == 4 => Ok(join(m, m)?.max_abs() <= budget),
        _ => Ok(true),
    }
}

/// The point of a finite flat closest to the origin, by the closed-form
/// coordinate expressions. Defined for hyperplanes, lines, and planes.
pub fn central_point(e: &Entity) -> Result<Vec<f64>, GeometryError> {
    let m = &e.mv;
    let n = e.n();
    let p = |label: &str| label_coeff(m, label);
    match e.kind {
        Kind::FiniteHyperplane => {
            let d = m.coeff(1);
            let normal: Vec<f64> = (1..=n).map(|i| m.coeff(1 << i)).collect();
            let den: f64 = normal.iter().map(|a| a * a).sum();
            Ok(normal.iter().map(|a| -d * a / den).collect())
        }
        Kind::FiniteLine if n == 3 => {
            let (p10, p20, p30) = (p("10"), p("20"), p("30"));
            let (p23, p31, p12) = (p("23"), p("31"), p("12"));
            let den = p23 * p23 + p31 * p31 + p12 * p12;
            Ok(vec![
                (p20 * p12 - p30 * p31) / den,
                (p30 * p23 - p10 * p12) / den,
                (p10 * p31 - p20 * p23) / den,
            ])
        }
        Kind::FiniteLine => {
            let (s234, s314, s124, s321) = (p("234"), p("314"), p("124"), p("321"));
            let (s410, s420, s430) = (p("410"), p("420"), p("430"));
            let (s230, s310, s120) = (p("230"), p("310"), p("120"));
            let den = s234 * s234 + s314 * s314 + s124 * s124 + s321 * s321;
            Ok(vec![
                -(s314 * s430 - s124 * s420 - s321 * s230) / den,
                -(s124 * s410 - s234 * s430 - s321 * s310) / den,
                -(s234 * s420 - s314 * s410 - s321 * s120) / den,
                -(s234 * s230 + s314 * s310 + s124 * s120) / den,
            ])
        }
        Kind::FinitePlane => {
            let (p10, p20, p30, p40) = (p("10"), p("20"), p("30"), p("40"));
            let (p23, p31, p12) = (p("23"), p("31"), p("12"));
            let (p41, p42, p43) = (p("41"), p("42"), p("43"));
            let den = p23 * p23 + p31 * p31 + p12 * p12 + p41 * p41 + p42 * p42 + p43 * p43;
            Ok(vec![
                (p20 * p12 - p30 * p31 - p40 * p41) / den,
                (p30 * p23 - p10 * p12 - p40 * p42) / den,
                (p10 * p31 - p20 * p23 - p40 * p43) / den,
                (p10 * p41 + p20 * p42 + p30 * p43) / den,
            ])
        }
        Kind::HyperplaneAtInfinity | Kind::LineAtInfinity | Kind::PlaneAtInfinity => {
            Err(GeometryError::AtInfinity)
        }
        _ => Err(GeometryError::NoCentralPoint),
    }
}

/// Orientation data read off a blade: both reported multivectors live in the
/// target algebra and involve no blade containing index 0.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientationReport {
    pub top_down: Multivector,
    pub bottom_up: Multivector,
    pub sign: f64,
}

pub fn orientation(e: &Entity) -> Result<OrientationReport, GeometryError> {
    let x = &e.mv;
    let scale = x.max_abs();
    let x0 = zero_free_part(x);
    let top_down = if x0.max_abs() > CLASSIFY_TOL * scale {
        identity_id(&x0)
    } else {
        identity_id(&strip_zero(x))
    };
    let y = dual_j(x)?;
    let y0 = strip_zero(&y);
    let bottom_up = if y0.max_abs() > CLASSIFY_TOL * scale {
        y0
    } else {
        y
    };
    let sign = match e.kind {
        Kind::FinitePoint => {
            let (base, _) = point_axes(e.n());
            label_coeff(x, base).signum()
        }
        Kind::HyperplaneAtInfinity => x.coeff(1).signum(),
        _ => 1.0,
    };
    Ok(OrientationReport {
        top_down,
        bottom_up,
        sign,
    })
}

/// Scalar ratio of a blade to a reference blade of the same attitude.
pub fn weight(e: &Entity, reference: &Entity) -> Result<f64, GeometryError> {
    e.mv.check_compatible(&reference.mv)?;
    let denom: f64 = reference.mv.coeffs().iter().map(|c| c * c).sum();
    let num: f64 = e
        .mv
        .coeffs()
        .iter()
        .zip(reference.mv.coeffs())
        .map(|(a, b)| a * b)
        .sum();
    let lambda = num / denom;
    let scale = e.mv.max_abs().max(reference.mv.max_abs());
    if e.mv.approx_eq(&reference.mv.scaled(lambda), 1e-9 * scale.max(1.0)) {
        Ok(lambda)
    } else {
        Err(GeometryError::MismatchedAttitude)
    }
}

/// Rescale to unit norm under the given metric. Entities with zero norm
/// (infinite elements of degenerate metrics) cannot be normalized.
pub fn normalize(e: &Entity, sig: &Signature) -> Result<Entity, GeometryError> {
    let value = norm(&e.mv, sig)?;
    if value <= 1e-12 * e.mv.max_abs().max(1.0) {
        return Err(GeometryError::ZeroNorm);
    }
    Ok(Entity {
        mv: e.mv.scaled(1.0 / value),
        kind: e.kind,
    })
}

/// Right product with the pseudoscalar; None when the product vanishes.
pub fn polar(e: &Entity, sig: &Signature) -> Result<Option<Entity>, GeometryError> {
    let i = Multivector::pseudoscalar(e.n(), Side::Dual);
    let product = geometric(&e.mv, &i, sig)?;
    if product.max_abs() <= CLASSIFY_TOL * e.mv.max_abs() {
        return Ok(None);
    }
    Ok(Some(Entity::from_multivector(product)?))
}

fn label_map(m: &Multivector) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (mask, &c) in m.coeffs().iter().enumerate() {
        if c != 0.0 {
            let (label, sign) = blade_label(m.n(), mask as u16, m.side());
            map.insert(label, serde_json::json!(sign * c));
        }
    }
    serde_json::Value::Object(map)
}

/// JSON rendering of an entity: kind, dimension, label-keyed coefficients,
/// and, where defined, the central point (or point coordinates), the two
/// orientation blades, and the norm under `sig`.
pub fn entity_json(e: &Entity, sig: Option<&Signature>) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    obj.insert("kind".into(), serde_json::json!(e.kind().name()));
    obj.insert("n".into(), serde_json::json!(e.n()));
    obj.insert("coeffs".into(), label_map(&e.mv));
    let center = match e.kind() {
        Kind::FinitePoint => e.point_coords(),
        _ => central_point(e).ok(),
    };
    if let Some(c) = center {
        obj.insert("center".into(), serde_json::json!(c));
    }
    if let Ok(report) = orientation(e) {
        obj.insert("top_down".into(), label_map(&report.top_down));
        obj.insert("bottom_up".into(), label_map(&report.bottom_up));
    }
    if let Some(sig) = sig {
        if let Ok(value) = norm(&e.mv, sig) {
            obj.insert("norm".into(), serde_json::json!(value));
        }
    }
    serde_json::Value::Object(obj)
}
