//! Euclidean measurements and constructions: distances and angles between
//! classified entities, projection and rejection (plain and the two skew-line
//! kinds), scaling, the top-down and bottom-up reflections, and the splits of
//! non-simple bivectors and trivectors into their finite and infinite parts.

use algebra_core::{
    commutator, geometric, inner, inverse, norm, outer, AlgebraError, Multivector, Side, Signature,
};
use duality_join::join;
use geometry::{is_simple, normalize, point, Entity, GeometryError, Kind};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EuclidError {
    #[error("no {op} formula for {x} and {y}")]
    UnsupportedPair {
        op: &'static str,
        x: &'static str,
        y: &'static str,
    },
    #[error("geometric product splits into three grade groups; use project_skew")]
    ThreePartProduct,
    #[error("no finite axis: the bivector lies at infinity")]
    NoFiniteAxis,
    #[error("expected a blade of a single grade")]
    MixedGrade,
    #[error("expected a line blade of grade {0}")]
    NotALine(u8),
    #[error("expected a bivector")]
    NotABivector,
    #[error("expected a trivector")]
    NotATrivector,
    #[error("operation is not available in dimension {0}")]
    WrongDimension(u8),
    #[error("euclidean metric required")]
    NonEuclidean,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

type Result<T> = std::result::Result<T, EuclidError>;

const TOL: f64 = 1e-9;

/// Finite line plus line at infinity making up a non-simple space bivector.
#[derive(Debug, Clone)]
pub struct SkewSplit {
    pub finite_axis: Multivector,
    pub infinite_axis: Multivector,
    /// Mixing coefficient (L v L) / (2 L . L).
    pub a: f64,
}

/// Complementary-plane split of a four-space bivector.
#[derive(Debug, Clone)]
pub struct PlanePair {
    pub pi1: Multivector,
    pub pi2: Multivector,
    pub unique: bool,
}

/// Finite-line and line-at-infinity components of a four-space trivector.
#[derive(Debug, Clone)]
pub struct TrivectorSplit {
    pub finite: Multivector,
    pub infinite: Multivector,
    pub unique: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewKind {
    Translational,
    Rotational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum View {
    TopDown,
    BottomUp,
}

fn require_euclidean(sig: &Signature) -> Result<()> {
    if sig.diag_slice() != Signature::euclidean(sig.n()).diag_slice() {
        return Err(EuclidError::NonEuclidean);
    }
    Ok(())
}

fn graded(m: &Multivector) -> Result<u8> {
    m.single_grade(TOL * m.max_abs().max(1.0))
        .ok_or(EuclidError::MixedGrade)
}

/// Part supported on blades free of index 0.
fn free_part(m: &Multivector) -> Multivector {
    let mut out = Multivector::zero(m.n(), m.side());
    for (mask, &c) in m.coeffs().iter().enumerate() {
        if mask & 1 == 0 {
            out.coeffs_mut()[mask] = c;
        }
    }
    out
}

fn unsupported(op: &'static str, x: &Entity, y: &Entity) -> EuclidError {
    EuclidError::UnsupportedPair {
        op,
        x: x.kind().name(),
        y: y.kind().name(),
    }
}

/// Euclidean distance between two classified entities. Both inputs are
/// normalized internally. The supported pairs are point-point, point-line,
/// point-hyperplane, line-line, and plane-point in four dimensions; every
/// other combination is rejected.
pub fn distance(x: &Entity, y: &Entity, sig: &Signature) -> Result<f64> {
    require_euclidean(sig)?;
    use Kind::*;
    match (x.kind(), y.kind()) {
        (FinitePoint, FinitePoint) => {
            let p = normalize(x, sig)?;
            let q = normalize(y, sig)?;
            Ok(norm(&join(p.mv(), q.mv())?, sig)?)
        }
        (FinitePoint, FiniteHyperplane) => point_to_hyperplane(x, y, sig),
        (FiniteHyperplane, FinitePoint) => point_to_hyperplane(y, x, sig),
        (FinitePoint, FiniteLine) => point_to_line(x, y, sig),
        (FiniteLine, FinitePoint) => point_to_line(y, x, sig),
        (FinitePoint, FinitePlane) => point_to_plane(x, y, sig),
        (FinitePlane, FinitePoint) => point_to_plane(y, x, sig),
        (FiniteLine, FiniteLine) => line_to_line(x, y, sig),
        _ => Err(unsupported("distance", x, y)),
    }
}

fn point_to_hyperplane(p: &Entity, a: &Entity, sig: &Signature) -> Result<f64> {
    let p = normalize(p, sig)?;
    let a = normalize(a, sig)?;
    Ok(join(a.mv(), p.mv())?.scalar_part().abs())
}

fn point_to_line(p: &Entity, l: &Entity, sig: &Signature) -> Result<f64> {
    let p = normalize(p, sig)?;
    let l = normalize(l, sig)?;
    Ok(norm(&join(l.mv(), p.mv())?, sig)?)
}

fn point_to_plane(p: &Entity, s: &Entity, sig: &Signature) -> Result<f64> {
    let p = normalize(p, sig)?;
    let s = normalize(s, sig)?;
    Ok(norm(&join(s.mv(), p.mv())?, sig)?)
}

fn line_to_line(x: &Entity, y: &Entity, sig: &Signature) -> Result<f64> {
    let l = normalize(x, sig)?;
    let f = normalize(y, sig)?;
    let cos = (-inner(l.mv(), f.mv(), sig)?.scalar_part()).clamp(-1.0, 1.0);
    let sin = (1.0 - cos * cos).sqrt();
    // rounding in normalized coefficients leaves parallel pairs with sin of
    // order sqrt(eps), so the cut sits well above that
    if sin <= 1e-6 {
        // parallel: join the commutator with the origin to read the offset
        let c = commutator(l.mv(), f.mv(), sig)?;
        let origin = point(sig.n(), &vec![0.0; sig.n() as usize], 1.0, 1.0)?;
        return Ok(norm(&join(origin.mv(), &c)?, sig)?);
    }
    Ok(norm(&join(l.mv(), f.mv())?, sig)?/ sin)
}

/// Angle in [0, pi] between two classified entities, by the per-pair inner
/// product formulas. Line-line and hyperplane-hyperplane angles keep the
/// orientation-sensitive sign of the cosine; the mixed pairs use the norm of
/// the inner product and land in [0, pi/2].
pub fn angle(x: &Entity, y: &Entity, sig: &Signature) -> Result<f64> {
    require_euclidean(sig)?;
    use Kind::*;
    let a = normalize(x, sig)?;
    let b = normalize(y, sig)?;
    let cos = match (x.kind(), y.kind()) {
        (FiniteHyperplane, FiniteHyperplane) => inner(a.mv(), b.mv(), sig)?.scalar_part(),
        (FiniteLine, FiniteLine) => -inner(a.mv(), b.mv(), sig)?.scalar_part(),
        (FiniteLine, FiniteHyperplane) => norm(&inner(b.mv(), a.mv(), sig)?, sig)?,
        (FiniteHyperplane, FiniteLine) => norm(&inner(a.mv(), b.mv(), sig)?, sig)?,
        (FinitePlane, FiniteHyperplane) => norm(&inner(b.mv(), a.mv(), sig)?, sig)?,
        (FiniteHyperplane, FinitePlane) => norm(&inner(a.mv(), b.mv(), sig)?, sig)?,
        (FinitePlane, FiniteLine) => norm(&inner(a.mv(), b.mv(), sig)?, sig)?,
        (FiniteLine, FinitePlane) => norm(&inner(b.mv(), a.mv(), sig)?, sig)?,
        _ => return Err(unsupported("angle", x, y)),
    };
    Ok(cos.clamp(-1.0, 1.0).acos())
}

/// Projection (A . B) B^-1 and rejection (AB - A . B) B^-1 of one blade on
/// another. Defined only when the geometric product AB occupies at most two
/// grade groups; three groups (skew lines) must go through project_skew.
pub fn project_reject(
    a: &Multivector,
    b: &Multivector,
    sig: &Signature,
) -> Result<(Multivector, Multivector)> {
    if a.max_abs() == 0.0 {
        inverse(b, sig)?;
        return Ok((a.clone(), a.clone()));
    }
    let ka = graded(a)?;
    let kb = graded(b)?;
    let binv = inverse(b, sig)?;
    let g = geometric(a, b, sig)?;
    let lo = g.grade_part(ka.abs_diff(kb));
    let rest = &g - &lo;
    if rest.support_grades(TOL * g.max_abs().max(1.0)).len() > 1 {
        return Err(EuclidError::ThreePartProduct);
    }
    Ok((
        geometric(&lo, &binv, sig)?,
        geometric(&rest, &binv, sig)?,
    ))
}

pub fn project(a: &Multivector, b: &Multivector, sig: &Signature) -> Result<Multivector> {
    Ok(project_reject(a, b, sig)?.0)
}

pub fn reject(a: &Multivector, b: &Multivector, sig: &Signature) -> Result<Multivector> {
    Ok(project_reject(a, b, sig)?.1)
}

/// proj + gamma * rej: scaling of A with respect to B by gamma.
pub fn scale(a: &Multivector, b: &Multivector, gamma: f64, sig: &Signature) -> Result<Multivector> {
    if gamma == 1.0 {
        inverse(b, sig)?;
        return Ok(a.clone());
    }
    let (p, r) = project_reject(a, b, sig)?;
    Ok(&p + &r.scaled(gamma))
}

/// Projection and rejection of the line phi on the line lam when their
/// geometric product has three grade groups. The commutator splits into a
/// finite axis and an axis at infinity; the translational kind keeps the
/// finite axis with the projection, the rotational kind swaps them.
pub fn project_skew(
    phi: &Multivector,
    lam: &Multivector,
    kind: SkewKind,
    sig: &Signature,
) -> Result<(Multivector, Multivector)> {
    require_euclidean(sig)?;
    let n = sig.n();
    if n < 3 {
        return Err(EuclidError::WrongDimension(n));
    }
    let want = n - 1;
    if graded(phi)? != want || graded(lam)? != want {
        return Err(EuclidError::NotALine(want));
    }
    let linv = inverse(lam, sig)?;
    let g = geometric(phi, lam, sig)?;
    let dot = g.grade_part(0);
    let c = commutator(phi, lam, sig)?;
    let h = &(&g - &dot) - &c;
    let (mut cf, mut ci) = match n {
        3 => {
            let split = bivector_axes_e3(&c, sig)?;
            (split.finite_axis, split.infinite_axis)
        }
        _ => {
            let pair = decompose_bivector_e4(&c, sig)?;
            (pair.pi1, pair.pi2)
        }
    };
    // a commutator with no finite support belongs entirely at infinity
    if free_part(&cf).max_abs() <= TOL * cf.max_abs() {
        ci = &ci + &cf;
        cf = Multivector::zero(cf.n(), cf.side());
    }
    let (pnum, rnum) = match kind {
        SkewKind::Translational => (&dot + &cf, &ci + &h),
        SkewKind::Rotational => (&dot + &ci, &cf + &h),
    };
    Ok((
        geometric(&pnum, &linv, sig)?,
        geometric(&rnum, &linv, sig)?,
    ))
}

/// Sandwich reflection of one blade in another. Top-down carries the sign
/// (-1)^(kl), bottom-up (-1)^(nk(l-1)), for mirror grade k and object grade l.
pub fn reflect(
    object: &Multivector,
    mirror: &Multivector,
    view: View,
    sig: &Signature,
) -> Result<Multivector> {
    let ainv = inverse(mirror, sig)?;
    if object.max_abs() == 0.0 {
        return Ok(object.clone());
    }
    let l = graded(object)? as i64;
    let k = graded(mirror)? as i64;
    let exponent = match view {
        View::TopDown => k * l,
        View::BottomUp => sig.n() as i64 * k * (l - 1),
    };
    let sign = if exponent.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
    let out = geometric(&geometric(mirror, object, sig)?, &ainv, sig)?;
    Ok(out.scaled(sign))
}

/// Split of a space bivector into its finite axis (1 - aI)L and axis at
/// infinity aIL, with a = (L v L) / (2 L . L). Simple input comes back
/// unchanged with a zero infinite axis.
pub fn bivector_axes_e3(l: &Multivector, sig: &Signature) -> Result<SkewSplit> {
    require_euclidean(sig)?;
    if sig.n() != 3 || l.n() != 3 {
        return Err(EuclidError::WrongDimension(sig.n().max(l.n())));
    }
    if graded(l)? != 2 {
        return Err(EuclidError::NotABivector);
    }
    let scale2 = l.max_abs().max(1.0).powi(2);
    let s = inner(l, l, sig)?.scalar_part();
    let v = join(l, l)?.scalar_part();
    if s.abs() <= TOL * scale2 {
        if v.abs() <= TOL * scale2 {
            return Ok(SkewSplit {
                finite_axis: l.clone(),
                infinite_axis: Multivector::zero(3, Side::Dual),
                a: 0.0,
            });
        }
        return Err(EuclidError::NoFiniteAxis);
    }
    let a = v / (2.0 * s);
    let i = Multivector::pseudoscalar(3, Side::Dual);
    let infinite = geometric(&i, l, sig)?.scaled(a);
    Ok(SkewSplit {
        finite_axis: l - &infinite,
        infinite_axis: infinite,
        a,
    })
}

/// Split of a four-space bivector into two complementary planes. Simple
/// input returns (pi, 0). When (pi.pi)^2 exceeds <(pi^pi)^2>, the parts are
/// the unique complementary pair ordered by the + root of the quadratic for
/// pi1^2; when <(pi^pi)^2> vanishes the pair is a finite plane plus a plane
/// at infinity; on the isoclinic boundary the split is a non-unique witness.
pub fn decompose_bivector_e4(p: &Multivector, sig: &Signature) -> Result<PlanePair> {
    require_euclidean(sig)?;
    if sig.n() != 4 || p.n() != 4 {
        return Err(EuclidError::WrongDimension(sig.n().max(p.n())));
    }
    if p.max_abs() > 0.0 && graded(p)? != 2 {
        return Err(EuclidError::NotABivector);
    }
    if is_simple(p)? {
        return Ok(PlanePair {
            pi1: p.clone(),
            pi2: Multivector::zero(4, Side::Dual),
            unique: true,
        });
    }
    let w = outer(p, p)?;
    let s = inner(p, p, sig)?.scalar_part();
    let q = geometric(&w, &w, sig)?.scalar_part();
    if (s * s - q).abs() <= TOL * s * s {
        // isoclinic: every vector spans an invariant plane with its image
        let mut best: Option<(f64, Multivector)> = None;
        for i in 1..=4u16 {
            let v = Multivector::basis_blade(4, Side::Dual, 1 << i);
            let image = inner(&v, p, sig)?;
            let cand = outer(&v, &image)?;
            if best.as_ref().map_or(true, |(m, _)| cand.max_abs() > *m) {
                best = Some((cand.max_abs(), cand));
            }
        }
        let pi1 = best.expect("basis scan").1;
        let pi2 = p - &pi1;
        return Ok(PlanePair {
            pi1,
            pi2,
            unique: false,
        });
    }
    let wp = geometric(&w, p, sig)?;
    if q.abs() <= TOL * s * s {
        // pi ^ pi squares to zero: finite plane plus plane at infinity
        let inf = wp.scaled(1.0 / (2.0 * s));
        return Ok(PlanePair {
            pi1: p - &inf,
            pi2: inf,
            unique: true,
        });
    }
    let disc = (s * s - q).max(0.0).sqrt();
    let l1 = 0.5 * (s + disc);
    let l2 = 0.5 * (s - disc);
    // pi1 = (l1 - W/2) pi / (l1 - l2), so that pi1^2 = l1 and pi2^2 = l2
    let pi1 = (&p.scaled(l1) - &wp.scaled(0.5)).scaled(1.0 / (l1 - l2));
    let pi2 = p - &pi1;
    Ok(PlanePair {
        pi1,
        pi2,
        unique: true,
    })
}

/// Split of a four-space trivector into a finite line and a line at
/// infinity. A trivector with zero square is e0 ^ pi for a spatial bivector
/// pi and delegates to the complementary-plane split of pi.
pub fn decompose_trivector_e4(phi: &Multivector, sig: &Signature) -> Result<TrivectorSplit> {
    require_euclidean(sig)?;
    if sig.n() != 4 || phi.n() != 4 {
        return Err(EuclidError::WrongDimension(sig.n().max(phi.n())));
    }
    if phi.max_abs() > 0.0 && graded(phi)? != 3 {
        return Err(EuclidError::NotATrivector);
    }
    if is_simple(phi)? {
        return Ok(TrivectorSplit {
            finite: phi.clone(),
            infinite: Multivector::zero(4, Side::Dual),
            unique: true,
        });
    }
    let s = inner(phi, phi, sig)?.scalar_part();
    if s.abs() <= TOL * phi.max_abs().max(1.0).powi(2) {
        let mut pi = Multivector::zero(4, Side::Dual);
        for (mask, &c) in phi.coeffs().iter().enumerate() {
            if c != 0.0 && mask & 1 == 1 {
                pi.coeffs_mut()[mask & !1usize] = c;
            }
        }
        let pair = decompose_bivector_e4(&pi, sig)?;
        let e0 = Multivector::basis_blade(4, Side::Dual, 1);
        let second = outer(&e0, &pair.pi2)?;
        return Ok(TrivectorSplit {
            finite: phi - &second,
            infinite: second,
            unique: pair.unique,
        });
    }
    let v = join(phi, phi)?;
    let i = Multivector::pseudoscalar(4, Side::Dual);
    let vi = geometric(&v, &i, sig)?;
    // (Phi v Phi) I / (2 Phi . Phi) applied to Phi isolates the infinite line
    let inf = geometric(&vi, phi, sig)?
        .grade_part(3)
        .scaled(1.0 / (2.0 * s));
    Ok(TrivectorSplit {
        finite: phi - &inf,
        infinite: inf,
        unique: true,
    })
}
