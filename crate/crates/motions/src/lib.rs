//! Proper euclidean motions as unit spinors: rotors, translators, screws and
//! the four-dimensional double rotations, applied by the sandwich product.

use algebra_core::{
    commutator, exp_trig, geometric, inner, inverse, norm, outer, reverse, AlgebraError,
    Multivector, Side, Signature, TrigFn,
};
use euclid_ops::{decompose_bivector_e4, EuclidError};
use geometry::{Entity, GeometryError, Kind};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MotionError {
    #[error("expected a unit-norm input")]
    NotNormalized,
    #[error("expected a finite input")]
    AtInfinity,
    #[error("axis of a rotation must be a point in E2, a line in E3 or a plane in E4")]
    BadAxis,
    #[error("translator direction must be a finite hyperplane")]
    BadDirection,
    #[error("generator must be a bivector")]
    NotABivector,
    #[error("the two planes are not complementary")]
    NotComplementary,
    #[error("invalid spinor: S times reverse(S) is not 1")]
    InvalidSpinor,
    #[error("operation is not available in dimension {0}")]
    WrongDimension(u8),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Euclid(#[from] EuclidError),
}

type Result<T> = std::result::Result<T, MotionError>;

const SPINOR_TOL: f64 = 1e-9;

/// Even multivector with S times reverse(S) equal to 1; acts on any
/// multivector by the sandwich product.
#[derive(Debug, Clone)]
pub struct Spinor {
    mv: Multivector,
    sig: Signature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotionKind {
    Translation,
    SimpleRotation,
    Screw,
    DoubleRotation,
    Isoclinic,
}

impl Spinor {
    pub fn from_multivector(mv: Multivector, sig: &Signature) -> Result<Spinor> {
        if !is_spinor(&mv, sig) {
            return Err(MotionError::InvalidSpinor);
        }
        Ok(Spinor {
            mv,
            sig: sig.clone(),
        })
    }

    pub fn identity(sig: &Signature) -> Spinor {
        Spinor {
            mv: Multivector::scalar(sig.n(), Side::Dual, 1.0),
            sig: sig.clone(),
        }
    }

    pub fn mv(&self) -> &Multivector {
        &self.mv
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    /// Composite motion; the right factor acts first.
    pub fn compose(&self, first: &Spinor) -> Result<Spinor> {
        let mv = geometric(&self.mv, &first.mv, &self.sig)?;
        Spinor::from_multivector(mv, &self.sig)
    }

    pub fn reversed(&self) -> Spinor {
        Spinor {
            mv: reverse(&self.mv),
            sig: self.sig.clone(),
        }
    }
}

pub fn is_spinor(m: &Multivector, sig: &Signature) -> bool {
    if m.support_grades(0.0).iter().any(|g| g % 2 == 1) {
        return false;
    }
    let Ok(r) = geometric(m, &reverse(m), sig) else {
        return false;
    };
    let one = Multivector::scalar(m.n(), m.side(), 1.0);
    r.approx_eq(&one, SPINOR_TOL)
}

fn check_unit(e: &Entity, sig: &Signature) -> Result<()> {
    let n = norm(e.mv(), sig)?;
    if (n - 1.0).abs() > SPINOR_TOL {
        return Err(MotionError::NotNormalized);
    }
    Ok(())
}

/// Rotation by alpha around a unit axis blade: a point in E2, a line in E3,
/// a plane in E4. Counterclockwise for positive alpha in the blade's
/// orientation.
pub fn rotor(axis: &Entity, alpha: f64, sig: &Signature) -> Result<Spinor> {
    let expected = match sig.n() {
        2 => Kind::FinitePoint,
        3 => Kind::FiniteLine,
        4 => Kind::FinitePlane,
        d => return Err(MotionError::WrongDimension(d)),
    };
    if axis.kind() != expected {
        return Err(match axis.kind() {
            Kind::PointAtInfinity | Kind::LineAtInfinity | Kind::PlaneAtInfinity => {
                MotionError::AtInfinity
            }
            _ => MotionError::BadAxis,
        });
    }
    check_unit(axis, sig)?;
    let gen = axis.mv().scaled(-alpha / 2.0);
    let mv = exp_trig(&gen, sig, TrigFn::Exp)?;
    Spinor::from_multivector(mv, sig)
}

/// Translation by lambda in the top-down direction of the unit hyperplane a.
pub fn translator(a: &Entity, lambda: f64, sig: &Signature) -> Result<Spinor> {
    let finite = match a.kind() {
        Kind::FiniteHyperplane => true,
        Kind::FinitePoint if sig.n() == 1 => true,
        Kind::HyperplaneAtInfinity | Kind::PointAtInfinity => {
            return Err(MotionError::AtInfinity)
        }
        _ => false,
    };
    if !finite {
        return Err(MotionError::BadDirection);
    }
    check_unit(a, sig)?;
    let e0 = Multivector::basis_blade(sig.n(), Side::Dual, 1);
    let step = outer(&e0, a.mv())?.scaled(-lambda / 2.0);
    let one = Multivector::scalar(sig.n(), Side::Dual, 1.0);
    Spinor::from_multivector(&one + &step, sig)
}

/// Screw motion in E3: rotation by alpha around the unit line combined with
/// a translation by lambda along it.
pub fn screw_e3(line: &Entity, alpha: f64, lambda: f64, sig: &Signature) -> Result<Spinor> {
    if sig.n() != 3 {
        return Err(MotionError::WrongDimension(sig.n()));
    }
    match line.kind() {
        Kind::FiniteLine => {}
        Kind::LineAtInfinity => return Err(MotionError::AtInfinity),
        _ => return Err(MotionError::BadAxis),
    }
    check_unit(line, sig)?;
    let i = Multivector::pseudoscalar(3, Side::Dual);
    let il = geometric(&i, line.mv(), sig)?;
    let gen = &line.mv().scaled(-alpha / 2.0) + &il.scaled(lambda / 2.0);
    let mv = exp_trig(&gen, sig, TrigFn::Exp)?;
    Spinor::from_multivector(mv, sig)
}

/// Double rotation in E4: by alpha around the unit plane s1 and by beta
/// around its complementary unit plane s2.
pub fn motion_e4(
    s1: &Entity,
    s2: &Entity,
    alpha: f64,
    beta: f64,
    sig: &Signature,
) -> Result<Spinor> {
    if sig.n() != 4 {
        return Err(MotionError::WrongDimension(sig.n()));
    }
    for s in [s1, s2] {
        match s.kind() {
            Kind::FinitePlane => {}
            Kind::PlaneAtInfinity => return Err(MotionError::AtInfinity),
            _ => return Err(MotionError::BadAxis),
        }
        check_unit(s, sig)?;
    }
    let dot = inner(s1.mv(), s2.mv(), sig)?.scalar_part();
    let cross = commutator(s1.mv(), s2.mv(), sig)?;
    if dot.abs() > SPINOR_TOL || cross.max_abs() > SPINOR_TOL {
        return Err(MotionError::NotComplementary);
    }
    let gen = &s1.mv().scaled(-alpha / 2.0) + &s2.mv().scaled(-beta / 2.0);
    let mv = exp_trig(&gen, sig, TrigFn::Exp)?;
    Spinor::from_multivector(mv, sig)
}

/// Sort a motion generator bivector by the shape of its plane decomposition.
pub fn classify_motion_e4(a: &Multivector, sig: &Signature) -> Result<MotionKind> {
    if sig.n() != 4 || a.n() != 4 {
        return Err(MotionError::WrongDimension(sig.n().min(a.n())));
    }
    let scale = a.max_abs();
    if scale == 0.0 {
        return Ok(MotionKind::Translation);
    }
    if a.single_grade(SPINOR_TOL * scale.max(1.0)) != Some(2) {
        return Err(MotionError::NotABivector);
    }
    let mut finite = a.clone();
    for mask in 0..finite.blade_count() {
        if mask & 1 == 1 {
            finite.coeffs_mut()[mask] = 0.0;
        }
    }
    if finite.max_abs() <= SPINOR_TOL * scale {
        return Ok(MotionKind::Translation);
    }
    let split = decompose_bivector_e4(a, sig)?;
    if !split.unique {
        return Ok(MotionKind::Isoclinic);
    }
    if split.pi2.max_abs() <= SPINOR_TOL * scale {
        return Ok(MotionKind::SimpleRotation);
    }
    let infinite_part = |m: &Multivector| {
        let mut worst = 0.0f64;
        let mut spatial = 0.0f64;
        for mask in 0..m.blade_count() {
            let c = m.coeffs()[mask].abs();
            if mask & 1 == 1 {
                worst = worst.max(c);
            } else {
                spatial = spatial.max(c);
            }
        }
        (spatial, worst)
    };
    let (sp2, _) = infinite_part(&split.pi2);
    let (sp1, _) = infinite_part(&split.pi1);
    if sp1.min(sp2) <= SPINOR_TOL * scale {
        return Ok(MotionKind::Screw);
    }
    Ok(MotionKind::DoubleRotation)
}

/// Sandwich action of a valid spinor; rejects drifted spinors rather than
/// silently falling back to a general inverse.
pub fn apply_motion(s: &Spinor, m: &Multivector) -> Result<Multivector> {
    if !is_spinor(&s.mv, &s.sig) {
        return Err(MotionError::InvalidSpinor);
    }
    let left = geometric(&s.mv, m, &s.sig)?;
    Ok(geometric(&left, &reverse(&s.mv), &s.sig)?)
}

/// General sandwich E M E^-1 for any invertible even multivector; the
/// permissive escape hatch when S reverse(S) is not 1.
pub fn apply_sandwich(e: &Multivector, m: &Multivector, sig: &Signature) -> Result<Multivector> {
    let inv = inverse(e, sig)?;
    let left = geometric(e, m, sig)?;
    Ok(geometric(&left, &inv, sig)?)
}
