use crate::{
    geometric, grade_sign, reverse, AlgebraError, GradeSet, Multivector, Side, Signature,
};

/// Element of the form alpha + beta*I, the shape the 4-dimensional norm
/// expression collapses to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StudyNumber {
    pub alpha: f64,
    pub beta: f64,
}

/// Split a multivector into (scalar, pseudoscalar) parts if nothing else is
/// present above the relative tolerance.
pub fn study_parts(m: &Multivector, tol: f64) -> Option<StudyNumber> {
    let top = ((1u16 << (m.n() + 1)) - 1) as usize;
    let scale = m.max_abs().max(1.0);
    for (mask, &c) in m.coeffs().iter().enumerate() {
        if mask != 0 && mask != top && c.abs() > tol * scale {
            return None;
        }
    }
    Some(StudyNumber {
        alpha: m.coeff(0),
        beta: m.coeff(top as u16),
    })
}

/// Negate the pseudoscalar component, keep everything else.
pub fn study_conjugate(m: &Multivector) -> Multivector {
    let top = ((1u16 << (m.n() + 1)) - 1) as u16;
    let mut out = m.clone();
    let c = out.coeff(top);
    out.set(top, -c);
    out
}

const SHAPE_TOL: f64 = 1e-9;

fn conjugation_set(n: u8) -> GradeSet {
    // The graded conjugation entering the norm: negate grade 1 in low
    // dimensions, grades 1 and 4 from dimension 3 up.
    match n {
        1 | 2 => GradeSet::from_grades(&[1]),
        3 | 4 => GradeSet::from_grades(&[1, 4]),
        _ => unreachable!(),
    }
}

/// The scalar under the root, the root exponent, and the two factors
/// multiplying the reverse in the inverse formula.
struct NormCore {
    scalar: f64,
    root: f64,
    tail: Multivector,
}

fn norm_core(m: &Multivector, sig: &Signature) -> Result<NormCore, AlgebraError> {
    if m.side() != Side::Dual {
        return Err(AlgebraError::MetricOnTarget);
    }
    let n = m.n();
    let r = geometric(m, &reverse(m), sig)?;
    let c = grade_sign(&r, conjugation_set(n));
    let rc = geometric(&r, &c, sig)?;
    if n <= 3 {
        if !rc.is_scalar(SHAPE_TOL * rc.max_abs().max(1.0)) {
            return Err(AlgebraError::NormUndefined);
        }
        Ok(NormCore {
            scalar: rc.scalar_part(),
            root: 4.0,
            tail: c,
        })
    } else {
        study_parts(&rc, SHAPE_TOL).ok_or(AlgebraError::NormUndefined)?;
        let nbar = study_conjugate(&rc);
        let nnbar = geometric(&rc, &nbar, sig)?;
        debug_assert!(nnbar.is_scalar(1e-6 * nnbar.max_abs().max(1.0)));
        Ok(NormCore {
            scalar: nnbar.scalar_part(),
            root: 8.0,
            tail: geometric(&c, &nbar, sig)?,
        })
    }
}

/// Norm of a multivector: |M Mrev (M Mrev)_conj ...|^(1/4) in dimensions 1-3,
/// with the extra Study-conjugate stage and an eighth root in dimension 4.
/// Errors when the inner expression does not collapse to the required shape.
pub fn norm(m: &Multivector, sig: &Signature) -> Result<f64, AlgebraError> {
    let core = norm_core(m, sig)?;
    Ok(core.scalar.abs().powf(1.0 / core.root))
}

/// General inverse built from the same expression as the norm. Errors with
/// `NotInvertible` when the denominator vanishes or the candidate fails to
/// reproduce 1.
pub fn inverse(m: &Multivector, sig: &Signature) -> Result<Multivector, AlgebraError> {
    let core = match norm_core(m, sig) {
        Ok(core) => core,
        // A non-collapsing norm expression also means the closed-form
        // inverse does not apply.
        Err(AlgebraError::NormUndefined) => return Err(AlgebraError::NotInvertible),
        Err(e) => return Err(e),
    };
    let scale = m.max_abs();
    if core.scalar == 0.0 || !core.scalar.is_finite() {
        return Err(AlgebraError::NotInvertible);
    }
    let candidate = geometric(&reverse(m), &core.tail, sig)?.scaled(1.0 / core.scalar);
    let product = geometric(m, &candidate, sig)?;
    let mut residual = product.clone();
    residual.set(0, residual.coeff(0) - 1.0);
    let cond = (scale * candidate.max_abs()).max(1.0);
    if residual.max_abs() > 1e-7 * cond {
        return Err(AlgebraError::NotInvertible);
    }
    Ok(candidate)
}
