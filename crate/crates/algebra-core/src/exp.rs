use crate::{geometric, AlgebraError, Multivector, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigFn {
    Exp,
    Sin,
    Cos,
}

const SCALAR_SQUARE_TOL: f64 = 1e-12;
const TERM_CAP: usize = 64;

/// Exponential, sine or cosine of a multivector. When M*M is a scalar the
/// closed trigonometric/hyperbolic forms apply; otherwise a scaled-and-
/// squared (respectively angle-doubled) Taylor evaluation runs with a hard
/// iteration cap.
pub fn exp_trig(
    m: &Multivector,
    sig: &Signature,
    f: TrigFn,
) -> Result<Multivector, AlgebraError> {
    let m2 = geometric(m, m, sig)?;
    let scale = m2.max_abs().max(m.max_abs()).max(1.0);
    if m2.is_scalar(SCALAR_SQUARE_TOL * scale) {
        return Ok(closed_form(m, m2.scalar_part(), f));
    }
    series(m, sig, f)
}

fn closed_form(m: &Multivector, s: f64, f: TrigFn) -> Multivector {
    let n = m.n();
    let side = m.side();
    let one = Multivector::scalar(n, side, 1.0);
    let r = s.abs().sqrt();
    // Below this the quadratic correction drowns in double precision and the
    // limiting forms are exact to working accuracy.
    let tiny = r < 1e-8;
    match f {
        TrigFn::Exp => {
            if tiny {
                &one + m
            } else if s < 0.0 {
                // M*M = -r^2: circular branch.
                &(&one * r.cos()) + &(m * (r.sin() / r))
            } else {
                &(&one * r.cosh()) + &(m * (r.sinh() / r))
            }
        }
        TrigFn::Sin => {
            if tiny {
                m.clone()
            } else if s < 0.0 {
                m * (r.sinh() / r)
            } else {
                m * (r.sin() / r)
            }
        }
        TrigFn::Cos => {
            if tiny {
                one
            } else if s < 0.0 {
                &one * r.cosh()
            } else {
                &one * r.cos()
            }
        }
    }
}

/// Taylor sum of exp on an argument already scaled to small norm. Returns
/// None if the term cap is exhausted before the terms vanish.
fn exp_series_raw(x: &Multivector, sig: &Signature) -> Result<Option<Multivector>, AlgebraError> {
    let mut sum = Multivector::scalar(x.n(), x.side(), 1.0);
    let mut term = x.clone();
    let mut k = 1.0;
    for _ in 0..TERM_CAP {
        sum = &sum + &term;
        k += 1.0;
        term = geometric(&term, x, sig)?.scaled(1.0 / k);
        if term.max_abs() <= f64::EPSILON * sum.max_abs().max(1.0) {
            return Ok(Some(&sum + &term));
        }
    }
    Ok(None)
}

/// Simultaneous Taylor sums of sin and cos on a scaled argument.
fn sincos_series_raw(
    x: &Multivector,
    sig: &Signature,
) -> Result<Option<(Multivector, Multivector)>, AlgebraError> {
    let n = x.n();
    let side = x.side();
    let mut sin = Multivector::zero(n, side);
    let mut cos = Multivector::zero(n, side);
    let mut term = Multivector::scalar(n, side, 1.0);
    let mut k = 0.0f64;
    for _ in 0..2 * TERM_CAP {
        let ki = k as u64;
        match ki % 4 {
            0 => cos = &cos + &term,
            1 => sin = &sin + &term,
            2 => cos = &cos - &term,
            _ => sin = &sin - &term,
        }
        k += 1.0;
        term = geometric(&term, x, sig)?.scaled(1.0 / k);
        let done = term.max_abs()
            <= f64::EPSILON * sin.max_abs().max(cos.max_abs()).max(1.0);
        if done && ki >= 2 {
            return Ok(Some((sin, cos)));
        }
    }
    Ok(None)
}

fn series(m: &Multivector, sig: &Signature, f: TrigFn) -> Result<Multivector, AlgebraError> {
    // The coefficient-sum norm is submultiplicative for this product (every
    // structure constant has magnitude at most 1), so scaling it below 1/2
    // guarantees fast term decay.
    let mut halvings = 0u32;
    let mut l1 = m.l1();
    while l1 > 0.5 && halvings < 64 {
        l1 *= 0.5;
        halvings += 1;
    }
    let x = m.scaled(0.5f64.powi(halvings as i32));
    match f {
        TrigFn::Exp => {
            let mut acc = exp_series_raw(&x, sig)?.ok_or(AlgebraError::ExpDiverged)?;
            for _ in 0..halvings {
                acc = geometric(&acc, &acc, sig)?;
            }
            Ok(acc)
        }
        TrigFn::Sin | TrigFn::Cos => {
            let (mut sin, mut cos) =
                sincos_series_raw(&x, sig)?.ok_or(AlgebraError::ExpDiverged)?;
            let one = Multivector::scalar(m.n(), m.side(), 1.0);
            for _ in 0..halvings {
                // sin 2X = 2 sin X cos X, cos 2X = 2 cos^2 X - 1; everything
                // here is a power series in X, so the factors commute.
                let s2 = geometric(&sin, &cos, sig)?.scaled(2.0);
                let c2 = &geometric(&cos, &cos, sig)?.scaled(2.0) - &one;
                sin = s2;
                cos = c2;
            }
            Ok(match f {
                TrigFn::Sin => sin,
                _ => cos,
            })
        }
    }
}
