use crate::{AlgebraError, Multivector, Side, Signature};

/// Sign and resulting blade of the geometric product of two canonical basis
/// blades. The sign is the reordering parity of the concatenated index word
/// times the metric square of every shared index; shared degenerate indices
/// collapse the product to zero.
pub fn blade_product(s: u16, t: u16, sig: &Signature) -> (f64, u16) {
    let mut sign = if reorder_parity(s, t) { -1.0 } else { 1.0 };
    let mut shared = s & t;
    while shared != 0 {
        let i = shared.trailing_zeros() as u8;
        sign *= sig.diag(i);
        shared &= shared - 1;
    }
    (sign, s ^ t)
}

/// Parity of the permutation sorting the word (asc s, asc t): true = odd.
/// Counts, for every index in s, the indices of t strictly below it.
fn reorder_parity(s: u16, t: u16) -> bool {
    let mut inversions = 0u32;
    let mut rest = s;
    while rest != 0 {
        let i = rest.trailing_zeros();
        inversions += (t & ((1u16 << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

/// Metric-free reordering sign for the outer product; zero on overlap.
fn wedge_sign(s: u16, t: u16) -> f64 {
    if s & t != 0 {
        0.0
    } else if reorder_parity(s, t) {
        -1.0
    } else {
        1.0
    }
}

/// Geometric product. Defined only on the dual algebra, which carries the
/// metric.
pub fn geometric(
    a: &Multivector,
    b: &Multivector,
    sig: &Signature,
) -> Result<Multivector, AlgebraError> {
    a.check_compatible(b)?;
    if a.side() != Side::Dual {
        return Err(AlgebraError::MetricOnTarget);
    }
    if a.n() != sig.n() {
        return Err(AlgebraError::DimensionMismatch);
    }
    let mut out = Multivector::zero(a.n(), Side::Dual);
    for (s, &ca) in a.coeffs().iter().enumerate() {
        if ca == 0.0 {
            continue;
        }
        for (t, &cb) in b.coeffs().iter().enumerate() {
            if cb == 0.0 {
                continue;
            }
            let (sign, mask) = blade_product(s as u16, t as u16, sig);
            if sign != 0.0 {
                out.coeffs_mut()[mask as usize] += sign * ca * cb;
            }
        }
    }
    Ok(out)
}

/// Outer product, valid on either side (it never consults the metric).
pub fn outer(a: &Multivector, b: &Multivector) -> Result<Multivector, AlgebraError> {
    a.check_compatible(b)?;
    let mut out = Multivector::zero(a.n(), a.side());
    for (s, &ca) in a.coeffs().iter().enumerate() {
        if ca == 0.0 {
            continue;
        }
        for (t, &cb) in b.coeffs().iter().enumerate() {
            if cb == 0.0 {
                continue;
            }
            let sign = wedge_sign(s as u16, t as u16);
            if sign != 0.0 {
                out.coeffs_mut()[(s ^ t) as usize] += sign * ca * cb;
            }
        }
    }
    Ok(out)
}

/// Inner product: for blades of grades k and l, the grade |k-l| part of the
/// geometric product, extended bilinearly. Dual side only.
pub fn inner(
    a: &Multivector,
    b: &Multivector,
    sig: &Signature,
) -> Result<Multivector, AlgebraError> {
    a.check_compatible(b)?;
    if a.side() != Side::Dual {
        return Err(AlgebraError::MetricOnTarget);
    }
    let mut out = Multivector::zero(a.n(), Side::Dual);
    for (s, &ca) in a.coeffs().iter().enumerate() {
        if ca == 0.0 {
            continue;
        }
        let k = (s as u16).count_ones() as i32;
        for (t, &cb) in b.coeffs().iter().enumerate() {
            if cb == 0.0 {
                continue;
            }
            let l = (t as u16).count_ones() as i32;
            let (sign, mask) = blade_product(s as u16, t as u16, sig);
            if sign != 0.0 && mask.count_ones() as i32 == (k - l).abs() {
                out.coeffs_mut()[mask as usize] += sign * ca * cb;
            }
        }
    }
    Ok(out)
}

/// Commutator product (AB - BA)/2.
pub fn commutator(
    a: &Multivector,
    b: &Multivector,
    sig: &Signature,
) -> Result<Multivector, AlgebraError> {
    let ab = geometric(a, b, sig)?;
    let ba = geometric(b, a, sig)?;
    Ok((&ab - &ba).scaled(0.5))
}
