use algebra_core::{Multivector, Side, Signature};

fn indices(mask: u16) -> Vec<u8> {
    (0..16).filter(|i| mask & (1 << i) != 0).collect()
}

/// Geometric product of two basis blades, computed by insertion-sort
/// merging on explicit index lists: the factors of the left blade are pushed
/// one at a time into the right word, swapping past smaller indices and
/// contracting equal ones with their metric square.
pub fn oracle_blade_product(s: u16, t: u16, sig: &Signature) -> (f64, u16) {
    let mut word = indices(t);
    let mut sign = 1.0f64;
    for &i in indices(s).iter().rev() {
        let mut pos = 0;
        let mut placed = false;
        while pos < word.len() {
            if i == word[pos] {
                sign *= sig.diag(i);
                word.remove(pos);
                placed = true;
                break;
            } else if i < word[pos] {
                word.insert(pos, i);
                placed = true;
                break;
            } else {
                sign = -sign;
                pos += 1;
            }
        }
        if !placed {
            word.push(i);
        }
        if sign == 0.0 {
            return (0.0, 0);
        }
    }
    let mask = word.iter().fold(0u16, |m, &i| m | (1 << i));
    (sign, mask)
}

/// Reference geometric product over full multivectors.
pub fn oracle_geometric(a: &Multivector, b: &Multivector, sig: &Signature) -> Multivector {
    assert_eq!(a.side(), Side::Dual);
    assert_eq!(b.side(), Side::Dual);
    assert_eq!(a.n(), b.n());
    let mut out = Multivector::zero(a.n(), Side::Dual);
    for (s, &ca) in a.coeffs().iter().enumerate() {
        if ca == 0.0 {
            continue;
        }
        for (t, &cb) in b.coeffs().iter().enumerate() {
            if cb == 0.0 {
                continue;
            }
            let (sign, mask) = oracle_blade_product(s as u16, t as u16, sig);
            if sign != 0.0 {
                out.coeffs_mut()[mask as usize] += sign * ca * cb;
            }
        }
    }
    out
}
