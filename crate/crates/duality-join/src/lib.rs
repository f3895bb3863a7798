//! Duality between the dual and target algebras, and the join built on it.
//!
//! `dual_j` sends each dual basis blade on the index set S to the target
//! blade on the complementary index set, signed so that the complement
//! followed by S is an even permutation of 0..=n. The transform is a signed
//! permutation of coefficients and never touches the metric. The join of two
//! dual-side multivectors is `dual_j_inv(outer(dual_j(a), dual_j(b)))`;
//! there is no other code path.

use std::sync::OnceLock;

use algebra_core::{outer, AlgebraError, Multivector, Side};

/// Signed complement table for one dimension. `forward` maps a dual blade
/// mask to `(sign, complement mask)`; `inverse` is the same permutation
/// rescaled so the round trip is the identity on every blade.
#[derive(Debug, Clone)]
pub struct DualityTable {
    n: u8,
    forward: Vec<(f64, u16)>,
    inverse: Vec<(f64, u16)>,
}

impl DualityTable {
    /// Shared table for `n` in 1..=4.
    pub fn for_dim(n: u8) -> &'static DualityTable {
        static TABLES: OnceLock<[DualityTable; 4]> = OnceLock::new();
        let tables = TABLES.get_or_init(|| [1, 2, 3, 4].map(DualityTable::build));
        &tables[usize::from(n) - 1]
    }

    fn build(n: u8) -> DualityTable {
        let blades = 1usize << (n + 1);
        let full = (blades - 1) as u16;
        let mut forward = Vec::with_capacity(blades);
        for mask in 0..blades as u16 {
            let comp = full & !mask;
            forward.push((complement_sign(n, mask, comp), comp));
        }
        // The same signed permutation inverts the transform up to a global
        // sign per dimension, fixed by requiring an exact round trip.
        let c = if n <= 2 { -1.0 } else { 1.0 };
        let inverse = forward.iter().map(|&(s, m)| (c * s, m)).collect();
        DualityTable {
            n,
            forward,
            inverse,
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn forward_entry(&self, mask: u16) -> (f64, u16) {
        self.forward[mask as usize]
    }

    pub fn inverse_entry(&self, mask: u16) -> (f64, u16) {
        self.inverse[mask as usize]
    }
}

/// Sign of the permutation sending 0..=n to rev(asc(comp)) followed by
/// asc(mask): inversions of the concatenated ascending word plus the
/// reversal of the complement block.
fn complement_sign(n: u8, mask: u16, comp: u16) -> f64 {
    let word: Vec<u8> = (0..=n)
        .filter(|&i| comp >> i & 1 == 1)
        .chain((0..=n).filter(|&i| mask >> i & 1 == 1))
        .collect();
    let mut inversions = 0u32;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                inversions += 1;
            }
        }
    }
    let k = comp.count_ones();
    if (inversions + k * k.saturating_sub(1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn expect_side(m: &Multivector, side: Side) -> Result<(), AlgebraError> {
    if m.side() == side {
        Ok(())
    } else {
        Err(AlgebraError::SideMismatch)
    }
}

fn apply_table(entries: &[(f64, u16)], m: &Multivector, out_side: Side) -> Multivector {
    let mut out = Multivector::zero(m.n(), out_side);
    for (mask, &c) in m.coeffs().iter().enumerate() {
        if c != 0.0 {
            let (sign, image) = entries[mask];
            out.set(image, sign * c);
        }
    }
    out
}

/// Duality transform, dual algebra to target algebra.
pub fn dual_j(m: &Multivector) -> Result<Multivector, AlgebraError> {
    expect_side(m, Side::Dual)?;
    let table = DualityTable::for_dim(m.n());
    Ok(apply_table(&table.forward, m, Side::Target))
}

/// Inverse duality transform, target algebra back to the dual algebra.
/// `dual_j_inv(dual_j(m))` reproduces `m` exactly, coefficient by
/// coefficient.
pub fn dual_j_inv(m: &Multivector) -> Result<Multivector, AlgebraError> {
    expect_side(m, Side::Target)?;
    let table = DualityTable::for_dim(m.n());
    Ok(apply_table(&table.inverse, m, Side::Dual))
}

/// Identity transform: the same coefficients read on the other side.
pub fn identity_id(m: &Multivector) -> Multivector {
    m.with_side(m.side().flipped())
}

pub fn identity_id_inv(m: &Multivector) -> Multivector {
    m.with_side(m.side().flipped())
}

/// Orthogonality transform: the duality permutation applied within the dual
/// algebra, so `dual_j = identity_id . ortho_o`.
pub fn ortho_o(m: &Multivector) -> Result<Multivector, AlgebraError> {
    expect_side(m, Side::Dual)?;
    let table = DualityTable::for_dim(m.n());
    Ok(apply_table(&table.forward, m, Side::Dual))
}

pub fn ortho_o_inv(m: &Multivector) -> Result<Multivector, AlgebraError> {
    expect_side(m, Side::Dual)?;
    let table = DualityTable::for_dim(m.n());
    Ok(apply_table(&table.inverse, m, Side::Dual))
}

/// Join of two dual-side multivectors: dualize, wedge, dualize back.
pub fn join(a: &Multivector, b: &Multivector) -> Result<Multivector, AlgebraError> {
    let ja = dual_j(a)?;
    let jb = dual_j(b)?;
    dual_j_inv(&outer(&ja, &jb)?)
}
