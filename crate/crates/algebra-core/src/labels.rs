use crate::{AlgebraError, Side};

/// One display blade: `label = sign * e_mask` with `e_mask` in ascending
/// index order. Tables list blades in the order the basis is conventionally
/// written per dimension, grade-major.
#[derive(Debug, Clone, Copy)]
pub struct LabelEntry {
    pub mask: u16,
    pub label: &'static str,
    pub sign: f64,
}

const fn le(mask: u16, label: &'static str, sign: f64) -> LabelEntry {
    LabelEntry { mask, label, sign }
}

static LABELS_1: [LabelEntry; 4] = [
    le(0b00, "1", 1.0),
    le(0b01, "e0", 1.0),
    le(0b10, "e1", 1.0),
    le(0b11, "e01", 1.0),
];

static LABELS_2: [LabelEntry; 8] = [
    le(0b000, "1", 1.0),
    le(0b001, "e0", 1.0),
    le(0b010, "e1", 1.0),
    le(0b100, "e2", 1.0),
    le(0b110, "e12", 1.0),
    le(0b101, "e20", -1.0),
    le(0b011, "e01", 1.0),
    le(0b111, "e012", 1.0),
];

static LABELS_3: [LabelEntry; 16] = [
    le(0b0000, "1", 1.0),
    le(0b0001, "e0", 1.0),
    le(0b0010, "e1", 1.0),
    le(0b0100, "e2", 1.0),
    le(0b1000, "e3", 1.0),
    le(0b0011, "e10", -1.0),
    le(0b0101, "e20", -1.0),
    le(0b1001, "e30", -1.0),
    le(0b1100, "e23", 1.0),
    le(0b1010, "e31", -1.0),
    le(0b0110, "e12", 1.0),
    le(0b1110, "e123", 1.0),
    le(0b1101, "e320", -1.0),
    le(0b1011, "e130", 1.0),
    le(0b0111, "e210", -1.0),
    le(0b1111, "e0123", 1.0),
];

static LABELS_4: [LabelEntry; 32] = [
    le(0b00000, "1", 1.0),
    le(0b00001, "e0", 1.0),
    le(0b00010, "e1", 1.0),
    le(0b00100, "e2", 1.0),
    le(0b01000, "e3", 1.0),
    le(0b10000, "e4", 1.0),
    le(0b00011, "e10", -1.0),
    le(0b00101, "e20", -1.0),
    le(0b01001, "e30", -1.0),
    le(0b10001, "e40", -1.0),
    le(0b01100, "e23", 1.0),
    le(0b01010, "e31", -1.0),
    le(0b00110, "e12", 1.0),
    le(0b10010, "e41", -1.0),
    le(0b10100, "e42", -1.0),
    le(0b11000, "e43", -1.0),
    le(0b11100, "e234", 1.0),
    le(0b11010, "e314", -1.0),
    le(0b10110, "e124", 1.0),
    le(0b01110, "e321", -1.0),
    le(0b10011, "e410", -1.0),
    le(0b10101, "e420", -1.0),
    le(0b11001, "e430", -1.0),
    le(0b01101, "e230", 1.0),
    le(0b01011, "e310", -1.0),
    le(0b00111, "e120", 1.0),
    le(0b11110, "e1234", 1.0),
    le(0b11101, "e2340", -1.0),
    le(0b11011, "e3140", 1.0),
    le(0b10111, "e1240", -1.0),
    le(0b01111, "e3210", 1.0),
    le(0b11111, "e01234", 1.0),
];

pub fn label_table(n: u8) -> &'static [LabelEntry] {
    match n {
        1 => &LABELS_1,
        2 => &LABELS_2,
        3 => &LABELS_3,
        4 => &LABELS_4,
        _ => panic!("dimension out of range"),
    }
}

/// Display label for a canonical blade: returns (label, sign) with
/// `e_mask = sign * label-blade`. Scalar mask returns ("1", 1).
pub fn blade_label(n: u8, mask: u16, side: Side) -> (String, f64) {
    let entry = label_table(n)
        .iter()
        .find(|e| e.mask == mask)
        .expect("mask in range");
    let label = match side {
        Side::Dual => entry.label.to_string(),
        Side::Target => entry.label.to_uppercase(),
    };
    (label, entry.sign)
}

/// Parse an index string like "210" after the e/E: returns the canonical
/// mask and the permutation sign relating the written order to ascending
/// order. Rejects repeated or out-of-range indices.
pub fn parse_blade_label(indices: &str, n: u8) -> Result<(u16, f64), AlgebraError> {
    let mut mask: u16 = 0;
    let mut inversions = 0u32;
    let mut seen: Vec<u8> = Vec::with_capacity(indices.len());
    for ch in indices.chars() {
        let d = ch
            .to_digit(10)
            .ok_or_else(|| AlgebraError::Parse(format!("bad blade index '{ch}'")))? as u8;
        if d > n {
            return Err(AlgebraError::Parse(format!(
                "blade index {d} out of range for dimension {n}"
            )));
        }
        if mask & (1 << d) != 0 {
            return Err(AlgebraError::Parse(format!("repeated blade index {d}")));
        }
        inversions += seen.iter().filter(|&&p| p > d).count() as u32;
        seen.push(d);
        mask |= 1 << d;
    }
    let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
    Ok((mask, sign))
}
