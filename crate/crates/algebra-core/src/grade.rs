use crate::Multivector;

/// Set of grades 0..=5 as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradeSet(u8);

impl GradeSet {
    pub fn empty() -> GradeSet {
        GradeSet(0)
    }

    pub fn from_grades(grades: &[u8]) -> GradeSet {
        let mut bits = 0u8;
        for &g in grades {
            assert!(g <= 5, "grade out of range");
            bits |= 1 << g;
        }
        GradeSet(bits)
    }

    pub fn contains(self, g: u8) -> bool {
        g <= 5 && self.0 & (1 << g) != 0
    }

    pub fn grades(self) -> Vec<u8> {
        (0..=5).filter(|&g| self.contains(g)).collect()
    }
}

/// Negate the components whose grade lies in `set`, keep the rest.
pub fn grade_sign(m: &Multivector, set: GradeSet) -> Multivector {
    let mut out = m.clone();
    for (mask, c) in out.coeffs_mut().iter_mut().enumerate() {
        if set.contains(mask.count_ones() as u8) {
            *c = -*c;
        }
    }
    out
}

/// Keep only the components whose grade lies in `set`.
pub fn grade_select(m: &Multivector, set: GradeSet) -> Multivector {
    let mut out = m.clone();
    for (mask, c) in out.coeffs_mut().iter_mut().enumerate() {
        if !set.contains(mask.count_ones() as u8) {
            *c = 0.0;
        }
    }
    out
}

/// Reverse: negates grades k with k(k-1)/2 odd, i.e. grades 2 and 3 in the
/// range handled here (grades 4 and 5 keep their sign).
pub fn reverse(m: &Multivector) -> Multivector {
    grade_sign(m, GradeSet::from_grades(&[2, 3]))
}

/// Grade involution: negates the odd grades.
pub fn involute(m: &Multivector) -> Multivector {
    grade_sign(m, GradeSet::from_grades(&[1, 3, 5]))
}
