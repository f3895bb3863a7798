use crate::AlgebraError;
use std::ops::{Add, Mul, Neg, Sub};

/// Which of the two algebras an element belongs to. The dual algebra carries
/// the metric; the target algebra is only ever used through metric-free
/// operations (outer product, duality maps, linear functions).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Dual,
    Target,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Dual => Side::Target,
            Side::Target => Side::Dual,
        }
    }
}

/// Dense multivector over the 2^(n+1) basis blades of dimension n.
///
/// Blade indexing: bit i of the mask is set iff basis vector i is a factor,
/// and the blade is taken with its indices ascending. All coefficients are
/// stored against that canonical order; display labels reorder per dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    n: u8,
    side: Side,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero(n: u8, side: Side) -> Multivector {
        Multivector {
            n,
            side,
            coeffs: vec![0.0; 1 << (n + 1)],
        }
    }

    pub fn scalar(n: u8, side: Side, value: f64) -> Multivector {
        let mut m = Multivector::zero(n, side);
        m.coeffs[0] = value;
        m
    }

    /// Canonical basis blade e_mask (ascending index order), coefficient 1.
    pub fn basis_blade(n: u8, side: Side, mask: u16) -> Multivector {
        let mut m = Multivector::zero(n, side);
        m.coeffs[mask as usize] = 1.0;
        m
    }

    pub fn pseudoscalar(n: u8, side: Side) -> Multivector {
        Multivector::basis_blade(n, side, ((1u16 << (n + 1)) - 1) as u16)
    }

    pub fn from_coeffs(n: u8, side: Side, coeffs: Vec<f64>) -> Multivector {
        assert_eq!(coeffs.len(), 1 << (n + 1), "coefficient vector length");
        Multivector { n, side, coeffs }
    }

    /// Convenience builder: sparse (mask, coefficient) terms.
    pub fn from_terms(n: u8, side: Side, terms: &[(u16, f64)]) -> Multivector {
        let mut m = Multivector::zero(n, side);
        for &(mask, c) in terms {
            m.coeffs[mask as usize] += c;
        }
        m
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Number of basis blades, 2^(n+1).
    pub fn blade_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, mask: u16) -> f64 {
        self.coeffs[mask as usize]
    }

    pub fn set(&mut self, mask: u16, value: f64) {
        self.coeffs[mask as usize] = value;
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    /// Reinterpret on the other side, coefficients unchanged. This is the
    /// raw storage move behind the identification map; use duality-join's
    /// `identity_id` for the documented operation.
    pub fn with_side(&self, side: Side) -> Multivector {
        Multivector {
            n: self.n,
            side,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn l1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.n == other.n
            && self.side == other.side
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    pub fn grade_part(&self, k: u8) -> Multivector {
        let mut m = Multivector::zero(self.n, self.side);
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if (mask.count_ones() as u8) == k {
                m.coeffs[mask] = c;
            }
        }
        m
    }

    /// Grades with any coefficient above `tol` in absolute value.
    pub fn support_grades(&self, tol: f64) -> Vec<u8> {
        let mut present = [false; 6];
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if c.abs() > tol {
                present[mask.count_ones() as usize] = true;
            }
        }
        (0..=self.n + 1).filter(|&g| present[g as usize]).collect()
    }

    /// Homogeneous grade if exactly one grade is present; scalar zero has no
    /// grade and returns None.
    pub fn single_grade(&self, tol: f64) -> Option<u8> {
        let grades = self.support_grades(tol);
        if grades.len() == 1 {
            Some(grades[0])
        } else {
            None
        }
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// True when every coefficient outside grade 0 is below `tol`.
    pub fn is_scalar(&self, tol: f64) -> bool {
        self.coeffs[1..].iter().all(|c| c.abs() <= tol)
    }

    pub fn check_compatible(&self, other: &Multivector) -> Result<(), AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DimensionMismatch);
        }
        if self.side != other.side {
            return Err(AlgebraError::SideMismatch);
        }
        Ok(())
    }

    pub fn scaled(&self, s: f64) -> Multivector {
        Multivector {
            n: self.n,
            side: self.side,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.n, rhs.n);
        assert_eq!(self.side, rhs.side);
        Multivector {
            n: self.n,
            side: self.side,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.n, rhs.n);
        assert_eq!(self.side, rhs.side);
        Multivector {
            n: self.n,
            side: self.side,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scaled(-1.0)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scaled(rhs)
    }
}
