//! Linear functions on the vectors of one side of the algebra, extended to
//! full multivectors as outermorphisms. A function is stored by the images
//! of the basis vectors; everything else (grade extension, determinant,
//! adjoint, inverse) is derived from those images.

use algebra_core::{outer, AlgebraError, Multivector, Side};
use duality_join::{dual_j, dual_j_inv};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinFuncError {
    #[error("expected one image per basis vector")]
    BadShape,
    #[error("images must be vectors")]
    NotAVector,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("argument lives on the wrong side of the algebra")]
    WrongSide,
    #[error("function is not invertible")]
    NotInvertible,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

type Result<T> = std::result::Result<T, LinFuncError>;

/// A linear map on vectors, stored as the images of e0..en and applied to
/// arbitrary multivectors through the outer product. Scalars are kept fixed.
/// Works on either side of the algebra; the adjoint of a dual-side function
/// lands on the target side and vice versa.
#[derive(Debug, Clone)]
pub struct LinFunc {
    n: u8,
    side: Side,
    images: Vec<Multivector>,
}

impl LinFunc {
    pub fn from_images(images: Vec<Multivector>) -> Result<LinFunc> {
        let first = images.first().ok_or(LinFuncError::BadShape)?;
        let n = first.n();
        let side = first.side();
        if images.len() != usize::from(n) + 1 {
            return Err(LinFuncError::BadShape);
        }
        for m in &images {
            if m.n() != n || m.side() != side {
                return Err(LinFuncError::DimensionMismatch);
            }
            // numerically built images may carry rounding dust in other grades
            let tol = 1e-12 * m.max_abs().max(1.0);
            if m.single_grade(tol).map_or(!m.is_zero(tol), |g| g != 1) {
                return Err(LinFuncError::NotAVector);
            }
        }
        Ok(LinFunc { n, side, images })
    }

    pub fn identity(n: u8, side: Side) -> LinFunc {
        let images = (0..=n).map(|i| Multivector::basis_blade(n, side, 1 << i)).collect();
        LinFunc { n, side, images }
    }

    /// Columns of the grid are the images of the basis vectors.
    pub fn from_matrix(n: u8, side: Side, rows: &[Vec<f64>]) -> Result<LinFunc> {
        let dim = usize::from(n) + 1;
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(LinFuncError::BadShape);
        }
        let images = (0..dim)
            .map(|j| {
                let terms: Vec<(u16, f64)> =
                    (0..dim).map(|i| (1 << i, rows[i][j])).collect();
                Multivector::from_terms(n, side, &terms)
            })
            .collect();
        Ok(LinFunc { n, side, images })
    }

    pub fn matrix_repr(&self) -> Vec<Vec<f64>> {
        let dim = usize::from(self.n) + 1;
        (0..dim)
            .map(|i| (0..dim).map(|j| self.images[j].coeff(1 << i)).collect())
            .collect()
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn images(&self) -> &[Multivector] {
        &self.images
    }

    /// Outermorphism extension: each basis blade is sent to the wedge of the
    /// images of its factors, and scalars stay put.
    pub fn apply(&self, m: &Multivector) -> Result<Multivector> {
        if m.n() != self.n {
            return Err(LinFuncError::DimensionMismatch);
        }
        if m.side() != self.side {
            return Err(LinFuncError::WrongSide);
        }
        let mut out = Multivector::zero(self.n, self.side);
        for mask in 0..m.blade_count() as u16 {
            let c = m.coeff(mask);
            if c == 0.0 {
                continue;
            }
            let mut acc = Multivector::scalar(self.n, self.side, c);
            for i in 0..=self.n {
                if mask & (1 << i) != 0 {
                    acc = outer(&acc, &self.images[usize::from(i)])?;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// The unique scalar by which the function stretches the pseudoscalar.
    pub fn determinant(&self) -> f64 {
        let full = self.images.len() as u32;
        let i = Multivector::pseudoscalar(self.n, self.side);
        self.apply(&i).expect("pseudoscalar matches the function").coeff((1 << full) - 1)
    }

    pub fn trace(&self) -> f64 {
        (0..=self.n).map(|i| self.images[usize::from(i)].coeff(1 << i)).sum()
    }

    /// The function on the opposite side of the algebra implicitly defined
    /// by f(a)[x] = a[adjoint(f)(x)]; its matrix is the transpose.
    pub fn adjoint(&self) -> LinFunc {
        let side = match self.side {
            Side::Dual => Side::Target,
            Side::Target => Side::Dual,
        };
        let images = (0..=self.n)
            .map(|j| {
                let terms: Vec<(u16, f64)> = (0..=self.n)
                    .map(|i| (1u16 << i, self.images[usize::from(i)].coeff(1 << j)))
                    .collect();
                Multivector::from_terms(self.n, side, &terms)
            })
            .collect();
        LinFunc { n: self.n, side, images }
    }

    pub fn compose(&self, first: &LinFunc) -> Result<LinFunc> {
        if first.n != self.n || first.side != self.side {
            return Err(LinFuncError::DimensionMismatch);
        }
        let images = first
            .images
            .iter()
            .map(|v| self.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinFunc { n: self.n, side: self.side, images })
    }

    /// Inverse function, built by routing each basis vector through the
    /// adjoint on the other side of the algebra.
    pub fn inverse(&self) -> Result<LinFunc> {
        let images = (0..=self.n)
            .map(|i| {
                inverse_via_adjoint(self, &Multivector::basis_blade(self.n, self.side, 1 << i))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LinFunc { n: self.n, side: self.side, images })
    }
}

/// Metric-free pairing of a dual vector with a target vector: the sum of the
/// products of matching coordinates.
pub fn bracket(a: &Multivector, x: &Multivector) -> Result<f64> {
    if a.n() != x.n() {
        return Err(LinFuncError::DimensionMismatch);
    }
    if a.side() != Side::Dual || x.side() != Side::Target {
        return Err(LinFuncError::WrongSide);
    }
    Ok((0..=a.n()).map(|i| a.coeff(1 << i) * x.coeff(1 << i)).sum())
}

/// Evaluate the inverse on one multivector without building the whole
/// inverse function: push through duality, apply the adjoint, come back and
/// divide by the determinant.
pub fn inverse_via_adjoint(f: &LinFunc, m: &Multivector) -> Result<Multivector> {
    if f.side != Side::Dual {
        return Err(LinFuncError::WrongSide);
    }
    if m.n() != f.n || m.side() != Side::Dual {
        return Err(LinFuncError::DimensionMismatch);
    }
    let det = f.determinant();
    if det.abs() <= 1e-12 {
        return Err(LinFuncError::NotInvertible);
    }
    let routed = dual_j_inv(&f.adjoint().apply(&dual_j(m)?)?)?;
    Ok(routed.scaled(1.0 / det))
}
