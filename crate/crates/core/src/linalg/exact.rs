//! Field-specific operations on matrices over Q(ζ_p).

use num_bigint::BigInt;
use num_rational::BigRational;

use super::matrix::Matrix;
use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::exact_number::{CycElt, GaloisElt};

pub type ExactMatrix = Matrix<CycElt>;

impl Matrix<CycElt> {
    /// Exact inverse by Gauss–Jordan elimination, pivoting on the first
    /// nonzero entry of each column.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!("{}x{} matrix has no inverse", self.rows(), self.cols())));
        }
        let n = self.rows();
        let p = self.p();
        let mut a = self.to_rows();
        let mut inv = Matrix::<CycElt>::identity(p, n).to_rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = a[col][col].inv()?;
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = &*x * &scale;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for k in 0..n {
                    if !a[col][k].is_zero() {
                        a[r][k] = &a[r][k] - &(&factor * &a[col][k]);
                    }
                    if !inv[col][k].is_zero() {
                        inv[r][k] = &inv[r][k] - &(&factor * &inv[col][k]);
                    }
                }
            }
        }
        Matrix::from_rows(p, inv)
    }

    /// Characteristic polynomial det(xI - A) by the Faddeev–LeVerrier
    /// recurrence.
    pub fn char_poly(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows();
        let p = self.p();
        let mut coeffs = vec![CycElt::zero(p); n + 1];
        coeffs[n] = CycElt::one(p);
        let identity = Matrix::<CycElt>::identity(p, n);
        let mut m = Matrix::<CycElt>::zeros(p, n, n);
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I, c_{n-k} = -tr(A·M_k)/k
            m = self.mul(&m)?.add(&identity.scale(&coeffs[n - k + 1]))?;
            let tr = self.trace_of_product(&m)?;
            coeffs[n - k] = tr.scale(&BigRational::new(BigInt::from(-1), BigInt::from(k)));
        }
        Polynomial::new(p, coeffs)
    }

    /// Applies a field automorphism to every entry.
    pub fn galois(&self, sigma: &GaloisElt) -> Result<Self> {
        self.try_map(|e| sigma.apply(e))
    }

    pub fn to_latex(&self) -> String {
        latex_matrix(self, CycElt::to_latex)
    }
}

pub(crate) fn latex_matrix<R: super::Ring>(m: &Matrix<R>, render: impl Fn(&R) -> String) -> String {
    let rows: Vec<String> =
        (0..m.rows()).map(|i| m.row(i).iter().map(&render).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{bmatrix}}\n{}\n\\end{{bmatrix}}", rows.join(" \\\\\n"))
}

pub fn mat_mul(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    a.mul(b)
}

pub fn mat_inv(a: &ExactMatrix) -> Result<ExactMatrix> {
    a.inverse()
}

pub fn char_poly(a: &ExactMatrix) -> Result<Polynomial> {
    a.char_poly()
}

pub fn galois_matrix(sigma: &GaloisElt, m: &ExactMatrix) -> Result<ExactMatrix> {
    m.galois(sigma)
}

pub fn detect_permutation(m: &ExactMatrix) -> Option<Vec<usize>> {
    m.detect_permutation()
}
