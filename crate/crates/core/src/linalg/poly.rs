use std::fmt;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::exact_number::CycElt;

/// Univariate polynomial over Q(ζ_p), lowest degree first, without trailing
/// zero coefficients.
#[derive(Clone, PartialEq)]
pub struct Polynomial {
    p: u32,
    coeffs: Vec<CycElt>,
}

impl Polynomial {
    pub fn new(p: u32, mut coeffs: Vec<CycElt>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.p() != p) {
            return Err(Error::PrimeMismatch { left: p, right: bad.p() });
        }
        while coeffs.last().is_some_and(CycElt::is_zero) {
            coeffs.pop();
        }
        Ok(Polynomial { p, coeffs })
    }

    /// ∏ (x - root).
    pub fn from_roots(p: u32, roots: &[CycElt]) -> Self {
        let mut coeffs = vec![CycElt::one(p)];
        for root in roots {
            let mut next = vec![CycElt::zero(p); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] - &(c * root);
            }
            coeffs = next;
        }
        Polynomial { p, coeffs }
    }

    pub fn coeffs(&self) -> &[CycElt] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(CycElt::is_one)
    }

    pub fn eval(&self, x: &CycElt) -> CycElt {
        self.coeffs.iter().rev().fold(CycElt::zero(self.p), |acc, c| &(&acc * x) + c)
    }

    /// Substitutes a square matrix by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix<CycElt>) -> Result<Matrix<CycElt>> {
        let n = a.rows();
        let mut acc = Matrix::zeros(self.p, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?.add(&Matrix::identity(self.p, n).scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().enumerate().map(|(i, c)| format!("({c})x^{i}")).collect();
        write!(f, "Polynomial[p={}]({})", self.p, terms.join(" + "))
    }
}
