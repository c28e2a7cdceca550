//! Dense univariate polynomials over Q, used only for inversion modulo the
//! cyclotomic polynomial.

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct QPoly(pub(crate) Vec<BigRational>);

impl QPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        let v = (0..n).map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero)).collect();
        QPoly(v).trim()
    }

    fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly(Vec::new());
        }
        let mut v = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly(v).trim()
    }

    fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        let lead = divisor.0[dd].clone();
        if rem.len() <= dd {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.0.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly(quot).trim(), QPoly(rem).trim())
    }

    /// Inverse of `self` modulo `modulus` via the extended Euclidean algorithm.
    /// Returns `None` when the two polynomials share a factor.
    pub(crate) fn inverse_mod(&self, modulus: &QPoly) -> Option<QPoly> {
        let (mut r0, mut r1) = (modulus.clone(), self.clone().trim());
        let (mut s0, mut s1) = (QPoly(Vec::new()), QPoly(vec![BigRational::one()]));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != 0 {
            return None;
        }
        let c = r0.0[0].clone();
        let (_, s) = s0.div_rem(modulus);
        Some(QPoly(s.0.into_iter().map(|x| x / &c).collect()))
    }
}
