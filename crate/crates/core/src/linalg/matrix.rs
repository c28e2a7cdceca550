//! Dense row-major matrices over a [`Ring`].

use std::fmt;

use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

/// Products below this many scalar multiplications stay on the calling thread.
const PARALLEL_WORK: usize = 4096;

impl<R: Ring> Matrix<R> {
    pub fn new(p: u32, rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries cannot fill a {rows}x{cols} matrix", entries.len())));
        }
        if let Some(bad) = entries.iter().find(|e| e.prime() != p) {
            return Err(Error::PrimeMismatch { left: p, right: bad.prime() });
        }
        Ok(Matrix { p, rows, cols, entries })
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { p, rows, cols, entries }
    }

    pub fn from_rows(p: u32, rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(p, r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, entries: vec![R::zero(p); rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        Self::from_fn(p, n, n, |i, j| if i == j { R::one(p) } else { R::zero(p) })
    }

    pub fn diagonal(p: u32, diag: Vec<R>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(p, n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    /// `(row, col, entry)` in row-major order.
    pub fn iter_indexed(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        let cols = self.cols;
        self.entries.iter().enumerate().map(move |(k, e)| (k / cols, k % cols, e))
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        self.entries.chunks(self.cols).map(<[R]>::to_vec).collect()
    }

    fn check_same_prime(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::PrimeMismatch { left: self.p, right: other.p })
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_prime(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let (n, m) = (self.cols, rhs.cols);
        let row_product = |i: usize, out: &mut [R]| {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in out.iter_mut().enumerate() {
                    let b = &rhs.entries[k * m + j];
                    if !b.is_zero() {
                        *slot = slot.plus(&a.times(b));
                    }
                }
            }
        };
        let mut entries = vec![R::zero(self.p); self.rows * m];
        if self.rows * n * m >= PARALLEL_WORK {
            entries.par_chunks_mut(m).enumerate().for_each(|(i, out)| row_product(i, out));
        } else {
            entries.chunks_mut(m).enumerate().for_each(|(i, out)| row_product(i, out));
        }
        Ok(Matrix { p: self.p, rows: self.rows, cols: m, entries })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, R::plus)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, R::minus)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        self.check_same_prime(rhs)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::ShapeMismatch(format!("{}x{} vs {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { p: self.p, rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|e| c.times(e))
    }

    pub fn neg(&self) -> Self {
        self.map(R::negated)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { p: self.p, rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring, E>(
        &self,
        f: impl Fn(&R) -> std::result::Result<S, E>,
    ) -> std::result::Result<Matrix<S>, E> {
        let entries = self.entries.iter().map(f).collect::<std::result::Result<Vec<_>, E>>()?;
        Ok(Matrix { p: self.p, rows: self.rows, cols: self.cols, entries })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.p, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("{}x{} matrix is not square", self.rows, self.cols)))
        }
    }

    pub fn trace(&self) -> Result<R> {
        self.require_square()?;
        Ok((0..self.rows).fold(R::zero(self.p), |acc, i| acc.plus(self.get(i, i))))
    }

    /// trace(self · rhs) without forming the product.
    pub fn trace_of_product(&self, rhs: &Self) -> Result<R> {
        if self.rows != rhs.cols || self.cols != rhs.rows {
            return Err(Error::ShapeMismatch("trace of a non-square product".into()));
        }
        let mut acc = R::zero(self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = rhs.get(k, i);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.plus(&a.times(b));
                }
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.p, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.iter_indexed().all(|(i, j, e)| if i == j { e.is_one() } else { e.is_zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(R::is_zero)
    }

    /// Block-diagonal direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_same_prime(other)?;
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Ok(Self::from_fn(self.p, r, c, |i, j| match (i < self.rows, j < self.cols) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - self.rows, j - self.cols).clone(),
            _ => R::zero(self.p),
        }))
    }

    /// Returns the permutation `π` with `self[i][π(i)] = 1` and zeros elsewhere,
    /// or `None` when the matrix is not a permutation matrix.
    pub fn detect_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut perm = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for i in 0..n {
            let mut hit = None;
            for (j, e) in self.row(i).iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if !e.is_one() || hit.is_some() {
                    return None;
                }
                hit = Some(j);
            }
            let j = hit?;
            if std::mem::replace(&mut seen[j], true) {
                return None;
            }
            perm.push(j);
        }
        Some(perm)
    }

    /// The matrix with ones at `(i, perm[i])`.
    pub fn permutation(p: u32, perm: &[usize]) -> Self {
        let n = perm.len();
        Self::from_fn(p, n, n, |i, j| if perm[i] == j { R::one(p) } else { R::zero(p) })
    }

    /// First entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((0, 0));
        }
        self.entries.iter().zip(&other.entries).position(|(a, b)| a != b).map(|k| (k / self.cols, k % self.cols))
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix[p={}, {}x{}]", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc<R> {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<R>>,
}

impl<R: Ring + Serialize> Serialize for Matrix<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDoc { p: self.p, rows: self.rows, cols: self.cols, entries: self.to_rows() }.serialize(serializer)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for Matrix<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = MatrixDoc::<R>::deserialize(deserializer)?;
        if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
            return Err(D::Error::custom("matrix entries do not match rows/cols"));
        }
        Matrix::from_rows(doc.p, doc.entries).map_err(D::Error::custom)
    }
}
