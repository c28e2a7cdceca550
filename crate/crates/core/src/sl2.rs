//! SL₂(F_p): group arithmetic, words in the generators 𝔰 = [0 -1; 1 0] and
//! 𝔱 = [1 1; 0 1], evaluation of a model at any element, and exact
//! character sums.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_number::modular::{check_odd_prime, mod_inv, reduce};
use crate::linalg::{Matrix, Ring};

/// Element `[a b; c d]` of SL₂(F_p), entries in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sl2Elt {
    pub p: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Sl2Elt {
    pub fn new(p: u64, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let p = check_odd_prime(p)?;
        let g = Self::raw(p, a, b, c, d);
        let det = (g.a as u64 * g.d as u64 + (p - g.b) as u64 * g.c as u64) % p as u64;
        if det != 1 {
            return Err(Error::InvalidArgument(format!("[{a} {b}; {c} {d}] has determinant {det} mod {p}")));
        }
        Ok(g)
    }

    fn raw(p: u32, a: i64, b: i64, c: i64, d: i64) -> Self {
        Sl2Elt { p, a: reduce(a, p), b: reduce(b, p), c: reduce(c, p), d: reduce(d, p) }
    }

    pub fn identity(p: u32) -> Self {
        Self::raw(p, 1, 0, 0, 1)
    }

    pub fn s(p: u32) -> Self {
        Self::raw(p, 0, -1, 1, 0)
    }

    pub fn t(p: u32) -> Self {
        Self::raw(p, 1, 1, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p)
    }

    pub fn mul(&self, h: &Sl2Elt) -> Sl2Elt {
        assert_eq!(self.p, h.p, "SL2 elements over different primes");
        let p = self.p as u64;
        let m = |x: u32, y: u32, z: u32, w: u32| ((x as u64 * y as u64 + z as u64 * w as u64) % p) as u32;
        Sl2Elt {
            p: self.p,
            a: m(self.a, h.a, self.b, h.c),
            b: m(self.a, h.b, self.b, h.d),
            c: m(self.c, h.a, self.d, h.c),
            d: m(self.c, h.b, self.d, h.d),
        }
    }

    pub fn inv(&self) -> Sl2Elt {
        let p = self.p;
        Sl2Elt { p, a: self.d, b: (p - self.b) % p, c: (p - self.c) % p, d: self.a }
    }

    pub fn pow(&self, e: i64) -> Sl2Elt {
        let base = if e < 0 { self.inv() } else { *self };
        let mut acc = Self::identity(self.p);
        let mut sq = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// Dense index in `0..p⁴`, used for lookup tables.
    fn key(&self) -> usize {
        let p = self.p as usize;
        ((self.a as usize * p + self.b as usize) * p + self.c as usize) * p + self.d as usize
    }
}

impl fmt::Display for Sl2Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}] mod {}", self.a, self.b, self.c, self.d, self.p)
    }
}

pub fn sl2_mul(g: &Sl2Elt, h: &Sl2Elt) -> Sl2Elt {
    g.mul(h)
}

pub fn sl2_inv(g: &Sl2Elt) -> Sl2Elt {
    g.inv()
}

/// `|SL₂(F_p)| = p(p² - 1)`.
pub fn group_order(p: u32) -> u64 {
    let p = p as u64;
    p * (p * p - 1)
}

/// All elements, ordered lexicographically by `(a, b, c, d)`.
pub fn enumerate(p: u32) -> Vec<Sl2Elt> {
    let mut out = Vec::with_capacity(group_order(p) as usize);
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let g = Sl2Elt { p, a, b, c, d };
                    if (a as u64 * d as u64 + (p - b) as u64 * c as u64) % p as u64 == 1 {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gen {
    S,
    T,
}

/// Product of generator powers, left to right. Exponents of 𝔰 live in
/// `1..4` and those of 𝔱 in `1..p`; zero powers are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenWord {
    pub p: u32,
    pub letters: Vec<(Gen, u32)>,
}

impl GenWord {
    pub fn empty(p: u32) -> Self {
        GenWord { p, letters: Vec::new() }
    }

    pub fn push(&mut self, gen: Gen, exp: i64) {
        let modulus = match gen {
            Gen::S => 4,
            Gen::T => self.p,
        };
        let mut e = reduce(exp, modulus);
        if let Some((last, le)) = self.letters.last().copied() {
            if last == gen {
                self.letters.pop();
                e = (e + le) % modulus;
            }
        }
        if e != 0 {
            self.letters.push((gen, e));
        }
    }

    pub fn then(mut self, gen: Gen, exp: i64) -> Self {
        self.push(gen, exp);
        self
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn eval(&self) -> Sl2Elt {
        self.letters.iter().fold(Sl2Elt::identity(self.p), |acc, &(gen, e)| {
            let g = match gen {
                Gen::S => Sl2Elt::s(self.p),
                Gen::T => Sl2Elt::t(self.p),
            };
            acc.mul(&g.pow(e as i64))
        })
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|(g, e)| format!("{}^{e}", if *g == Gen::S { 's' } else { 't' })).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Writes `g` as `𝔱^α 𝔰 𝔱^c 𝔰 𝔱^γ` when its lower-left entry `c` is nonzero,
/// and otherwise through the upper-triangular cases.
pub fn word_decompose(g: &Sl2Elt) -> GenWord {
    let p = g.p;
    let inv = |x: u32| mod_inv(x, p).expect("nonzero mod p") as i64;
    let (a, b, c, d) = (g.a as i64, g.b as i64, g.c as i64, g.d as i64);
    if c != 0 {
        let ci = inv(g.c);
        return GenWord::empty(p)
            .then(Gen::T, (a + 1) * ci)
            .then(Gen::S, 1)
            .then(Gen::T, c)
            .then(Gen::S, 1)
            .then(Gen::T, (d + 1) * ci);
    }
    if a == 1 {
        return GenWord::empty(p).then(Gen::T, b);
    }
    if a == p as i64 - 1 {
        return GenWord::empty(p).then(Gen::S, 2).then(Gen::T, -b);
    }
    // g·𝔰 has lower-left entry d ≠ 0, and 𝔰⁻¹ = 𝔰³.
    let mut w = word_decompose(&g.mul(&Sl2Elt::s(p)));
    w.push(Gen::S, 3);
    w
}

/// Cached powers `S^k` (`k < 4`) and `T^k` (`k < p`) of a model.
pub struct Evaluator<R: Ring> {
    p: u32,
    dim: usize,
    s_pows: Vec<Matrix<R>>,
    t_pows: Vec<Matrix<R>>,
}

impl<R: Ring> Evaluator<R> {
    pub fn new(s: &Matrix<R>, t: &Matrix<R>) -> Result<Self> {
        let p = s.p();
        if !s.is_square() || s.rows() != t.rows() || !t.is_square() {
            return Err(Error::ShapeMismatch("S and T must be square of equal size".into()));
        }
        let powers = |m: &Matrix<R>, n: u32| -> Result<Vec<Matrix<R>>> {
            let mut out = vec![Matrix::identity(p, m.rows())];
            for k in 1..n as usize {
                out.push(out[k - 1].mul(m)?);
            }
            Ok(out)
        };
        Ok(Evaluator { p, dim: s.rows(), s_pows: powers(s, 4)?, t_pows: powers(t, p)? })
    }

    fn letter(&self, gen: Gen, e: u32) -> &Matrix<R> {
        match gen {
            Gen::S => &self.s_pows[e as usize],
            Gen::T => &self.t_pows[e as usize],
        }
    }

    pub fn eval_word(&self, w: &GenWord) -> Result<Matrix<R>> {
        let mut acc = Matrix::identity(self.p, self.dim);
        for &(gen, e) in &w.letters {
            acc = acc.mul(self.letter(gen, e))?;
        }
        Ok(acc)
    }

    pub fn evaluate(&self, g: &Sl2Elt) -> Result<Matrix<R>> {
        self.eval_word(&word_decompose(g))
    }

    /// `trace(ρ(g))`; the last factor is folded into the trace.
    pub fn character(&self, g: &Sl2Elt) -> Result<R> {
        let w = word_decompose(g);
        match w.letters.split_last() {
            None => self.s_pows[0].trace(),
            Some((&(gen, e), rest)) => {
                let mut acc: Option<Matrix<R>> = None;
                for &(g2, e2) in rest {
                    let m = self.letter(g2, e2);
                    acc = Some(match acc {
                        None => m.clone(),
                        Some(a) => a.mul(m)?,
                    });
                }
                let last = self.letter(gen, e);
                match acc {
                    None => last.trace(),
                    Some(a) => a.trace_of_product(last),
                }
            }
        }
    }
}

pub fn evaluate<R: Ring>(s: &Matrix<R>, t: &Matrix<R>, g: &Sl2Elt) -> Result<Matrix<R>> {
    Evaluator::new(s, t)?.evaluate(g)
}

/// Character values over the whole group, aligned with [`enumerate`].
pub fn character_table<R: Ring>(s: &Matrix<R>, t: &Matrix<R>, cap: u64) -> Result<Vec<(Sl2Elt, R)>> {
    let p = s.p();
    let order = group_order(p);
    if order > cap {
        return Err(Error::GroupTooLarge { order, cap });
    }
    let ev = Evaluator::new(s, t)?;
    enumerate(p).into_par_iter().map(|g| ev.character(&g).map(|x| (g, x))).collect()
}

/// `(1/|G|) Σ_g χ(g)·χ(g⁻¹)`; equals 1 exactly when the model is irreducible.
pub fn character_inner_product<R: Ring>(s: &Matrix<R>, t: &Matrix<R>, cap: u64) -> Result<BigRational> {
    let table = character_table(s, t, cap)?;
    inner_product_of_table(&table)
}

pub fn inner_product_of_table<R: Ring>(table: &[(Sl2Elt, R)]) -> Result<BigRational> {
    let Some((first, _)) = table.first() else {
        return Err(Error::InvalidArgument("empty character table".into()));
    };
    let p = first.p;
    let index: HashMap<usize, usize> = table.iter().enumerate().map(|(i, (g, _))| (g.key(), i)).collect();
    let total = table
        .par_iter()
        .map(|(g, x)| {
            let j = index[&g.inv().key()];
            x.times(&table[j].1)
        })
        .reduce(|| R::zero(p), |a, b| a.plus(&b));
    let total =
        total.as_rational().ok_or_else(|| Error::Consistency(format!("character sum {total} is not rational")))?;
    Ok(total / BigRational::from_integer(BigInt::from(table.len())))
}
