//! Elements of the cyclotomic field Q(ζ_p).
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{p-2}` as a vector of
//! integer numerators over one common positive denominator. The relation
//! `ζ^{p-1} = -(1 + ζ + … + ζ^{p-2})` is applied after every operation, so
//! equal field elements always have equal representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::modular::{check_odd_prime, reduce};
use super::qpoly::QPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElt {
    p: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycElt {
    pub fn zero(p: u32) -> Self {
        CycElt { p, num: vec![BigInt::zero(); p as usize - 1], den: BigInt::one() }
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    pub fn from_int(p: u32, n: i64) -> Self {
        let mut x = Self::zero(p);
        x.num[0] = BigInt::from(n);
        x
    }

    pub fn from_rational(p: u32, q: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); p as usize - 1];
        num[0] = q.numer().clone();
        Self::normalized(p, num, q.denom().clone())
    }

    /// ζ_p^k for any integer `k`.
    pub fn zeta_pow(p: u32, k: i64) -> Self {
        let mut buf = vec![BigInt::zero(); p as usize];
        buf[reduce(k, p) as usize] = BigInt::one();
        Self::from_cyclic(p, buf, BigInt::one())
    }

    /// Σ_k counts[k]·ζ^k over all exponents `k` in `0..p`.
    pub fn from_exponent_counts(p: u32, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), p as usize, "one count per exponent 0..p");
        let buf = counts.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_cyclic(p, buf, BigInt::one())
    }

    /// Builds an element from its `p-1` power-basis coefficients.
    pub fn from_coeffs(p: u32, coeffs: &[BigRational]) -> Result<Self> {
        let p = check_odd_prime(p as u64)?;
        if coeffs.len() != p as usize - 1 {
            return Err(Error::ShapeMismatch(format!(
                "expected {} coefficients for p={p}, got {}",
                p - 1,
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self::normalized(p, num, den))
    }

    /// Reduces a length-`p` vector (exponents `0..p`) into canonical form.
    fn from_cyclic(p: u32, mut buf: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert_eq!(buf.len(), p as usize);
        let top = buf.pop().expect("p > 0");
        if !top.is_zero() {
            for c in buf.iter_mut() {
                *c -= &top;
            }
        }
        Self::normalized(p, buf, den)
    }

    fn normalized(p: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        if num.iter().all(|c| c.is_zero()) {
            return CycElt { p, num, den: BigInt::one() };
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                for c in num.iter_mut() {
                    *c /= &g;
                }
                den /= &g;
            }
        }
        CycElt { p, num, den }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Power-basis coefficients `c_0, …, c_{p-2}`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|n| BigRational::new(n.clone(), self.den.clone())).collect()
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    /// Common denominator of the power-basis coefficients (always positive).
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Whether every power-basis coefficient is an integer, i.e. the element
    /// lies in Z[ζ_p].
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The element as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn check_same(&self, other: &CycElt) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::PrimeMismatch { left: self.p, right: other.p })
        }
    }

    pub fn try_add(&self, other: &CycElt) -> Result<CycElt> {
        self.check_same(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &CycElt) -> Result<CycElt> {
        self.check_same(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &CycElt) -> Result<CycElt> {
        self.check_same(other)?;
        Ok(self.product(other))
    }

    fn combine(&self, other: &CycElt, subtract: bool) -> CycElt {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if subtract { -other } else { other.clone() };
        }
        let (num, den) = if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| if subtract { a - b } else { a + b }).collect();
            (num, self.den.clone())
        } else {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let (x, y) = (a * &other.den, b * &self.den);
                    if subtract {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect();
            (num, &self.den * &other.den)
        };
        Self::normalized(self.p, num, den)
    }

    fn product(&self, other: &CycElt) -> CycElt {
        let p = self.p as usize;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut buf = vec![BigInt::zero(); p];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = if i + j >= p { i + j - p } else { i + j };
                buf[k] += a * b;
            }
        }
        Self::from_cyclic(self.p, buf, &self.den * &other.den)
    }

    pub fn scale(&self, q: &BigRational) -> CycElt {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::normalized(self.p, num, &self.den * q.denom())
    }

    pub fn scale_int(&self, n: i64) -> CycElt {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Multiplicative inverse, computed by the extended Euclidean algorithm
    /// in Q[x] modulo the p-th cyclotomic polynomial.
    pub fn inv(&self) -> Result<CycElt> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.p, &q.recip()));
        }
        let phi = QPoly(vec![BigRational::one(); self.p as usize]);
        let inv = QPoly(self.coeffs())
            .inverse_mod(&phi)
            .ok_or_else(|| Error::Consistency("cyclotomic polynomial is irreducible".into()))?;
        let mut coeffs = inv.0;
        coeffs.resize(self.p as usize - 1, BigRational::zero());
        Self::from_coeffs(self.p, &coeffs)
    }

    pub fn pow(&self, mut e: u64) -> CycElt {
        let mut acc = Self::one(self.p);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Applies the automorphism ζ ↦ ζ^j. `j` must be a unit modulo p.
    pub(crate) fn substitute(&self, j: u32) -> CycElt {
        let p = self.p as usize;
        let mut buf = vec![BigInt::zero(); p];
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                buf[k * j as usize % p] += c;
            }
        }
        Self::from_cyclic(self.p, buf, self.den.clone())
    }

    /// Value under the complex embedding ζ ↦ e^{2πi/p}, as (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let angle = 2.0 * std::f64::consts::PI * k as f64 / self.p as f64;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }

    /// Terms `(coefficient, exponent)` with nonzero coefficient, highest
    /// exponent first.
    fn terms(&self) -> Vec<(BigRational, usize)> {
        (0..self.num.len()).rev().filter(|&k| !self.num[k].is_zero()).map(|k| (self.coeff(k), k)).collect()
    }

    fn render(&self, f: &mut impl fmt::Write, latex: bool) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, k)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let power = match (*k, latex) {
                (0, _) => String::new(),
                (1, true) => format!("\\zeta_{{{}}}", self.p),
                (k, true) => format!("\\zeta_{{{}}}^{{{k}}}", self.p),
                (1, false) => "z".to_string(),
                (k, false) => format!("z^{k}"),
            };
            let coef = if latex && !mag.is_integer() {
                format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
            } else {
                mag.to_string()
            };
            match (power.is_empty(), mag.is_one()) {
                (true, _) => f.write_str(&coef)?,
                (false, true) => f.write_str(&power)?,
                (false, false) if latex => write!(f, "{coef} {power}")?,
                (false, false) => write!(f, "{coef}*{power}")?,
            }
        }
        Ok(())
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        self.render(&mut s, true).expect("writing to a String");
        s
    }
}

impl fmt::Display for CycElt {
    /// Plain-text rendering with `z` standing for ζ_p, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s, false)?;
        f.write_str(&s)
    }
}

impl fmt::Debug for CycElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElt[p={}]({})", self.p, self)
    }
}

impl Add for &CycElt {
    type Output = CycElt;
    fn add(self, rhs: &CycElt) -> CycElt {
        self.try_add(rhs).expect("cyclotomic addition")
    }
}

impl Sub for &CycElt {
    type Output = CycElt;
    fn sub(self, rhs: &CycElt) -> CycElt {
        self.try_sub(rhs).expect("cyclotomic subtraction")
    }
}

impl Mul for &CycElt {
    type Output = CycElt;
    fn mul(self, rhs: &CycElt) -> CycElt {
        self.try_mul(rhs).expect("cyclotomic multiplication")
    }
}

impl Neg for &CycElt {
    type Output = CycElt;
    fn neg(self) -> CycElt {
        CycElt { p: self.p, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycElt {
    type Output = CycElt;
    fn neg(self) -> CycElt {
        -&self
    }
}

pub(crate) fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl Serialize for CycElt {
    /// Ordered list of the `p-1` coefficients as `"num/den"` strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs().iter().map(format_rational).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycElt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>().map_err(D::Error::custom)?;
        CycElt::from_coeffs(coeffs.len() as u32 + 1, &coeffs).map_err(D::Error::custom)
    }
}
