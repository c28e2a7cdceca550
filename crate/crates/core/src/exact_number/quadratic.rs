//! The ring of integers Z[ω] of Q(√εp), ω = (1 + √εp)/2, and recognition of
//! cyclotomic elements that lie in it.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::cyclotomic::CycElt;
use super::galois::{eps_p, sqrt_eps_p, GaloisElt};
use super::modular::{check_odd_prime, legendre};
use crate::error::Result;

/// `a + b·ω` with ω = (1 + √εp)/2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadCoord {
    pub a: i64,
    pub b: i64,
    pub p: u32,
}

/// Why an element of Q(ζ_p) is not in Z[ω].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotInSubring {
    NotTauFixed,
    NotIntegral,
    /// Integral, but a coordinate does not fit in 64 bits.
    OutOfRange,
}

impl fmt::Display for NotInSubring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotInSubring::NotTauFixed => "not fixed by tau",
            NotInSubring::NotIntegral => "not integral",
            NotInSubring::OutOfRange => "coordinates out of range",
        })
    }
}

impl QuadCoord {
    pub fn new(p: u32, a: i64, b: i64) -> Result<Self> {
        let p = check_odd_prime(p as u64)?;
        Ok(QuadCoord { a, b, p })
    }

    pub fn from_int(p: u32, a: i64) -> Self {
        QuadCoord { a, b: 0, p }
    }

    /// `(m + n·√εp)/2`; `m` and `n` must have equal parity.
    pub fn from_halves(p: u32, m: i64, n: i64) -> Self {
        assert!((m - n) % 2 == 0, "(m + n√εp)/2 is integral only when m ≡ n mod 2");
        QuadCoord { a: (m - n) / 2, b: n, p }
    }

    /// `(m, n)` with value `(m + n·√εp)/2`.
    pub fn halves(&self) -> (i64, i64) {
        (2 * self.a + self.b, self.b)
    }

    /// (εp - 1)/4, the constant term of ω² = ω + (εp - 1)/4.
    pub fn omega_norm_shift(p: u32) -> i64 {
        (eps_p(p) - 1) / 4
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn add(&self, o: &QuadCoord) -> QuadCoord {
        debug_assert_eq!(self.p, o.p);
        QuadCoord { a: checked(self.a.checked_add(o.a)), b: checked(self.b.checked_add(o.b)), p: self.p }
    }

    pub fn sub(&self, o: &QuadCoord) -> QuadCoord {
        debug_assert_eq!(self.p, o.p);
        QuadCoord { a: checked(self.a.checked_sub(o.a)), b: checked(self.b.checked_sub(o.b)), p: self.p }
    }

    pub fn neg(&self) -> QuadCoord {
        QuadCoord { a: -self.a, b: -self.b, p: self.p }
    }

    pub fn mul(&self, o: &QuadCoord) -> QuadCoord {
        debug_assert_eq!(self.p, o.p);
        let k = Self::omega_norm_shift(self.p) as i128;
        let (a, b, c, d) = (self.a as i128, self.b as i128, o.a as i128, o.b as i128);
        let re = a * c + b * d * k;
        let om = a * d + b * c + b * d;
        QuadCoord { a: narrow(re), b: narrow(om), p: self.p }
    }

    /// The Galois conjugate √εp ↦ -√εp, i.e. ω ↦ 1 - ω.
    pub fn conjugate(&self) -> QuadCoord {
        QuadCoord { a: self.a + self.b, b: -self.b, p: self.p }
    }

    /// ω as an element of Q(ζ_p): 1 + Σ_{k square} ζ^k.
    pub fn omega_cyc(p: u32) -> CycElt {
        let mut counts = vec![0i64; p as usize];
        counts[0] = 1;
        for k in 1..p {
            if legendre(k as i64, p) == 1 {
                counts[k as usize] += 1;
            }
        }
        CycElt::from_exponent_counts(p, &counts)
    }

    pub fn to_cyc(&self) -> CycElt {
        let omega = Self::omega_cyc(self.p);
        &CycElt::from_int(self.p, self.a) + &omega.scale_int(self.b)
    }

    fn render(&self, sqrt: &str, half: impl Fn(&str) -> String, times: &str) -> String {
        let (m, n) = self.halves();
        if n == 0 {
            return (m / 2).to_string();
        }
        let lin = |u: i64, v: i64| -> String {
            let coef = match v.abs() {
                1 => sqrt.to_string(),
                k => format!("{k}{times}{sqrt}"),
            };
            match (u, v < 0) {
                (0, false) => coef,
                (0, true) => format!("-{coef}"),
                (u, false) => format!("{u}+{coef}"),
                (u, true) => format!("{u}-{coef}"),
            }
        };
        if n % 2 == 0 {
            lin(m / 2, n / 2)
        } else if m < 0 && n < 0 {
            format!("-{}", half(&lin(-m, -n)))
        } else {
            half(&lin(m, n))
        }
    }

    /// LaTeX rendering: integers as-is, `u±v\sqrt{εp}` when the half-integer
    /// part vanishes, otherwise `\frac{1}{2}(m±n\sqrt{εp})`, pulling out a
    /// leading minus sign when both `m` and `n` are negative.
    pub fn to_latex(&self) -> String {
        let sqrt = format!("\\sqrt{{{}}}", eps_p(self.p));
        self.render(&sqrt, |s| format!("\\frac{{1}}{{2}}({s})"), "")
    }
}

fn checked(x: Option<i64>) -> i64 {
    x.expect("quadratic integer coordinate overflow")
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("quadratic integer coordinate overflow")
}

impl fmt::Display for QuadCoord {
    /// Plain-text rendering such as `(1-sqrt(-7))/2` or `3+sqrt(13)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sqrt = format!("sqrt({})", eps_p(self.p));
        f.write_str(&self.render(&sqrt, |s| format!("({s})/2"), "*"))
    }
}

impl fmt::Debug for QuadCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadCoord[p={}]({} + {}ω = {})", self.p, self.a, self.b, self)
    }
}

/// Expresses `x` in the basis {1, ω} of the ring of integers of Q(√εp).
///
/// `x` must be fixed by τ; its coordinates are then recovered from the 2×2
/// system `x = a + bω`, `γ(x) = a + b(1 - ω)`, and accepted only when both
/// are integers.
pub fn to_quadratic(x: &CycElt) -> std::result::Result<QuadCoord, NotInSubring> {
    let p = x.p();
    let tau = GaloisElt::tau(p);
    let fixed = tau.apply(x).map_err(|_| NotInSubring::NotTauFixed)?;
    if &fixed != x {
        return Err(NotInSubring::NotTauFixed);
    }
    let conj = GaloisElt::generator(p).apply(x).map_err(|_| NotInSubring::NotTauFixed)?;
    // x - γ(x) = b·√εp, so b = (x - γ(x))·√εp / (εp).
    let root = sqrt_eps_p(p).map_err(|_| NotInSubring::NotTauFixed)?;
    let b = (&(x - &conj) * &root).scale(&BigRational::new(1.into(), eps_p(p).into()));
    // x + γ(x) = 2a + b.
    let sum = x + &conj;
    let (Some(b), Some(sum)) = (b.as_rational(), sum.as_rational()) else {
        return Err(NotInSubring::NotTauFixed);
    };
    let two_a = sum - &b;
    let a = two_a / BigRational::from_integer(BigInt::from(2));
    if !a.is_integer() || !b.is_integer() {
        return Err(NotInSubring::NotIntegral);
    }
    let to_i64 = |q: &BigRational| q.to_integer().to_i64();
    match (to_i64(&a), to_i64(&b)) {
        (Some(a), Some(b)) => Ok(QuadCoord { a, b, p }),
        _ => Err(NotInSubring::OutOfRange),
    }
}
