//! The finite Heisenberg group attached to a quadratic form on Z/p, its
//! p-dimensional Schrödinger-type representation σ, and the automorphisms
//! ψ_s, ψ_t whose intertwiners are the Weil generators.
//!
//! The central coordinate of a [`HeisElt`] is stored as an exponent of ζ_p,
//! so the group law is integer arithmetic modulo p:
//! `(λ₁, x₁, y₁)(λ₂, x₂, y₂) = (λ₁ + λ₂ + B(x₁, y₂), x₁ + x₂, y₁ + y₂)` with
//! `B(x, y) = 2c·x·y`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_number::modular::{check_odd_prime, epsilon, legendre, reduce, smallest_nonresidue};
use crate::exact_number::{gauss_sum, CycElt};
use crate::linalg::{ExactMatrix, Matrix};
use crate::report::{Check, Report};

/// The quadratic form `Q(x) = c·x²/p` on Z/p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadForm {
    p: u32,
    c: u32,
}

impl QuadForm {
    pub fn new(p: u64, c: i64) -> Result<Self> {
        let p = check_odd_prime(p)?;
        let c_red = reduce(c, p);
        if c_red == 0 {
            return Err(Error::InvalidUnit { p, c });
        }
        Ok(QuadForm { p, c: c_red })
    }

    /// Q₁(x) = x²/p.
    pub fn q1(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// Q₂(x) = c·x²/p with `c` the smallest quadratic non-residue.
    pub fn q2(p: u64) -> Result<Self> {
        let p = check_odd_prime(p)?;
        Ok(QuadForm { p, c: smallest_nonresidue(p) })
    }

    /// The form for Weil character `index` (1 or 2). An explicit `c` must lie
    /// in the matching square class.
    pub fn for_character(p: u64, index: u8, c: Option<i64>) -> Result<Self> {
        let form = match (index, c) {
            (1, None) => Self::q1(p)?,
            (2, None) => Self::q2(p)?,
            (1 | 2, Some(c)) => Self::new(p, c)?,
            _ => return Err(Error::InvalidArgument(format!("form must be 1 or 2, got {index}"))),
        };
        if form.character_index() != index {
            return Err(Error::InvalidArgument(format!(
                "c = {} is a {} modulo {}, which does not match form {index}",
                form.c,
                if index == 1 { "non-residue" } else { "residue" },
                form.p
            )));
        }
        Ok(form)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    /// r = (p - 1)/2.
    pub fn r(&self) -> usize {
        (self.p as usize - 1) / 2
    }

    pub fn epsilon(&self) -> i64 {
        epsilon(self.p)
    }

    /// 1 when `c` is a square modulo p, 2 otherwise.
    pub fn character_index(&self) -> u8 {
        if legendre(self.c as i64, self.p) == 1 {
            1
        } else {
            2
        }
    }

    /// Exponent of ζ_p in e^{2πiQ(x)}.
    pub fn q_exp(&self, x: i64) -> u32 {
        let x = reduce(x, self.p) as u64;
        (self.c as u64 * x * x % self.p as u64) as u32
    }

    /// Exponent of ζ_p in e^{2πiB(x,y)}.
    pub fn b_exp(&self, x: i64, y: i64) -> u32 {
        let (x, y) = (reduce(x, self.p) as u64, reduce(y, self.p) as u64);
        (2 * self.c as u64 * x % self.p as u64 * y % self.p as u64) as u32
    }

    /// g_Q = Σ_x ζ_p^{c·x²} = (c|p)·√εp.
    pub fn gauss_sum(&self) -> CycElt {
        gauss_sum(self.p, self.c as i64).expect("validated form")
    }

    pub fn theta(&self, j: i64) -> CycElt {
        CycElt::zeta_pow(self.p, self.q_exp(j) as i64)
    }
}

/// `(λ, x, y)` with λ stored as the exponent of ζ_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeisElt {
    pub lam: u32,
    pub x: u32,
    pub y: u32,
    pub p: u32,
}

impl HeisElt {
    pub fn new(q: &QuadForm, lam: i64, x: i64, y: i64) -> Self {
        let p = q.p;
        HeisElt { lam: reduce(lam, p), x: reduce(x, p), y: reduce(y, p), p }
    }

    pub fn identity(q: &QuadForm) -> Self {
        Self::new(q, 0, 0, 0)
    }

    /// The three generators `(ζ_p, 0, 0)`, `(1, 1, 0)`, `(1, 0, 1)`.
    pub fn generators(q: &QuadForm) -> [HeisElt; 3] {
        [Self::new(q, 1, 0, 0), Self::new(q, 0, 1, 0), Self::new(q, 0, 0, 1)]
    }

    pub fn all(q: &QuadForm) -> impl Iterator<Item = HeisElt> + '_ {
        let p = q.p as i64;
        (0..p).flat_map(move |l| (0..p).flat_map(move |x| (0..p).map(move |y| HeisElt::new(q, l, x, y))))
    }
}

pub fn heis_mul(q: &QuadForm, h1: &HeisElt, h2: &HeisElt) -> HeisElt {
    let lam = h1.lam as i64 + h2.lam as i64 + q.b_exp(h1.x as i64, h2.y as i64) as i64;
    HeisElt::new(q, lam, h1.x as i64 + h2.x as i64, h1.y as i64 + h2.y as i64)
}

/// `(λ, x, y)⁻¹ = (-λ + B(x, y), -x, -y)`.
pub fn heis_inv(q: &QuadForm, h: &HeisElt) -> HeisElt {
    let lam = -(h.lam as i64) + q.b_exp(h.x as i64, h.y as i64) as i64;
    HeisElt::new(q, lam, -(h.x as i64), -(h.y as i64))
}

/// ψ_s(λ, x, y) = (λ·e^{2πiB(-x,y)}, -y, x).
pub fn psi_s(q: &QuadForm, h: &HeisElt) -> HeisElt {
    let lam = h.lam as i64 + q.b_exp(-(h.x as i64), h.y as i64) as i64;
    HeisElt::new(q, lam, -(h.y as i64), h.x as i64)
}

/// ψ_t(λ, x, y) = (λ·e^{2πiQ(y)}, x + y, y).
pub fn psi_t(q: &QuadForm, h: &HeisElt) -> HeisElt {
    let lam = h.lam as i64 + q.q_exp(h.y as i64) as i64;
    HeisElt::new(q, lam, h.x as i64 + h.y as i64, h.y as i64)
}

/// σ(1, 1, 0) = diag(ζ^{B(1, j)}).
fn modulation(q: &QuadForm, power: u32) -> ExactMatrix {
    let p = q.p;
    Matrix::diagonal(p, (0..p as i64).map(|j| CycElt::zeta_pow(p, (q.b_exp(1, j) * power) as i64)).collect())
}

/// σ(1, 0, 1)^power: δ_j ↦ δ_{j + power}.
fn translation(q: &QuadForm, power: u32) -> ExactMatrix {
    let p = q.p as usize;
    let perm: Vec<usize> = (0..p).map(|i| (i + p - power as usize) % p).collect();
    Matrix::permutation(q.p, &perm)
}

/// σ(h) on the basis of delta functions, with φ₁ trivial and ν_p acting by
/// its natural character.
///
/// Uses `h = (λ - B(x, y), 0, 0)·(0, x, 0)·(0, 0, y)`.
pub fn sigma_matrix(q: &QuadForm, h: &HeisElt) -> ExactMatrix {
    let p = q.p;
    let central = h.lam as i64 - q.b_exp(h.x as i64, h.y as i64) as i64;
    modulation(q, h.x).mul(&translation(q, h.y)).expect("square p x p matrices").scale(&CycElt::zeta_pow(p, central))
}

/// Checks `S·σ(h) = σ(ψ_s(h))·S` and `T·σ(h) = σ(ψ_t(h))·T` on the three
/// generators of the Heisenberg group, which suffices for every `h`.
pub fn verify_intertwining(q: &QuadForm, s: &ExactMatrix, t: &ExactMatrix) -> Result<Report> {
    let mut report = Report::new();
    for (name, m, psi) in [("S", s, psi_s as fn(&QuadForm, &HeisElt) -> HeisElt), ("T", t, psi_t)] {
        for h in HeisElt::generators(q) {
            let lhs = m.mul(&sigma_matrix(q, &h))?;
            let rhs = sigma_matrix(q, &psi(q, &h)).mul(m)?;
            let label = format!("intertwine-{name}({},{},{})", h.lam, h.x, h.y);
            let witness = lhs.first_difference(&rhs).map(|(i, j)| crate::report::Witness {
                matrix: format!("{name}·sigma(h)"),
                row: i,
                col: j,
                value: lhs.get(i, j).to_string(),
            });
            report.push(Check::from_bool(label, witness.is_none()).with_witness(witness));
        }
    }
    Ok(report)
}
