//! The Galois group Gal(Q(ζ_p)/Q) ≅ (Z/p)^× and quadratic Gauss sums.

use serde::{Deserialize, Serialize};

use super::cyclotomic::CycElt;
use super::modular::{check_odd_prime, epsilon, mod_pow, mult_order, reduce, smallest_primitive_root};
use crate::error::{Error, Result};

/// The automorphism ζ_p ↦ ζ_p^j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaloisElt {
    p: u32,
    j: u32,
}

impl GaloisElt {
    pub fn new(p: u32, j: i64) -> Result<Self> {
        let p = check_odd_prime(p as u64)?;
        let j = reduce(j, p);
        if j == 0 {
            return Err(Error::InvalidUnit { p, c: 0 });
        }
        Ok(GaloisElt { p, j })
    }

    pub fn identity(p: u32) -> Self {
        GaloisElt { p, j: 1 }
    }

    /// γ: the generator ζ ↦ ζ^g for the smallest primitive root g.
    pub fn generator(p: u32) -> Self {
        GaloisElt { p, j: smallest_primitive_root(p) }
    }

    /// τ = γ², generating the index-2 subgroup that fixes Q(√εp).
    pub fn tau(p: u32) -> Self {
        let g = Self::generator(p);
        g.compose(&g)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.j
    }

    /// `self ∘ other`, i.e. ζ ↦ ζ^{j1·j2}.
    pub fn compose(&self, other: &GaloisElt) -> GaloisElt {
        assert_eq!(self.p, other.p, "Galois elements over different primes");
        GaloisElt { p: self.p, j: (self.j as u64 * other.j as u64 % self.p as u64) as u32 }
    }

    pub fn pow(&self, e: u64) -> GaloisElt {
        GaloisElt { p: self.p, j: mod_pow(self.j, e, self.p) }
    }

    pub fn order(&self) -> u32 {
        mult_order(self.j, self.p)
    }

    pub fn apply(&self, x: &CycElt) -> Result<CycElt> {
        if x.p() != self.p {
            return Err(Error::PrimeMismatch { left: self.p, right: x.p() });
        }
        Ok(x.substitute(self.j))
    }
}

/// Σ_{x mod p} ζ_p^{c·x²}.
pub fn gauss_sum(p: u32, c: i64) -> Result<CycElt> {
    let p = check_odd_prime(p as u64)?;
    let c = reduce(c, p);
    if c == 0 {
        return Err(Error::InvalidUnit { p, c: 0 });
    }
    let mut counts = vec![0i64; p as usize];
    for x in 0..p as u64 {
        counts[(c as u64 * x * x % p as u64) as usize] += 1;
    }
    Ok(CycElt::from_exponent_counts(p, &counts))
}

/// √(εp), pinned to the Gauss sum Σ ζ_p^{x²} for the principal root ζ_p.
pub fn sqrt_eps_p(p: u32) -> Result<CycElt> {
    gauss_sum(p, 1)
}

/// ε·p as a signed integer.
pub fn eps_p(p: u32) -> i64 {
    epsilon(p) * p as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_number::modular::legendre;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn gauss_sums_for_seven_and_thirteen() {
        let g7 = gauss_sum(7, 1).unwrap();
        assert_eq!(g7, CycElt::from_exponent_counts(7, &[1, 2, 2, 0, 2, 0, 0]));
        assert_eq!((&g7 * &g7).as_rational().unwrap(), BigRational::from_integer(BigInt::from(-7)));
        assert_eq!(gauss_sum(7, 3).unwrap(), -&g7);

        // -2ζ^11 - 2ζ^8 - 2ζ^7 - 2ζ^6 - 2ζ^5 - 2ζ^2 - 1
        let mut coeffs = [0i64; 13];
        coeffs[0] = -1;
        for k in [11, 8, 7, 6, 5, 2] {
            coeffs[k] = -2;
        }
        let g13 = gauss_sum(13, 1).unwrap();
        assert_eq!(g13, CycElt::from_exponent_counts(13, &coeffs));
        assert_eq!((&g13 * &g13).as_rational().unwrap(), BigRational::from_integer(BigInt::from(13)));
        assert_eq!(gauss_sum(13, 2).unwrap(), -&g13);
    }

    #[test]
    fn invalid_inputs() {
        assert_eq!(gauss_sum(9, 1), Err(Error::InvalidPrime(9)));
        assert_eq!(gauss_sum(7, 14), Err(Error::InvalidUnit { p: 7, c: 0 }));
        assert!(GaloisElt::new(7, 7).is_err());
    }

    #[test]
    fn tau_fixes_gauss_sum_and_generator_negates_it() {
        for p in [3u32, 5, 7, 11, 13] {
            let g = gauss_sum(p, 1).unwrap();
            assert_eq!(GaloisElt::tau(p).apply(&g).unwrap(), g);
            assert_eq!(GaloisElt::generator(p).apply(&g).unwrap(), -&g);
        }
        // Direct expansion of Σ ζ^{3x²} for p = 7.
        let g = gauss_sum(7, 1).unwrap();
        let twisted = GaloisElt::new(7, 3).unwrap().apply(&g).unwrap();
        let mut counts = vec![0i64; 7];
        for x in 0..7u64 {
            counts[(3 * x * x % 7) as usize] += 1;
        }
        assert_eq!(twisted, CycElt::from_exponent_counts(7, &counts));
        assert_eq!(twisted, -&g);
    }

    #[test]
    fn group_structure() {
        for p in [5u32, 7, 11, 13, 17, 19, 23] {
            let gamma = GaloisElt::generator(p);
            assert_eq!(gamma.order(), p - 1);
            assert_eq!(GaloisElt::tau(p).order(), (p - 1) / 2);
            assert_eq!(legendre(GaloisElt::tau(p).exponent() as i64, p), 1);
        }
    }
}
