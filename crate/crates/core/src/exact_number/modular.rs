//! Integer arithmetic modulo an odd prime.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates that `p` is an odd prime that fits the exponent arithmetic used
/// throughout the crate.
pub fn check_odd_prime(p: u64) -> Result<u32> {
    if p > 2 && p < (1 << 16) && is_prime(p) {
        Ok(p as u32)
    } else {
        Err(Error::InvalidPrime(p))
    }
}

/// Reduces any integer into `0..p`.
pub fn reduce(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

pub fn mod_pow(base: u32, mut exp: u64, p: u32) -> u32 {
    let m = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

pub fn mod_inv(x: u32, p: u32) -> Option<u32> {
    if x.is_multiple_of(p) {
        None
    } else {
        Some(mod_pow(x, p as u64 - 2, p))
    }
}

/// Legendre symbol (c|p) by Euler's criterion: 0, 1 or -1.
pub fn legendre(c: i64, p: u32) -> i8 {
    let c = reduce(c, p);
    if c == 0 {
        return 0;
    }
    match mod_pow(c, (p as u64 - 1) / 2, p) {
        1 => 1,
        _ => -1,
    }
}

/// ε = (-1)^((p-1)/2).
pub fn epsilon(p: u32) -> i64 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}

pub fn smallest_nonresidue(p: u32) -> u32 {
    (2..p).find(|&c| legendre(c as i64, p) == -1).expect("every odd prime has a quadratic non-residue")
}

/// Multiplicative order of `x` modulo `p`.
pub fn mult_order(x: u32, p: u32) -> u32 {
    let x = x % p;
    assert!(x != 0, "zero has no multiplicative order");
    let mut acc = x;
    let mut k = 1;
    while acc != 1 {
        acc = (acc as u64 * x as u64 % p as u64) as u32;
        k += 1;
    }
    k
}

pub fn smallest_primitive_root(p: u32) -> u32 {
    (1..p).find(|&g| mult_order(g, p) == p - 1).expect("the unit group of a prime field is cyclic")
}
