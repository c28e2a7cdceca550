use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact_number::{CycElt, QuadCoord};

/// Commutative ring operations needed by the dense matrix code. Every element
/// carries the prime `p` that fixes its ambient field.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero(p: u32) -> Self;
    fn one(p: u32) -> Self;
    fn prime(&self) -> u32;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn as_rational(&self) -> Option<BigRational>;
}

impl Ring for CycElt {
    fn zero(p: u32) -> Self {
        CycElt::zero(p)
    }
    fn one(p: u32) -> Self {
        CycElt::one(p)
    }
    fn prime(&self) -> u32 {
        self.p()
    }
    fn is_zero(&self) -> bool {
        CycElt::is_zero(self)
    }
    fn is_one(&self) -> bool {
        CycElt::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn as_rational(&self) -> Option<BigRational> {
        CycElt::as_rational(self)
    }
}

impl Ring for QuadCoord {
    fn zero(p: u32) -> Self {
        QuadCoord::from_int(p, 0)
    }
    fn one(p: u32) -> Self {
        QuadCoord::from_int(p, 1)
    }
    fn prime(&self) -> u32 {
        self.p
    }
    fn is_zero(&self) -> bool {
        QuadCoord::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn as_rational(&self) -> Option<BigRational> {
        (self.b == 0).then(|| BigRational::from_integer(BigInt::from(self.a)))
    }
}
