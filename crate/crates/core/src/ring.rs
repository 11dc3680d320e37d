//! Minimal coefficient-ring interface shared by the matrix and plane code.
//!
//! Elements carry their own ambient data (variable count, cyclotomic
//! context), so constants are produced from an existing element with
//! `zero_like` / `one_like` rather than from a global `zero()`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qscalar::QLaurent;

/// An associative, not necessarily commutative, ring with unit.
///
/// Binary operations panic when the operands live in incompatible ambient
/// algebras (e.g. different cyclotomic contexts); concrete types expose
/// `try_*` variants that return an error instead.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, c: &BigInt) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A ring that is an algebra over the Laurent polynomials in `q`, with `q`
/// central.
pub trait QAlgebra: Ring {
    fn scale(&self, c: &QLaurent) -> Self;

    fn scale_q(&self, e: i64) -> Self {
        self.scale(&QLaurent::q_pow(e))
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn int_like(&self, c: &BigInt) -> Self {
        c.clone()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}
