use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::CycloContext;
use crate::error::{Error, Result};
use crate::ring::{QAlgebra, Ring};

/// Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Canonical: no zero coefficient is stored. When a [`CycloContext`] is
/// attached the value lives in `Z[q]/Φ_m` and all exponents lie in
/// `[0, deg Φ_m)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
    ctx: Option<CycloContext>,
}

/// Resolves the context of a binary operation. A context-free operand is
/// promoted into the other operand's quotient.
pub(crate) fn merge_ctx(
    a: Option<&CycloContext>,
    b: Option<&CycloContext>,
) -> Result<Option<CycloContext>> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(Error::ContextMismatch {
            left: Some(x.m()),
            right: Some(y.m()),
        }),
        (Some(x), _) | (None, Some(x)) => Ok(Some(x.clone())),
        (None, None) => Ok(None),
    }
}

/// Accumulates `x * y * q^shift` into a raw term map.
pub(crate) fn mul_into(
    acc: &mut BTreeMap<i64, BigInt>,
    x: &BTreeMap<i64, BigInt>,
    y: &BTreeMap<i64, BigInt>,
    shift: i64,
) {
    for (ex, cx) in x {
        for (ey, cy) in y {
            *acc.entry(ex + ey + shift).or_default() += cx * cy;
        }
    }
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_terms([(0, c)])
    }

    /// The monomial `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::from_terms([(e, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        Self::from_raw(
            terms.into_iter().fold(BTreeMap::new(), |mut acc, (e, c)| {
                *acc.entry(e).or_insert_with(BigInt::zero) += c;
                acc
            }),
            None,
        )
    }

    /// Builds a canonical value from a raw map, reducing into `ctx` if given.
    pub(crate) fn from_raw(terms: BTreeMap<i64, BigInt>, ctx: Option<CycloContext>) -> Self {
        let terms = match &ctx {
            Some(c) => c.reduce_terms(&terms),
            None => terms.into_iter().filter(|(_, c)| !Zero::is_zero(c)).collect(),
        };
        Self { terms, ctx }
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }

    pub fn ctx(&self) -> Option<&CycloContext> {
        self.ctx.as_ref()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Reinterprets the value in `Z[q]/Φ_m`.
    pub fn reduce(&self, ctx: &CycloContext) -> Self {
        Self::from_raw(self.terms.clone(), Some(ctx.clone()))
    }

    /// Drops the cyclotomic context, keeping the stored representative.
    pub fn lift(&self) -> Self {
        Self {
            terms: self.terms.clone(),
            ctx: None,
        }
    }

    /// Value at `q = 1`, i.e. the sum of all coefficients.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Substitutes `q -> q^step`.
    pub fn substitute_power(&self, step: i64) -> Self {
        Self::from_raw(
            self.terms.iter().map(|(e, c)| (e * step, c.clone())).collect(),
            self.ctx.clone(),
        )
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let ctx = merge_ctx(self.ctx(), rhs.ctx())?;
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            *terms.entry(*e).or_default() += c;
        }
        Ok(Self::from_raw(terms, ctx))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.negated())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let ctx = merge_ctx(self.ctx(), rhs.ctx())?;
        let mut terms = BTreeMap::new();
        mul_into(&mut terms, &self.terms, &rhs.terms, 0);
        Ok(Self::from_raw(terms, ctx))
    }

    pub fn negated(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            ctx: self.ctx.clone(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shifted(&self, e: i64) -> Self {
        Self::from_raw(
            self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
            self.ctx.clone(),
        )
    }

    /// Whether the value is a single integer constant, returning it.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }
}

/// Cyclotomic reduction of `x`: `q^m = 1` first, then remainder by `Φ_m`.
pub fn cyclo_reduce(x: &QLaurent, ctx: &CycloContext) -> QLaurent {
    x.reduce(ctx)
}

fn render_term(e: i64, c: &BigInt) -> String {
    if e == 0 {
        return c.to_string();
    }
    let var = if e == 1 { "q".to_string() } else { format!("q^{e}") };
    if c.is_one() {
        var
    } else if (-c).is_one() {
        format!("-{var}")
    } else {
        format!("{c}*{var}")
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let t = render_term(*e, c);
            if i > 0 && !t.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.ctx {
            Some(c) => write!(f, "QLaurent({self} mod Φ_{})", c.m()),
            None => write!(f, "QLaurent({self})"),
        }
    }
}

impl Ring for QLaurent {
    fn zero_like(&self) -> Self {
        Self {
            terms: BTreeMap::new(),
            ctx: self.ctx.clone(),
        }
    }
    fn one_like(&self) -> Self {
        self.int_like(&BigInt::one())
    }
    fn int_like(&self, c: &BigInt) -> Self {
        Self::from_raw([(0, c.clone())].into(), self.ctx.clone())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("QLaurent addition")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("QLaurent multiplication")
    }
    fn neg(&self) -> Self {
        self.negated()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl QAlgebra for QLaurent {
    fn scale(&self, c: &QLaurent) -> Self {
        Ring::mul(self, c)
    }
    fn scale_q(&self, e: i64) -> Self {
        self.shifted(e)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&QLaurent> for &QLaurent {
            type Output = QLaurent;
            fn $method(self, rhs: &QLaurent) -> QLaurent {
                self.$imp(rhs).expect(concat!("QLaurent ", stringify!($method)))
            }
        }
        impl $tr for QLaurent {
            type Output = QLaurent;
            fn $method(self, rhs: QLaurent) -> QLaurent {
                self.$imp(&rhs).expect(concat!("operator ", stringify!($method)))
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        self.negated()
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        self.negated()
    }
}

impl From<i64> for QLaurent {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QLaurent {
        QLaurent::q_pow(1)
    }

    #[test]
    fn arith_examples() {
        let one = QLaurent::one();
        assert_eq!(&(&q() + &one) + &QLaurent::constant(-1), q());
        assert_eq!(&q() * &QLaurent::q_pow(-1), one);
        let c4 = CycloContext::new(4).unwrap();
        let x = (&q() + &one).reduce(&c4);
        assert_eq!(&x * &x, QLaurent::from_terms([(1, 2)]).reduce(&c4));
        assert_eq!((&x * &x).terms(), QLaurent::from_terms([(1, 2)]).terms());
    }

    #[test]
    fn reduce_examples() {
        let c4 = CycloContext::new(4).unwrap();
        assert_eq!(QLaurent::q_pow(4).reduce(&c4).terms(), QLaurent::one().terms());
        assert_eq!(
            QLaurent::q_pow(-1).reduce(&c4).terms(),
            QLaurent::from_terms([(1, -1)]).terms()
        );
        let four = QLaurent::from_terms([(0, 1), (1, 1), (2, 1), (3, 1)]);
        assert!(cyclo_reduce(&four, &c4).is_zero());
    }

    #[test]
    fn reduce_is_idempotent() {
        let c6 = CycloContext::new(6).unwrap();
        let x = QLaurent::from_terms([(-7, 3), (0, 1), (5, -2), (11, 4)]).reduce(&c6);
        assert_eq!(x.reduce(&c6), x);
        assert!(x.terms().keys().all(|&e| (0..2).contains(&e)));
    }

    #[test]
    fn mismatched_contexts() {
        let a = q().reduce(&CycloContext::new(4).unwrap());
        let b = q().reduce(&CycloContext::new(6).unwrap());
        assert_eq!(
            a.try_mul(&b),
            Err(Error::ContextMismatch { left: Some(4), right: Some(6) })
        );
        // generic operand is promoted
        let c = a.try_add(&QLaurent::q_pow(2)).unwrap();
        assert_eq!(c.ctx().map(CycloContext::m), Some(4));
        assert_eq!(c.terms(), QLaurent::from_terms([(0, -1), (1, 1)]).terms());
    }

    #[test]
    fn rendering() {
        assert_eq!(QLaurent::from_terms([(0, 1), (2, 1)]).to_string(), "1+q^2");
        assert_eq!(QLaurent::from_terms([(-1, 1), (1, 1)]).to_string(), "q^-1+q");
        assert_eq!(QLaurent::from_terms([(0, 1), (1, -2)]).to_string(), "1-2*q");
        assert_eq!(QLaurent::zero().to_string(), "0");
        assert_eq!(QLaurent::constant(-3).to_string(), "-3");
    }
}
