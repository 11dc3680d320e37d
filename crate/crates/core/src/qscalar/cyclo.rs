//! Cyclotomic quotients `Z[q] / Φ_m(q)`, which make `q` an exact primitive
//! `m`-th root of unity.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;
use crate::error::{Error, Result};

/// The `m`-th cyclotomic polynomial, obtained by exact division of
/// `x^m - 1` by `Φ_d` for every proper divisor `d` of `m`.
pub fn cyclo_poly(m: u32) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::InvalidOrder);
    }
    let mut num = IntPoly::x_pow_minus_one(m as usize);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (quot, rem) = num.div_rem_monic(&cyclo_poly(d)?);
        debug_assert!(rem.is_zero());
        num = quot;
    }
    Ok(num)
}

fn totient(m: u32) -> u32 {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count() as u32
}

/// Orders `m` of `q` for which `q^2` is a primitive `n`-th root of unity:
/// `{n, 2n}` when `n` is odd, `{2n}` otherwise.
pub fn valid_orders(n: u32) -> Vec<u32> {
    if n % 2 == 1 {
        vec![n, 2 * n]
    } else {
        vec![2 * n]
    }
}

struct Inner {
    m: u32,
    n: u32,
    phi: IntPoly,
}

/// Context making `q` a primitive `m`-th root of unity.
///
/// Cheap to clone; two contexts are equal iff they have the same order.
#[derive(Clone)]
pub struct CycloContext {
    inner: Arc<Inner>,
}

impl CycloContext {
    pub fn new(m: u32) -> Result<Self> {
        let phi = cyclo_poly(m)?;
        debug_assert_eq!(phi.degree(), Some(totient(m) as usize));
        let n = if m.is_multiple_of(2) { m / 2 } else { m };
        Ok(Self {
            inner: Arc::new(Inner { m, n, phi }),
        })
    }

    /// Context for the hypothesis "`q^2` is a primitive `n`-th root of unity"
    /// with `q` of order `m`. Rejects `m` outside [`valid_orders`].
    pub fn for_q_squared_order(n: u32, m: u32) -> Result<Self> {
        let valid = valid_orders(n);
        if n == 0 || !valid.contains(&m) {
            return Err(Error::InvalidRootOrder { n, m, valid });
        }
        Self::new(m)
    }

    /// Multiplicative order of `q`.
    pub fn m(&self) -> u32 {
        self.inner.m
    }

    /// Multiplicative order of `q^2`.
    pub fn n(&self) -> u32 {
        self.inner.n
    }

    pub fn phi(&self) -> &IntPoly {
        &self.inner.phi
    }

    /// Reduces a sparse Laurent term map: exponents are first taken modulo
    /// `m`, then the resulting polynomial is reduced modulo `Φ_m`.
    pub(crate) fn reduce_terms(&self, terms: &BTreeMap<i64, BigInt>) -> BTreeMap<i64, BigInt> {
        let m = self.inner.m as usize;
        let mut dense = vec![BigInt::zero(); m];
        for (e, c) in terms {
            dense[e.rem_euclid(m as i64) as usize] += c;
        }
        reduce_dense(&mut dense, self.phi());
        dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64, c))
            .collect()
    }
}

/// In-place remainder of a dense polynomial modulo a monic `phi`.
fn reduce_dense(dense: &mut [BigInt], phi: &IntPoly) {
    let pc = phi.coeffs();
    let pd = pc.len() - 1;
    for top in (pd..dense.len()).rev() {
        let c = std::mem::take(&mut dense[top]);
        if c.is_zero() {
            continue;
        }
        for (i, p) in pc[..pd].iter().enumerate() {
            if !p.is_zero() {
                dense[top - pd + i] -= &c * p;
            }
        }
    }
}

impl PartialEq for CycloContext {
    fn eq(&self, other: &Self) -> bool {
        self.inner.m == other.inner.m
    }
}

impl Eq for CycloContext {}

impl fmt::Debug for CycloContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CycloContext")
            .field("m", &self.inner.m)
            .field("n", &self.inner.n)
            .field("phi", &self.inner.phi.render("x"))
            .finish()
    }
}
