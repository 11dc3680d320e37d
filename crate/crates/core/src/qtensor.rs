//! The algebra generated by `k` independent pairs `a_i^{±1}, b_i` with
//! `b_i a_i = q a_i b_i`, and letters of different pairs commuting.
//!
//! Elements are stored in the normal order
//! `a_1^{α_1} b_1^{β_1} a_2^{α_2} b_2^{β_2} ⋯`, so multiplying two normal
//! monomials only has to move each `b_i^{β_i}` of the left factor past the
//! `a_i^{α'_i}` of the right factor:
//!
//! ```text
//! (α, β) · (α', β') = q^{Σ_i α'_i β_i} (α + α', β + β')
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qscalar::{merge_ctx, mul_into, CycloContext, IntPoly, QLaurent};
use crate::ring::{QAlgebra, Ring};

/// Exponent vectors of a normal-ordered monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TMonomial {
    alpha: Vec<i32>,
    beta: Vec<u32>,
}

impl TMonomial {
    pub fn new(alpha: Vec<i32>, beta: Vec<u32>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::VariableCountMismatch {
                left: alpha.len(),
                right: beta.len(),
            });
        }
        Ok(Self { alpha, beta })
    }

    pub fn one(k: usize) -> Self {
        Self {
            alpha: vec![0; k],
            beta: vec![0; k],
        }
    }

    pub fn alpha(&self) -> &[i32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn k(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_one(&self) -> bool {
        self.alpha.iter().all(|&a| a == 0) && self.beta.iter().all(|&b| b == 0)
    }

    /// Product of normal monomials as `(q-exponent, monomial)`.
    pub fn mul(&self, rhs: &Self) -> (i64, Self) {
        let shift = rhs
            .alpha
            .iter()
            .zip(&self.beta)
            .map(|(&a, &b)| i64::from(a) * i64::from(b))
            .sum();
        let alpha = self.alpha.iter().zip(&rhs.alpha).map(|(x, y)| x + y).collect();
        let beta = self.beta.iter().zip(&rhs.beta).map(|(x, y)| x + y).collect();
        (shift, Self { alpha, beta })
    }

    fn scaled(&self, n: u32) -> Self {
        Self {
            alpha: self.alpha.iter().map(|a| a * n as i32).collect(),
            beta: self.beta.iter().map(|b| b * n).collect(),
        }
    }

    fn render(&self, names: &dyn Fn(usize) -> (String, String)) -> String {
        let mut parts = Vec::new();
        for i in 0..self.k() {
            let (an, bn) = names(i);
            if self.alpha[i] != 0 {
                parts.push(format!("{an}^{}", self.alpha[i]));
            }
            if self.beta[i] != 0 {
                parts.push(format!("{bn}^{}", self.beta[i]));
            }
        }
        parts.join("*")
    }
}

/// Element of the q-commuting tensor algebra on `k` variable pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct TElement {
    k: usize,
    terms: BTreeMap<TMonomial, QLaurent>,
    ctx: Option<CycloContext>,
}

impl TElement {
    pub fn zero(k: usize, ctx: Option<CycloContext>) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
            ctx,
        }
    }

    pub fn one(k: usize, ctx: Option<CycloContext>) -> Self {
        Self::monomial(TMonomial::one(k), QLaurent::one(), ctx)
    }

    pub fn monomial(mono: TMonomial, coeff: QLaurent, ctx: Option<CycloContext>) -> Self {
        let mut out = Self::zero(mono.k(), ctx);
        let coeff = match &out.ctx {
            Some(c) => coeff.reduce(c),
            None => coeff,
        };
        if !coeff.is_zero() {
            out.terms.insert(mono, coeff);
        }
        out
    }

    /// `a_i^e` (pair index `i` is 0-based).
    pub fn a_pow(k: usize, i: usize, e: i32, ctx: Option<CycloContext>) -> Self {
        let mut m = TMonomial::one(k);
        m.alpha[i] = e;
        Self::monomial(m, QLaurent::one(), ctx)
    }

    pub fn a(k: usize, i: usize, ctx: Option<CycloContext>) -> Self {
        Self::a_pow(k, i, 1, ctx)
    }

    pub fn a_inv(k: usize, i: usize, ctx: Option<CycloContext>) -> Self {
        Self::a_pow(k, i, -1, ctx)
    }

    pub fn b_pow(k: usize, i: usize, e: u32, ctx: Option<CycloContext>) -> Self {
        let mut m = TMonomial::one(k);
        m.beta[i] = e;
        Self::monomial(m, QLaurent::one(), ctx)
    }

    pub fn b(k: usize, i: usize, ctx: Option<CycloContext>) -> Self {
        Self::b_pow(k, i, 1, ctx)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ctx(&self) -> Option<&CycloContext> {
        self.ctx.as_ref()
    }

    pub fn terms(&self) -> &BTreeMap<TMonomial, QLaurent> {
        &self.terms
    }

    /// Number of stored monomials.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &TMonomial) -> QLaurent {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// The same element reduced into `Z[q]/Φ_m`.
    pub fn with_context(&self, ctx: &CycloContext) -> Self {
        let mut out = Self::zero(self.k, Some(ctx.clone()));
        for (m, c) in &self.terms {
            let c = c.reduce(ctx);
            if !c.is_zero() {
                out.terms.insert(m.clone(), c);
            }
        }
        out
    }

    /// Returns the only term when the element is a single monomial.
    pub fn as_single_term(&self) -> Option<(&TMonomial, &QLaurent)> {
        match self.terms.len() {
            1 => self.terms.iter().next(),
            _ => None,
        }
    }

    /// Indices `i` whose letters `a_i` or `b_i` occur.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| (0..self.k).filter(move |&i| m.alpha[i] != 0 || m.beta[i] != 0))
            .collect()
    }

    fn check_compatible(&self, rhs: &Self) -> Result<Option<CycloContext>> {
        if self.k != rhs.k {
            return Err(Error::VariableCountMismatch {
                left: self.k,
                right: rhs.k,
            });
        }
        merge_ctx(self.ctx(), rhs.ctx())
    }

    fn from_raw(
        k: usize,
        raw: BTreeMap<TMonomial, BTreeMap<i64, BigInt>>,
        ctx: Option<CycloContext>,
    ) -> Self {
        let terms = raw
            .into_iter()
            .filter_map(|(m, t)| {
                let c = QLaurent::from_raw(t, ctx.clone());
                (!c.is_zero()).then_some((m, c))
            })
            .collect();
        Self { k, terms, ctx }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let ctx = self.check_compatible(rhs)?;
        let mut raw: BTreeMap<TMonomial, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (m, c) in self.terms.iter().chain(&rhs.terms) {
            let slot = raw.entry(m.clone()).or_default();
            for (e, v) in c.terms() {
                *slot.entry(*e).or_default() += v;
            }
        }
        Ok(Self::from_raw(self.k, raw, ctx))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.negated())
    }

    /// Product using the `b_i a_i = q a_i b_i` swap rule.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let ctx = self.check_compatible(rhs)?;
        let mut raw: BTreeMap<TMonomial, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let (shift, m) = m1.mul(m2);
                mul_into(raw.entry(m).or_default(), c1.terms(), c2.terms(), shift);
            }
        }
        Ok(Self::from_raw(self.k, raw, ctx))
    }

    pub fn negated(&self) -> Self {
        Self {
            k: self.k,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect(),
            ctx: self.ctx.clone(),
        }
    }

    /// Replaces every monomial `(α, β)` by `(nα, nβ)`, leaving coefficients
    /// untouched.
    ///
    /// This is well defined monomial by monomial but is not a ring
    /// homomorphism at generic `q`: `(b_1 a_1)` shifts to `q a_1^n b_1^n`
    /// while `b_1^n a_1^n = q^{n^2} a_1^n b_1^n`.
    pub fn frobenius_shift(&self, n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidShift(n));
        }
        Ok(Self {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.scaled(n), c.clone()))
                .collect(),
            ctx: self.ctx.clone(),
        })
    }

    /// Value at `q = 1` and `a_i = b_i = 1`: the total multiplicity of
    /// monomials. Only meaningful at generic `q`.
    pub fn eval_counting(&self) -> Result<BigInt> {
        if self.ctx.is_some() {
            return Err(Error::CountingUnderCyclotomic);
        }
        Ok(self.terms.values().map(QLaurent::coeff_sum).sum())
    }

    /// Whether every integer coefficient of every `q`-coefficient is `>= 0`.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(QLaurent::all_nonneg)
    }

    /// Terms having at least one negative integer coefficient.
    pub fn negative_part(&self) -> Self {
        Self {
            k: self.k,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| !c.all_nonneg())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            ctx: self.ctx.clone(),
        }
    }

    /// Canonical text with default variable names `a1, b1, a2, ...`.
    pub fn render(&self) -> String {
        self.render_with(&|i| (format!("a{}", i + 1), format!("b{}", i + 1)))
    }

    /// Canonical text with caller-chosen names for `(a_i, b_i)`.
    ///
    /// Terms appear in descending lexicographic order of `(α, β)`.
    pub fn render_with(&self, names: &dyn Fn(usize) -> (String, String)) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = m.render(names);
            let term = if mono.is_empty() {
                if c.len() > 1 {
                    format!("({c})")
                } else {
                    c.to_string()
                }
            } else if c.is_one() {
                mono
            } else if c.negated().is_one() {
                format!("-{mono}")
            } else if c.len() > 1 {
                format!("({c})*{mono}")
            } else {
                format!("{c}*{mono}")
            };
            match (i, term.strip_prefix('-')) {
                (0, _) => out.push_str(&term),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                (_, None) => {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
            }
        }
        out
    }
}

impl fmt::Display for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TElement[k={}", self.k)?;
        if let Some(c) = &self.ctx {
            write!(f, ", m={}", c.m())?;
        }
        write!(f, "]({})", self.render())
    }
}

impl Ring for TElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.k, self.ctx.clone())
    }
    fn one_like(&self) -> Self {
        Self::one(self.k, self.ctx.clone())
    }
    fn int_like(&self, c: &BigInt) -> Self {
        Self::monomial(
            TMonomial::one(self.k),
            QLaurent::from_raw([(0, c.clone())].into(), None),
            self.ctx.clone(),
        )
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("TElement addition")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("TElement multiplication")
    }
    fn neg(&self) -> Self {
        self.negated()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl QAlgebra for TElement {
    fn scale(&self, c: &QLaurent) -> Self {
        let ctx = merge_ctx(self.ctx(), c.ctx()).expect("TElement scaling");
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, v)| {
                let mut raw = BTreeMap::new();
                mul_into(&mut raw, v.terms(), c.terms(), 0);
                let p = QLaurent::from_raw(raw, ctx.clone());
                (!p.is_zero()).then(|| (m.clone(), p))
            })
            .collect();
        Self {
            k: self.k,
            terms,
            ctx,
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&TElement> for &TElement {
            type Output = TElement;
            fn $method(self, rhs: &TElement) -> TElement {
                self.$imp(rhs).expect(concat!("TElement ", stringify!($method)))
            }
        }
        impl $tr for TElement {
            type Output = TElement;
            fn $method(self, rhs: TElement) -> TElement {
                self.$imp(&rhs).expect(concat!("operator ", stringify!($method)))
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &TElement {
    type Output = TElement;
    fn neg(self) -> TElement {
        self.negated()
    }
}

impl Neg for TElement {
    type Output = TElement;
    fn neg(self) -> TElement {
        self.negated()
    }
}

/// Horner evaluation of an integer polynomial at an element of any ring.
pub fn poly_eval<R: Ring>(p: &IntPoly, x: &R) -> R {
    let mut coeffs = p.coeffs().iter().rev();
    let Some(top) = coeffs.next() else {
        return x.zero_like();
    };
    let mut acc = x.int_like(top);
    for c in coeffs {
        acc = acc.mul(x);
        if !Zero::is_zero(c) {
            acc = acc.add(&x.int_like(c));
        }
    }
    acc
}

/// Convenience: `Σ coeff * monomial` from `(alpha, beta, coeff)` triples.
pub fn telement_from_terms(
    k: usize,
    terms: &[(Vec<i32>, Vec<u32>, QLaurent)],
    ctx: Option<CycloContext>,
) -> Result<TElement> {
    terms.iter().try_fold(TElement::zero(k, ctx.clone()), |acc, (a, b, c)| {
        let m = TMonomial::new(a.clone(), b.clone())?;
        if m.k() != k {
            return Err(Error::VariableCountMismatch { left: k, right: m.k() });
        }
        acc.try_add(&TElement::monomial(m, c.clone(), ctx.clone()))
    })
}
