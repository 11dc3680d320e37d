//! 2×2 matrices over a coefficient ring, words of triangular generators and
//! the `SL₂^q` relation check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qscalar::{CycloContext, QLaurent};
use crate::qtensor::{TElement, TMonomial};
use crate::ring::{QAlgebra, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix2<R> {
    pub e11: R,
    pub e12: R,
    pub e21: R,
    pub e22: R,
}

impl<R> Matrix2<R> {
    pub fn new(e11: R, e12: R, e21: R, e22: R) -> Self {
        Self { e11, e12, e21, e22 }
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Matrix2<S> {
        Matrix2::new(f(&self.e11), f(&self.e12), f(&self.e21), f(&self.e22))
    }

    pub fn try_map<S>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix2<S>> {
        Ok(Matrix2::new(f(&self.e11)?, f(&self.e12)?, f(&self.e21)?, f(&self.e22)?))
    }
}

impl<R: Ring> Matrix2<R> {
    pub fn identity_like(x: &R) -> Self {
        Self::new(x.one_like(), x.zero_like(), x.zero_like(), x.one_like())
    }

    /// `(aa' + bc', ab' + bd'; ca' + dc', cb' + dd')`.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.e11.mul(&rhs.e11).add(&self.e12.mul(&rhs.e21)),
            self.e11.mul(&rhs.e12).add(&self.e12.mul(&rhs.e22)),
            self.e21.mul(&rhs.e11).add(&self.e22.mul(&rhs.e21)),
            self.e21.mul(&rhs.e12).add(&self.e22.mul(&rhs.e22)),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity_like(&self.e11), |acc, _| acc.mul(self))
    }
}

pub fn mat_trace<R: Ring>(m: &Matrix2<R>) -> R {
    m.e11.add(&m.e22)
}

impl<R: fmt::Display> fmt::Display for Matrix2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.e11, self.e12, self.e21, self.e22)
    }
}

/// Shape of a triangular generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Triangular {
    /// `(a, b; 0, a⁻¹)`
    Upper,
    /// `(a, 0; b, a⁻¹)`
    Lower,
}

impl Triangular {
    pub fn from_char(ch: char) -> Option<Self> {
        match ch {
            'U' => Some(Self::Upper),
            'L' => Some(Self::Lower),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Self::Upper => 'U',
            Self::Lower => 'L',
        }
    }
}

/// A word over `{U, L}`; position `i` owns the variable pair `(a_i, b_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordSpec {
    pattern: Vec<Triangular>,
}

impl WordSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let pattern: Option<Vec<_>> = s.chars().map(Triangular::from_char).collect();
        match pattern {
            Some(p) if !p.is_empty() => Ok(Self { pattern: p }),
            _ => Err(Error::InvalidWord(s.to_string())),
        }
    }

    pub fn pattern(&self) -> &[Triangular] {
        &self.pattern
    }

    pub fn k(&self) -> usize {
        self.pattern.len()
    }

    /// Every word of length `1..=max_len`, shorter words first.
    pub fn all_up_to(max_len: usize) -> Vec<WordSpec> {
        let mut out = Vec::new();
        for len in 1..=max_len {
            for bits in 0..(1u32 << len) {
                let pattern = (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 0 {
                            Triangular::Upper
                        } else {
                            Triangular::Lower
                        }
                    })
                    .collect();
                out.push(WordSpec { pattern });
            }
        }
        out
    }
}

impl FromStr for WordSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for WordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.pattern.iter().try_for_each(|t| write!(f, "{}", t.letter()))
    }
}

/// The triangular generator of shape `kind` on pair `i` of a `k`-pair algebra.
pub fn generator(kind: Triangular, k: usize, i: usize, ctx: Option<CycloContext>) -> Matrix2<TElement> {
    let a = TElement::a(k, i, ctx.clone());
    let a_inv = TElement::a_inv(k, i, ctx.clone());
    let b = TElement::b(k, i, ctx.clone());
    let zero = TElement::zero(k, ctx);
    match kind {
        Triangular::Upper => Matrix2::new(a, b, zero, a_inv),
        Triangular::Lower => Matrix2::new(a, zero, b, a_inv),
    }
}

pub fn build_word(spec: &WordSpec, ctx: Option<&CycloContext>) -> Vec<Matrix2<TElement>> {
    let k = spec.k();
    spec.pattern
        .iter()
        .enumerate()
        .map(|(i, &kind)| generator(kind, k, i, ctx.cloned()))
        .collect()
}

fn matrix_support(m: &Matrix2<TElement>) -> std::collections::BTreeSet<usize> {
    m.entries().iter().flat_map(|e| e.support()).collect()
}

/// Left-to-right product, requiring each factor to use variables disjoint
/// from everything before it so that all entries involved commute.
pub fn word_product(ms: &[Matrix2<TElement>]) -> Result<Matrix2<TElement>> {
    let (first, rest) = ms
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("empty matrix word".into()))?;
    let mut seen = matrix_support(first);
    let mut acc = first.clone();
    for (pos, m) in rest.iter().enumerate() {
        let sup = matrix_support(m);
        if !seen.is_disjoint(&sup) {
            return Err(Error::OverlappingSupport { position: pos + 1 });
        }
        seen.extend(sup);
        acc = acc.mul(m);
    }
    Ok(acc)
}

/// Left-to-right product without the support check. The caller asserts that
/// the entries of different factors commute.
pub fn word_product_assume_commuting<R: Ring>(ms: &[Matrix2<R>]) -> Option<Matrix2<R>> {
    let (first, rest) = ms.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, m| acc.mul(m)))
}

/// Replaces every generator entry `x` by its monomial `n`-th power shift.
///
/// The shifted generators satisfy the relations at parameter `q^{n²}`
/// rather than `q`, but live in the same ambient algebra.
pub fn word_shift(ms: &[Matrix2<TElement>], n: u32) -> Result<Vec<Matrix2<TElement>>> {
    ms.iter()
        .map(|m| {
            m.try_map(|e| {
                if e.len() > 1 {
                    return Err(Error::NonMonomialEntry);
                }
                e.frobenius_shift(n)
            })
        })
        .collect()
}

fn check_relations<R: QAlgebra>(m: &Matrix2<R>, mul: impl Fn(&R, &R) -> R) -> bool {
    let (a, b, c, d) = (&m.e11, &m.e12, &m.e21, &m.e22);
    let qa = |x: R| x.scale_q(1);
    let det_left = mul(a, d).sub(&mul(b, c).scale_q(-1));
    let det_right = mul(d, a).sub(&mul(b, c).scale_q(1));
    mul(b, a) == qa(mul(a, b))
        && mul(d, b) == qa(mul(b, d))
        && mul(b, c) == mul(c, b)
        && mul(c, a) == qa(mul(a, c))
        && mul(d, c) == qa(mul(c, d))
        && det_left == det_right
        && det_left == a.one_like()
}

/// Whether the entries satisfy the six `SL₂^q` relations and
/// `ad - q⁻¹bc = 1`.
pub fn validate_sl2q<R: QAlgebra>(m: &Matrix2<R>) -> bool {
    check_relations(m, |x, y| x.mul(y))
}

/// [`validate_sl2q`] in the opposite algebra (`x * y := y x`), i.e. the
/// relations of `SL₂^{q⁻¹}` over the original algebra.
pub fn validate_sl2q_opposite<R: QAlgebra>(m: &Matrix2<R>) -> bool {
    check_relations(m, |x, y| y.mul(x))
}

/// The formal inverse `(d, -qb; -q⁻¹c, a)`.
///
/// For a point of `SL₂^q(𝒜)` this is a point of `SL₂^q(𝒜^op)`, which
/// [`validate_sl2q_opposite`] checks; it is generally not a point of
/// `SL₂^q(𝒜)` itself.
pub fn formal_inverse<R: QAlgebra>(m: &Matrix2<R>) -> Matrix2<R> {
    Matrix2::new(
        m.e22.clone(),
        m.e12.scale(&QLaurent::from_terms([(1, -1)])),
        m.e21.scale(&QLaurent::from_terms([(-1, -1)])),
        m.e11.clone(),
    )
}

/// Integer trace of the word with every generator specialized to its
/// unipotent form `(1, 1; 0, 1)` or `(1, 0; 1, 1)`.
pub fn t_zero(spec: &WordSpec) -> BigInt {
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let ms: Vec<Matrix2<BigInt>> = spec
        .pattern
        .iter()
        .map(|t| match t {
            Triangular::Upper => Matrix2::new(one.clone(), one.clone(), zero.clone(), one.clone()),
            Triangular::Lower => Matrix2::new(one.clone(), zero.clone(), one.clone(), one.clone()),
        })
        .collect();
    mat_trace(&word_product_assume_commuting(&ms).expect("nonempty word"))
}

/// Recognizes a generator built by [`generator`], returning its shape and
/// pair index.
pub fn recognize_generator(m: &Matrix2<TElement>) -> Result<(Triangular, usize)> {
    let err = || Error::NotTriangularGenerator;
    let (mono, coeff) = m.e11.as_single_term().ok_or_else(err)?;
    if !coeff.is_one() || mono.beta().iter().any(|&b| b != 0) {
        return Err(err());
    }
    let nz: Vec<usize> = (0..mono.k()).filter(|&i| mono.alpha()[i] != 0).collect();
    let [i] = nz[..] else { return Err(err()) };
    if mono.alpha()[i] != 1 {
        return Err(err());
    }
    let (k, ctx) = (m.e11.k(), m.e11.ctx().cloned());
    let kind = if m.e21.is_zero() { Triangular::Upper } else { Triangular::Lower };
    if *m != generator(kind, k, i, ctx) {
        return Err(err());
    }
    Ok((kind, i))
}

/// The monomial `a_i^{a_exp} b_i^{b_exp}` on `k` pairs.
pub fn generator_monomial(k: usize, i: usize, a_exp: i32, b_exp: u32) -> TMonomial {
    let mut alpha = vec![0; k];
    let mut beta = vec![0; k];
    alpha[i] = a_exp;
    beta[i] = b_exp;
    TMonomial::new(alpha, beta).expect("equal lengths")
}
