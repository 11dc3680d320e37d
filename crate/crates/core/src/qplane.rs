//! Degree-`n` part of the quantum 𝒜-plane, with basis `X^{n-u} Y^u` and
//! `YX = qXY`, and the action of 𝒜-points of `SL₂^q` on it by
//! `X ↦ aX + bY`, `Y ↦ cX + dY`.

use std::fmt;

use crate::error::Result;
use crate::qmatrix::{generator_monomial, recognize_generator, Matrix2, Triangular};
use crate::qscalar::{qbinom, QLaurent};
use crate::qtensor::TElement;
use crate::ring::QAlgebra;

/// Homogeneous polynomial `Σ_u coeffs[u] X^{n-u} Y^u`, coefficients on the
/// left, `X` and `Y` central over the coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneElement<R> {
    n: usize,
    coeffs: Vec<R>,
}

impl<R: QAlgebra> PlaneElement<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "degree n needs n+1 coefficients");
        Self {
            n: coeffs.len() - 1,
            coeffs,
        }
    }

    /// `X^{n-u} Y^u` with unit coefficient.
    pub fn basis(n: usize, u: usize, like: &R) -> Self {
        let coeffs = (0..=n)
            .map(|v| if v == u { like.one_like() } else { like.zero_like() })
            .collect();
        Self { n, coeffs }
    }

    /// `x X + y Y`.
    pub fn linear(x: R, y: R) -> Self {
        Self {
            n: 1,
            coeffs: vec![x, y],
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "degree mismatch");
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x.add(y)).collect(),
        }
    }

    /// Left multiplication of every coefficient by `r`.
    pub fn left_scale(&self, r: &R) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| r.mul(c)).collect(),
        }
    }

    /// Product in the plane:
    /// `(r X^{n1-u} Y^u)(r' X^{n2-u'} Y^{u'}) = r r' q^{u(n2-u')} X^{..} Y^{u+u'}`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let like = &self.coeffs[0];
        let mut coeffs = vec![like.zero_like(); self.n + rhs.n + 1];
        for (u, r) in self.coeffs.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            for (u2, r2) in rhs.coeffs.iter().enumerate() {
                if r2.is_zero() {
                    continue;
                }
                let e = (u * (rhs.n - u2)) as i64;
                coeffs[u + u2] = coeffs[u + u2].add(&r.mul(r2).scale_q(e));
            }
        }
        Self {
            n: self.n + rhs.n,
            coeffs,
        }
    }

    pub fn one(like: &R) -> Self {
        Self::basis(0, 0, like)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(&self.coeffs[0]), |acc, _| acc.mul(self))
    }
}

/// Images `(aX + bY)^j` and `(cX + dY)^j` for `j = 0..=n`.
fn substitution_powers<R: QAlgebra>(m: &Matrix2<R>, n: usize) -> (Vec<PlaneElement<R>>, Vec<PlaneElement<R>>) {
    let x_img = PlaneElement::linear(m.e11.clone(), m.e12.clone());
    let y_img = PlaneElement::linear(m.e21.clone(), m.e22.clone());
    let mut xs = vec![PlaneElement::one(&m.e11)];
    let mut ys = vec![PlaneElement::one(&m.e11)];
    for j in 0..n {
        xs.push(xs[j].mul(&x_img));
        ys.push(ys[j].mul(&y_img));
    }
    (xs, ys)
}

/// Image of `p` under the point `m`: each `X^{n-u} Y^u` becomes
/// `(aX + bY)^{n-u} (cX + dY)^u`.
pub fn apply_point<R: QAlgebra>(m: &Matrix2<R>, p: &PlaneElement<R>) -> PlaneElement<R> {
    let n = p.n;
    let (xs, ys) = substitution_powers(m, n);
    let mut out = PlaneElement {
        n,
        coeffs: vec![m.e11.zero_like(); n + 1],
    };
    for (u, r) in p.coeffs.iter().enumerate() {
        if r.is_zero() {
            continue;
        }
        out = out.add(&xs[n - u].mul(&ys[u]).left_scale(r));
    }
    out
}

/// Matrix of `ρ_n(m)`: entry `(v, u)` is the coefficient of `X^{n-v} Y^v`
/// in the image of `X^{n-u} Y^u`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RhoMatrix<R> {
    n: usize,
    entries: Vec<Vec<R>>,
}

impl<R: QAlgebra> RhoMatrix<R> {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn entry(&self, v: usize, u: usize) -> &R {
        &self.entries[v][u]
    }

    pub fn column(&self, u: usize) -> PlaneElement<R> {
        PlaneElement {
            n: self.n,
            coeffs: self.entries.iter().map(|row| row[u].clone()).collect(),
        }
    }

    /// Matrix of `outer ∘ inner`. Coefficients multiply as
    /// `inner[w][u] * outer[v][w]`, matching left 𝒜-linearity.
    pub fn compose(outer: &Self, inner: &Self) -> Self {
        assert_eq!(outer.n, inner.n, "degree mismatch");
        let dim = outer.n + 1;
        let like = &outer.entries[0][0];
        let entries = (0..dim)
            .map(|v| {
                (0..dim)
                    .map(|u| {
                        (0..dim).fold(like.zero_like(), |acc, w| {
                            acc.add(&inner.entries[w][u].mul(&outer.entries[v][w]))
                        })
                    })
                    .collect()
            })
            .collect();
        Self { n: outer.n, entries }
    }

    pub fn render(&self) -> String
    where
        R: fmt::Display,
    {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// `ρ_n(m)` by direct substitution, one column per basis monomial.
pub fn rho_matrix<R: QAlgebra>(n: usize, m: &Matrix2<R>) -> RhoMatrix<R> {
    let (xs, ys) = substitution_powers(m, n);
    let cols: Vec<PlaneElement<R>> = (0..=n).map(|u| xs[n - u].mul(&ys[u])).collect();
    let entries = (0..=n)
        .map(|v| (0..=n).map(|u| cols[u].coeffs[v].clone()).collect())
        .collect();
    RhoMatrix { n, entries }
}

/// `ρ_n` of a triangular generator from the closed-form entries
///
/// ```text
/// L:  ρ_vu = [u choose v]_{q²}     q^{-v(u-v)} a^{n-u-v} b^{u-v}   (v ≤ u)
/// U:  ρ_vu = [n-u choose n-v]_{q²} q^{-u(v-u)} a^{n-u-v} b^{v-u}   (v ≥ u)
/// ```
pub fn rho_closed_triangular(n: usize, g: &Matrix2<TElement>) -> Result<RhoMatrix<TElement>> {
    let (kind, i) = recognize_generator(g)?;
    let (k, ctx) = (g.e11.k(), g.e11.ctx().cloned());
    let n32 = n as u32;
    let entry = |v: usize, u: usize| -> Result<TElement> {
        let (v32, u32_) = (v as u32, u as u32);
        let a_exp = n as i32 - u as i32 - v as i32;
        let (binom, qexp, b_exp) = match kind {
            Triangular::Lower if v <= u => (qbinom(u32_, v32, 2)?, -((v * (u - v)) as i64), u32_ - v32),
            Triangular::Upper if v >= u => (qbinom(n32 - u32_, n32 - v32, 2)?, -((u * (v - u)) as i64), v32 - u32_),
            _ => return Ok(TElement::zero(k, ctx.clone())),
        };
        let coeff = binom.shifted(qexp);
        Ok(TElement::monomial(generator_monomial(k, i, a_exp, b_exp), coeff, ctx.clone()))
    };
    let entries = (0..=n)
        .map(|v| (0..=n).map(|u| entry(v, u)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(RhoMatrix { n, entries })
}

pub fn rho_trace<R: QAlgebra>(r: &RhoMatrix<R>) -> R {
    let like = &r.entries[0][0];
    (0..=r.n).fold(like.zero_like(), |acc, i| acc.add(&r.entries[i][i]))
}

/// `q`-scaled unit, used when comparing against scalar expressions.
pub fn scalar<R: QAlgebra>(like: &R, c: &QLaurent) -> R {
    like.one_like().scale(c)
}
