use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{IntPoly, QLaurent};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QIntKind {
    /// `1 + q + ... + q^{j-1}`
    Standard,
    /// `q^{j-1} + q^{j-3} + ... + q^{1-j}`
    Balanced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebKind {
    /// `T_0 = 2`, `T_1 = t`
    First,
    /// `S_0 = 1`, `S_1 = t`
    Second,
}

pub fn qint(j: u32, kind: QIntKind) -> QLaurent {
    let j = i64::from(j);
    match kind {
        QIntKind::Standard => QLaurent::from_terms((0..j).map(|i| (i, 1))),
        QIntKind::Balanced => QLaurent::from_terms((0..j).map(|i| (j - 1 - 2 * i, 1))),
    }
}

/// Gaussian binomial `[n choose k]` in the variable `q^step`.
///
/// Built row by row with `[n,k] = [n-1,k-1] + q^{step*k} [n-1,k]`, so every
/// intermediate is a polynomial with nonnegative coefficients.
pub fn qbinom(n: u32, k: u32, step: u32) -> Result<QLaurent> {
    if k > n {
        return Err(Error::InvalidBinomial { n, k });
    }
    let k = k as usize;
    let step = i64::from(step);
    let mut row: Vec<BTreeMap<i64, BigInt>> = vec![[(0, BigInt::from(1))].into()];
    for _ in 0..n {
        let mut next = Vec::with_capacity((row.len() + 1).min(k + 1));
        for j in 0..(row.len() + 1).min(k + 1) {
            let mut t: BTreeMap<i64, BigInt> = BTreeMap::new();
            if j > 0 {
                for (e, c) in &row[j - 1] {
                    *t.entry(*e).or_default() += c;
                }
            }
            if let Some(prev) = row.get(j) {
                let shift = step * j as i64;
                for (e, c) in prev {
                    *t.entry(e + shift).or_default() += c;
                }
            }
            next.push(t);
        }
        row = next;
    }
    Ok(QLaurent::from_raw(row.swap_remove(k), None))
}

/// Normalized Chebyshev polynomials via the three-term recurrence
/// `P_{n+1} = t P_n - P_{n-1}`.
pub fn cheb(n: u32, kind: ChebKind) -> IntPoly {
    let p0 = match kind {
        ChebKind::First => IntPoly::constant(2),
        ChebKind::Second => IntPoly::constant(1),
    };
    let mut prev = p0;
    let mut cur = IntPoly::x();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = IntPoly::x().mul(&cur).sub(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{cyclo_reduce, CycloContext};

    fn poly(cs: &[i64]) -> QLaurent {
        QLaurent::from_terms(cs.iter().enumerate().map(|(e, &c)| (e as i64, c)))
    }

    /// Independent route: product of quantum integers divided exactly.
    fn qbinom_by_division(n: u32, k: u32) -> IntPoly {
        let qi = |j: u32| IntPoly::new(vec![BigInt::from(1); j as usize]);
        let num = (n - k + 1..=n).fold(IntPoly::constant(1), |acc, j| acc.mul(&qi(j)));
        (1..=k).fold(num, |acc, j| {
            let (q, r) = acc.div_rem_monic(&qi(j));
            assert!(r.is_zero());
            q
        })
    }

    fn binomial(n: u64, k: u64) -> BigInt {
        (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn qint_examples() {
        assert_eq!(qint(3, QIntKind::Standard), poly(&[1, 1, 1]));
        assert_eq!(qint(1, QIntKind::Standard), QLaurent::one());
        assert_eq!(qint(1, QIntKind::Balanced), QLaurent::one());
        assert_eq!(
            qint(3, QIntKind::Balanced),
            QLaurent::from_terms([(2, 1), (0, 1), (-2, 1)])
        );
        assert!(qint(0, QIntKind::Standard).is_zero());
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(2, 1, 1).unwrap(), poly(&[1, 1]));
        assert_eq!(qbinom(4, 2, 1).unwrap(), poly(&[1, 1, 2, 1, 1]));
        let c4 = CycloContext::new(4).unwrap();
        assert!(cyclo_reduce(&qbinom(4, 2, 1).unwrap(), &c4).is_zero());
        assert_eq!(qbinom(2, 3, 1), Err(Error::InvalidBinomial { n: 2, k: 3 }));
        assert_eq!(qbinom(0, 0, 2).unwrap(), QLaurent::one());
        assert_eq!(qbinom(2, 1, 2).unwrap(), poly(&[1, 0, 1]));
    }

    #[test]
    fn qbinom_matches_division_oracle() {
        for n in 0..=10 {
            for k in 0..=n {
                let expect = qbinom_by_division(n, k);
                let got = qbinom(n, k, 1).unwrap();
                let dense: Vec<BigInt> = (0..=expect.degree().unwrap_or(0) as i64)
                    .map(|e| got.coeff(e))
                    .collect();
                assert_eq!(IntPoly::new(dense), expect, "n={n} k={k}");
                assert_eq!(got.len(), expect.coeffs().iter().filter(|c| **c != BigInt::from(0)).count());
            }
        }
    }

    #[test]
    fn qbinom_at_one_is_binomial() {
        for n in 0..=16u32 {
            for k in 0..=n {
                for step in 1..=3 {
                    let b = qbinom(n, k, step).unwrap();
                    assert!(b.all_nonneg());
                    assert_eq!(b.coeff_sum(), binomial(n.into(), k.into()));
                }
            }
        }
    }

    #[test]
    fn qbinom_vanishes_at_primitive_roots() {
        for n in 2..=12u32 {
            // q itself of order n
            let ctx = CycloContext::new(n).unwrap();
            for k in 1..n {
                assert!(qbinom(n, k, 1).unwrap().reduce(&ctx).is_zero(), "n={n} k={k}");
            }
            // q^2 of order n: the binomials in base q^2 vanish
            for m in crate::qscalar::valid_orders(n) {
                let ctx = CycloContext::new(m).unwrap();
                for k in 1..n {
                    assert!(qbinom(n, k, 2).unwrap().reduce(&ctx).is_zero(), "n={n} m={m} k={k}");
                }
            }
        }
        // base q at order 2n does not vanish: [2 choose 1] = 1+q at q = i
        let c4 = CycloContext::new(4).unwrap();
        assert!(!qbinom(2, 1, 1).unwrap().reduce(&c4).is_zero());
    }

    #[test]
    fn cheb_table() {
        assert_eq!(cheb(0, ChebKind::First), IntPoly::constant(2));
        assert_eq!(cheb(0, ChebKind::Second), IntPoly::constant(1));
        assert_eq!(cheb(1, ChebKind::First), IntPoly::x());
        assert_eq!(cheb(6, ChebKind::First), IntPoly::from_i64s(&[-2, 0, 9, 0, -6, 0, 1]));
        assert_eq!(cheb(4, ChebKind::Second), IntPoly::from_i64s(&[1, 0, -3, 0, 1]));
        assert_eq!(cheb(5, ChebKind::First).to_string(), "t^5-5t^3+5t");
        assert_eq!(cheb(6, ChebKind::Second).to_string(), "t^6-5t^4+6t^2-1");
        assert_eq!(cheb(3, ChebKind::Second).to_string(), "t^3-2t");
    }

    #[test]
    fn first_kind_from_second_kind() {
        for n in 2..=32 {
            assert_eq!(
                cheb(n, ChebKind::First),
                cheb(n, ChebKind::Second).sub(&cheb(n - 2, ChebKind::Second)),
                "n={n}"
            );
        }
    }

    #[test]
    fn closed_form_eigenvalues() {
        for t0 in 3..=12i64 {
            let t = t0 as f64;
            let disc = (t * t - 4.0).sqrt();
            let (l1, l2) = ((t + disc) / 2.0, (t - disc) / 2.0);
            for n in 0..=12 {
                let closed = (l1.powi(n) + l2.powi(n)).round();
                let exact = cheb(n as u32, ChebKind::First).eval_int(&BigInt::from(t0));
                assert_eq!(BigInt::from(closed as i64), exact, "t0={t0} n={n}");
            }
        }
    }
}
