use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense one-variable polynomial with integer coefficients, index = degree.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64s(&[c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[m] += BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(deg).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        Self::new(self.coeffs.iter().map(|a| a * &c).collect())
    }

    /// Division by a monic polynomial, returning `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[top]);
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[top - dd + i] -= &c * d;
            }
            quot[top - dd] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Exact integer evaluation.
    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            match deg {
                0 => out.push_str(&abs.to_string()),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&abs.to_string());
                    }
                    out.push_str(var);
                    if deg > 1 {
                        out.push_str(&format!("^{deg}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}
