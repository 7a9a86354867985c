//! Laurent polynomials: finitely supported rational coefficients on integer
//! exponents. These carry the `x^ℓ + x^{-ℓ}` identities and the formal
//! sl(2) characters.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

/// Laurent polynomial; `coeffs[i]` is the coefficient of `x^(min_exp + i)`.
/// First and last stored coefficients are nonzero unless the value is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn new(min_exp: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
        }
        if coeffs.is_empty() {
            LaurentPoly { min_exp: 0, coeffs }
        } else {
            LaurentPoly { min_exp: min_exp + lead_zeros as i64, coeffs }
        }
    }

    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    /// The monomial `c·x^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        LaurentPoly::new(e, vec![c])
    }

    pub fn from_poly(p: &Poly) -> Self {
        LaurentPoly::new(0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> Rational {
        if self.is_zero() || e < self.min_exp {
            return Rational::zero();
        }
        self.coeffs
            .get((e - self.min_exp) as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Multiplies by `x^k` (k may be negative).
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { min_exp: self.min_exp + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, s: &Rational) -> LaurentPoly {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// True iff invariant under `x ↦ 1/x`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.coeffs.len();
        if n == 0 {
            return true;
        }
        self.min_exp == -(self.min_exp + n as i64 - 1)
            && (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Converts to an ordinary polynomial; errors if any negative exponent
    /// carries a nonzero coefficient.
    pub fn into_poly(self) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if self.min_exp < 0 {
            return Err(Error::Internal(format!(
                "Laurent polynomial has negative exponent {}: {}",
                self.min_exp, self
            )));
        }
        let mut coeffs = vec![Rational::zero(); self.min_exp as usize];
        coeffs.extend(self.coeffs);
        Ok(Poly::new(coeffs))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

/// Evaluates an ordinary polynomial at a Laurent-polynomial argument.
pub fn eval_poly(p: &Poly, x: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * x) + &LaurentPoly::monomial(c.clone(), 0);
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.min_exp + i as i64;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·x")?,
                _ => write!(f, "({c})·x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
