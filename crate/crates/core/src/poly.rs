//! Dense univariate polynomials over [`Rational`].
//!
//! Coefficients are stored by ascending degree with trailing zeros trimmed,
//! so the last stored coefficient of a nonzero polynomial is nonzero. The
//! zero polynomial stores no coefficients and has no degree ([`Poly::degree`]
//! returns `None` rather than a fake integer).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Dense univariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial from coefficients by ascending degree,
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x` itself.
    pub fn x() -> Self {
        Poly::monomial(rat(1), 1)
    }

    /// Convenience constructor from machine integers by ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients by ascending degree (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Composition `self(other(x))`, computed by Horner over polynomials.
    pub fn compose(&self, other: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: returns `(q, r)` with `self = q·div + r` and
    /// `deg r < deg div`. Errors on a zero divisor.
    pub fn div_rem(&self, div: &Poly) -> Result<(Poly, Poly)> {
        if div.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot: Vec<Rational> = Vec::new();
        while rem.len() >= dd + 1 {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for i in 0..=dd {
                let t = &div.coeffs[i] * &factor;
                rem[k + i] -= t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) && rem.len() > k {
                rem.pop();
            }
            if quot.len() < k + 1 {
                quot.resize(k + 1, Rational::zero());
            }
            quot[k] = factor;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, div: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(div)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                num: self.to_string(),
                den: div.to_string(),
            });
        }
        Ok(q)
    }

    /// Monic gcd via the Euclidean algorithm. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = Rational::one() / l;
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// Squarefree part `self / gcd(self, self')`, made monic-free of content
    /// only up to the gcd normalization. Errors on the zero polynomial.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g)
    }

    /// Coefficient reversal `x^deg · self(1/x)` (trailing zero coefficients
    /// of the input drop out, exactly as the algebra dictates).
    pub fn reciprocal(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    /// True iff `h_k = h_{d-k}` for all `k`. The zero polynomial counts as
    /// palindromic.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
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
        Poly::new(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}·")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_square() {
        let p = Poly::from_ints(&[1, 1]);
        assert_eq!(&p * &p, Poly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn additive_identity() {
        let p = Poly::from_ints(&[3, 0, -2, 5]);
        assert_eq!(&p + &Poly::zero(), p);
    }

    #[test]
    fn hand_expanded_product() {
        // (1 - t)(1 + t + t^2 + t^3) = 1 - t^4
        let a = Poly::from_ints(&[1, -1]);
        let b = Poly::from_ints(&[1, 1, 1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[1, 0, 0, 0, -1]));
    }

    #[test]
    fn compose_examples() {
        // t^2 ∘ (t+1) = t^2 + 2t + 1
        let sq = Poly::from_ints(&[0, 0, 1]);
        let t1 = Poly::from_ints(&[1, 1]);
        assert_eq!(sq.compose(&t1), Poly::from_ints(&[1, 2, 1]));
        // identity on the left
        let q = Poly::from_ints(&[4, -7, 0, 2]);
        assert_eq!(Poly::x().compose(&q), q);
        // (1 + t + t^2) ∘ 2t = 1 + 2t + 4t^2
        let p = Poly::from_ints(&[1, 1, 1]);
        assert_eq!(p.compose(&Poly::from_ints(&[0, 2])), Poly::from_ints(&[1, 2, 4]));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(Poly::from_ints(&[0, 0, 0, 1]).derivative(), Poly::from_ints(&[0, 0, 3]));
        assert_eq!(Poly::from_ints(&[5]).derivative(), Poly::zero());
        // T_3' = 12t^2 - 3 = 3·U_2 with U_2 = 4t^2 - 1
        let t3 = Poly::from_ints(&[0, -3, 0, 4]);
        let u2 = Poly::from_ints(&[-1, 0, 4]);
        assert_eq!(t3.derivative(), u2.scale(&rat(3)));
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
        assert_eq!(Poly::new(vec![rat(0), rat(0)]).degree(), None);
    }

    #[test]
    fn div_rem_round_trips() {
        let a = Poly::from_ints(&[2, -3, 0, 1, 7]);
        let b = Poly::from_ints(&[1, 2, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = Poly::from_ints(&[1, 0, -1]); // (1-t)(1+t)
        assert_eq!(a.div_exact(&Poly::from_ints(&[1, 1])).unwrap(), Poly::from_ints(&[1, -1]));
        assert!(Poly::from_ints(&[1, 1, 1]).div_exact(&Poly::from_ints(&[1, 1])).is_err());
    }

    #[test]
    fn reciprocal_reverses_and_trims() {
        assert_eq!(Poly::from_ints(&[1, 2, 3]).reciprocal(), Poly::from_ints(&[3, 2, 1]));
        // t^2 -> 1 (the x^k factor drops)
        assert_eq!(Poly::from_ints(&[0, 0, 1]).reciprocal(), Poly::one());
        let pal = Poly::from_ints(&[2, -1, 2]);
        assert_eq!(pal.reciprocal(), pal);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(Poly::from_ints(&[-3, 0, 0, 4]).to_string(), "4·x^3 - 3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_ints(&[0, 1]).to_string(), "x");
    }
}
