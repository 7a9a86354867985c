//! Truncated power series over the rationals.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of degrees
//! `0..N-1`. Arithmetic truncates to the common order, which propagates as
//! the minimum of the operand orders.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{rat, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series of the given order, truncating or zero-padding the
    /// supplied coefficients. `order` must be at least 1.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "series order must be positive");
        coeffs.resize(order, Rational::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        TruncatedSeries::new(order, vec![c])
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        TruncatedSeries::new(order, p.coeffs().to_vec())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `u^k`; `k` must be below the order.
    pub fn coeff(&self, k: usize) -> Rational {
        assert!(k < self.order, "coefficient {k} beyond series order {}", self.order);
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        assert!(order <= self.order, "cannot extend a truncated series");
        TruncatedSeries::new(order, self.coeffs[..order].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The polynomial carried by the stored coefficients.
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn scale(&self, s: &Rational) -> TruncatedSeries {
        TruncatedSeries::new(self.order, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplicative inverse; errors when the constant term is zero.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::InvalidInput(
                "series with zero constant term has no inverse".into(),
            ));
        }
        let mut inv = vec![Rational::zero(); self.order];
        inv[0] = rat(1) / a0;
        for n in 1..self.order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv[n - k];
            }
            inv[n] = -acc / a0;
        }
        Ok(TruncatedSeries::new(self.order, inv))
    }

    pub fn pow(&self, mut e: u32) -> TruncatedSeries {
        let mut base = self.clone();
        let mut acc = TruncatedSeries::constant(rat(1), self.order);
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

    /// Composition `self(inner(u))` of two genuine series; the inner series
    /// must have zero constant term for the result to be well defined.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::SeriesComposition);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        let mut acc = TruncatedSeries::constant(Rational::zero(), order);
        for c in self.coeffs[..order].iter().rev() {
            acc = &(&acc * &inner) + &TruncatedSeries::constant(c.clone(), order);
        }
        Ok(acc)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        TruncatedSeries::new(order, coeffs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        TruncatedSeries::new(order, coeffs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![Rational::zero(); order];
        for (i, a) in self.coeffs[..order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries::new(order, coeffs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(u^{})", self.to_poly(), self.order)
    }
}

/// The Catalan generating function `C(u) = Σ C_n u^n` to the given order,
/// built from the convolution recurrence `C_{n+1} = Σ C_i C_{n-i}`.
pub fn catalan_series(order: usize) -> TruncatedSeries {
    assert!(order >= 1, "series order must be positive");
    let mut c = vec![rat(1)];
    for n in 0..order - 1 {
        let mut acc = Rational::zero();
        for i in 0..=n {
            acc += &c[i] * &c[n - i];
        }
        c.push(acc);
    }
    TruncatedSeries::new(order, c)
}

/// `C̃(u) = C(u) - 1`, the shifted Catalan series with zero constant term.
pub fn catalan_series_shifted(order: usize) -> TruncatedSeries {
    &catalan_series(order) - &TruncatedSeries::constant(rat(1), order)
}

/// Evaluates a polynomial at a series argument. Always defined because the
/// outer factor is a genuine polynomial.
pub fn series_compose(p: &Poly, s: &TruncatedSeries) -> TruncatedSeries {
    let order = s.order();
    let mut acc = TruncatedSeries::constant(Rational::zero(), order);
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * s) + &TruncatedSeries::constant(c.clone(), order);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_first_terms() {
        let c = catalan_series(5);
        let expect = [1, 1, 2, 5, 14];
        for (k, v) in expect.iter().enumerate() {
            assert_eq!(c.coeff(k), rat(*v));
        }
        assert_eq!(catalan_series(1).coeff(0), rat(1));
    }

    #[test]
    fn catalan_functional_identity() {
        // C(u) = 1 + u·C(u)^2 at every tested order
        for order in 1..=24 {
            let c = catalan_series(order);
            let sq = &c * &c;
            let mut shifted = vec![Rational::zero()];
            shifted.extend_from_slice(&sq.coeffs()[..order - 1]);
            let rhs = &TruncatedSeries::constant(rat(1), order)
                + &TruncatedSeries::new(order, shifted);
            assert_eq!(c, rhs);
        }
    }

    #[test]
    fn shifted_catalan_is_u_c_squared() {
        // C̃(u) = u·C(u)^2 to order 10
        let order = 10;
        let c = catalan_series(order);
        let ct = catalan_series_shifted(order);
        let sq = &c * &c;
        for k in 1..order {
            assert_eq!(ct.coeff(k), sq.coeff(k - 1));
        }
        assert_eq!(ct.coeff(0), Rational::zero());
    }

    #[test]
    fn square_of_shifted_catalan() {
        // C̃^2 = u^2 + 4u^3 + 14u^4 + ... (order-5 window)
        let ct = catalan_series_shifted(5);
        let sq = series_compose(&Poly::from_ints(&[0, 0, 1]), &ct);
        assert_eq!(sq.coeffs(), &[rat(0), rat(0), rat(1), rat(4), rat(14)]);
    }

    #[test]
    fn compose_constant_and_identity() {
        let ct = catalan_series_shifted(6);
        let k = series_compose(&Poly::from_ints(&[7]), &ct);
        assert_eq!(k, TruncatedSeries::constant(rat(7), 6));
        assert_eq!(series_compose(&Poly::x(), &ct), ct);
    }

    #[test]
    fn series_series_compose_requires_zero_constant() {
        let c = catalan_series(6);
        let ct = catalan_series_shifted(6);
        assert!(c.compose(&c).is_err());
        assert_eq!(c.compose(&ct).unwrap().coeff(0), rat(1));
    }

    #[test]
    fn order_propagates_as_min() {
        let a = catalan_series(8);
        let b = catalan_series(5);
        assert_eq!((&a * &b).order(), 5);
        assert_eq!((&a + &b).order(), 5);
    }

    #[test]
    fn inverse_round_trip() {
        let c = catalan_series(12);
        let inv = c.inverse().unwrap();
        let one = &c * &inv;
        assert_eq!(one, TruncatedSeries::constant(rat(1), 12));
        assert!(catalan_series_shifted(4).inverse().is_err());
    }
}
