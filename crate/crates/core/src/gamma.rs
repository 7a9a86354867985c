//! Gamma vectors of even-degree reciprocal polynomials, computed by three
//! independent routes:
//!
//! 1. peeling off `γ_i · t^i · (1+t)^{d-2i}` from the lowest degree up,
//! 2. the Catalan-series quotient `h(C̃(u)) / C(u)^d`,
//! 3. the inverted Chebyshev expansion `γ(u) = u^{d/2} · g(1/u - 2)`.
//!
//! The three must agree exactly; the acceptance suite sweeps that claim.

use num::traits::Zero;

use crate::chebyshev::g_from_palindromic;
use crate::error::{Error, Result};
use crate::laurent::{eval_poly, LaurentPoly};
use crate::poly::Poly;
use crate::rational::{rat, Rational};
use crate::series::{catalan_series, catalan_series_shifted, series_compose};

/// A reciprocal (palindromic) polynomial of even degree `d`:
/// `h_k = h_{d-k}` for all `k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReciprocalPoly {
    inner: Poly,
    d: usize,
}

impl ReciprocalPoly {
    pub fn new(h: Poly) -> Result<Self> {
        let Some(d) = h.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        if d % 2 != 0 {
            return Err(Error::OddDegree(d));
        }
        for k in 0..=d / 2 {
            if h.coeff(k) != h.coeff(d - k) {
                return Err(Error::NotReciprocal { index: k, mirror: d - k });
            }
        }
        Ok(ReciprocalPoly { inner: h, d })
    }

    pub fn poly(&self) -> &Poly {
        &self.inner
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn half_degree(&self) -> usize {
        self.d / 2
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.inner.coeff(k)
    }
}

/// The gamma vector `(γ_0, …, γ_{d/2})` of a degree-`d` reciprocal
/// polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaVector {
    entries: Vec<Rational>,
}

impl GammaVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        GammaVector { entries }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Degree of the reciprocal polynomial this vector belongs to.
    pub fn degree(&self) -> usize {
        2 * (self.entries.len() - 1)
    }

    /// The gamma polynomial `γ(u) = Σ γ_i u^i`.
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.entries.clone())
    }

    /// Rebuilds `Σ γ_i · t^i · (1+t)^{d-2i}`; must reproduce the source
    /// polynomial exactly.
    pub fn reconstruct(&self) -> Poly {
        let d = self.degree();
        let one_plus_t = Poly::from_ints(&[1, 1]);
        let mut acc = Poly::zero();
        for (i, c) in self.entries.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = one_plus_t.pow((d - 2 * i) as u32).shift_up(i).scale(c);
            acc = &acc + &term;
        }
        acc
    }
}

/// Route 1: iterated subtraction. At step `i` every coefficient below `t^i`
/// has already been cleared, so `γ_i` is the current coefficient of `t^i`.
pub fn gamma_by_peeling(h: &ReciprocalPoly) -> GammaVector {
    let d = h.degree();
    let one_plus_t = Poly::from_ints(&[1, 1]);
    let mut rem = h.poly().clone();
    let mut entries = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = rem.coeff(i);
        if !g.is_zero() {
            let term = one_plus_t.pow((d - 2 * i) as u32).shift_up(i).scale(&g);
            rem = &rem - &term;
        }
        entries.push(g);
    }
    debug_assert!(rem.is_zero(), "peeling left a nonzero remainder: {rem}");
    GammaVector::new(entries)
}

/// Route 2: `γ(u) = h(C̃(u)) · C(u)^{-d}` as a truncated series. The series
/// must terminate at degree `d/2`; the working order `d/2 + 2` watches one
/// coefficient past that.
pub fn gamma_by_catalan(h: &ReciprocalPoly) -> Result<GammaVector> {
    gamma_by_catalan_with_order(h, h.half_degree() + 2)
}

/// Same as [`gamma_by_catalan`] with an explicit working order
/// (at least `d/2 + 2`).
pub fn gamma_by_catalan_with_order(h: &ReciprocalPoly, order: usize) -> Result<GammaVector> {
    let d = h.degree();
    let half = d / 2;
    if order < half + 2 {
        return Err(Error::InvalidInput(format!(
            "working order {order} too small, need at least {}",
            half + 2
        )));
    }
    let c = catalan_series(order);
    let ct = catalan_series_shifted(order);
    let numerator = series_compose(h.poly(), &ct);
    let c_inv_d = c.inverse()?.pow(d as u32);
    let series = &numerator * &c_inv_d;
    for k in half + 1..order {
        if !series.coeff(k).is_zero() {
            return Err(Error::Internal(format!(
                "Catalan route does not terminate: coefficient of u^{k} is {}",
                series.coeff(k)
            )));
        }
    }
    Ok(GammaVector::new((0..=half).map(|k| series.coeff(k)).collect()))
}

/// Route 3: build `g` from the palindromic coefficients and clear `1/u` by
/// exact Laurent composition of `u^{d/2} · g(1/u - 2)`.
pub fn gamma_by_cheb(h: &ReciprocalPoly) -> Result<GammaVector> {
    let half = h.half_degree();
    let g = g_from_palindromic(h.poly())?;
    let inv_u_minus_2 =
        &LaurentPoly::monomial(rat(1), -1) + &LaurentPoly::monomial(rat(-2), 0);
    let gamma_laurent = eval_poly(&g, &inv_u_minus_2).shift(half as i64);
    let gamma = gamma_laurent.into_poly().map_err(|_| {
        Error::Internal("Chebyshev route left negative exponents".into())
    })?;
    if gamma.degree().is_some_and(|deg| deg > half) {
        return Err(Error::Internal(format!(
            "Chebyshev route exceeds degree {half}: {gamma}"
        )));
    }
    let mut entries: Vec<Rational> = gamma.coeffs().to_vec();
    entries.resize(half + 1, Rational::zero());
    Ok(GammaVector::new(entries))
}

/// Checks both rewritten forms of the inverted Chebyshev expansion:
/// `u^{d/2}·γ(1/u) = g(u - 2)` and `(u + 2)^{d/2}·γ(1/(u + 2)) = g(u)`.
pub fn verify_gamchebinv_variants(h: &ReciprocalPoly) -> Result<bool> {
    let half = h.half_degree();
    let g = g_from_palindromic(h.poly())?;
    let gamma = gamma_by_peeling(h);

    // u^{d/2}·γ(1/u) is the padded coefficient reversal of γ.
    let mut rev = gamma.entries().to_vec();
    rev.reverse();
    let lhs1 = Poly::new(rev);
    let rhs1 = g.compose(&Poly::from_ints(&[-2, 1]));

    // (u + 2)^{d/2}·γ(1/(u + 2)) = Σ γ_i (u + 2)^{d/2 - i}.
    let u_plus_2 = Poly::from_ints(&[2, 1]);
    let mut lhs2 = Poly::zero();
    for (i, c) in gamma.entries().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        lhs2 = &lhs2 + &u_plus_2.pow((half - i) as u32).scale(c);
    }

    Ok(lhs1 == rhs1 && lhs2 == g)
}

/// `P_r`, the polynomial with `w^r + w^{-r} = P_r((w+1)²/w)`:
/// `P_0 = 2`, `P_1 = z - 2`, `P_{r+1} = (z - 2)·P_r - P_{r-1}`.
pub fn basis_gamma_p(r: usize) -> Poly {
    let mut prev = Poly::from_ints(&[2]);
    if r == 0 {
        return prev;
    }
    let z_minus_2 = Poly::from_ints(&[-2, 1]);
    let mut cur = z_minus_2.clone();
    for _ in 1..r {
        let next = &(&z_minus_2 * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Q_r(z) = P_r(z + 2)`, which coincides with the monic first-kind
/// Chebyshev polynomial `2·T_r(z/2)`.
pub fn basis_gamma_q(r: usize) -> Poly {
    basis_gamma_p(r).compose(&Poly::from_ints(&[2, 1]))
}

/// Gamma vector of the reciprocal basis element `x^k + x^{d-k}`
/// (which is `2·x^{d/2}` when `k = d/2`).
pub fn basis_gamma_of_pair(k: usize, d: usize) -> Result<GammaVector> {
    if d % 2 != 0 {
        return Err(Error::OddDegree(d));
    }
    if k > d / 2 {
        return Err(Error::IndexOutOfRange { index: k as i64, min: 0, max: (d / 2) as i64 });
    }
    let elem = &Poly::monomial(rat(1), k) + &Poly::monomial(rat(1), d - k);
    let h = ReciprocalPoly::new(elem)?;
    Ok(gamma_by_peeling(&h))
}

/// Convenience: all three routes plus their exact agreement.
pub struct GammaRoutes {
    pub peeling: GammaVector,
    pub catalan: GammaVector,
    pub cheb: GammaVector,
}

impl GammaRoutes {
    pub fn compute(h: &ReciprocalPoly) -> Result<GammaRoutes> {
        Ok(GammaRoutes {
            peeling: gamma_by_peeling(h),
            catalan: gamma_by_catalan(h)?,
            cheb: gamma_by_cheb(h)?,
        })
    }

    pub fn agree(&self) -> bool {
        self.peeling == self.catalan && self.peeling == self.cheb
    }
}
