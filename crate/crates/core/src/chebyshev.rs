//! Chebyshev polynomials of both kinds, monomial↔Chebyshev basis
//! conversions, and the palindromic-polynomial correspondence
//! `h(t) = t^n · g(t + 1/t)`.

use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{eval_poly, LaurentPoly};
use crate::poly::Poly;
use crate::rational::{rat, ratio, Rational};

/// Which Chebyshev family a conversion targets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChebKind {
    First,
    Second,
}

/// Direction of a monomial/Chebyshev change of basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisDirection {
    MonomialToCheb,
    ChebToMonomial,
}

/// `T_n`, from `T_0 = 1`, `T_1 = x`, `T_n = 2x·T_{n-1} - T_{n-2}`.
pub fn cheb_t(n: usize) -> Poly {
    cheb_family(n, Poly::x())
}

/// `U_n`, from `U_0 = 1`, `U_1 = 2x`, same recursion as `T_n`.
pub fn cheb_u(n: usize) -> Poly {
    cheb_family(n, Poly::from_ints(&[0, 2]))
}

fn cheb_family(n: usize, first: Poly) -> Poly {
    let two_x = Poly::from_ints(&[0, 2]);
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = first;
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `T_j(u/2)`, computed exactly by composition; `2·T_j(u/2)` is the monic
/// Chebyshev polynomial.
pub fn cheb_t_half(j: usize) -> Poly {
    cheb_t(j).compose(&Poly::new(vec![Rational::zero(), ratio(1, 2)]))
}

/// Square change-of-basis matrix between the monomial basis and the
/// first-kind Chebyshev basis, for polynomials of degree at most `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisMatrix {
    entries: Vec<Vec<Rational>>,
    direction: BasisDirection,
}

impl BasisMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn direction(&self) -> BasisDirection {
        self.direction
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }

    /// Plain matrix product of the entry grids.
    pub fn product_entries(&self, other: &BasisMatrix) -> Vec<Vec<Rational>> {
        let n = self.size();
        assert_eq!(n, other.size());
        let mut out = vec![vec![Rational::zero(); n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..n {
                    *cell += &self.entries[i][k] * &other.entries[k][j];
                }
            }
        }
        out
    }

    pub fn is_identity_product(&self, other: &BasisMatrix) -> bool {
        let prod = self.product_entries(other);
        prod.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() })
        })
    }

    /// True iff every entry is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(|e| !e.is_negative())
    }
}

/// Change-of-basis matrix of size `(n+1)×(n+1)`. In the `ChebToMonomial`
/// direction column `j` holds the monomial coefficients of `T_j`; the
/// `MonomialToCheb` direction is its exact inverse, with column `j` holding
/// the Chebyshev coordinates of `x^j`.
pub fn basis_matrix(n: usize, direction: BasisDirection) -> BasisMatrix {
    let size = n + 1;
    let mut entries = vec![vec![Rational::zero(); size]; size];
    match direction {
        BasisDirection::ChebToMonomial => {
            for j in 0..size {
                for (i, c) in cheb_t(j).coeffs().iter().enumerate() {
                    entries[i][j] = c.clone();
                }
            }
        }
        BasisDirection::MonomialToCheb => {
            for j in 0..size {
                let col = to_cheb_basis(&Poly::monomial(rat(1), j), ChebKind::First);
                for (i, c) in col.into_iter().enumerate() {
                    entries[i][j] = c;
                }
            }
        }
    }
    BasisMatrix { entries, direction }
}

/// Coordinates `b_j` with `p = Σ b_j T_j` (or `U_j`), obtained by peeling the
/// leading term against the leading coefficient `2^{j-1}` (resp. `2^j`).
/// The zero polynomial yields the single coordinate `0`.
pub fn to_cheb_basis(p: &Poly, kind: ChebKind) -> Vec<Rational> {
    let Some(deg) = p.degree() else {
        return vec![Rational::zero()];
    };
    let mut out = vec![Rational::zero(); deg + 1];
    let mut work = p.clone();
    while let Some(k) = work.degree() {
        let basis = match kind {
            ChebKind::First => cheb_t(k),
            ChebKind::Second => cheb_u(k),
        };
        let b = work.leading().unwrap() / basis.leading().unwrap();
        work = &work - &basis.scale(&b);
        debug_assert!(work.degree().map_or(true, |d| d < k));
        out[k] = b;
    }
    out
}

/// Inverse of [`to_cheb_basis`]: assembles `Σ b_j T_j` (or `U_j`).
pub fn from_cheb_basis(coeffs: &[Rational], kind: ChebKind) -> Poly {
    let mut acc = Poly::zero();
    for (j, b) in coeffs.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let basis = match kind {
            ChebKind::First => cheb_t(j),
            ChebKind::Second => cheb_u(j),
        };
        acc = &acc + &basis.scale(b);
    }
    acc
}

fn check_palindromic_even(h: &Poly) -> Result<usize> {
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
    Ok(d)
}

/// For a palindromic `h` of even degree `2n` with coefficients `a_k`,
/// returns `g(u) = a_n + Σ_{j=1..n} 2·a_{n-j}·T_j(u/2)`, the unique
/// polynomial with `h(t) = t^n · g(t + 1/t)`.
pub fn g_from_palindromic(h: &Poly) -> Result<Poly> {
    let d = check_palindromic_even(h)?;
    let n = d / 2;
    let mut g = Poly::constant(h.coeff(n));
    for j in 1..=n {
        let c = h.coeff(n - j) * rat(2);
        if c.is_zero() {
            continue;
        }
        g = &g + &cheb_t_half(j).scale(&c);
    }
    Ok(g)
}

/// Exact check of `h(t) - t^n·g(t + 1/t) = 0` in the Laurent ring.
pub fn verify_palindromic_identity(h: &Poly) -> Result<bool> {
    let d = check_palindromic_even(h)?;
    let g = g_from_palindromic(h)?;
    Ok(palindromic_identity_holds(h, &g, d / 2))
}

/// The identity check against an explicitly supplied `g`, used to confirm
/// that a corrupted `g` is detected.
pub fn palindromic_identity_holds(h: &Poly, g: &Poly, n: usize) -> bool {
    let t_plus_inv = &LaurentPoly::monomial(rat(1), 1) + &LaurentPoly::monomial(rat(1), -1);
    let rhs = eval_poly(g, &t_plus_inv).shift(n as i64);
    rhs == LaurentPoly::from_poly(h)
}

/// Divides an odd-degree reciprocal polynomial by `1 + t`, yielding the
/// even-degree reciprocal quotient.
pub fn reduce_odd_reciprocal(h: &Poly) -> Result<Poly> {
    let Some(d) = h.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if d % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "reduce_odd_reciprocal expects odd degree, got {d}"
        )));
    }
    for k in 0..=d / 2 {
        if h.coeff(k) != h.coeff(d - k) {
            return Err(Error::NotReciprocal { index: k, mirror: d - k });
        }
    }
    // Odd-degree reciprocal polynomials vanish at t = -1, so the division
    // is exact; a nonzero remainder would mean the checks above are wrong.
    h.div_exact(&Poly::from_ints(&[1, 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheb_t_small_values() {
        assert_eq!(cheb_t(0), Poly::one());
        assert_eq!(cheb_t(1), Poly::x());
        assert_eq!(cheb_t(2), Poly::from_ints(&[-1, 0, 2]));
        assert_eq!(cheb_t(3), Poly::from_ints(&[0, -3, 0, 4]));
    }

    #[test]
    fn cheb_u_small_values() {
        assert_eq!(cheb_u(0), Poly::one());
        assert_eq!(cheb_u(1), Poly::from_ints(&[0, 2]));
        assert_eq!(cheb_u(2), Poly::from_ints(&[-1, 0, 4]));
    }

    #[test]
    fn derivative_links_the_kinds() {
        // T_n' = n·U_{n-1} for n <= 20
        for n in 1..=20usize {
            assert_eq!(cheb_t(n).derivative(), cheb_u(n - 1).scale(&rat(n as i64)));
        }
    }

    #[test]
    fn basis_matrix_small_cases() {
        let m = basis_matrix(1, BasisDirection::ChebToMonomial);
        assert!(m.entry(0, 0).is_one() && m.entry(1, 1).is_one());
        assert!(m.entry(0, 1).is_zero() && m.entry(1, 0).is_zero());

        let m2 = basis_matrix(2, BasisDirection::ChebToMonomial);
        assert_eq!(
            (m2.entry(0, 2).clone(), m2.entry(1, 2).clone(), m2.entry(2, 2).clone()),
            (rat(-1), rat(0), rat(2))
        );
    }

    #[test]
    fn basis_matrix_inverse_pair() {
        for n in 0..=8 {
            let a = basis_matrix(n, BasisDirection::MonomialToCheb);
            let b = basis_matrix(n, BasisDirection::ChebToMonomial);
            assert!(a.is_identity_product(&b));
            assert!(b.is_identity_product(&a));
            assert!(a.is_nonnegative());
        }
    }

    #[test]
    fn cheb_t_matches_basis_columns() {
        let n = 30;
        let m = basis_matrix(n, BasisDirection::ChebToMonomial);
        for j in 0..=n {
            let t = cheb_t(j);
            for i in 0..=n {
                assert_eq!(*m.entry(i, j), t.coeff(i));
            }
        }
    }

    #[test]
    fn to_cheb_basis_examples() {
        assert_eq!(
            to_cheb_basis(&Poly::from_ints(&[-1, 0, 2]), ChebKind::First),
            vec![rat(0), rat(0), rat(1)]
        );
        // x^2 = (T_0 + T_2)/2
        assert_eq!(
            to_cheb_basis(&Poly::monomial(rat(1), 2), ChebKind::First),
            vec![ratio(1, 2), rat(0), ratio(1, 2)]
        );
        assert_eq!(to_cheb_basis(&Poly::one(), ChebKind::Second), vec![rat(1)]);
    }

    #[test]
    fn g_from_palindromic_examples() {
        // h = 1 + t + t^2  ->  g = 1 + u
        assert_eq!(g_from_palindromic(&Poly::from_ints(&[1, 1, 1])).unwrap(), Poly::from_ints(&[1, 1]));
        // h = (1+t)^2  ->  g = u + 2
        assert_eq!(g_from_palindromic(&Poly::from_ints(&[1, 2, 1])).unwrap(), Poly::from_ints(&[2, 1]));
        // h = 1 + t^4  ->  g = 2·T_2(u/2) = u^2 - 2
        assert_eq!(
            g_from_palindromic(&Poly::from_ints(&[1, 0, 0, 0, 1])).unwrap(),
            Poly::from_ints(&[-2, 0, 1])
        );
    }

    #[test]
    fn g_rejects_bad_input() {
        assert!(matches!(
            g_from_palindromic(&Poly::from_ints(&[1, 2, 3])),
            Err(Error::NotReciprocal { .. })
        ));
        assert!(matches!(
            g_from_palindromic(&Poly::from_ints(&[1, 1])),
            Err(Error::OddDegree(1))
        ));
        assert!(g_from_palindromic(&Poly::zero()).is_err());
    }

    #[test]
    fn palindromic_identity_and_soundness() {
        let h = Poly::from_ints(&[3, -1, 4, -1, 3]);
        assert!(verify_palindromic_identity(&h).unwrap());
        assert!(verify_palindromic_identity(&Poly::one()).unwrap());
        // a corrupted g must be caught
        let g = g_from_palindromic(&h).unwrap();
        let bad = &g + &Poly::one();
        assert!(!palindromic_identity_holds(&h, &bad, 2));
    }

    #[test]
    fn g_degree_is_half_when_constant_term_nonzero() {
        let h = Poly::from_ints(&[2, 5, 9, 5, 2]);
        assert_eq!(g_from_palindromic(&h).unwrap().degree(), Some(2));
        let spiky = Poly::from_ints(&[-3, 0, 1, 0, -3]);
        assert_eq!(g_from_palindromic(&spiky).unwrap().degree(), Some(2));
    }

    #[test]
    fn reduce_odd_reciprocal_examples() {
        assert_eq!(reduce_odd_reciprocal(&Poly::from_ints(&[1, 1])).unwrap(), Poly::one());
        assert_eq!(
            reduce_odd_reciprocal(&Poly::from_ints(&[1, 2, 2, 1])).unwrap(),
            Poly::from_ints(&[1, 1, 1])
        );
        assert_eq!(
            reduce_odd_reciprocal(&Poly::from_ints(&[1, 1, 1, 1])).unwrap(),
            Poly::from_ints(&[1, 0, 1])
        );
        assert!(reduce_odd_reciprocal(&Poly::from_ints(&[1, 2, 1, 1])).is_err());
        assert!(reduce_odd_reciprocal(&Poly::from_ints(&[1, 2, 1])).is_err());
    }
}
