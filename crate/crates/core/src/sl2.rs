//! Formal sl(2) character decompositions of reciprocal polynomials and the
//! associated pair of unimodal polynomials.
//!
//! A reciprocal `h` of even degree `d` maps to the symmetric Laurent
//! polynomial `μ^{-d}·h(μ²)`; the class of the `n`-dimensional irreducible
//! representation is `χ_n = μ^{n-1} + μ^{n-3} + … + μ^{1-n}`.

use std::collections::BTreeMap;

use num::traits::Zero;

use crate::chebyshev::g_from_palindromic;
use crate::error::{Error, Result};
use crate::gamma::ReciprocalPoly;
use crate::laurent::LaurentPoly;
use crate::poly::Poly;
use crate::rational::{rat, Rational};

/// Multiplicities of irreducible characters by dimension.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CharacterClass {
    multiplicities: BTreeMap<u32, Rational>,
}

impl CharacterClass {
    pub fn multiplicities(&self) -> &BTreeMap<u32, Rational> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, dim: u32) -> Rational {
        self.multiplicities.get(&dim).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Σ m_n · χ_n`, which must reproduce the decomposed input exactly.
    pub fn reconstruct(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for (&n, m) in &self.multiplicities {
            acc = &acc + &character(n).scale(m);
        }
        acc
    }
}

/// The irreducible character `χ_n = (μ^n - μ^{-n})/(μ - μ^{-1})`.
pub fn character(n: u32) -> LaurentPoly {
    let n = n as i64;
    let coeffs = (0..n).map(|_| rat(1)).collect();
    LaurentPoly::new(1 - n, coeffs)
}

/// `μ^{-d} · h(μ²)` for a reciprocal polynomial of even degree `d`;
/// symmetric under `μ ↔ 1/μ` by reciprocity.
pub fn char_image(h: &ReciprocalPoly) -> LaurentPoly {
    let d = h.degree() as i64;
    let coeffs = h.poly().coeffs();
    let mut out = LaurentPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = &out + &LaurentPoly::monomial(c.clone(), 2 * k as i64 - d);
    }
    out
}

/// Greedy top-down peeling into irreducible characters: the input must be
/// symmetric with exponents of uniform parity. Exactness of the
/// reconstruction certifies the result.
pub fn decompose_characters(l: &LaurentPoly) -> Result<CharacterClass> {
    if !l.is_symmetric() {
        return Err(Error::AsymmetricLaurent);
    }
    if let (Some(lo), Some(hi)) = (l.min_exp(), l.max_exp()) {
        for e in lo..=hi {
            if !l.coeff(e).is_zero() && (e - lo) % 2 != 0 {
                return Err(Error::MixedParity);
            }
        }
    }
    let mut multiplicities = BTreeMap::new();
    let mut rem = l.clone();
    while let Some(top) = rem.max_exp() {
        let n = (top + 1) as u32;
        let m = rem.coeff(top);
        rem = &rem - &character(n).scale(&m);
        multiplicities.insert(n, m);
    }
    Ok(CharacterClass { multiplicities })
}

/// The pair of polynomials built from alternating partial sums of the
/// coefficients of a reciprocal polynomial: the coefficient of `u^p` in `F`
/// is `h_{d/2} + h_{d/2-2} + … + h_{d/2-2p}`, and the coefficient of `u^q`
/// in `G` is `h_{d/2-1} + h_{d/2-3} + … + h_{d/2-2q-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnimodalPair {
    pub f: Poly,
    pub g: Poly,
}

pub fn unimodal_pair(h: &ReciprocalPoly) -> UnimodalPair {
    let half = h.half_degree() as i64;
    let mut f_coeffs = Vec::new();
    let mut p = 0;
    while half - 2 * p >= 0 {
        let sum: Rational =
            (0..=p).map(|s| h.coeff((half - 2 * s) as usize)).sum();
        f_coeffs.push(sum);
        p += 1;
    }
    let mut g_coeffs = Vec::new();
    let mut q = 0;
    while half - 2 * q - 1 >= 0 {
        let sum: Rational =
            (0..=q).map(|s| h.coeff((half - 2 * s - 1) as usize)).sum();
        g_coeffs.push(sum);
        q += 1;
    }
    UnimodalPair { f: Poly::new(f_coeffs), g: Poly::new(g_coeffs) }
}

/// Side-by-side table for the multiplicity claim attached to `2·g'(u)`.
///
/// The derivative is computed twice (directly from `g`, and from
/// `Σ γ_i (u+2)^{d/2-i}`) and mapped through the character correspondence;
/// the two candidate weight tables `(j-1)·h_{d/2-j}` and `j·h_{d/2-j}` are
/// both printed because the source claim is ambiguous between them.
#[derive(Clone, Debug)]
pub struct Part3Report {
    pub two_g_prime: Poly,
    pub decomposition: CharacterClass,
    pub weight_j_minus_1: BTreeMap<u32, Rational>,
    pub weight_j: BTreeMap<u32, Rational>,
    pub matches_j_minus_1: bool,
    pub matches_j: bool,
}

pub fn part3_report(h: &ReciprocalPoly) -> Result<Part3Report> {
    let half = h.half_degree();
    let g = g_from_palindromic(h.poly())?;
    let two_g_prime = g.derivative().scale(&rat(2));

    // Independent route: d/du of (u+2)^{d/2}·γ(1/(u+2)) written out as
    // Σ γ_i (u+2)^{d/2-i}.
    let gamma = crate::gamma::gamma_by_peeling(h);
    let u_plus_2 = Poly::from_ints(&[2, 1]);
    let mut shifted = Poly::zero();
    for (i, c) in gamma.entries().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        shifted = &shifted + &u_plus_2.pow((half - i) as u32).scale(c);
    }
    if shifted.derivative().scale(&rat(2)) != two_g_prime {
        return Err(Error::Internal(
            "the two derivative routes for 2·g' disagree".into(),
        ));
    }

    let deg = two_g_prime.degree().unwrap_or(0) as i64;
    let mut image = LaurentPoly::zero();
    for (k, c) in two_g_prime.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        image = &image + &LaurentPoly::monomial(c.clone(), 2 * k as i64 - deg);
    }
    let decomposition = decompose_characters(&image)?;

    let mut weight_j_minus_1 = BTreeMap::new();
    let mut weight_j = BTreeMap::new();
    for j in 1..=half as u32 {
        let hc = h.coeff(half - j as usize);
        weight_j_minus_1.insert(j, rat(j as i64 - 1) * &hc);
        weight_j.insert(j, rat(j as i64) * &hc);
    }
    let matches = |table: &BTreeMap<u32, Rational>| {
        (1..=half as u32).all(|j| {
            decomposition.multiplicity(j) == table.get(&j).cloned().unwrap_or_else(Rational::zero)
        })
    };
    let matches_j_minus_1 = matches(&weight_j_minus_1);
    let matches_j = matches(&weight_j);
    Ok(Part3Report {
        two_g_prime,
        decomposition,
        weight_j_minus_1,
        weight_j,
        matches_j_minus_1,
        matches_j,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn recip(coeffs: &[i64]) -> ReciprocalPoly {
        ReciprocalPoly::new(Poly::from_ints(coeffs)).unwrap()
    }

    #[test]
    fn char_image_examples() {
        // 1 + t^2 -> μ^-2 + μ^2
        let l = char_image(&recip(&[1, 0, 1]));
        assert_eq!((l.coeff(-2), l.coeff(0), l.coeff(2)), (rat(1), rat(0), rat(1)));
        // 1 + t + t^2 -> μ^-2 + 1 + μ^2
        let l = char_image(&recip(&[1, 1, 1]));
        assert_eq!((l.coeff(-2), l.coeff(0), l.coeff(2)), (rat(1), rat(1), rat(1)));
        // (1+t)^2 -> μ^-2 + 2 + μ^2
        let l = char_image(&recip(&[1, 2, 1]));
        assert_eq!(l.coeff(0), rat(2));
        assert!(l.is_symmetric());
    }

    #[test]
    fn characters_are_balanced() {
        assert_eq!(character(1), LaurentPoly::monomial(rat(1), 0));
        let chi3 = character(3);
        assert_eq!((chi3.coeff(-2), chi3.coeff(0), chi3.coeff(2)), (rat(1), rat(1), rat(1)));
        assert!(character(6).is_symmetric());
    }

    #[test]
    fn decompose_examples() {
        // μ^2 + 1 + μ^-2 = χ_3
        let l = char_image(&recip(&[1, 1, 1]));
        let c = decompose_characters(&l).unwrap();
        assert_eq!(c.multiplicity(3), rat(1));
        assert_eq!(c.multiplicities().len(), 1);

        // the constant 2 = 2·χ_1
        let c = decompose_characters(&LaurentPoly::monomial(rat(2), 0)).unwrap();
        assert_eq!(c.multiplicity(1), rat(2));

        // (1,2,3,2,1): χ_5 + χ_3 + χ_1
        let c = decompose_characters(&char_image(&recip(&[1, 2, 3, 2, 1]))).unwrap();
        for dim in [1, 3, 5] {
            assert_eq!(c.multiplicity(dim), rat(1), "dim {dim}");
        }
        assert_eq!(c.multiplicities().len(), 3);
    }

    #[test]
    fn decompose_rejects_bad_input() {
        let asym = LaurentPoly::new(0, vec![rat(1), rat(1)]);
        assert!(matches!(decompose_characters(&asym), Err(Error::AsymmetricLaurent)));
        let mixed = LaurentPoly::new(-1, vec![rat(1), rat(1), rat(1)]);
        assert!(matches!(decompose_characters(&mixed), Err(Error::MixedParity)));
    }

    #[test]
    fn reconstruction_is_exact() {
        for h in [recip(&[1, 2, 3, 2, 1]), recip(&[2, -1, 7, -1, 2]), recip(&[5])] {
            let l = char_image(&h);
            assert_eq!(decompose_characters(&l).unwrap().reconstruct(), l);
        }
    }

    #[test]
    fn unimodal_pair_examples() {
        // (1,2,3,2,1): F = 3 + 4u, G = 2
        let p = unimodal_pair(&recip(&[1, 2, 3, 2, 1]));
        assert_eq!(p.f, Poly::from_ints(&[3, 4]));
        assert_eq!(p.g, Poly::from_ints(&[2]));

        // degree 0: F = 1, G = 0
        let p = unimodal_pair(&recip(&[1]));
        assert_eq!(p.f, Poly::one());
        assert_eq!(p.g, Poly::zero());

        // 1 + t^2: F = 0, G = 1
        let p = unimodal_pair(&recip(&[1, 0, 1]));
        assert_eq!(p.f, Poly::zero());
        assert_eq!(p.g, Poly::one());
    }

    #[test]
    fn unimodal_pair_matches_character_route() {
        // Independent oracle: reconstruct partial sums of h from the
        // multiplicity ladder m_{d+1-2k} = h_k - h_{k-1}.
        for h in [recip(&[1, 2, 3, 2, 1]), recip(&[1, 4, 9, 4, 1]), recip(&[2, 2, 2])] {
            let d = h.degree();
            let m = decompose_characters(&char_image(&h)).unwrap();
            let h_from_m = |j: usize| -> Rational {
                (0..=j).map(|k| m.multiplicity((d + 1 - 2 * k) as u32)).sum()
            };
            let pair = unimodal_pair(&h);
            let half = d / 2;
            for (p, c) in pair.f.coeffs().iter().enumerate() {
                let expect: Rational = (0..=p).map(|s| h_from_m(half - 2 * s)).sum();
                assert_eq!(*c, expect);
            }
            for (q, c) in pair.g.coeffs().iter().enumerate() {
                let expect: Rational = (0..=q).map(|s| h_from_m(half - 2 * s - 1)).sum();
                assert_eq!(*c, expect);
            }
        }
    }

    #[test]
    fn part3_tables_are_emitted() {
        // (1+t)^2: 2g' = 2, multiplicity table {1: 2}
        let rep = part3_report(&recip(&[1, 2, 1])).unwrap();
        assert_eq!(rep.two_g_prime, Poly::from_ints(&[2]));
        assert_eq!(rep.decomposition.multiplicity(1), rat(2));

        // 1 + t + t^2: g = 1 + u, 2g' = 2
        let rep = part3_report(&recip(&[1, 1, 1])).unwrap();
        assert_eq!(rep.two_g_prime, Poly::from_ints(&[2]));

        // tables exist for every j in 1..=d/2
        let rep = part3_report(&recip(&[1, 2, 3, 2, 1])).unwrap();
        assert_eq!(rep.weight_j.len(), 2);
        assert_eq!(rep.weight_j_minus_1.len(), 2);
    }
}
