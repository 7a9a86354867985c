//! Noncommutative polynomials in the letters `c` and `e`, the ce-index
//! recursion of the Tchebyshev posets, its commutative specializations, and
//! the reciprocal-Chebyshev recursions tied to them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::traits::{One, Signed, Zero};

use crate::chebyshev::cheb_t;
use crate::error::Result;
use crate::gamma::ReciprocalPoly;
use crate::laurent::{eval_poly, LaurentPoly};
use crate::poly::Poly;
use crate::rational::{rat, ratio, Rational};

/// A word over the alphabet `{c, e}`. Words order length-first, then
/// lexicographically, which fixes a deterministic printing order.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct CeWord(String);

impl CeWord {
    pub fn empty() -> Self {
        CeWord(String::new())
    }

    /// Parses a word from `'c'`/`'e'` characters.
    pub fn parse(s: &str) -> Result<Self> {
        if s.chars().all(|ch| ch == 'c' || ch == 'e') {
            Ok(CeWord(s.to_string()))
        } else {
            Err(crate::error::Error::InvalidInput(format!("bad ce-word {s:?}")))
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn concat(&self, other: &CeWord) -> CeWord {
        CeWord(format!("{}{}", self.0, other.0))
    }
}

impl Ord for CeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for CeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Noncommutative polynomial with rational coefficients on ce-words.
/// Multiplication concatenates words bilinearly; there are no commutation
/// relations, and zero-coefficient terms are pruned.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CePoly {
    terms: BTreeMap<CeWord, Rational>,
}

impl CePoly {
    pub fn zero() -> Self {
        CePoly::default()
    }

    pub fn one() -> Self {
        CePoly::monomial(CeWord::empty(), rat(1))
    }

    pub fn c() -> Self {
        CePoly::monomial(CeWord("c".into()), rat(1))
    }

    pub fn e() -> Self {
        CePoly::monomial(CeWord("e".into()), rat(1))
    }

    pub fn monomial(word: CeWord, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        CePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CeWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &CeWord) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &CePoly) -> CePoly {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(w);
            }
        }
        CePoly { terms }
    }

    pub fn sub(&self, other: &CePoly) -> CePoly {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, s: &Rational) -> CePoly {
        if s.is_zero() {
            return CePoly::zero();
        }
        CePoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect() }
    }

    pub fn mul(&self, other: &CePoly) -> CePoly {
        let mut terms: BTreeMap<CeWord, Rational> = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let w = wa.concat(wb);
                let entry = terms.entry(w).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        CePoly { terms }
    }

    /// Substitutes commuting polynomial values for the letters, multiplying
    /// each word out left to right.
    pub fn specialize(&self, c_val: &Poly, e_val: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for (word, coeff) in &self.terms {
            let mut prod = Poly::constant(coeff.clone());
            for ch in word.as_str().chars() {
                prod = match ch {
                    'c' => &prod * c_val,
                    _ => &prod * e_val,
                };
            }
            acc = &acc + &prod;
        }
        acc
    }
}

impl fmt::Display for CePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (word, coeff) in &self.terms {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if word.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", word.as_str())?;
            } else {
                write!(f, "{mag}·{}", word.as_str())?;
            }
        }
        Ok(())
    }
}

/// ce-index of the `n`-th Tchebyshev poset:
/// `Ψ(T_0) = 1`, `Ψ(T_1) = c`, `Ψ(T_n) = 2c·Ψ(T_{n-1}) - e²·Ψ(T_{n-2})`.
pub fn tcheb_ce_index(n: usize) -> CePoly {
    let mut prev = CePoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = CePoly::c();
    let two_c = CePoly::c().scale(&rat(2));
    let e_sq = CePoly::e().mul(&CePoly::e());
    for _ in 1..n {
        let next = two_c.mul(&cur).sub(&e_sq.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// Reciprocal Chebyshev polynomials `A_m(x) = x^m·T_m(1/x)`:
/// `A_0 = A_1 = 1`, `A_m = 2·A_{m-1} - x²·A_{m-2}`.
pub fn reciprocal_cheb_a(m: usize) -> Poly {
    let mut prev = Poly::one();
    if m == 0 {
        return prev;
    }
    let mut cur = Poly::one();
    let x_sq = Poly::monomial(rat(1), 2);
    for _ in 1..m {
        let next = &cur.scale(&rat(2)) - &(&x_sq * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Offset polynomials `R_0 = 0`, `R_1 = 1/2`, `R_k = R_{k-1} - x²·R_{k-2}`.
pub fn offset_r(k: usize) -> Poly {
    let mut prev = Poly::zero();
    if k == 0 {
        return prev;
    }
    let mut cur = Poly::constant(ratio(1, 2));
    let x_sq = Poly::monomial(rat(1), 2);
    for _ in 1..k {
        let next = &cur - &(&x_sq * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact differences between `A_n`, the `c ↦ 1, e ↦ x` specialization
/// `S_n` of the ce-index, and the offset `R_n`. The relation the offsets
/// were introduced for is not reproducible as printed, so this is a
/// descriptive table rather than an assertion: direct computation gives
/// `S_n = A_n` identically.
#[derive(Clone, Debug)]
pub struct OffsetComparison {
    pub n: usize,
    /// `specialize(Ψ(T_n), c ↦ 1, e ↦ x)`.
    pub s: Poly,
    pub a: Poly,
    pub r: Poly,
    pub a_minus_s: Poly,
    pub a_minus_2s: Poly,
    pub a_minus_s_minus_r: Poly,
}

pub fn compare_specialization_offset(n: usize) -> OffsetComparison {
    let s = tcheb_ce_index(n).specialize(&Poly::one(), &Poly::x());
    let a = reciprocal_cheb_a(n);
    let r = offset_r(n);
    let a_minus_s = &a - &s;
    let a_minus_2s = &a - &s.scale(&rat(2));
    let a_minus_s_minus_r = &a_minus_s - &r;
    OffsetComparison { n, s, a, r, a_minus_s, a_minus_2s, a_minus_s_minus_r }
}

/// Checks the `u = w/(2(w+1))` substitution bridge: first that
/// `1/u - 2 = 2/w`, then that `g(2/w)/w^{d/2}` decomposes exactly into
/// `h_{d/2}·w^{-d/2} + 2·Σ_j h_{d/2-j}·w^{-(d/2-j)}·[w^{-j}·T_j(1/w)]`,
/// whose bracketed factors are the reciprocal Chebyshev polynomials in the
/// inverted variable.
pub fn gamtopdes_substitution_check(h: &ReciprocalPoly) -> Result<bool> {
    // 1/u = 2(w+1)/w = 2 + 2/w, so 1/u - 2 = 2/w.
    let inv_u = LaurentPoly::new(-1, vec![rat(2), rat(2)]);
    let two_over_w = LaurentPoly::monomial(rat(2), -1);
    if &(&inv_u - &LaurentPoly::monomial(rat(2), 0)) != &two_over_w {
        return Ok(false);
    }

    let half = h.half_degree();
    let g = crate::chebyshev::g_from_palindromic(h.poly())?;
    let lhs = eval_poly(&g, &two_over_w).shift(-(half as i64));

    let w_inv = LaurentPoly::monomial(rat(1), -1);
    let mut rhs = LaurentPoly::monomial(h.coeff(half), -(half as i64));
    for j in 1..=half {
        let c = h.coeff(half - j) * rat(2);
        if c.is_zero() {
            continue;
        }
        let recip_cheb = eval_poly(&cheb_t(j), &w_inv).shift(-(j as i64));
        let term = recip_cheb.scale(&c).shift(-((half - j) as i64));
        rhs = &rhs + &term;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::realroot::reciprocal_of;

    fn word(s: &str) -> CeWord {
        CeWord::parse(s).unwrap()
    }

    #[test]
    fn words_do_not_commute() {
        let ce = CePoly::c().mul(&CePoly::e());
        let ec = CePoly::e().mul(&CePoly::c());
        assert_ne!(ce, ec);
    }

    #[test]
    fn square_of_a_sum() {
        let s = CePoly::c().add(&CePoly::e());
        let sq = s.mul(&s);
        for w in ["cc", "ce", "ec", "ee"] {
            assert_eq!(sq.coeff(&word(w)), rat(1));
        }
    }

    #[test]
    fn hand_expanded_product() {
        // (2c - e)·(c + 3e) = 2cc + 6ce - ec - 3ee
        let a = CePoly::c().scale(&rat(2)).sub(&CePoly::e());
        let b = CePoly::c().add(&CePoly::e().scale(&rat(3)));
        let p = a.mul(&b);
        assert_eq!(p.coeff(&word("cc")), rat(2));
        assert_eq!(p.coeff(&word("ce")), rat(6));
        assert_eq!(p.coeff(&word("ec")), rat(-1));
        assert_eq!(p.coeff(&word("ee")), rat(-3));
    }

    #[test]
    fn ce_index_small_values() {
        assert_eq!(tcheb_ce_index(0), CePoly::one());
        assert_eq!(tcheb_ce_index(1), CePoly::c());
        let n2 = tcheb_ce_index(2);
        assert_eq!(n2.coeff(&word("cc")), rat(2));
        assert_eq!(n2.coeff(&word("ee")), rat(-1));
        assert_eq!(n2.terms().count(), 2);
        // n = 3: 4ccc - 2cee - eec
        let n3 = tcheb_ce_index(3);
        assert_eq!(n3.coeff(&word("ccc")), rat(4));
        assert_eq!(n3.coeff(&word("cee")), rat(-2));
        assert_eq!(n3.coeff(&word("eec")), rat(-1));
        assert_eq!(n3.terms().count(), 3);
    }

    #[test]
    fn ce_index_words_are_homogeneous() {
        for n in 0..=12 {
            for (w, _) in tcheb_ce_index(n).terms() {
                assert_eq!(w.len(), n);
            }
        }
    }

    #[test]
    fn specialization_hits_chebyshev() {
        assert_eq!(tcheb_ce_index(2).specialize(&Poly::x(), &Poly::one()), cheb_t(2));
        for n in 0..=15 {
            assert_eq!(
                tcheb_ce_index(n).specialize(&Poly::x(), &Poly::one()),
                cheb_t(n),
                "n = {n}"
            );
        }
        assert_eq!(CePoly::one().specialize(&Poly::x(), &Poly::one()), Poly::one());
    }

    #[test]
    fn reciprocal_cheb_small_values() {
        assert_eq!(reciprocal_cheb_a(0), Poly::one());
        assert_eq!(reciprocal_cheb_a(1), Poly::one());
        assert_eq!(reciprocal_cheb_a(2), Poly::from_ints(&[2, 0, -1]));
    }

    #[test]
    fn reciprocal_cheb_matches_reversal() {
        for m in 0..=25 {
            assert_eq!(reciprocal_cheb_a(m), reciprocal_of(&cheb_t(m)), "m = {m}");
        }
    }

    #[test]
    fn offset_small_values() {
        assert_eq!(offset_r(0), Poly::zero());
        assert_eq!(offset_r(1), Poly::constant(ratio(1, 2)));
        assert_eq!(offset_r(2), Poly::constant(ratio(1, 2)));
        assert_eq!(offset_r(3), Poly::new(vec![ratio(1, 2), rat(0), ratio(-1, 2)]));
    }

    #[test]
    fn offset_comparison_table() {
        for n in 0..=20 {
            let cmp = compare_specialization_offset(n);
            // S_n and A_n share recursion and initial values, so they agree
            // identically and the remaining columns expose the open offsets.
            assert_eq!(cmp.a_minus_s, Poly::zero(), "n = {n}");
            assert_eq!(cmp.a_minus_2s, (&cmp.a).scale(&rat(-1)));
            assert_eq!(cmp.a_minus_s_minus_r, cmp.r.scale(&rat(-1)));
        }
    }

    #[test]
    fn substitution_bridge() {
        for coeffs in [&[1i64, 1, 1][..], &[1, 2, 1], &[3, -1, 4, -1, 3], &[2, 0, 0, 5, 0, 0, 2]] {
            let h = ReciprocalPoly::new(Poly::from_ints(coeffs)).unwrap();
            assert!(gamtopdes_substitution_check(&h).unwrap(), "h = {coeffs:?}");
        }
    }

    #[test]
    fn display_matches_length_lex() {
        assert_eq!(tcheb_ce_index(2).to_string(), "2·cc - ee");
        assert_eq!(tcheb_ce_index(0).to_string(), "1");
        assert_eq!(tcheb_ce_index(3).to_string(), "4·ccc - 2·cee - eec");
    }
}
