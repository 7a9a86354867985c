//! Exact real-root counting via Sturm chains, plus the real-rootedness
//! transfer checks between a polynomial, its reciprocal, its gamma
//! polynomial, and linear combinations of Chebyshev polynomials.
//!
//! "Real-rooted" always means *all* roots real, counted with multiplicity.
//! Everything here is exact; a numeric oracle exists only in the test suite.

use num::traits::{One, Signed, Zero};
use num::{BigInt, Integer};

use crate::chebyshev::from_cheb_basis;
use crate::error::{Error, Result};
use crate::gamma::{gamma_by_peeling, ReciprocalPoly};
use crate::poly::Poly;
use crate::rational::{rat, ratio, Rational};

/// A Sturm chain: the polynomial, its derivative, and the successive
/// negated Euclidean remainders. Each element is rescaled to primitive
/// integer coefficients (a positive scaling, which preserves all signs)
/// to keep coefficient growth in check.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<Poly>,
}

fn primitive_scaled(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let mut content = BigInt::zero();
    for c in p.coeffs() {
        content = content.gcd(&(c.numer() * &lcm / c.denom()));
    }
    let factor = Rational::new(lcm, content);
    p.scale(&factor)
}

impl SturmChain {
    /// Builds the chain for a nonzero polynomial.
    pub fn new(p: &Poly) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![primitive_scaled(p)];
        let dp = p.derivative();
        if !dp.is_zero() {
            polys.push(primitive_scaled(&dp));
        }
        while polys.len() >= 2 {
            let r = polys[polys.len() - 2]
                .div_rem(&polys[polys.len() - 1])
                .expect("chain elements are nonzero")
                .1;
            if r.is_zero() {
                break;
            }
            polys.push(primitive_scaled(&r.scale(&rat(-1))));
        }
        Ok(SturmChain { polys })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        let signs: Vec<i8> = self
            .polys
            .iter()
            .map(|p| {
                let lead = p.leading().expect("chain elements are nonzero");
                let mut s = if lead.is_positive() { 1i8 } else { -1 };
                if !positive && p.degree().unwrap() % 2 == 1 {
                    s = -s;
                }
                s
            })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots of the chain's base polynomial.
    pub fn distinct_real_roots(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// Exact real-root counts of a nonzero polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RootCount {
    /// Distinct real roots.
    pub distinct_real: usize,
    /// Real roots counted with multiplicity.
    pub total_real: usize,
    /// Degree of the input.
    pub degree: usize,
    /// True iff every root is real, i.e. `total_real == degree`.
    pub is_real_rooted: bool,
}

/// Counts real roots by Sturm's theorem. Multiplicities are recovered by
/// stripping one squarefree part at a time: a root of multiplicity `m`
/// survives exactly `m` rounds.
pub fn count_real_roots(p: &Poly) -> Result<RootCount> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    let sf = p.squarefree_part()?;
    let distinct_real = SturmChain::new(&sf)?.distinct_real_roots();

    let mut total_real = distinct_real;
    let mut cur = p.div_exact(&sf)?;
    while cur.degree().is_some_and(|d| d > 0) {
        let q = cur.squarefree_part()?;
        total_real += SturmChain::new(&q)?.distinct_real_roots();
        cur = cur.div_exact(&q)?;
    }

    Ok(RootCount {
        distinct_real,
        total_real,
        degree,
        is_real_rooted: total_real == degree,
    })
}

/// True iff all roots of `p` are real (with multiplicity).
pub fn is_real_rooted(p: &Poly) -> Result<bool> {
    Ok(count_real_roots(p)?.is_real_rooted)
}

/// The reciprocal polynomial `t^{deg p} · p(1/t)`.
pub fn reciprocal_of(p: &Poly) -> Poly {
    p.reciprocal()
}

/// Real-rootedness is invariant under taking reciprocals; this computes
/// both sides independently and compares.
pub fn verify_reciprocal_lemma(p: &Poly) -> Result<bool> {
    Ok(is_real_rooted(p)? == is_real_rooted(&reciprocal_of(p))?)
}

/// Which way the Chebyshev coefficient tuple is folded into a reciprocal
/// polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TupleOrientation {
    /// `h_{r-j} = a_j/2` for `j ≥ 1` and `h_r = a_0`: the orientation forced
    /// by substituting `a_j` for the T_j-coefficient of `g`.
    ProofForced,
    /// `(h_0, …, h_r) = (a_r, a_{r-1}/2, …, a_0/2)`: the tuple exactly as
    /// printed, with the *leading* entry escaping the halving.
    Printed,
}

/// Builds the degree-`2r` reciprocal polynomial attached to the tuple
/// `a = (a_0, …, a_r)` of `A(x) = Σ a_j T_j(x)`.
///
/// With `strict` set, a zero leading coefficient is an error; otherwise
/// trailing zeros are dropped and the effective `r` shrinks accordingly.
pub fn reciprocal_from_cheb_coeffs(
    a: &[Rational],
    orientation: TupleOrientation,
    strict: bool,
) -> Result<ReciprocalPoly> {
    if a.is_empty() {
        return Err(Error::InvalidInput("empty Chebyshev tuple".into()));
    }
    if strict && a.last().unwrap().is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let mut a = a.to_vec();
    while a.len() > 1 && a.last().unwrap().is_zero() {
        a.pop();
    }
    if a.iter().all(Zero::is_zero) {
        return Err(Error::InvalidInput("zero Chebyshev tuple".into()));
    }
    let r = a.len() - 1;
    let half = ratio(1, 2);
    let mut low = vec![Rational::zero(); r + 1];
    match orientation {
        TupleOrientation::ProofForced => {
            low[r] = a[0].clone();
            for j in 1..=r {
                low[r - j] = &a[j] * &half;
            }
        }
        TupleOrientation::Printed => {
            low[0] = a[r].clone();
            for j in 1..=r {
                low[j] = &a[r - j] * &half;
            }
        }
    }
    let mut coeffs = low.clone();
    for k in (0..r).rev() {
        coeffs.push(low[k].clone());
    }
    ReciprocalPoly::new(Poly::new(coeffs))
}

/// Side-by-side Sturm verdicts for a Chebyshev linear combination and the
/// reciprocal polynomials built from its tuple in both orientations.
#[derive(Clone, Debug)]
pub struct CheblinReport {
    /// Real-rootedness of `A(x) = Σ a_j T_j(x)`.
    pub lhs_real_rooted: bool,
    /// Real-rootedness of the proof-forced reciprocal polynomial.
    pub rhs_real_rooted: bool,
    /// `lhs == rhs` for the proof-forced orientation.
    pub agree: bool,
    /// Real-rootedness of the printed-tuple reciprocal polynomial.
    pub printed_rhs_real_rooted: bool,
    /// `lhs == printed_rhs`.
    pub printed_agree: bool,
}

/// Computes the report. This operation records rather than asserts: the two
/// tuple orientations genuinely differ, and sweeps measure which one tracks
/// the Sturm verdict on `A(x)`.
pub fn check_cheblinreal(a: &[Rational]) -> Result<CheblinReport> {
    let lhs_poly = from_cheb_basis(a, crate::chebyshev::ChebKind::First);
    if lhs_poly.is_zero() {
        return Err(Error::InvalidInput("zero Chebyshev combination".into()));
    }
    let lhs = is_real_rooted(&lhs_poly)?;
    let rhs =
        is_real_rooted(reciprocal_from_cheb_coeffs(a, TupleOrientation::ProofForced, false)?.poly())?;
    let printed =
        is_real_rooted(reciprocal_from_cheb_coeffs(a, TupleOrientation::Printed, false)?.poly())?;
    Ok(CheblinReport {
        lhs_real_rooted: lhs,
        rhs_real_rooted: rhs,
        agree: lhs == rhs,
        printed_rhs_real_rooted: printed,
        printed_agree: lhs == printed,
    })
}

/// Compares real-rootedness of a reciprocal polynomial with that of its
/// gamma polynomial, both decided by Sturm chains.
pub fn verify_petersen_observation(h: &ReciprocalPoly) -> Result<bool> {
    let gamma = gamma_by_peeling(h).to_poly();
    Ok(is_real_rooted(h.poly())? == is_real_rooted(&gamma)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::cheb_t;

    #[test]
    fn no_real_roots() {
        let c = count_real_roots(&Poly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!((c.distinct_real, c.total_real, c.is_real_rooted), (0, 0, false));
    }

    #[test]
    fn multiplicity_from_factored_construction() {
        // (t-1)^2 (t+2): 2 distinct, 3 with multiplicity, real-rooted
        let p = &Poly::from_ints(&[-1, 1]).pow(2) * &Poly::from_ints(&[2, 1]);
        let c = count_real_roots(&p).unwrap();
        assert_eq!((c.distinct_real, c.total_real, c.degree), (2, 3, 3));
        assert!(c.is_real_rooted);
    }

    #[test]
    fn chebyshev_polynomials_are_real_rooted() {
        for n in 1..=20 {
            let c = count_real_roots(&cheb_t(n)).unwrap();
            assert_eq!(c.distinct_real, n, "T_{n}");
            assert!(c.is_real_rooted);
        }
    }

    #[test]
    fn constants_are_vacuously_real_rooted() {
        let c = count_real_roots(&Poly::from_ints(&[5])).unwrap();
        assert_eq!((c.degree, c.total_real), (0, 0));
        assert!(c.is_real_rooted);
        assert!(count_real_roots(&Poly::zero()).is_err());
    }

    #[test]
    fn mixed_multiplicities() {
        // (t-1)^3 (t^2+1) (t+4)^2: real roots 1,1,1,-4,-4; degree 7
        let p = &(&Poly::from_ints(&[-1, 1]).pow(3) * &Poly::from_ints(&[1, 0, 1]))
            * &Poly::from_ints(&[4, 1]).pow(2);
        let c = count_real_roots(&p).unwrap();
        assert_eq!((c.distinct_real, c.total_real, c.degree), (2, 5, 7));
        assert!(!c.is_real_rooted);
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(reciprocal_of(&Poly::from_ints(&[1, 2, 3])), Poly::from_ints(&[3, 2, 1]));
        assert_eq!(reciprocal_of(&Poly::from_ints(&[0, 0, 1])), Poly::one());
        let pal = Poly::from_ints(&[1, 7, 1]);
        assert_eq!(reciprocal_of(&pal), pal);
    }

    #[test]
    fn reciprocal_lemma_spot_checks() {
        assert!(verify_reciprocal_lemma(&Poly::from_ints(&[1, 0, 1])).unwrap());
        assert!(verify_reciprocal_lemma(&Poly::from_ints(&[0, -1, 1])).unwrap());
        assert!(verify_reciprocal_lemma(&Poly::from_ints(&[0, 0, 5])).unwrap());
    }

    #[test]
    fn tuple_orientations() {
        // A = T_1: proof-forced h = (1/2, 0, 1/2)
        let a = vec![rat(0), rat(1)];
        let h = reciprocal_from_cheb_coeffs(&a, TupleOrientation::ProofForced, false).unwrap();
        assert_eq!(h.poly().coeffs(), &[ratio(1, 2), rat(0), ratio(1, 2)]);

        // A = 1: degree-0 polynomial 1
        let one = reciprocal_from_cheb_coeffs(&[rat(1)], TupleOrientation::ProofForced, false).unwrap();
        assert_eq!(one.poly(), &Poly::one());

        // A = T_2 + 1: (1/2, 0, 1, 0, 1/2)
        let a = vec![rat(1), rat(0), rat(1)];
        let h = reciprocal_from_cheb_coeffs(&a, TupleOrientation::ProofForced, false).unwrap();
        assert_eq!(h.poly().coeffs(), &[ratio(1, 2), rat(0), rat(1), rat(0), ratio(1, 2)]);

        // printed orientation differs: h_0 = a_r unhalved
        let h = reciprocal_from_cheb_coeffs(
            &[rat(2), rat(4)],
            TupleOrientation::Printed,
            false,
        )
        .unwrap();
        assert_eq!(h.poly().coeffs(), &[rat(4), rat(1), rat(4)]);

        // strict flag rejects a zero leading entry; non-strict shrinks r
        assert!(matches!(
            reciprocal_from_cheb_coeffs(&[rat(1), rat(0)], TupleOrientation::ProofForced, true),
            Err(Error::ZeroLeadingCoefficient)
        ));
        let shrunk =
            reciprocal_from_cheb_coeffs(&[rat(1), rat(0)], TupleOrientation::ProofForced, false)
                .unwrap();
        assert_eq!(shrunk.degree(), 0);
    }

    #[test]
    fn cheblin_report_known_instances() {
        // A = T_1 = x is real-rooted; proof-forced h = (1+t^2)/2 is not.
        let rep = check_cheblinreal(&[rat(0), rat(1)]).unwrap();
        assert!(rep.lhs_real_rooted);
        assert!(!rep.rhs_real_rooted);
        assert!(!rep.agree);

        // constant tuple: everything vacuously real-rooted
        let rep = check_cheblinreal(&[rat(1)]).unwrap();
        assert!(rep.lhs_real_rooted && rep.rhs_real_rooted && rep.agree);
        assert!(rep.printed_agree);

        assert!(check_cheblinreal(&[rat(0), rat(0)]).is_err());
    }

    #[test]
    fn petersen_observation_instances() {
        // h = 1 + 4t + t^2 real-rooted, gamma = 1 + 2t real-rooted
        let h = ReciprocalPoly::new(Poly::from_ints(&[1, 4, 1])).unwrap();
        assert!(verify_petersen_observation(&h).unwrap());

        // (1+t)^d: gamma = 1, both vacuously fine
        let h = ReciprocalPoly::new(Poly::from_ints(&[1, 1]).pow(6)).unwrap();
        assert!(verify_petersen_observation(&h).unwrap());

        // Boundary instance: h = 1 + t + t^2 has complex roots but its gamma
        // polynomial 1 - t is real-rooted, so the raw biconditional fails.
        let h = ReciprocalPoly::new(Poly::from_ints(&[1, 1, 1])).unwrap();
        assert!(!verify_petersen_observation(&h).unwrap());
    }

    #[test]
    fn nonnegative_real_rooted_palindromic_has_nonnegative_gamma() {
        // products of (t^2 + st + 1) with |s| >= 2 and (1+t)^2
        let factors = [
            Poly::from_ints(&[1, 2, 1]),
            Poly::from_ints(&[1, 3, 1]),
            Poly::new(vec![rat(1), ratio(5, 2), rat(1)]),
        ];
        let mut h = Poly::one();
        for f in &factors {
            h = &h * f;
        }
        let h = ReciprocalPoly::new(h).unwrap();
        assert!(is_real_rooted(h.poly()).unwrap());
        let gamma = gamma_by_peeling(&h);
        assert!(gamma.entries().iter().all(|c| !c.is_negative()));
    }
}
