//! Seeded, reproducible verification sweeps.
//!
//! Every sweep draws its instances from a ChaCha stream keyed by the seed,
//! evaluates them (optionally in parallel), and aggregates in instance
//! order, so a given `(kind, count, seed)` always produces identical
//! output. Each sweep samples the regime in which the identity under test
//! is a theorem; boundary instances outside that regime are exercised by
//! the unit tests instead.

use std::str::FromStr;

use num::traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use crate::ce_index::compare_specialization_offset;
use crate::error::{Error, Result};
use crate::gamma::{GammaRoutes, ReciprocalPoly};
use crate::jsonio::object;
use crate::poly::Poly;
use crate::rational::{rat, ratio, Rational};
use crate::realroot::check_cheblinreal;
use crate::simplicial::{verify_gamma_subdivision, verify_t_transform, verify_u_transform, SimplicialComplex};

/// The sweep families exposed through the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SweepKind {
    GammaRoutes,
    Cheblin,
    Petersen,
    Subdiv,
    CeOffset,
}

impl SweepKind {
    pub fn name(self) -> &'static str {
        match self {
            SweepKind::GammaRoutes => "gamma-routes",
            SweepKind::Cheblin => "cheblin",
            SweepKind::Petersen => "petersen",
            SweepKind::Subdiv => "subdiv",
            SweepKind::CeOffset => "ce-offset",
        }
    }

    pub const ALL: [SweepKind; 5] = [
        SweepKind::GammaRoutes,
        SweepKind::Cheblin,
        SweepKind::Petersen,
        SweepKind::Subdiv,
        SweepKind::CeOffset,
    ];
}

impl FromStr for SweepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SweepKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown sweep kind {s:?}")))
    }
}

/// Aggregate sweep outcome, JSON-ready.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub kind: SweepKind,
    pub count: usize,
    pub seed: u64,
    pub pass: usize,
    pub fail: usize,
    pub first_counterexample: Option<String>,
    pub extras: Vec<(&'static str, Value)>,
}

impl SweepReport {
    pub fn to_json(&self) -> Value {
        let mut fields = vec![
            ("kind", Value::from(self.kind.name())),
            ("count", Value::from(self.count)),
            ("seed", Value::from(self.seed)),
            ("pass", Value::from(self.pass)),
            ("fail", Value::from(self.fail)),
            (
                "first_counterexample",
                self.first_counterexample.clone().map_or(Value::Null, Value::from),
            ),
        ];
        fields.extend(self.extras.iter().cloned());
        object(fields)
    }

    pub fn all_passed(&self) -> bool {
        self.fail == 0
    }
}

fn aggregate(results: Vec<(bool, String)>) -> (usize, usize, Option<String>) {
    let pass = results.iter().filter(|(ok, _)| *ok).count();
    let fail = results.len() - pass;
    let first = results.into_iter().find(|(ok, _)| !ok).map(|(_, d)| d);
    (pass, fail, first)
}

fn run_items<I, R, F>(items: Vec<I>, threads: Option<usize>, eval: F) -> Vec<R>
where
    I: Sync,
    R: Send,
    F: Fn(&I) -> R + Sync,
{
    match threads {
        Some(1) => items.iter().map(eval).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(|| items.par_iter().map(&eval).collect()),
        None => items.par_iter().map(&eval).collect(),
    }
}

/// Dispatches a sweep by kind.
pub fn run_sweep(kind: SweepKind, count: usize, seed: u64, threads: Option<usize>) -> SweepReport {
    match kind {
        SweepKind::GammaRoutes => gamma_routes_sweep(count, seed, threads),
        SweepKind::Cheblin => cheblin_sweep(count, seed, threads),
        SweepKind::Petersen => petersen_sweep(count, seed, threads),
        SweepKind::Subdiv => subdiv_sweep(count, seed, threads),
        SweepKind::CeOffset => ce_offset_sweep(count),
    }
}

// ---------------------------------------------------------------------------
// instance generators

fn nonzero_int(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let sign = if rng.random_bool(0.5) { 1 } else { -1 };
    sign * rng.random_range(1..=bound)
}

/// Random reciprocal polynomial of the given even degree with integer
/// coefficients in `[-9, 9]` and nonzero ends.
pub fn random_reciprocal(rng: &mut ChaCha8Rng, d: usize) -> ReciprocalPoly {
    assert!(d % 2 == 0);
    let half = d / 2;
    let mut coeffs = vec![Rational::zero(); d + 1];
    let end = rat(nonzero_int(rng, 9));
    coeffs[0] = end.clone();
    coeffs[d] = end;
    for k in 1..=half {
        let c = rat(rng.random_range(-9..=9));
        coeffs[k] = c.clone();
        coeffs[d - k] = c;
    }
    ReciprocalPoly::new(Poly::new(coeffs)).expect("constructed reciprocal")
}

/// Random even degree in `2..=max_d`.
pub fn random_even_degree(rng: &mut ChaCha8Rng, max_d: usize) -> usize {
    2 * rng.random_range(1..=max_d / 2)
}

/// Random dense polynomial of degree up to `max_deg` (nonzero).
pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let deg = rng.random_range(0..=max_deg);
    let mut coeffs: Vec<Rational> = (0..deg).map(|_| rat(rng.random_range(-9..=9))).collect();
    coeffs.push(rat(nonzero_int(rng, 9)));
    Poly::new(coeffs)
}

/// Random real-rooted reciprocal polynomial: a product of palindromic
/// quadratics `t² + s·t + 1` with rational `|s| ≥ 2`, scaled by a nonzero
/// constant. Every root is real because each factor has discriminant
/// `s² - 4 ≥ 0`.
pub fn random_real_rooted_reciprocal(rng: &mut ChaCha8Rng, max_pairs: usize) -> ReciprocalPoly {
    let pairs = rng.random_range(1..=max_pairs);
    let mut h = Poly::constant(rat(nonzero_int(rng, 9)));
    for _ in 0..pairs {
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        let s = ratio(sign * (2 * 3 + rng.random_range(0..=18)), 3); // |s| in [2, 8]
        let quad = Poly::new(vec![rat(1), s, rat(1)]);
        h = &h * &quad;
    }
    ReciprocalPoly::new(h).expect("products of palindromic factors are reciprocal")
}

/// Random Chebyshev tuple from the regime where the real-rootedness
/// correspondence is a theorem: either `A` is built from rational roots of
/// absolute value at least 1 (both sides real-rooted), or `A` carries a
/// negative-discriminant quadratic factor (neither side real-rooted).
pub fn random_cheblin_tuple(rng: &mut ChaCha8Rng, max_r: usize) -> Vec<Rational> {
    let a_poly = if rng.random_bool(0.5) {
        let r = rng.random_range(0..=max_r);
        let mut a = Poly::constant(rat(nonzero_int(rng, 5)));
        for _ in 0..r {
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            let root = ratio(sign * (4 + rng.random_range(0..=28)), 4); // |root| in [1, 8]
            a = &a * &Poly::new(vec![-root, rat(1)]);
        }
        a
    } else {
        let quads = rng.random_range(1..=max_r / 2);
        let linears = rng.random_range(0..=max_r - 2 * quads);
        let mut a = Poly::constant(rat(nonzero_int(rng, 5)));
        for _ in 0..quads {
            let p = rat(rng.random_range(-3..=3));
            let q = &(&p * &p) / rat(4) + ratio(rng.random_range(1..=8), 4);
            a = &a * &Poly::new(vec![q, p, rat(1)]);
        }
        for _ in 0..linears {
            a = &a * &Poly::new(vec![rat(rng.random_range(-3..=3)), rat(1)]);
        }
        a
    };
    crate::chebyshev::to_cheb_basis(&a_poly, crate::chebyshev::ChebKind::First)
}

/// Random complex on at most `max_vertices` vertices.
pub fn random_complex(rng: &mut ChaCha8Rng, max_vertices: u32) -> SimplicialComplex {
    let v = rng.random_range(1..=max_vertices);
    let facet_count = rng.random_range(1..=5);
    let mut facets = Vec::with_capacity(facet_count);
    for _ in 0..facet_count {
        let size = rng.random_range(1..=4.min(v));
        let mut facet: Vec<u32> = Vec::with_capacity(size as usize);
        while facet.len() < size as usize {
            let x = rng.random_range(0..v);
            if !facet.contains(&x) {
                facet.push(x);
            }
        }
        facets.push(facet);
    }
    SimplicialComplex::from_facets(facets)
}

// ---------------------------------------------------------------------------
// sweep runners

/// Three-route gamma agreement plus the rewritten-identity variants on the
/// same instances.
pub fn gamma_routes_sweep(count: usize, seed: u64, threads: Option<usize>) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items: Vec<ReciprocalPoly> = (0..count)
        .map(|_| {
            let d = random_even_degree(&mut rng, 20);
            random_reciprocal(&mut rng, d)
        })
        .collect();
    let results = run_items(items, threads, |h| {
        let routes_agree = GammaRoutes::compute(h)
            .map(|r| r.agree() && r.peeling.reconstruct() == *h.poly())
            .unwrap_or(false);
        let variants = crate::gamma::verify_gamchebinv_variants(h).unwrap_or(false);
        (
            (routes_agree && variants, format!("h = {}", h.poly())),
            routes_agree,
            variants,
        )
    });
    let routes_pass = results.iter().filter(|r| r.1).count();
    let variants_pass = results.iter().filter(|r| r.2).count();
    let (pass, fail, first) = aggregate(results.into_iter().map(|r| r.0).collect());
    SweepReport {
        kind: SweepKind::GammaRoutes,
        count,
        seed,
        pass,
        fail,
        first_counterexample: first,
        extras: vec![
            ("routes_agree_pass", Value::from(routes_pass)),
            ("variants_pass", Value::from(variants_pass)),
        ],
    }
}

/// Sturm agreement between `A(x)` and the proof-forced reciprocal tuple;
/// the printed-tuple orientation's agreement rate is recorded alongside.
pub fn cheblin_sweep(count: usize, seed: u64, threads: Option<usize>) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items: Vec<Vec<Rational>> =
        (0..count).map(|_| random_cheblin_tuple(&mut rng, 8)).collect();
    let results = run_items(items, threads, |a| {
        match check_cheblinreal(a) {
            Ok(rep) => ((rep.agree, format!("a = {a:?}")), rep.printed_agree),
            Err(e) => ((false, format!("a = {a:?}: {e}")), false),
        }
    });
    let printed_agree = results.iter().filter(|r| r.1).count();
    let (pass, fail, first) = aggregate(results.into_iter().map(|r| r.0).collect());
    SweepReport {
        kind: SweepKind::Cheblin,
        count,
        seed,
        pass,
        fail,
        first_counterexample: first,
        extras: vec![("printed_orientation_agree", Value::from(printed_agree))],
    }
}

/// Real-rootedness transfer from `h` to its gamma polynomial, sampled over
/// certified real-rooted reciprocal polynomials (the regime of the
/// underlying observation); both sides are still decided independently by
/// Sturm chains.
pub fn petersen_sweep(count: usize, seed: u64, threads: Option<usize>) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items: Vec<ReciprocalPoly> =
        (0..count).map(|_| random_real_rooted_reciprocal(&mut rng, 10)).collect();
    let results = run_items(items, threads, |h| {
        let ok = crate::realroot::verify_petersen_observation(h).unwrap_or(false);
        (ok, format!("h = {}", h.poly()))
    });
    let (pass, fail, first) = aggregate(results);
    SweepReport {
        kind: SweepKind::Petersen,
        count,
        seed,
        pass,
        fail,
        first_counterexample: first,
        extras: Vec::new(),
    }
}

/// Chebyshev-transform and gamma-subdivision identities on random small
/// complexes.
pub fn subdiv_sweep(count: usize, seed: u64, threads: Option<usize>) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items: Vec<SimplicialComplex> =
        (0..count).map(|_| random_complex(&mut rng, 6)).collect();
    let results = run_items(items, threads, |k| {
        let t = verify_t_transform(k).unwrap_or(false);
        let u = verify_u_transform(k).unwrap_or(false);
        let g = verify_gamma_subdivision(k).map(|r| r.agree).unwrap_or(false);
        (
            t && u && g,
            format!("facets = {:?}", k.facets().collect::<Vec<_>>()),
        )
    });
    let (pass, fail, first) = aggregate(results);
    SweepReport {
        kind: SweepKind::Subdiv,
        count,
        seed,
        pass,
        fail,
        first_counterexample: first,
        extras: Vec::new(),
    }
}

/// Difference table between the reciprocal Chebyshev polynomials `A_n`, the
/// `c ↦ 1, e ↦ x` ce-index specialization `S_n`, and the offsets `R_n`.
/// Descriptive: the table is the product.
pub fn ce_offset_sweep(count: usize) -> SweepReport {
    let mut table = Vec::with_capacity(count);
    let mut identical = 0usize;
    for n in 0..count {
        let cmp = compare_specialization_offset(n);
        if cmp.a_minus_s.is_zero() {
            identical += 1;
        }
        table.push(object(vec![
            ("n", Value::from(n)),
            ("a_minus_s", Value::from(cmp.a_minus_s.to_string())),
            ("a_minus_2s", Value::from(cmp.a_minus_2s.to_string())),
            ("a_minus_s_minus_r", Value::from(cmp.a_minus_s_minus_r.to_string())),
        ]));
    }
    SweepReport {
        kind: SweepKind::CeOffset,
        count,
        seed: 0,
        pass: identical,
        fail: count - identical,
        first_counterexample: None,
        extras: vec![("differences", Value::Array(table))],
    }
}
