//! Abstract simplicial complexes over integer vertex labels, Tchebyshev
//! (sequential edge-stellar) triangulations, f-/F-polynomials and the
//! Chebyshev transforms acting on them.
//!
//! Complexes are stored as their inclusion-maximal faces. The void complex
//! (no faces at all) and the complex `{∅}` (whose only face is the empty
//! set) are distinct values. Midpoints created by subdivisions take fresh
//! labels from a monotone counter, so subdivision output is reproducible
//! byte for byte.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num::traits::Zero;

use crate::chebyshev::{cheb_t, cheb_u};
use crate::error::{Error, Result};
use crate::gamma::{gamma_by_peeling, GammaVector, ReciprocalPoly};
use crate::poly::Poly;
use crate::rational::{rat, ratio, Rational};

/// Abstract simplicial complex given by its facets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    facets: BTreeSet<Vec<u32>>,
    next_vertex: u32,
}

impl SimplicialComplex {
    /// Builds a complex from a list of faces: each is sorted, duplicates
    /// collapse, and faces contained in other faces are dropped.
    pub fn from_facets<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let mut cleaned: Vec<Vec<u32>> = faces
            .into_iter()
            .map(|f| {
                let mut v: Vec<u32> = f.into_iter().collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        // Longer faces first so a dominated face is never inserted.
        cleaned.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        cleaned.dedup();
        let mut facets: BTreeSet<Vec<u32>> = BTreeSet::new();
        'cand: for face in cleaned {
            for kept in &facets {
                if kept.len() > face.len() && is_subset(&face, kept) {
                    continue 'cand;
                }
            }
            facets.insert(face);
        }
        let next_vertex = facets
            .iter()
            .filter_map(|f| f.last())
            .max()
            .map_or(0, |m| m + 1);
        SimplicialComplex { facets, next_vertex }
    }

    /// The void complex: no faces, not even the empty one.
    pub fn void() -> Self {
        SimplicialComplex { facets: BTreeSet::new(), next_vertex: 0 }
    }

    /// The complex `{∅}` whose only face is the empty set.
    pub fn empty_face() -> Self {
        SimplicialComplex::from_facets([Vec::<u32>::new()])
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.facets.iter()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Dimension: `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn vertices(&self) -> BTreeSet<u32> {
        self.facets.iter().flatten().copied().collect()
    }

    /// All edges (1-dimensional faces), in sorted order.
    pub fn edges(&self) -> Vec<[u32; 2]> {
        let mut out: BTreeSet<[u32; 2]> = BTreeSet::new();
        for f in &self.facets {
            for pair in f.iter().combinations(2) {
                out.insert([*pair[0], *pair[1]]);
            }
        }
        out.into_iter().collect()
    }

    /// All nonempty faces (downward closure of the facets).
    pub fn faces(&self) -> BTreeSet<Vec<u32>> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for size in 1..=f.len() {
                for sub in f.iter().copied().combinations(size) {
                    out.insert(sub);
                }
            }
        }
        out
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    /// Face counts `(f_{-1} = 1, f_0, …, f_dim)`; empty for the void complex.
    pub fn f_vector(&self) -> FVector {
        if self.is_void() {
            return FVector { counts: Vec::new() };
        }
        let mut counts = vec![0u64; (self.dim().unwrap() + 2) as usize];
        counts[0] = 1;
        for face in self.faces() {
            counts[face.len()] += 1;
        }
        FVector { counts }
    }

    /// Reduced-to-unreduced Euler characteristic `Σ (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .counts
            .iter()
            .skip(1)
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Stellar subdivision of the edge `e = {u, v}`: a fresh midpoint `w`
    /// replaces every face `F ⊇ e` by `(F∖{u})∪{w}` and `(F∖{v})∪{w}`.
    pub fn stellar_subdivide_edge(&self, e: [u32; 2]) -> Result<SimplicialComplex> {
        let edge = normalize_edge(e)?;
        if !self.contains_face(&edge) {
            return Err(Error::NotAnEdge(format!("{{{}, {}}}", edge[0], edge[1])));
        }
        let w = self.next_vertex;
        let mut facets = BTreeSet::new();
        for f in &self.facets {
            if is_subset(&edge, f) {
                for &drop in &edge {
                    let mut g: Vec<u32> =
                        f.iter().copied().filter(|&x| x != drop).collect();
                    g.push(w);
                    g.sort_unstable();
                    facets.insert(g);
                }
            } else {
                facets.insert(f.clone());
            }
        }
        Ok(SimplicialComplex { facets, next_vertex: w + 1 })
    }

    /// Tchebyshev triangulation: subdivides every *original* edge in turn
    /// (midpoint edges created along the way are never subdivided). The
    /// optional order must be a permutation of the original edges; the
    /// resulting f-vector does not depend on it.
    pub fn tchebyshev_triangulation(
        &self,
        edge_order: Option<&[[u32; 2]]>,
    ) -> Result<SimplicialComplex> {
        let originals = self.edges();
        let order: Vec<[u32; 2]> = match edge_order {
            None => originals.clone(),
            Some(given) => {
                let mut normalized = Vec::with_capacity(given.len());
                for &e in given {
                    let e = normalize_edge(e)?;
                    normalized.push([e[0], e[1]]);
                }
                let mut sorted = normalized.clone();
                sorted.sort_unstable();
                if sorted != originals {
                    return Err(Error::BadEdgeOrder(format!(
                        "got {} edges, complex has {}",
                        normalized.len(),
                        originals.len()
                    )));
                }
                normalized
            }
        };
        let mut cur = self.clone();
        for e in order {
            cur = cur.stellar_subdivide_edge(e)?;
        }
        Ok(cur)
    }

    /// All faces of dimension at most `r`; `r` ranges over `-1..=dim`.
    pub fn skeleton(&self, r: i64) -> Result<SimplicialComplex> {
        let Some(dim) = self.dim() else {
            return Err(Error::InvalidInput("skeleton of the void complex".into()));
        };
        if r < -1 || r > dim {
            return Err(Error::IndexOutOfRange { index: r, min: -1, max: dim });
        }
        if r == -1 {
            return Ok(SimplicialComplex::empty_face());
        }
        let max_size = (r + 1) as usize;
        let mut faces: Vec<Vec<u32>> = Vec::new();
        for f in &self.facets {
            if f.len() <= max_size {
                faces.push(f.clone());
            } else {
                for sub in f.iter().copied().combinations(max_size) {
                    faces.push(sub);
                }
            }
        }
        Ok(SimplicialComplex::from_facets(faces))
    }

    /// Barycentric subdivision: the order complex of the poset of nonempty
    /// faces. Vertices of the result are fresh labels `0..#faces`, assigned
    /// in the sorted order of the faces they stand for.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void();
        }
        let faces: Vec<Vec<u32>> = self.faces().into_iter().collect();
        if faces.is_empty() {
            return SimplicialComplex::empty_face();
        }
        let label = |face: &Vec<u32>| faces.binary_search(face).unwrap() as u32;
        let mut out: Vec<Vec<u32>> = Vec::new();
        for facet in &self.facets {
            for perm in facet.iter().copied().permutations(facet.len()) {
                let mut chain = Vec::with_capacity(perm.len());
                let mut prefix: Vec<u32> = Vec::with_capacity(perm.len());
                for v in perm {
                    prefix.push(v);
                    let mut key = prefix.clone();
                    key.sort_unstable();
                    chain.push(label(&key));
                }
                out.push(chain);
            }
        }
        SimplicialComplex::from_facets(out)
    }

    /// Suspension: join with two fresh apex vertices.
    pub fn suspension(&self) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void();
        }
        let a = self.next_vertex;
        let b = a + 1;
        let mut out: Vec<Vec<u32>> = Vec::new();
        for f in &self.facets {
            for apex in [a, b] {
                let mut g = f.clone();
                g.push(apex);
                g.sort_unstable();
                out.push(g);
            }
        }
        SimplicialComplex::from_facets(out)
    }
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    // both sorted
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn normalize_edge(e: [u32; 2]) -> Result<Vec<u32>> {
    if e[0] == e[1] {
        return Err(Error::NotAnEdge(format!("{{{}, {}}}", e[0], e[1])));
    }
    let mut v = vec![e[0], e[1]];
    v.sort_unstable();
    Ok(v)
}

/// Face counts `(f_{-1}, f_0, …, f_dim)` with `f_{-1} = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// The f-polynomial `f(t) = Σ_{i≥0} f_{i-1} t^i` (constant term 1 for
    /// nonempty complexes; the zero polynomial for the void complex).
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.counts.iter().map(|&c| rat(c as i64)).collect())
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.counts.iter().join(", "))
    }
}

/// The f-polynomial of a complex under the convention
/// `f_K(t) = 1 + f_0·t + f_1·t² + …`.
pub fn f_polynomial(k: &SimplicialComplex) -> Poly {
    k.f_vector().to_poly()
}

/// `F_K(x) = f_K((x-1)/2)`; the inverse substitution `F(2x+1) = f(x)`
/// recovers the f-polynomial.
pub fn big_f_polynomial(k: &SimplicialComplex) -> Poly {
    f_polynomial(k).compose(&Poly::new(vec![ratio(-1, 2), ratio(1, 2)]))
}

/// First-kind Chebyshev transform: `x^k ↦ T_k(x)` coefficientwise.
pub fn t_transform(p: &Poly) -> Poly {
    let mut acc = Poly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &cheb_t(k).scale(c);
    }
    acc
}

/// Second-kind Chebyshev transform: `x^k ↦ U_{k-1}(x)` for `k ≥ 1`, with
/// the constant term dropped.
pub fn u_transform(p: &Poly) -> Poly {
    let mut acc = Poly::zero();
    for (k, c) in p.coeffs().iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &cheb_u(k - 1).scale(c);
    }
    acc
}

/// Exact check that the Chebyshev transform of the F-polynomial is the
/// F-polynomial of the Tchebyshev triangulation.
pub fn verify_t_transform(k: &SimplicialComplex) -> Result<bool> {
    let lhs = t_transform(&big_f_polynomial(k));
    let rhs = big_f_polynomial(&k.tchebyshev_triangulation(None)?);
    Ok(lhs == rhs)
}

/// Second-kind consistency check through derivatives: with
/// `F = Σ a_k x^k`, the derivative of `T(F)` must equal `Σ k·a_k·U_{k-1}`,
/// which is the U-transform of `x·F'(x)` applied termwise. This pins the
/// identity `T_n' = n·U_{n-1}` on every coefficient of `F`.
pub fn verify_u_transform(k: &SimplicialComplex) -> Result<bool> {
    let f = big_f_polynomial(k);
    let lhs = t_transform(&f).derivative();
    let mut rhs = Poly::zero();
    for (deg, c) in f.coeffs().iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        rhs = &rhs + &cheb_u(deg - 1).scale(&(c * rat(deg as i64)));
    }
    Ok(lhs == rhs)
}

/// Exhaustively re-runs the triangulation under every ordering of the
/// original edges and compares f-vectors. Only feasible for small edge
/// counts; inputs with more than 8 edges are rejected.
pub fn order_independence_check(k: &SimplicialComplex) -> Result<bool> {
    let edges = k.edges();
    if edges.len() > 8 {
        return Err(Error::InvalidInput(format!(
            "{} edges is too many for an exhaustive ordering sweep",
            edges.len()
        )));
    }
    let reference = k.tchebyshev_triangulation(None)?.f_vector();
    for order in edges.iter().copied().permutations(edges.len()) {
        let f = k.tchebyshev_triangulation(Some(&order))?.f_vector();
        if f != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Report of the gamma-subdivision comparison for a complex.
#[derive(Clone, Debug)]
pub struct GammaSubdivisionReport {
    /// The reciprocal polynomial read off the complex's F-polynomial.
    pub h: ReciprocalPoly,
    /// Its gamma vector.
    pub gamma: GammaVector,
    /// `(2u+2)^{d/2} · γ(1/(2u+2))`.
    pub lhs: Poly,
    /// F-polynomial of the Tchebyshev triangulation of the skeleton.
    pub rhs: Poly,
    pub agree: bool,
}

/// Reads the coefficients `c_j` of `F_K(t) = f_K((t-1)/2)`, builds the
/// reciprocal polynomial with `h_{d/2} = c_0` and `h_{d/2-j} = c_j/2`, and
/// compares `(2u+2)^{d/2}·γ(1/(2u+2))` against the F-polynomial of the
/// Tchebyshev triangulation. The `d/2`-skeleton of the comparison target is
/// the whole complex whenever `h` is read off `K` itself, since
/// `d/2 = dim K + 1`; the skeleton call is clamped to the dimension.
pub fn verify_gamma_subdivision(k: &SimplicialComplex) -> Result<GammaSubdivisionReport> {
    let big_f = big_f_polynomial(k);
    let Some(half) = big_f.degree() else {
        return Err(Error::InvalidInput(
            "the void complex has no F-polynomial coefficients to read".into(),
        ));
    };
    let mut low = vec![Rational::zero(); half + 1];
    low[half] = big_f.coeff(0);
    for j in 1..=half {
        low[half - j] = big_f.coeff(j) / rat(2);
    }
    let mut coeffs = low.clone();
    for i in (0..half).rev() {
        coeffs.push(low[i].clone());
    }
    let h = ReciprocalPoly::new(Poly::new(coeffs)).map_err(|e| {
        Error::InvalidInput(format!("F-polynomial does not yield a reciprocal h: {e}"))
    })?;
    let gamma = gamma_by_peeling(&h);

    let two_u_plus_2 = Poly::from_ints(&[2, 2]);
    let mut lhs = Poly::zero();
    for (i, c) in gamma.entries().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        lhs = &lhs + &two_u_plus_2.pow((half - i) as u32).scale(c);
    }

    let dim = k.dim().unwrap();
    let r = (half as i64).min(dim);
    let skeleton = k.skeleton(r)?;
    let rhs = big_f_polynomial(&skeleton.tchebyshev_triangulation(None)?);
    let agree = lhs == rhs;
    Ok(GammaSubdivisionReport { h, gamma, lhs, rhs, agree })
}

/// The solid `n`-simplex on vertices `0..=n`.
pub fn simplex(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::InvalidInput("simplex requires n >= 1".into()));
    }
    Ok(SimplicialComplex::from_facets([(0..=n as u32).collect::<Vec<_>>()]))
}

/// Boundary of the `n`-simplex: all `n`-subsets of `0..=n`.
pub fn simplex_boundary(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::InvalidInput("simplex_boundary requires n >= 1".into()));
    }
    Ok(SimplicialComplex::from_facets(
        (0..=n as u32).combinations(n),
    ))
}

/// Boundary of the `n`-dimensional cross polytope: antipodal vertex pairs
/// `{2i, 2i+1}`, one choice from each pair per facet.
pub fn cross_polytope_boundary(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::InvalidInput(
            "cross_polytope_boundary requires n >= 1".into(),
        ));
    }
    let mut facets: Vec<Vec<u32>> = vec![Vec::new()];
    for i in 0..n as u32 {
        facets = facets
            .into_iter()
            .flat_map(|f| {
                [2 * i, 2 * i + 1].into_iter().map(move |v| {
                    let mut g = f.clone();
                    g.push(v);
                    g
                })
            })
            .collect();
    }
    Ok(SimplicialComplex::from_facets(facets))
}

/// Both sides of the type-A-to-type-B comparison at rank `n`: the f-vector
/// of the Tchebyshev triangulation of the suspended type-A Coxeter complex
/// (the barycentric subdivision of the boundary of the `(n-1)`-simplex),
/// and the f-vector of the barycentric subdivision of the boundary of the
/// `n`-dimensional cross polytope (the type-B Coxeter complex).
pub fn type_a_to_type_b_fvectors(n: usize) -> Result<(FVector, FVector)> {
    if n < 1 {
        return Err(Error::InvalidInput("rank must be at least 1".into()));
    }
    let type_a = if n == 1 {
        // boundary of the 0-simplex is {∅}
        SimplicialComplex::empty_face()
    } else {
        simplex_boundary(n - 1)?
    };
    let lhs = type_a
        .barycentric_subdivision()
        .suspension()
        .tchebyshev_triangulation(None)?
        .f_vector();
    let rhs = cross_polytope_boundary(n)?
        .barycentric_subdivision()
        .f_vector();
    Ok((lhs, rhs))
}
