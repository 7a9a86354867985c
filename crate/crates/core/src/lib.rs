//! Exact computer algebra for gamma vectors of reciprocal polynomials.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point in the library. The crate provides:
//!
//! - dense polynomials, Laurent polynomials and truncated power series
//!   ([`poly`], [`laurent`], [`series`]);
//! - Chebyshev polynomials of both kinds, basis conversions and the
//!   palindromic correspondence `h(t) = t^n·g(t + 1/t)` ([`chebyshev`]);
//! - the gamma vector of an even-degree reciprocal polynomial by three
//!   independent routes ([`gamma`]);
//! - exact real-root counting via Sturm chains and the real-rootedness
//!   transfer checks ([`realroot`]);
//! - simplicial complexes, Tchebyshev (sequential edge-stellar)
//!   triangulations and the f-/F-polynomial transforms ([`simplicial`]);
//! - the noncommutative ce-polynomial algebra with the Tchebyshev-poset
//!   recursion and its specializations ([`ce_index`]);
//! - sl(2) character decompositions and unimodal polynomial pairs
//!   ([`sl2`]);
//! - JSON wire formats ([`jsonio`]) and seeded verification sweeps
//!   ([`sweep`]).

pub mod ce_index;
pub mod chebyshev;
pub mod error;
pub mod gamma;
pub mod jsonio;
pub mod laurent;
pub mod poly;
pub mod rational;
pub mod realroot;
pub mod series;
pub mod simplicial;
pub mod sl2;
pub mod sweep;

pub use chebyshev::{BasisDirection, BasisMatrix, ChebKind};
pub use error::{Error, Result};
pub use gamma::{GammaRoutes, GammaVector, ReciprocalPoly};
pub use laurent::LaurentPoly;
pub use poly::Poly;
pub use rational::Rational;
pub use realroot::RootCount;
pub use series::TruncatedSeries;
pub use simplicial::{FVector, SimplicialComplex};
