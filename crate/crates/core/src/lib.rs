//! Exact arithmetic for bicomplex algebraic numbers.
//!
//! A bicomplex number `x + y i + z j + t k` (with `i^2 = k^2 = -1`, `j^2 = 1`,
//! `ij = k`) is stored in its idempotent form `c1 e1 + c2 e2`, where
//! `e1 = (1+j)/2`, `e2 = (1-j)/2` and every ring operation acts componentwise.
//! Components are exact scalars: rationals, Gaussian rationals or elements of
//! a quadratic field `Q(sqrt D)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: big rationals, dense polynomials, gcd, Sturm chains,
//!   cyclotomic polynomials and integer factorization.
//! * [`scalar`] and [`element`]: component scalars and the bicomplex element
//!   with its three conjugations and norm.
//! * [`minpoly`]: minimal polynomials and the quartic characteristic polynomial.
//! * [`census`]: the census of the `n^2` bicomplex roots of a minimal
//!   polynomial, the locus factor polynomials and a numeric root finder.
//! * [`integers`]: rings of integers of `K1 e1 + K2 e2`, units, discriminants,
//!   prime elements and unique factorization.
//! * [`ideals`] and [`zeta`]: ideals, ideal norms, ideal-counting tables and
//!   truncated zeta sums.
//! * [`radix`]: digit expansions in hyperbolic and Gaussian bases.
//! * [`cli`]: the text front end used by the `bicomplex` binary.

pub mod arith;
pub mod census;
pub mod cli;
pub mod element;
mod error;
pub mod ideals;
pub mod integers;
pub mod minpoly;
pub mod radix;
pub mod scalar;
pub mod zeta;

pub use arith::{IntPoly, Integer, RatPoly, Rational};
pub use element::{Axis, BicomplexElement, NormValue};
pub use error::{Error, Result};
pub use scalar::{GaussRat, QuadRat, Scalar, ScalarKind};
