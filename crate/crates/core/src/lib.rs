//! Exact construction of Fubini polynomials and numbers, Stirling numbers,
//! Bernoulli and p-Bernoulli numbers, and Apostol-Bernoulli rational functions,
//! plus a registry that checks the identities relating them.
//!
//! Everything is computed over arbitrary-precision rationals; the only floating
//! point code is the numerical quadrature used as an independent cross-check of
//! the improper Apostol-Bernoulli integrals.

pub mod apostol;
pub mod bernoulli;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod fubini;
mod memo;
pub mod verifier;

pub use error::{Error, Result};
pub use exact::{BiPoly, BiPolyZ, Poly, PolyQ, PolyZ, Rat, RatFunc};
