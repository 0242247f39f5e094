//! Exact scalars, dense polynomials in one and two variables, and canonical
//! rational functions.

mod bipoly;
mod poly;
mod rat;
mod ratfunc;

pub use bipoly::{BiPoly, BiPolyZ};
pub use poly::{Coeff, Poly, PolyQ, PolyZ};
pub use rat::Rat;
pub use ratfunc::RatFunc;
