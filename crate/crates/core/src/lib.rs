//! Exact computation of central factorial numbers and the central
//! Fubini-like polynomials `c_n(x) = Σ_k k! T(n,k) x^k`, with several
//! independent routes for cross-checking and a floating-point layer for the
//! generating function's analytic properties.

pub mod analytic;
pub mod combinat;
pub mod error;
pub mod format;
pub mod fubini;
pub mod hessenberg;
pub mod operators;
pub mod poly;
pub mod quadrature;
pub mod rational;
pub mod series;
pub mod triangle;

pub use error::{Error, Result};
pub use fubini::FubiniRoute;
pub use poly::Poly;
pub use rational::Rational;
pub use series::Series;
pub use triangle::{TriangleKind, TriangleTable};
