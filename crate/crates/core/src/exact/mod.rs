//! Exact arithmetic over ℚ and ℚ(i): scalars, dense matrices, polynomials and
//! real root isolation.

pub mod gauss;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod ser;
pub mod sturm;

pub use gauss::GaussRat;
pub use matrix::ExactMatrix;
pub use poly::RatPoly;
pub use rational::{fmt_rat, int, parse_rat, rat, Rat};
pub use sturm::{refine_root, sturm_isolate, Domain, IsolatingInterval};
