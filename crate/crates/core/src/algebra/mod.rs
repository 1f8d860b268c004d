//! Exact arithmetic: scalars, bivariate polynomials and rational functions,
//! polynomials in the main variable, and truncated series.

mod gcd;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod symbolic;
pub mod xpoly;

pub use parse::{parse_rational_function, parse_x_fraction};
pub use poly::{BivarPoly, Monomial};
pub use rational::BivarRational;
pub use ring::{Field, Ring};
pub use scalar::Scalar;
pub use series::{series_of_rational, CoeffSeries, PowerSeries};
pub use symbolic::{SymMonomial, SymPoly};
pub use xpoly::{MainVar, XFraction, XPoly};
