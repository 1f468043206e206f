//! Exact scalar and polynomial arithmetic: arbitrary-precision rationals,
//! cyclotomic field elements, univariate polynomials, and linear forms in
//! named parameters. No floating point anywhere.

pub mod cyclotomic;
pub mod linform;
pub mod poly;
pub mod rational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use linform::{format_rational_form, LinearForm, ParamIndex};
pub use poly::{CPoly, CSeries, Poly, QPoly};
pub use rational::Rational;
