//! Exact rational, polynomial and rational-function arithmetic.

pub mod expr;
pub mod poly;
pub mod power;
pub mod ratfunc;
pub mod rational;
pub mod var;

pub use expr::{parse_poly, parse_ratfunc, poly_to_string, ratfunc_to_string, s_to_t_squared, t_squared_to_s, ParseError};
pub use poly::{cst, rcst, var, Exponents, MultiPoly};
pub use power::PowerProduct;
pub use ratfunc::{RatFunc, RatFuncError};
pub use rational::{int, rat, Rational};
pub use var::Var;
