//! Exact arithmetic: integer polynomials in the fixed indeterminates, rational
//! functions in factored form, and rational functions of `N`.

mod nrat;
mod poly;
mod scalar;
mod text;

pub use nrat::{evaluate, reduce_nrational, NRationalFn, Payload};
pub use poly::{Monomial, MultiPoly, Var, NVARS};
pub use scalar::{scalar_arith, ArithOp, Bindings, ParamScalar};
pub use text::{parse_rational, parse_scalar, split_text, to_text, Style};

use num_rational::BigRational;

/// Shorthand for an exact rational `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
