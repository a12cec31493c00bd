//! Rational functions of the number of variables `N` with coefficients in the
//! parameter field.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::poly::{MultiPoly, Var};
use super::scalar::{Bindings, ParamScalar};
use super::text::{split_text, Style};
use crate::error::{Error, Result};

/// A reduced rational function in `N` over `Q(kappa, a, b, ...)`.
///
/// Internally this is a [`ParamScalar`] in which `N` may occur; the univariate
/// views ([`Self::numerator_in_n`], [`Self::denominator_in_n`]) present it with
/// a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRationalFn(ParamScalar);

impl NRationalFn {
    pub fn new(value: ParamScalar) -> Self {
        NRationalFn(value.cancel())
    }

    pub fn one() -> Self {
        NRationalFn(ParamScalar::one())
    }

    pub fn value(&self) -> &ParamScalar {
        &self.0
    }

    pub fn into_inner(self) -> ParamScalar {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `deg_N(numerator) - deg_N(denominator)`.
    pub fn n_degree(&self) -> i64 {
        self.0
            .factors()
            .map(|(f, e)| f.degree_in(Var::N) as i64 * e as i64)
            .sum()
    }

    /// Ratio of the leading `N`-coefficients of numerator and denominator.
    pub fn n_leading(&self) -> ParamScalar {
        let mut out = ParamScalar::constant(self.0.unit().clone());
        for (f, e) in self.0.factors() {
            let coeffs = f.coefficients_in(Var::N);
            let lc = coeffs.last().expect("nonzero factor");
            let lc = if f.degree_in(Var::N) == 0 {
                f.clone()
            } else {
                lc.clone()
            };
            let piece = ParamScalar::from_poly(&lc);
            out = out.mul(&piece.pow(e).expect("nonzero coefficient"));
        }
        out
    }

    fn coeff_views(&self) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
        let (num, den) = self.0.expanded();
        (num.coefficients_in(Var::N), den.coefficients_in(Var::N))
    }

    /// Numerator coefficients in `N` (low to high), scaled so the denominator
    /// is monic.
    pub fn numerator_in_n(&self) -> Vec<ParamScalar> {
        let (num, den) = self.coeff_views();
        let lc = ParamScalar::from_poly(den.last().expect("nonzero"));
        num.iter()
            .map(|c| ParamScalar::from_poly(c).div(&lc).expect("nonzero"))
            .collect()
    }

    /// Monic denominator coefficients in `N` (low to high).
    pub fn denominator_in_n(&self) -> Vec<ParamScalar> {
        let (_, den) = self.coeff_views();
        let lc = ParamScalar::from_poly(den.last().expect("nonzero"));
        den.iter()
            .map(|c| ParamScalar::from_poly(c).div(&lc).expect("nonzero"))
            .collect()
    }

    /// Exact value at `N = n` with the parameters in `bindings`.
    pub fn evaluate(&self, bindings: &Bindings, n: &BigRational) -> Result<BigRational> {
        let b = bindings.clone().with(Var::N, n.clone());
        self.0.eval(&b)
    }

    /// Partial substitution; the result stays an `NRationalFn`.
    pub fn substitute_values(&self, bindings: &Bindings) -> Result<NRationalFn> {
        Ok(NRationalFn::new(self.0.substitute_values(bindings)?))
    }

    /// JSON-friendly payload.
    pub fn to_payload(&self) -> Payload {
        let (numerator, denominator) = split_text(&self.0, Style::Plain);
        Payload {
            text: self.0.to_string(),
            numerator,
            denominator: denominator.unwrap_or_else(|| "1".into()),
            indeterminates: self.0.variables().iter().map(|v| v.name().to_string()).collect(),
        }
    }
}

/// Serialized form of an exact result.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Payload {
    pub text: String,
    pub numerator: String,
    pub denominator: String,
    pub indeterminates: Vec<String>,
}

/// Puts `f` in lowest terms. Idempotent.
pub fn reduce_nrational(f: &NRationalFn) -> NRationalFn {
    NRationalFn::new(f.0.clone())
}

/// Exact value of `f` at `N = n`.
pub fn evaluate(f: &NRationalFn, bindings: &Bindings, n: &BigRational) -> Result<BigRational> {
    if f.is_zero() {
        return Ok(BigRational::zero());
    }
    f.evaluate(bindings, n)
}

impl From<ParamScalar> for NRationalFn {
    fn from(v: ParamScalar) -> Self {
        NRationalFn::new(v)
    }
}

impl fmt::Display for NRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::str::FromStr for NRationalFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(NRationalFn::new(super::text::parse_scalar(s)?))
    }
}
