//! Large-`N` behaviour of normalized integrals.
//!
//! Since every result is a rational function of `N`, the large-`N` regime is
//! read off symbolically: degree and leading coefficient.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{MultiPoly, NRationalFn, ParamScalar, Var};
use crate::selberg::{powersum_terms, selberg_powersum, SelbergParams};

/// `f(N) ~ leading * N^degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticProfile {
    pub degree: i64,
    pub leading: ParamScalar,
}

impl Serialize for AsymptoticProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AsymptoticProfile", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("leading", &self.leading.to_string())?;
        st.end()
    }
}

pub fn asymptotic_profile(r: &NRationalFn) -> Result<AsymptoticProfile> {
    if r.is_zero() {
        return Err(Error::ZeroFunction);
    }
    Ok(AsymptoticProfile {
        degree: r.n_degree(),
        leading: r.n_leading(),
    })
}

fn degree_one_leading(r: &NRationalFn) -> Result<ParamScalar> {
    let prof = asymptotic_profile(r)?;
    if prof.degree != 1 {
        return Err(Error::DegreeMismatch { expected: 1, found: prof.degree });
    }
    Ok(prof.leading)
}

/// `lim (1/N) ⟨p_k⟩♯` with `a, b, κ` symbolic.
pub fn limit_pk(k: usize) -> Result<ParamScalar> {
    degree_one_leading(&selberg_powersum(k, &SelbergParams::symbolic())?.value)
}

/// `C(2k, k) / 4^k`
pub fn central_binomial_ratio(k: usize) -> ParamScalar {
    let c = binomial(BigInt::from(2 * k), BigInt::from(k));
    ParamScalar::constant(BigRational::new(c, BigInt::from(4).pow(k as u32)))
}

/// `lim (1/N) ⟨p_k⟩♯` at `a = κ(ℓ-1)N`, `b = 0`, as a function of `ℓ`.
///
/// The substitution is made in each factor of each per-partition term, so
/// the factors stay linear in `N`. Fails if `κ` survives.
pub fn limit_pk_scaled(k: usize) -> Result<ParamScalar> {
    let a = MultiPoly::var(Var::Kappa)
        .mul(&MultiPoly::var(Var::Ell).sub(&MultiPoly::one()))
        .mul(&MultiPoly::var(Var::N));
    let a = ParamScalar::from_poly(&a);
    let zero = ParamScalar::zero();
    let terms = powersum_terms(k)
        .into_par_iter()
        .map(|(_, t)| t.substitute(Var::B, &zero)?.substitute(Var::A, &a))
        .collect::<Result<Vec<_>>>()?;
    let sum = NRationalFn::new(ParamScalar::sum_many(&terms));
    let leading = degree_one_leading(&sum)?;
    let at_one = leading.substitute(Var::Kappa, &ParamScalar::one())?;
    if leading != at_one {
        return Err(Error::KappaDependence(leading.to_string()));
    }
    Ok(at_one)
}

/// `C(k-1, ⌈i/2⌉) C(k-1, ⌊i/2⌋)` for `i = 0..=2(k-1)`.
pub fn dyck_peak_coefficients(k: usize) -> Vec<BigInt> {
    assert!(k >= 1, "k must be positive");
    let m = BigInt::from(k - 1);
    (0..=2 * (k - 1))
        .map(|i| binomial(m.clone(), BigInt::from(i.div_ceil(2))) * binomial(m.clone(), BigInt::from(i / 2)))
        .collect()
}

/// `ℓ / (1+ℓ)^{2k-1} * sum_i C(k-1,⌈i/2⌉) C(k-1,⌊i/2⌋) ℓ^i`
pub fn dyck_peak_formula(k: usize) -> ParamScalar {
    let ell = MultiPoly::var(Var::Ell);
    let mut sum = MultiPoly::zero();
    for (i, c) in dyck_peak_coefficients(k).into_iter().enumerate() {
        sum = sum.add(&ell.pow(i as u32).scale(&c));
    }
    let one_plus = ParamScalar::from_poly(&ell.add(&MultiPoly::one()));
    ParamScalar::from_poly(&sum.mul(&ell))
        .div(&one_plus.pow(2 * k as i32 - 1).expect("nonzero"))
        .expect("nonzero")
}

pub fn is_palindrome(coeffs: &[BigInt]) -> bool {
    coeffs.iter().eq(coeffs.iter().rev())
}

/// `sum_i c_i`, which should be `C(2k-1, k-1)`.
pub fn dyck_total(k: usize) -> BigInt {
    dyck_peak_coefficients(k).into_iter().fold(BigInt::zero(), |a, b| a + b)
}
