//! Jack polynomials `P_λ^{(1/κ)}` and the coefficients of power sums in them.
//!
//! The basis is built by Gram–Schmidt on the monomials under the deformed
//! scalar product, starting from `1^k` and moving up in lexicographic order
//! (which refines dominance). Everything is symbolic in `κ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::{MultiPoly, ParamScalar, Var};
use crate::partitions::{partitions_of, Cell, Partition};
use crate::symfunc::{self, to_power_sums, z_lambda, Basis, SymFn};

/// The Jack polynomials of one degree, in the power-sum basis.
#[derive(Debug)]
pub struct JackBasis {
    pub degree: usize,
    order: Vec<Partition>,
    table: BTreeMap<Partition, SymFn>,
    norms: BTreeMap<Partition, ParamScalar>,
}

impl JackBasis {
    /// Partitions in the order they were orthogonalized (`1^k` first).
    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    /// `P_λ` in the power-sum basis.
    pub fn get(&self, lambda: &Partition) -> Option<&SymFn> {
        self.table.get(lambda)
    }

    /// `⟨P_λ, P_λ⟩_{1/κ}`
    pub fn norm(&self, lambda: &Partition) -> Option<&ParamScalar> {
        self.norms.get(lambda)
    }

    /// `P_λ` in the monomial basis.
    pub fn in_monomials(&self, lambda: &Partition) -> Result<SymFn> {
        let f = self
            .get(lambda)
            .ok_or_else(|| Error::WeightMismatch { expected: self.degree, got: lambda.weight() })?;
        symfunc::power_sums_to_monomials(f)
    }
}

/// Diagonal weights `z_ν κ^{-ℓ(ν)}` of the deformed scalar product.
fn weights(parts: &[Partition]) -> Vec<ParamScalar> {
    let kappa = ParamScalar::var(Var::Kappa);
    parts
        .iter()
        .map(|nu| {
            kappa
                .pow(-(nu.len() as i32))
                .expect("kappa is nonzero")
                .scale(&z_lambda(nu))
        })
        .collect()
}

fn dot(x: &[ParamScalar], y: &[ParamScalar], w: &[ParamScalar]) -> ParamScalar {
    let terms: Vec<ParamScalar> = x
        .iter()
        .zip(y)
        .zip(w)
        .filter(|((a, b), _)| !a.is_zero() && !b.is_zero())
        .map(|((a, b), c)| a.mul(b).mul(c))
        .collect();
    ParamScalar::sum_many(&terms)
}

fn build(k: usize) -> Result<JackBasis> {
    let t = symfunc::transition(k)?;
    let parts = &t.parts;
    let n = parts.len();
    let w = weights(parts);
    // rows of m_to_p, as scalars
    let m_rows: Vec<Vec<ParamScalar>> = t
        .m_to_p
        .iter()
        .map(|row| row.iter().map(|x| ParamScalar::constant(x.clone())).collect())
        .collect();

    let mut done: Vec<(usize, Vec<ParamScalar>, ParamScalar)> = Vec::with_capacity(n);
    for idx in (0..n).rev() {
        let m = &m_rows[idx];
        let coeffs: Vec<ParamScalar> = done
            .iter()
            .map(|(_, p, norm)| dot(m, p, &w).div(norm))
            .collect::<Result<_>>()?;
        let v: Vec<ParamScalar> = (0..n)
            .map(|nu| {
                let mut terms = vec![m[nu].clone()];
                for ((_, p, _), c) in done.iter().zip(&coeffs) {
                    if !c.is_zero() && !p[nu].is_zero() {
                        terms.push(c.mul(&p[nu]).neg());
                    }
                }
                ParamScalar::sum_many(&terms)
            })
            .collect();
        let norm = dot(&v, &v, &w);
        if norm.is_zero() {
            return Err(Error::VanishingNorm(parts[idx].to_string()));
        }
        done.push((idx, v, norm));
    }

    let mut table = BTreeMap::new();
    let mut norms = BTreeMap::new();
    let mut order = Vec::with_capacity(n);
    for (idx, v, norm) in done {
        let lambda = parts[idx].clone();
        let f = SymFn::from_terms(
            Basis::PowerSum,
            parts.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()),
        );
        order.push(lambda.clone());
        table.insert(lambda.clone(), f);
        norms.insert(lambda, norm);
    }
    Ok(JackBasis { degree: k, order, table, norms })
}

/// The Jack basis of degree `k`, built once and cached.
pub fn jack_gram_schmidt(k: usize) -> Result<Arc<JackBasis>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<JackBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().expect("poisoned").get(&k) {
        return Ok(b.clone());
    }
    let b = Arc::new(build(k)?);
    cache.lock().expect("poisoned").insert(k, b.clone());
    Ok(b)
}

fn check_weight(lambda: &Partition, k: usize) -> Result<()> {
    if lambda.weight() != k {
        return Err(Error::WeightMismatch { expected: k, got: lambda.weight() });
    }
    Ok(())
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Coefficient of `P_λ^{(1/κ)}` in `p_k`:
///
/// `k prod_{(i,j) ≠ (1,1)} ((j-1) - κ(i-1)) / prod_s (a(s) + 1 + κ l(s))`.
///
/// For `k = 0` this is 1 (`p_0 = P_∅ = 1`).
pub fn alpha_coeff(lambda: &Partition, k: usize) -> Result<ParamScalar> {
    check_weight(lambda, k)?;
    if k == 0 {
        return Ok(ParamScalar::one());
    }
    let mut out = ParamScalar::constant(int(k));
    for s in lambda.cells() {
        if (s.row, s.col) != (1, 1) {
            let f = ParamScalar::affine(int(s.col - 1), &[(Var::Kappa, -int(s.row - 1))]);
            if f.is_zero() {
                return Ok(ParamScalar::zero());
            }
            out = out.mul(&f);
        }
        let (a, l) = (lambda.arm(s)?, lambda.leg(s)?);
        let d = ParamScalar::affine(int(a + 1), &[(Var::Kappa, int(l))]);
        out = out.div(&d)?;
    }
    Ok(out)
}

/// One factor of the Macdonald-level coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MacFactor {
    /// `1 - q^c`
    OneMinusQ { c: usize },
    /// `t^i - q^j`
    TMinusQ { i: usize, j: usize },
    /// `1 - q^a t^l`
    OneMinusQT { a: usize, l: usize },
}

impl MacFactor {
    pub fn to_poly(self) -> MultiPoly {
        let one = MultiPoly::one();
        let q = MultiPoly::var(Var::Q);
        let t = MultiPoly::var(Var::T);
        match self {
            MacFactor::OneMinusQ { c } => one.sub(&q.pow(c as u32)),
            MacFactor::TMinusQ { i, j } => t.pow(i as u32).sub(&q.pow(j as u32)),
            MacFactor::OneMinusQT { a, l } => one.sub(&q.pow(a as u32).mul(&t.pow(l as u32))),
        }
    }

    /// Coefficient of `s` when `t = 1 - s`, `q = t^{1/κ}`, to first order.
    /// Every factor vanishes at `s = 0`; a zero here would mean it does so to
    /// higher order.
    pub fn first_order(self) -> ParamScalar {
        let inv_k = ParamScalar::var(Var::Kappa).inv().expect("kappa is nonzero");
        match self {
            MacFactor::OneMinusQ { c } => inv_k.scale(&int(c)),
            MacFactor::TMinusQ { i, j } => inv_k.scale(&int(j)).sub(&ParamScalar::constant(int(i))),
            MacFactor::OneMinusQT { a, l } => inv_k.scale(&int(a)).add(&ParamScalar::constant(int(l))),
        }
    }

    fn is_identically_zero(self) -> bool {
        matches!(
            self,
            MacFactor::TMinusQ { i: 0, j: 0 } | MacFactor::OneMinusQ { c: 0 } | MacFactor::OneMinusQT { a: 0, l: 0 }
        )
    }
}

/// A product of [`MacFactor`]s over another, kept structured so the Jack limit
/// can be taken factor by factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacdonaldCoeff {
    pub numerator: Vec<MacFactor>,
    pub denominator: Vec<MacFactor>,
}

impl MacdonaldCoeff {
    pub fn to_param_scalar(&self) -> Result<ParamScalar> {
        let mut out = ParamScalar::one();
        for f in &self.numerator {
            out = out.mul(&ParamScalar::from_poly(&f.to_poly()));
        }
        for f in &self.denominator {
            out = out.div(&ParamScalar::from_poly(&f.to_poly()))?;
        }
        Ok(out)
    }
}

/// Factors of the coefficient of `P_λ(q,t)` in `p_k`:
/// `(1-q^k) prod_{(i,j) ≠ (1,1)} (t^{i-1} - q^{j-1}) / prod_s (1 - q^{a(s)+1} t^{l(s)})`.
pub fn macdonald_beta_factors(lambda: &Partition, k: usize) -> Result<MacdonaldCoeff> {
    check_weight(lambda, k)?;
    let mut numerator = Vec::new();
    let mut denominator = Vec::new();
    if k > 0 {
        numerator.push(MacFactor::OneMinusQ { c: k });
    }
    for s in lambda.cells() {
        if s != Cell::new(1, 1) {
            numerator.push(MacFactor::TMinusQ { i: s.row - 1, j: s.col - 1 });
        }
        denominator.push(MacFactor::OneMinusQT { a: lambda.arm(s)? + 1, l: lambda.leg(s)? });
    }
    Ok(MacdonaldCoeff { numerator, denominator })
}

/// [`macdonald_beta_factors`] as a rational function of `q, t`.
pub fn macdonald_beta_pk(lambda: &Partition, k: usize) -> Result<ParamScalar> {
    macdonald_beta_factors(lambda, k)?.to_param_scalar()
}

/// `q = t^{1/κ}`, `t → 1` applied factor by factor.
pub fn jack_limit(coeff: &MacdonaldCoeff) -> Result<ParamScalar> {
    if coeff.denominator.iter().any(|f| f.is_identically_zero()) {
        return Err(Error::DivisionByZero);
    }
    if coeff.numerator.iter().any(|f| f.is_identically_zero()) {
        return Ok(ParamScalar::zero());
    }
    let order = |fs: &[MacFactor]| fs.iter().filter(|f| !f.first_order().is_zero()).count();
    let (on, od) = (order(&coeff.numerator), order(&coeff.denominator));
    if on != od || on != coeff.numerator.len() || od != coeff.denominator.len() {
        return Err(Error::OrderMismatch { numerator: on, denominator: od });
    }
    let mut out = ParamScalar::one();
    for f in &coeff.numerator {
        out = out.mul(&f.first_order());
    }
    for f in &coeff.denominator {
        out = out.div(&f.first_order())?;
    }
    Ok(out)
}

/// Jack limit of the Macdonald coefficient of `P_λ` in `p_k`.
pub fn jack_limit_of_beta(lambda: &Partition, k: usize) -> Result<ParamScalar> {
    jack_limit(&macdonald_beta_factors(lambda, k)?)
}

/// Coefficients of `f` (homogeneous of degree `k`) in the Jack basis, by
/// projection.
pub fn jack_expand(f: &SymFn, k: usize) -> Result<SymFn> {
    if f.basis() == Basis::JackP {
        return Ok(f.clone());
    }
    if let Some(bad) = f.terms().map(|(l, _)| l).find(|l| l.weight() != k) {
        return Err(Error::WeightMismatch { expected: k, got: bad.weight() });
    }
    let fp = to_power_sums(f)?;
    let basis = jack_gram_schmidt(k)?;
    let mut out = SymFn::zero(Basis::JackP);
    for lambda in basis.order() {
        let p = basis.get(lambda).expect("in table");
        let c = symfunc::deformed_inner(&fp, p)?.div(basis.norm(lambda).expect("in table"))?;
        out.add_term(lambda.clone(), &c);
    }
    Ok(out)
}

/// `sum c_λ P_λ` back in the power-sum basis.
pub fn jack_to_power_sums(f: &SymFn) -> Result<SymFn> {
    if f.basis() != Basis::JackP {
        return to_power_sums(f);
    }
    let mut out = SymFn::zero(Basis::PowerSum);
    for (k, part) in f.homogeneous_parts() {
        let basis = jack_gram_schmidt(k)?;
        for (lambda, c) in part.terms() {
            out = out.add(&basis.get(lambda).expect("same degree").scale(c));
        }
    }
    Ok(out)
}

/// `α_{λ,k}` for every `λ ⊢ k`, in reverse lexicographic order.
pub fn alpha_table(k: usize) -> Vec<(Partition, ParamScalar)> {
    partitions_of(k)
        .into_iter()
        .map(|l| {
            let a = alpha_coeff(&l, k).expect("weights agree");
            (l, a)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_scalar, Bindings};
    use crate::partitions::dominance_leq;
    use num_traits::{One, Zero};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(x: &str) -> ParamScalar {
        parse_scalar(x).unwrap()
    }

    #[test]
    fn degree_two_and_three() {
        let b2 = jack_gram_schmidt(2).unwrap();
        let p2 = b2.in_monomials(&p(&[2])).unwrap();
        assert_eq!(p2.coeff(&p(&[2])), ParamScalar::one());
        assert_eq!(p2.coeff(&p(&[1, 1])), s("2*kappa/(kappa + 1)"));
        let b3 = jack_gram_schmidt(3).unwrap();
        let bottom = b3.in_monomials(&p(&[1, 1, 1])).unwrap();
        assert_eq!(bottom, SymFn::basis_element(Basis::Monomial, p(&[1, 1, 1])));
    }

    #[test]
    fn unitriangular_and_orthogonal() {
        for k in 0..=6 {
            let b = jack_gram_schmidt(k).unwrap();
            for lambda in b.order() {
                let m = b.in_monomials(lambda).unwrap();
                assert!(m.coeff(lambda).is_one(), "{lambda}");
                for (mu, _) in m.terms() {
                    assert!(dominance_leq(mu, lambda).unwrap(), "{mu} in P{lambda}");
                }
            }
            for (i, l) in b.order().iter().enumerate() {
                for mu in &b.order()[..i] {
                    let ip = symfunc::deformed_inner(b.get(l).unwrap(), b.get(mu).unwrap()).unwrap();
                    assert!(ip.is_zero(), "<P{l}, P{mu}> = {ip}");
                }
            }
        }
    }

    #[test]
    fn alpha_examples() {
        for k in 1..=6 {
            assert!(alpha_coeff(&Partition::row(k), k).unwrap().is_one());
        }
        assert_eq!(alpha_coeff(&p(&[1, 1]), 2).unwrap(), s("-2*kappa/(kappa + 1)"));
        assert_eq!(alpha_coeff(&p(&[2, 1]), 3).unwrap(), s("-3*kappa/(kappa + 2)"));
        assert!(matches!(alpha_coeff(&p(&[2, 1]), 4), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn alpha_matches_projection() {
        for k in 1..=6 {
            let pk = SymFn::basis_element(Basis::PowerSum, Partition::row(k));
            let e = jack_expand(&pk, k).unwrap();
            for lambda in partitions_of(k) {
                assert_eq!(e.coeff(&lambda), alpha_coeff(&lambda, k).unwrap(), "{lambda}");
            }
            assert_eq!(jack_to_power_sums(&e).unwrap(), pk);
        }
    }

    #[test]
    fn schur_specialization() {
        let one = Bindings::new().with(Var::Kappa, BigRational::one());
        for k in 1..=7 {
            for lambda in partitions_of(k) {
                let v = alpha_coeff(&lambda, k).unwrap().eval(&one).unwrap();
                let expect = if lambda.is_hook() {
                    let sign = if (lambda.len() - 1) % 2 == 0 { 1 } else { -1 };
                    BigRational::from_integer(sign.into())
                } else {
                    BigRational::zero()
                };
                assert_eq!(v, expect, "{lambda}");
            }
        }
    }

    #[test]
    fn macdonald_examples() {
        for k in 1..=6 {
            assert!(macdonald_beta_pk(&Partition::row(k), k).unwrap().is_one());
        }
        let b11 = macdonald_beta_pk(&p(&[1, 1]), 2).unwrap();
        assert_eq!(b11, s("(1 - q^2)*(t - 1)/((1 - q*t)*(1 - q))"));
        let at = Bindings::new()
            .with(Var::Q, crate::exactnum::rat(1, 2))
            .with(Var::T, crate::exactnum::rat(1, 3));
        // (3/4)(-2/3)/((5/6)(1/2)) = -6/5
        assert_eq!(b11.eval(&at).unwrap(), crate::exactnum::rat(-6, 5));
        for k in 1..=5 {
            let half = Bindings::new()
                .with(Var::Q, crate::exactnum::rat(1, 2))
                .with(Var::T, crate::exactnum::rat(1, 2));
            let col = Partition::new(vec![1; k]).unwrap();
            let v = macdonald_beta_pk(&col, k).unwrap().eval(&half).unwrap();
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(v, crate::exactnum::rat(sign, 1), "k = {k}");
        }
    }

    #[test]
    fn jack_limit_matches_alpha() {
        for k in 1..=6 {
            for lambda in partitions_of(k) {
                assert_eq!(
                    jack_limit_of_beta(&lambda, k).unwrap(),
                    alpha_coeff(&lambda, k).unwrap(),
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn jack_limit_rejects_unbalanced() {
        let mut c = macdonald_beta_factors(&p(&[2, 1]), 3).unwrap();
        c.denominator.pop();
        assert!(matches!(jack_limit(&c), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn expand_basis_elements() {
        let b = jack_gram_schmidt(4).unwrap();
        for mu in b.order() {
            let e = jack_expand(b.get(mu).unwrap(), 4).unwrap();
            assert_eq!(e, SymFn::basis_element(Basis::JackP, mu.clone()));
        }
        let m11 = SymFn::basis_element(Basis::Monomial, p(&[1, 1]));
        assert_eq!(jack_expand(&m11, 2).unwrap(), SymFn::basis_element(Basis::JackP, p(&[1, 1])));
    }
}
