//! Brute-force checks that share nothing with the Jack machinery: expand
//! the whole integrand and integrate it monomial by monomial with Beta moments.
//! Only integer `κ` and a handful of variables are practical.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::ParamScalar;
use crate::partitions::Partition;

/// Default cap on the number of terms of an expanded integrand.
pub const DEFAULT_TERM_BUDGET: usize = 500_000;

/// A polynomial in `x_1..x_N` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    nvars: usize,
    terms: HashMap<Vec<u32>, BigRational>,
}

impl DensePoly {
    pub fn zero(nvars: usize) -> Self {
        DensePoly { nvars, terms: HashMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], BigRational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: BigRational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    /// `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigRational::one())
    }

    /// `x_1^k + ... + x_N^k`
    pub fn power_sum(nvars: usize, k: u32) -> Self {
        let mut p = Self::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k;
            p.add_term(e, BigRational::one());
        }
        p
    }

    /// Builds from `(coeff, exponents)` pairs, padding exponent vectors with zeros.
    pub fn from_terms(nvars: usize, terms: &[(BigRational, Vec<usize>)]) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            if e.len() > nvars && e[nvars..].iter().any(|&x| x > 0) {
                return Err(Error::TooManyVariables {
                    monomial: format!("{e:?}"),
                    needed: e.len(),
                    available: nvars as u64,
                });
            }
            let mut exps: Vec<u32> = e.iter().take(nvars).map(|&x| x as u32).collect();
            exps.resize(nvars, 0);
            p.add_term(exps, c.clone());
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &DensePoly) -> DensePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> DensePoly {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        self.mul_guarded(other, usize::MAX).expect("unbounded")
    }

    fn mul_guarded(&self, other: &DensePoly, budget: usize) -> Result<DensePoly> {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: HashMap<Vec<u32>, BigRational> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
                if acc.len() > budget {
                    return Err(Error::SizeGuard { budget, reached: acc.len() });
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(DensePoly { nvars: self.nvars, terms: acc })
    }

    /// Renames `x_i` to `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> DensePoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// `prod_{i<j} (x_i - x_j)^{2κ}`
    pub fn vandermonde_power(nvars: usize, kappa: u32, budget: usize) -> Result<DensePoly> {
        let mut out = Self::one(nvars);
        for i in 0..nvars {
            for j in i + 1..nvars {
                let diff = Self::var(nvars, i).add(&Self::var(nvars, j).scale(&-BigRational::one()));
                for _ in 0..2 * kappa {
                    out = out.mul_guarded(&diff, budget)?;
                }
            }
        }
        Ok(out)
    }
}

/// `∫ x^{m+a-1}(1-x)^{b-1} / ∫ x^{a-1}(1-x)^{b-1} = prod_{j<m} (a+j)/(a+b+j)`
pub fn beta_moment_ratio(m: usize, a: &ParamScalar, b: &ParamScalar) -> ParamScalar {
    let ab = a.add(b);
    let mut out = ParamScalar::one();
    for j in 0..m {
        let j = ParamScalar::integer(j as i64);
        out = out.mul(&a.add(&j)).div(&ab.add(&j)).expect("a + b + j is not the zero function");
    }
    out
}

/// Unnormalized-by-`⟨1⟩` integral of a polynomial against the Beta weight,
/// each variable normalized by `B(a, b)`.
fn beta_integral(p: &DensePoly, a: &ParamScalar, b: &ParamScalar) -> ParamScalar {
    // The product of moments only depends on the exponent multiset.
    let mut grouped: HashMap<Vec<u32>, BigRational> = HashMap::new();
    for (e, c) in p.terms() {
        let mut key = e.clone();
        key.sort_unstable();
        *grouped.entry(key).or_insert_with(BigRational::zero) += c;
    }
    let mut moments: HashMap<u32, ParamScalar> = HashMap::new();
    let mut pieces = Vec::with_capacity(grouped.len());
    for (key, c) in grouped {
        if c.is_zero() {
            continue;
        }
        let mut v = ParamScalar::constant(c);
        for &x in &key {
            let m = moments
                .entry(x)
                .or_insert_with(|| beta_moment_ratio(x as usize, a, b));
            v = v.mul(m);
        }
        pieces.push(v);
    }
    ParamScalar::sum_many(&pieces)
}

/// `⟨f⟩♯` by full expansion, for integer `κ ≥ 0`.
pub fn moment_integrate(f: &DensePoly, a: &ParamScalar, b: &ParamScalar, kappa: u32) -> Result<ParamScalar> {
    moment_integrate_with_budget(f, a, b, kappa, DEFAULT_TERM_BUDGET)
}

pub fn moment_integrate_with_budget(
    f: &DensePoly,
    a: &ParamScalar,
    b: &ParamScalar,
    kappa: u32,
    budget: usize,
) -> Result<ParamScalar> {
    let n = f.nvars();
    let v = DensePoly::vandermonde_power(n, kappa, budget)?;
    let fv = f.mul_guarded(&v, budget)?;
    let num = beta_integral(&fv, a, b);
    let den = beta_integral(&v, a, b);
    num.div(&den)
}

/// Number of distinct monomials in `m_μ(x_1..x_N)`, by enumeration.
pub fn orbit_count(mu: &Partition, n: usize) -> Result<u64> {
    if mu.len() > n {
        return Err(Error::TooManyVariables {
            monomial: mu.to_string(),
            needed: mu.len(),
            available: n as u64,
        });
    }
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &p in mu.parts() {
        match counts.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => counts.push((p, 1)),
        }
    }
    if n > mu.len() {
        counts.push((0, n - mu.len()));
    }
    fn go(left: usize, counts: &mut [(usize, usize)]) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for i in 0..counts.len() {
            if counts[i].1 > 0 {
                counts[i].1 -= 1;
                total += go(left - 1, counts);
                counts[i].1 += 1;
            }
        }
        total
    }
    Ok(go(n, &mut counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_scalar, rat, Var};

    fn a() -> ParamScalar {
        ParamScalar::var(Var::A)
    }

    fn b() -> ParamScalar {
        ParamScalar::var(Var::B)
    }

    #[test]
    fn beta_moments() {
        assert!(beta_moment_ratio(0, &a(), &b()).is_one());
        assert_eq!(beta_moment_ratio(1, &a(), &b()), parse_scalar("a/(a + b)").unwrap());
        let two = ParamScalar::integer(2);
        let one = ParamScalar::integer(1);
        assert_eq!(beta_moment_ratio(3, &two, &one), ParamScalar::ratio(2, 5));
    }

    #[test]
    fn unit_integrand() {
        for n in 1..=3 {
            for kappa in 0..=2 {
                let v = moment_integrate(&DensePoly::one(n), &a(), &b(), kappa).unwrap();
                assert!(v.is_one());
            }
        }
    }

    #[test]
    fn p1_two_variables() {
        let one = ParamScalar::one();
        let v = moment_integrate(&DensePoly::power_sum(2, 1), &one, &one, 1).unwrap();
        assert!(v.is_one());
    }

    #[test]
    fn linear_and_permutation_invariant() {
        let f = DensePoly::from_terms(3, &[(rat(2, 1), vec![2, 1, 0]), (rat(-1, 3), vec![0, 0, 3])]).unwrap();
        let g = DensePoly::power_sum(3, 2);
        let (x, y) = (rat(5, 2), rat(-7, 1));
        let lhs = moment_integrate(&f.scale(&x).add(&g.scale(&y)), &a(), &b(), 1).unwrap();
        let fi = moment_integrate(&f, &a(), &b(), 1).unwrap();
        let gi = moment_integrate(&g, &a(), &b(), 1).unwrap();
        assert_eq!(lhs, fi.scale(&x).add(&gi.scale(&y)));
        for perm in [[1, 2, 0], [2, 1, 0], [0, 2, 1]] {
            assert_eq!(moment_integrate(&f.permute(&perm), &a(), &b(), 1).unwrap(), fi);
        }
    }

    #[test]
    fn size_guard() {
        let f = DensePoly::power_sum(4, 3);
        assert!(matches!(
            moment_integrate_with_budget(&f, &a(), &b(), 2, 50),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn orbits() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(orbit_count(&p(&[4]), 5).unwrap(), 5);
        assert_eq!(orbit_count(&p(&[1, 1]), 3).unwrap(), 3);
        assert_eq!(orbit_count(&p(&[2, 1]), 3).unwrap(), 6);
        assert!(orbit_count(&p(&[1, 1, 1]), 2).is_err());
    }
}
